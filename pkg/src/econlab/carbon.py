"""One-box atmospheric carbon model with exponential emissions.

Stock dynamics x' + c x = f(t), where c sums the ocean and land uptake
rates and f(t) = f0 e^{dt}.  The airborne fraction (share of emissions
staying in the atmosphere) has a closed form that converges to
d / (c + d) regardless of the initial stock.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class CarbonParams:
    """tau_oc/tau_ld: uptake time scales (years); f0: initial emissions;
    d: emission growth rate; x0: initial atmospheric stock at t = 0."""

    tau_oc: float
    tau_ld: float
    f0: float
    d: float
    x0: float

    def __post_init__(self):
        for name in ("tau_oc", "tau_ld", "f0", "d"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0.0:
                raise DomainError(f"{name} must be positive, got {v}")
        if not np.isfinite(self.x0) or self.x0 < 0.0:
            raise DomainError(f"x0 must be nonnegative, got {self.x0}")

    @property
    def c(self) -> float:
        """Total uptake rate 1/tau_oc + 1/tau_ld."""
        return 1.0 / self.tau_oc + 1.0 / self.tau_ld


def emissions(p: CarbonParams, t):
    """f(t) = f0 e^{dt}; accepts scalars or arrays."""
    return p.f0 * np.exp(p.d * np.asarray(t, dtype=float))


def concentration_closed(p: CarbonParams, t):
    """Closed-form stock: homogeneous decay of x0 plus the particular
    response to exponential emissions."""
    t = np.asarray(t, dtype=float)
    decay = np.exp(-p.c * t)
    return p.x0 * decay + p.f0 * decay * (np.exp((p.c + p.d) * t) - 1.0) / (p.c + p.d)


def concentration_rhs(p: CarbonParams):
    """Vector field f(t) - c x for cross-checking the closed form by RK4."""

    def rhs(t, x):
        return emissions(p, t) - p.c * x

    return rhs


def airborne_fraction(p: CarbonParams, t):
    """AF(t) = (1/f) dx/dt = 1 - c x / f in closed form."""
    t = np.asarray(t, dtype=float)
    c, d = p.c, p.d
    return 1.0 - c * (p.x0 / p.f0 - 1.0 / (c + d)) * np.exp(-(c + d) * t) - c / (c + d)


def airborne_fraction_limit(p: CarbonParams) -> float:
    """Long-run airborne fraction d / (c + d)."""
    return p.d / (p.c + p.d)
