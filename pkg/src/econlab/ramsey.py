"""Ramsey growth model in log coordinates: steady state, linearization,
saddle path by shooting, and the household-side optimality diagnostics
(first-order conditions, budget identity, transversality).

State is (log k, log c) with k, c per unit of effective labor.  The
capital row of the vector field is output minus consumption minus
effective depreciation; the consumption row is the Euler equation.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import crra
from .errors import (BracketError, ComplexSpectrumError, ConvergenceError,
                     DivergenceError, DomainError, HorizonError,
                     InfeasibleParametersError, NotDiagonalizableError,
                     StabilityStructureError)
from .matgeo import EigenDecomp2, MatrixComplex, _canonical, _null_vector
from .numerics import Grid, Trajectory, cumulative_simpson

# log-deviation from the steady state beyond which a path is classified
# as blown up (consumed by the shooting bisection)
_BLOWUP_DEV = 5.0


@dataclass(frozen=True)
class RamseyParams:
    """Technology and preference parameters.

    A_tfp: total factor productivity; alpha: capital share; theta:
    relative risk aversion; delta: depreciation; alpha_L: population
    growth; alpha_T: labor-augmenting technical progress; rho: time
    preference.  Construction enforces positivity, alpha < 1 and the
    effective-discount condition rho - alpha_L - (1-theta) alpha_T > 0.
    """

    A_tfp: float
    alpha: float
    theta: float
    delta: float
    alpha_L: float
    alpha_T: float
    rho: float

    def __post_init__(self):
        for name in ("A_tfp", "alpha", "theta", "delta",
                     "alpha_L", "alpha_T", "rho"):
            v = getattr(self, name)
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(f"{name} must be positive, got {v}")
        if self.alpha >= 1.0:
            raise DomainError(f"alpha must be below 1, got {self.alpha}")
        eff = self.rho - self.alpha_L - (1.0 - self.theta) * self.alpha_T
        if eff <= 0.0:
            raise InfeasibleParametersError(
                "effective discount rate rho - alpha_L - (1-theta)*alpha_T "
                f"must be positive, got {eff}")


#: illustrative classroom calibration, not an estimate of anything
BASELINE = RamseyParams(A_tfp=1.0, alpha=0.3, theta=2.0, delta=0.05,
                        alpha_L=0.01, alpha_T=0.02, rho=0.03)


def _check_k(k):
    if not math.isfinite(k) or k <= 0.0:
        raise DomainError(f"capital must be positive, got {k}")


def production(p: RamseyParams, k: float) -> float:
    """f(k) = A k^alpha."""
    _check_k(k)
    return p.A_tfp * k ** p.alpha


def production_mp(p: RamseyParams, k: float) -> float:
    """f'(k) = alpha A k^(alpha-1)."""
    _check_k(k)
    return p.alpha * p.A_tfp * k ** (p.alpha - 1.0)


@dataclass(frozen=True)
class SteadyState:
    k_star: float
    c_star: float

    @property
    def log_k_star(self) -> float:
        return math.log(self.k_star)

    @property
    def log_c_star(self) -> float:
        return math.log(self.c_star)


def _mp_target(p: RamseyParams) -> float:
    # steady-state marginal product: delta + rho + theta * alpha_T
    return p.delta + p.rho + p.theta * p.alpha_T


def _eff_dep(p: RamseyParams) -> float:
    # effective depreciation of k: delta + alpha_L + alpha_T
    return p.delta + p.alpha_L + p.alpha_T


def steady_state(p: RamseyParams) -> SteadyState:
    """Closed-form rest point of the vector field.

    k* solves alpha A k^(alpha-1) = delta + rho + theta*alpha_T; c* is
    output at k* net of effective depreciation.  Parameters that leave
    no positive consumption raise InfeasibleParametersError.
    """
    k_star = (_mp_target(p) / (p.alpha * p.A_tfp)) ** (1.0 / (p.alpha - 1.0))
    c_star = p.A_tfp * k_star ** p.alpha - _eff_dep(p) * k_star
    if c_star <= 0.0:
        raise InfeasibleParametersError(
            f"steady-state consumption is not positive (c*={c_star})")
    ss = SteadyState(k_star, c_star)
    if np.max(np.abs(rhs(p, ss.log_k_star, ss.log_c_star))) > 1.0e-10:
        raise ConvergenceError("vector field does not vanish at the "
                               "closed-form steady state")
    return ss


def rhs(p: RamseyParams, log_k: float, log_c: float) -> np.ndarray:
    """Vector field of (log k, log c), written in exponential form.

    d log k / dt = A e^((alpha-1) log k) - e^(log c - log k) - (delta+alpha_L+alpha_T)
    d log c / dt = (1/theta) (alpha A e^((alpha-1) log k) - (delta+rho+theta*alpha_T))
    """
    e_k = (p.alpha - 1.0) * log_k
    e_c = log_c - log_k
    for comp, arg in ((0, e_k), (1, e_c)):
        if arg > 700.0:
            raise DivergenceError(
                "overflow in exponentials while evaluating the vector field",
                step_index=0, component=comp, direction=1.0)
    production_term = p.A_tfp * math.exp(e_k)
    return np.array([
        production_term - math.exp(e_c) - _eff_dep(p),
        (p.alpha * production_term - _mp_target(p)) / p.theta,
    ])


def jacobian_closed(p: RamseyParams) -> np.ndarray:
    """Jacobian of the vector field at the steady state, closed form."""
    a11 = p.rho - p.alpha_L - (1.0 - p.theta) * p.alpha_T
    a12 = _eff_dep(p) - _mp_target(p) / p.alpha
    a21 = (p.alpha - 1.0) / p.theta * _mp_target(p)
    return np.array([[a11, a12], [a21, 0.0]])


def is_diagonalizable(p: RamseyParams) -> bool:
    """a11^2 != -4 a12 a21 within 1e-12: distinct eigenvalues."""
    j = jacobian_closed(p)
    return abs(j[0, 0] ** 2 + 4.0 * j[0, 1] * j[1, 0]) > 1.0e-12


def eigen_closed(p: RamseyParams) -> EigenDecomp2:
    """Eigen-decomposition of the steady-state Jacobian in closed form.

    lambda = a11/2 +/- sqrt(a11^2/4 + a12 a21), eigenvectors
    (-a12, a11/2 -/+ sqrt(...)), normalized like eig2 (largest component
    +1) and ordered lambda1 >= lambda2.
    """
    j = jacobian_closed(p)
    a11, a12, a21 = j[0, 0], j[0, 1], j[1, 0]
    full = a11 * a11 + 4.0 * a12 * a21
    if abs(full) <= 1.0e-12:
        raise NotDiagonalizableError(
            "repeated eigenvalue: a11^2 = -4 a12 a21 within 1e-12")
    if full < 0.0:
        half, im = 0.5 * a11, 0.5 * math.sqrt(-full)
        raise ComplexSpectrumError(
            f"complex spectrum {half} +/- {im}i",
            pair=(MatrixComplex(half, im), MatrixComplex(half, -im)))
    s = 0.5 * math.sqrt(full)
    lam1, lam2 = 0.5 * a11 + s, 0.5 * a11 - s
    v1 = np.array([-a12, 0.5 * a11 - s])
    v2 = np.array([-a12, 0.5 * a11 + s])
    v1 = _canonical(v1) if v1 @ v1 > 0.0 else _null_vector(j, lam1)
    v2 = _canonical(v2) if v2 @ v2 > 0.0 else _null_vector(j, lam2)
    return EigenDecomp2.from_pairs(lam1, v1, lam2, v2)


@dataclass
class LinearizedSystem:
    """Jacobian, steady state and eigen-structure bundled for display."""

    jac: np.ndarray
    steady: SteadyState
    eigen: EigenDecomp2

    def __post_init__(self):
        self.jac = np.asarray(self.jac, dtype=float)
        if self.jac[1, 1] != 0.0:
            raise DomainError("a22 must be exactly zero")
        for lam, v in ((self.eigen.lambda1, self.eigen.v1),
                       (self.eigen.lambda2, self.eigen.v2)):
            if np.max(np.abs(self.jac @ v - lam * v)) > 1.0e-9:
                raise DomainError("eigenpair does not satisfy J v = lambda v")


def linearize(p: RamseyParams) -> LinearizedSystem:
    return LinearizedSystem(jacobian_closed(p), steady_state(p), eigen_closed(p))


def linearized_solution(p: RamseyParams, z0: float, w0: float, t) -> np.ndarray:
    """Deviation (z, w) = (log k - log k*, log c - log c*) at time t for
    the linearized dynamics, via the eigen-decomposition.

    Accepts a scalar t (returns shape (2,)) or an array of times
    (returns shape (2, len(t)))."""
    d = eigen_closed(p)
    coeffs = d.P_inv @ np.array([z0, w0])
    t = np.asarray(t, dtype=float)
    return (coeffs[0] * np.multiply.outer(d.v1, np.exp(d.lambda1 * t))
            + coeffs[1] * np.multiply.outer(d.v2, np.exp(d.lambda2 * t)))


def _require_saddle(d: EigenDecomp2):
    if not (d.lambda1 > 0.0 > d.lambda2):
        raise StabilityStructureError(
            f"not a saddle: eigenvalue signs ({np.sign(d.lambda1):+.0f}, "
            f"{np.sign(d.lambda2):+.0f})",
            signs=(float(np.sign(d.lambda1)), float(np.sign(d.lambda2))))


def saddle_path_linear(p: RamseyParams, k0: float) -> float:
    """Initial consumption on the linearized stable arm at capital k0.

    log c0 = log c* + (v2_c / v2_k)(log k0 - log k*), v2 the stable
    eigenvector.
    """
    _check_k(k0)
    d = eigen_closed(p)
    _require_saddle(d)
    v = d.v2  # stable direction (lambda2 < 0)
    if v[0] == 0.0:
        raise StabilityStructureError(
            "stable eigenvector has no capital component", signs=None)
    ss = steady_state(p)
    log_c0 = ss.log_c_star + (v[1] / v[0]) * (math.log(k0) - ss.log_k_star)
    return math.exp(log_c0)


def _field(p: RamseyParams):
    """Scalar closure for the vector field, exponents clipped so the
    stepper can overshoot past the blow-up threshold without overflow."""
    a_tfp = p.A_tfp
    am1 = p.alpha - 1.0
    dep = _eff_dep(p)
    aa = p.alpha * a_tfp
    target = _mp_target(p)
    inv_theta = 1.0 / p.theta

    def f(lk, lc):
        e1 = math.exp(min(am1 * lk, 700.0))
        e2 = math.exp(min(lc - lk, 700.0))
        return a_tfp * e1 - e2 - dep, inv_theta * (aa * e1 - target)

    return f


def _classify_side(dk, dc, slope):
    """Which side of the stable arm a blown-up state sits on.

    The arm through the steady state has log-consumption deviation
    slope * dk, so the sign of dc - slope * dk separates trajectories
    whose consumption started too high (c-side, capital crashes) from
    too low (k-side, consumption collapses).  Comparing dc against the
    arm rather than against zero stays correct when k0 is far above
    k*, where a too-generous c0 drags log k across the threshold while
    log c is still below its steady-state value.
    """
    return "c-side" if dc - slope * dk > 0.0 else "k-side"


def _march(f, lk, lc, h, nsteps, lks, lcs, slope, record):
    """Fixed-step RK4 on the scalar pair (lk, lc).

    Appends states to `record` when given.  Returns
    (side, step_index, component, direction, rows_kept) at blow-up, or
    None if all steps complete.  Blow-up means a log deviation from
    (lks, lcs) beyond _BLOWUP_DEV, or a non-finite state.
    """
    half = 0.5 * h
    sixth = h / 6.0
    for j in range(nsteps):
        d1k, d1c = f(lk, lc)
        d2k, d2c = f(lk + half * d1k, lc + half * d1c)
        d3k, d3c = f(lk + half * d2k, lc + half * d2c)
        d4k, d4c = f(lk + h * d3k, lc + h * d3c)
        nlk = lk + sixth * (d1k + 2.0 * (d2k + d3k) + d4k)
        nlc = lc + sixth * (d1c + 2.0 * (d2c + d3c) + d4c)
        if not (math.isfinite(nlk) and math.isfinite(nlc)):
            # classify from the last finite state, drop the bad row
            dk, dc = lk - lks, lc - lcs
            side = _classify_side(dk, dc, slope)
            comp = 0 if abs(dk) >= abs(dc) else 1
            direction = math.copysign(1.0, dk if comp == 0 else dc)
            return side, j + 1, comp, direction, j + 1
        lk, lc = nlk, nlc
        dk, dc = lk - lks, lc - lcs
        if abs(dk) > _BLOWUP_DEV or abs(dc) > _BLOWUP_DEV:
            side = _classify_side(dk, dc, slope)
            comp = 0 if abs(dk) >= abs(dc) else 1
            direction = math.copysign(1.0, dk if comp == 0 else dc)
            # keep the trigger row only while it stays representable:
            # one step near blow-up can overshoot by hundreds of log
            # units, which downstream exponentials cannot absorb
            kept = j + 2
            if record is not None and abs(dk) <= 10.0 * _BLOWUP_DEV \
                    and abs(dc) <= 10.0 * _BLOWUP_DEV:
                record.append((lk, lc))
            else:
                kept = j + 1
            return side, j + 1, comp, direction, kept
        if record is not None:
            record.append((lk, lc))
    return None


def simulate(p: RamseyParams, k0: float, c0: float, grid: Grid) -> Trajectory:
    """RK4 trajectory of (log k, log c) from (k0, c0) over the grid.

    A log deviation beyond 5 from the steady state terminates the run
    with DivergenceError; the error carries the side classification
    ("c-side": consumption above the stable arm, "k-side": below it)
    and the truncated trajectory in .partial.
    """
    _check_k(k0)
    if not math.isfinite(c0) or c0 <= 0.0:
        raise DomainError(f"c0 must be positive, got {c0}")
    ss = steady_state(p)
    d = eigen_closed(p)
    slope = d.v2[1] / d.v2[0]
    lks, lcs = ss.log_k_star, ss.log_c_star
    lk, lc = math.log(k0), math.log(c0)
    if abs(lk - lks) > _BLOWUP_DEV or abs(lc - lcs) > _BLOWUP_DEV:
        side = _classify_side(lk - lks, lc - lcs, slope)
        raise DivergenceError(
            f"initial state already beyond the blow-up threshold ({side})",
            step_index=0, component=0 if abs(lk - lks) >= abs(lc - lcs) else 1,
            direction=math.copysign(1.0, (lk - lks) if abs(lk - lks) >= abs(lc - lcs)
                                    else (lc - lcs)),
            side=side)
    record = [(lk, lc)]
    hit = _march(_field(p), lk, lc, grid.h, grid.steps, lks, lcs, slope, record)
    labels = ("log_k", "log_c")
    if hit is None:
        return Trajectory(grid, np.array(record), labels)
    side, step, comp, direction, kept = hit
    partial = None
    if kept >= 2:
        sub = Grid(grid.t0, grid.t0 + (kept - 1) * grid.h, kept - 1)
        partial = Trajectory(sub, np.array(record[:kept]), labels)
    raise DivergenceError(
        f"trajectory blew up at step {step} ({side}, component {comp})",
        step_index=step, component=comp, direction=direction,
        side=side, partial=partial)


def shoot_nonlinear(p: RamseyParams, k0: float, tol: float,
                    t_max: float = 500.0, dt: float = 0.05) -> float:
    """Saddle-path initial consumption by bisection on c0.

    Each trial integrates forward until the blow-up classifier fires:
    c-side means c0 was too high, k-side too low.  The bracket starts
    at [1e-6, production(k0)] and narrows until its width is <= tol.
    """
    d = eigen_closed(p)
    _require_saddle(d)
    slope = d.v2[1] / d.v2[0]
    ss = steady_state(p)
    if not 0.05 * ss.k_star <= k0 <= 5.0 * ss.k_star:
        raise DomainError(
            f"k0 must lie within [0.05, 5] x k* = [{0.05 * ss.k_star:.6g}, "
            f"{5.0 * ss.k_star:.6g}], got {k0}")
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tol must be positive, got {tol}")
    if t_max <= 0.0 or dt <= 0.0:
        raise DomainError("t_max and dt must be positive")
    lks, lcs = ss.log_k_star, ss.log_c_star
    lk0 = math.log(k0)
    nsteps = max(1, int(math.ceil(t_max / dt)))
    h = t_max / nsteps
    f = _field(p)

    def classify(c0):
        lc0 = math.log(c0)
        if abs(lc0 - lcs) > _BLOWUP_DEV or abs(lk0 - lks) > _BLOWUP_DEV:
            return _classify_side(lk0 - lks, lc0 - lcs, slope)
        hit = _march(f, lk0, lc0, h, nsteps, lks, lcs, slope, None)
        if hit is None:
            raise HorizonError(
                f"trial c0={c0} not classified within t_max={t_max}")
        return hit[0]

    lo, hi = 1.0e-6, production(p, k0)
    if hi <= lo:
        raise BracketError(f"production at k0 ({hi}) below the bracket floor")
    if classify(lo) != "k-side":
        raise BracketError(f"lower bracket end c0={lo} is not k-side")
    if classify(hi) != "c-side":
        raise BracketError(f"upper bracket end c0={hi} is not c-side")
    for _ in range(300):
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        if classify(mid) == "k-side":
            lo = mid
        else:
            hi = mid
    raise ConvergenceError(
        f"shooting bracket still {hi - lo:.3e} wide after 300 bisections")


# ---------------------------------------------------------------------------
# household side: prices, Hamiltonian, budget and transversality


def firm_foc_r(p: RamseyParams, k: float) -> float:
    """Interest rate from the firm's first-order condition, r = f'(k) - delta."""
    return production_mp(p, k) - p.delta


def wage(p: RamseyParams, k: float, t: float) -> float:
    """Wage per unit of raw labor: e^(alpha_T t) (f(k) - f'(k) k)."""
    return math.exp(p.alpha_T * t) * (production(p, k) - production_mp(p, k) * k)


def _u_spec(p: RamseyParams) -> crra.CrraSpec:
    # normalized flow utility: (x^(1-theta) - 1)/(1-theta), log at theta=1
    if abs(p.theta - 1.0) <= 1.0e-12:
        return crra.CrraSpec(theta=p.theta, k0=1.0, k1=0.0)
    return crra.CrraSpec(theta=p.theta, k0=1.0, k1=-1.0 / (1.0 - p.theta))


def hamiltonian(p: RamseyParams, t: float, a: float, c: float, nu: float,
                r: float, w: float) -> float:
    """Present-value Hamiltonian of the household problem.

    u(c) e^{-(rho - alpha_L) t} + nu (w + (r - alpha_L) a - c), with the
    prices r and w taken as given (so the expression stays linear in
    the asset position a).
    """
    u = crra.utility(_u_spec(p), c)
    return u * math.exp(-(p.rho - p.alpha_L) * t) + nu * (w + (r - p.alpha_L) * a - c)


def foc_c_residual(p: RamseyParams, t: float, c: float, nu: float) -> float:
    """dH/dc = e^{-(rho-alpha_L) t} u'(c) - nu; zero along an optimum."""
    up = crra.marginal(_u_spec(p), c)
    return math.exp(-(p.rho - p.alpha_L) * t) * up - nu


@dataclass
class HouseholdPath:
    """Per-capita series on a grid: assets, consumption, costate, prices."""

    grid: Grid
    a: np.ndarray
    c: np.ndarray
    nu: np.ndarray
    r: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        n = self.grid.steps + 1
        for name in ("a", "c", "nu", "r", "w"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.shape != (n,):
                raise DomainError(f"{name} must have shape ({n},)")
            if not np.all(np.isfinite(arr)):
                raise DomainError(f"{name} must be finite")
            setattr(self, name, arr)


def assets_path(a0: float, r_fn, w_fn, c_fn, alpha_L: float,
                grid: Grid) -> np.ndarray:
    """Asset position by variation of constants.

    a(t) = e^{I(t)} (a0 + int_0^t (w - c) e^{-I(s)} ds) with
    I(t) = int_0^t (r - alpha_L); all integrals by cumulative Simpson on
    a half-step lattice of the grid.
    """
    if not math.isfinite(a0):
        raise DomainError("a0 must be finite")
    fine_t = np.linspace(grid.t0, grid.t1, 2 * grid.steps + 1)
    dt_fine = grid.h / 2.0
    rate = np.array([r_fn(t) - alpha_L for t in fine_t])
    bigI = cumulative_simpson(rate, dt_fine)
    flow = np.array([w_fn(t) - c_fn(t) for t in fine_t]) * np.exp(-bigI)
    inner = cumulative_simpson(flow, dt_fine)
    a = np.exp(bigI) * (a0 + inner)
    return a[::2]


def _simpson_samples(vals, h):
    # composite Simpson over uniformly sampled values; even interval count
    n = vals.size - 1
    if n % 2 != 0:
        raise DomainError("need an even number of grid steps")
    return (h / 3.0) * (vals[0] + vals[-1]
                        + 4.0 * vals[1:-1:2].sum() + 2.0 * vals[2:-1:2].sum())


def budget_identity_residual(path: HouseholdPath, alpha_L: float) -> float:
    """Lifetime budget gap: discounted terminal assets plus discounted
    consumption minus initial assets minus discounted wages.

    Zero (to quadrature error) for any path whose assets actually obey
    the flow constraint.  Requires an even number of grid steps.
    """
    h = path.grid.h
    bigI = cumulative_simpson(path.r - alpha_L, h)
    disc = np.exp(-bigI)
    pv_c = _simpson_samples(path.c * disc, h)
    pv_w = _simpson_samples(path.w * disc, h)
    return float(path.a[-1] * disc[-1] + pv_c - path.a[0] - pv_w)


def euler_residual(p: RamseyParams, traj: Trajectory) -> np.ndarray:
    """Per-node gap between measured consumption growth and the Euler
    equation (1/theta)(alpha A k^(alpha-1) - delta - rho - theta alpha_T).

    Consumption growth is the central difference of log c (second-order
    one-sided stencils at the ends).
    """
    if traj.states.shape[1] != 2:
        raise DomainError("expected a (log k, log c) trajectory")
    if traj.states.shape[0] < 3:
        raise DomainError("need at least 3 nodes for the difference stencils")
    lk = traj.states[:, 0]
    lc = traj.states[:, 1]
    h = traj.grid.h
    growth = np.empty_like(lc)
    growth[1:-1] = (lc[2:] - lc[:-2]) / (2.0 * h)
    growth[0] = (-3.0 * lc[0] + 4.0 * lc[1] - lc[2]) / (2.0 * h)
    growth[-1] = (3.0 * lc[-1] - 4.0 * lc[-2] + lc[-3]) / (2.0 * h)
    model = (p.alpha * p.A_tfp * np.exp((p.alpha - 1.0) * lk)
             - _mp_target(p)) / p.theta
    return growth - model


@dataclass(frozen=True)
class TransversalityReport:
    decaying: bool
    final_value: float
    degenerate_zero: bool = False


def transversality_check(path: HouseholdPath, alpha_L: float) -> TransversalityReport:
    """Decay diagnostic for discounted assets m(t) = a(t) e^{-I(t)}.

    Reports decay when |m| falls by at least a factor 10 over the last
    half of the horizon.  An identically zero asset path is flagged
    degenerate (trivially transversal).
    """
    h = path.grid.h
    bigI = cumulative_simpson(path.r - alpha_L, h)
    m = path.a * np.exp(-bigI)
    final = float(m[-1])
    if np.max(np.abs(path.a)) == 0.0:
        return TransversalityReport(True, final, degenerate_zero=True)
    mid = abs(m[path.grid.steps // 2])
    if mid == 0.0:
        return TransversalityReport(abs(final) == 0.0, final)
    return TransversalityReport(abs(final) <= mid / 10.0, final)


def household_path_from_trajectory(p: RamseyParams, traj: Trajectory) -> HouseholdPath:
    """Equilibrium household series from a (log k, log c) trajectory.

    Identifies per-capita assets with per-capita capital a = k e^{alpha_T t}
    and prices with the firm conditions; the costate comes from the
    consumption first-order condition.
    """
    if traj.states.shape[1] != 2:
        raise DomainError("expected a (log k, log c) trajectory")
    t = traj.times
    k = np.exp(traj.states[:, 0])
    growth = np.exp(p.alpha_T * t)
    c_pc = np.exp(traj.states[:, 1]) * growth
    r = p.alpha * p.A_tfp * k ** (p.alpha - 1.0) - p.delta
    w = growth * (1.0 - p.alpha) * p.A_tfp * k ** p.alpha
    nu = np.exp(-(p.rho - p.alpha_L) * t) * c_pc ** (-p.theta)
    return HouseholdPath(traj.grid, a=k * growth, c=c_pc, nu=nu, r=r, w=w)
