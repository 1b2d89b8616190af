"""Exception types shared across the laboratory.

The CLI maps these onto process exit codes: domain problems exit 3,
convergence/divergence problems exit 4 (I/O failures exit 5, argparse
usage errors exit 2).
"""


class EconLabError(Exception):
    """Base class for all library errors."""


class DomainError(EconLabError):
    """Input outside an operation's domain (bad shape, sign, range)."""


class BracketError(DomainError):
    """Root bracket without a sign change."""


class DegenerateVectorError(DomainError):
    """A vector required to be nonzero was (numerically) zero."""


class SingularSystemError(DomainError):
    """Coefficient matrix numerically singular."""


class ComplexSpectrumError(DomainError):
    """Real eigen-decomposition requested for a matrix with a complex
    conjugate eigenvalue pair.  The pair is attached as MatrixComplex
    values in .pair."""

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class NotDiagonalizableError(DomainError):
    """Defective matrix: repeated eigenvalue with a 1-D eigenspace."""


class InfeasibleParametersError(DomainError):
    """Model parameters violate a feasibility condition."""


class StabilityStructureError(DomainError):
    """Eigenvalue signs do not form the required saddle (one positive,
    one negative).  Signs are attached in .signs."""

    def __init__(self, message, signs=None):
        super().__init__(message)
        self.signs = signs


class ConvergenceError(EconLabError):
    """Iteration budget exhausted before meeting the tolerance."""


class DivergenceError(ConvergenceError):
    """Trajectory blew up.  Carries where and how.

    step_index: step at which the threshold tripped
    component:  index of the offending state component
    direction:  +1.0 or -1.0, sign of the offending component/deviation
    side:       optional label used by the saddle-path classifier
    partial:    optional truncated Trajectory up to the tripping step
    """

    def __init__(self, message, step_index, component, direction,
                 side=None, partial=None):
        super().__init__(message)
        self.step_index = step_index
        self.component = component
        self.direction = direction
        self.side = side
        self.partial = partial


class HorizonError(ConvergenceError):
    """Integration horizon ended before the event of interest."""
