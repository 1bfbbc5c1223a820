"""Exception types shared across the package."""


class HilbertError(Exception):
    """Base class for all package-specific errors."""


class GridError(HilbertError):
    """Invalid grid size or evaluation point for the spectral core."""


class PartitionError(HilbertError):
    """Malformed domain partition (ordering, zero breakpoints, coverage)."""


class FunctionSpecError(HilbertError):
    """Piecewise function description violates its invariants."""


class DecayFlagError(FunctionSpecError):
    """Operation requires decay at infinity but the flag is unset or false."""


class EvaluationError(HilbertError):
    """Transform evaluation failed (collision guards, unsupported point)."""


class ContourError(HilbertError):
    """Evaluation point too close to a deformed contour, or bad parameters."""


class OracleConvergenceError(HilbertError):
    """Adaptive reference quadrature failed to reach the requested tolerance."""


class SolverDivergenceError(HilbertError):
    """Newton iteration diverged (residual grew over consecutive steps)."""


class SolverLimitError(HilbertError):
    """Newton iteration hit the step limit before reaching tolerance."""


class UsageError(HilbertError):
    """Bad command-line arguments or option combinations."""
