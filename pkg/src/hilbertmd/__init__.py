"""Spectral Hilbert transforms on the real line.

The library evaluates the principal-value convolution

    H[f](x) = (1/pi) PV integral f(y) / (x - y) dy

three ways: a split-domain Chebyshev collocation method that handles
piecewise functions and algebraic tails, a single global expansion in
rational eigenfunctions of the transform, and a contour-deformation
route for oscillatory integrands.  A Newton solver built on the same
machinery computes solitary-wave profiles of a nonlocal wave equation.
"""

from .chebyshev import (
    bary_eval,
    bary_weights,
    cc_weights,
    cheb_coeffs,
    cheb_nodes,
    diff_matrix,
)
from .contour import DeformedContour, hilbert_oscillatory
from .domains import (
    FINITE,
    TAIL,
    WRAPPED,
    Domain,
    Field,
    Partition,
    PiecewiseFn,
    build_partition,
    sample,
)
from .errors import (
    ContourError,
    DecayFlagError,
    EvaluationError,
    FunctionSpecError,
    GridError,
    HilbertError,
    OracleConvergenceError,
    PartitionError,
    SolverDivergenceError,
    SolverLimitError,
    UsageError,
)
from .examples import EXAMPLES, exact_hilbert, get_example, list_examples
from .oracle import pv_oracle
from .soliton import (
    SolitonProblem,
    SolitonProfile,
    apply_tau,
    assemble_jacobian,
    assemble_residual,
    newton_solve,
    rescaled_iterate,
)
from .special import dawson, digamma, scaled_ei
from .transform import (
    HilbertMatrix,
    HilbertPlan,
    build_eval_grid,
    hilbert_matrix,
    hilbert_md,
)
from .weideman import GlobalTransform, weideman_coeffs, weideman_hilbert

__version__ = "0.1.0"

__all__ = [
    "FINITE",
    "TAIL",
    "WRAPPED",
    "Domain",
    "Partition",
    "PiecewiseFn",
    "Field",
    "build_partition",
    "sample",
    "cheb_nodes",
    "cc_weights",
    "diff_matrix",
    "cheb_coeffs",
    "bary_weights",
    "bary_eval",
    "hilbert_md",
    "HilbertPlan",
    "HilbertMatrix",
    "hilbert_matrix",
    "build_eval_grid",
    "GlobalTransform",
    "weideman_coeffs",
    "weideman_hilbert",
    "DeformedContour",
    "hilbert_oscillatory",
    "SolitonProblem",
    "SolitonProfile",
    "newton_solve",
    "assemble_residual",
    "assemble_jacobian",
    "apply_tau",
    "rescaled_iterate",
    "pv_oracle",
    "dawson",
    "digamma",
    "scaled_ei",
    "EXAMPLES",
    "get_example",
    "exact_hilbert",
    "list_examples",
    "HilbertError",
    "GridError",
    "PartitionError",
    "FunctionSpecError",
    "DecayFlagError",
    "EvaluationError",
    "ContourError",
    "OracleConvergenceError",
    "SolverDivergenceError",
    "SolverLimitError",
    "UsageError",
    "__version__",
]
