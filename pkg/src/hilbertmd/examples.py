"""Registry of test functions with known Hilbert transforms.

Each entry bundles the piecewise branch definitions on a recommended
partition, default resolutions for the multidomain and global methods,
the function as a plain callable (for the brute-force oracle), and the
closed-form transform under this library's sign convention

    H[f](x) = (1/pi) PV integral of f(y)/(x - y) dy,

so H[1/(1+y^2)] = +x/(1+x^2).  Closed forms always return 0 at +-inf;
the discontinuous piecewise case returns +-inf at the jump points where
the transform genuinely diverges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .domains import Field, Partition, PiecewiseFn, build_partition, sample
from .errors import UsageError
from .special import dawson, digamma, scaled_ei

__all__ = ["ExampleSpec", "EXAMPLES", "get_example", "exact_hilbert", "list_examples"]


def _vectorized(core: Callable[[float], float]) -> Callable:
    """Scalar closed form -> evaluator that is 0 at +-inf, array-aware."""

    def h(x):
        arr = np.asarray(x, dtype=float)
        flat = np.atleast_1d(arr)
        out = np.empty_like(flat)
        for i, t in enumerate(flat):
            out[i] = 0.0 if np.isinf(t) else core(float(t))
        if arr.ndim == 0:
            return float(out[0])
        return out.reshape(arr.shape)

    return h


def _exact_lorentz(a: float) -> Callable:
    return _vectorized(lambda x: x / (a * (a * a + x * x)))


def _exact_quartic() -> Callable:
    rt2 = np.sqrt(2.0)
    return _vectorized(lambda x: x * (1.0 + x * x) / (rt2 * (1.0 + x**4)))


def _exact_piecewise(a1: float, a2: float, alpha: float) -> Callable:
    c1 = (2.0 / a1) * np.arctan(1.0 / a1)
    c2 = (2.0 * alpha / a2) * np.arctan(a2)

    def core(x: float) -> float:
        t12 = c1 * x / (a1 * a1 + x * x) + c2 * x / (a2 * a2 + x * x)
        c3 = 1.0 / (a1 * a1 + x * x) - alpha / (a2 * a2 + x * x)
        if c3 == 0.0:
            # continuous case: the log coefficient vanishes at the junctions
            return t12 / np.pi
        if x == 1.0 or x == -1.0:
            # log argument vanishes: -c3*log -> +inf iff c3*sign(x) > 0
            return np.inf if c3 * np.sign(x) > 0 else -np.inf
        log_term = np.log(abs((1.0 - x) / (1.0 + x)))
        return (t12 - c3 * log_term) / np.pi

    return _vectorized(core)


def _exact_gauss() -> Callable:
    c = 2.0 / np.sqrt(np.pi)
    return _vectorized(lambda x: c * float(dawson(x)))


def _exact_sech() -> Callable:
    def core(x: float) -> float:
        im = digamma(0.25 + 1j * x / (2.0 * np.pi)).imag
        return -np.tanh(x) + (2.0 / np.pi) * im

    return _vectorized(core)


def _exact_abs_exp() -> Callable:
    def core(x: float) -> float:
        if x == 0.0:
            return 0.0
        a = abs(x)
        return np.sign(x) * (scaled_ei(a) - scaled_ei(-a)) / np.pi

    return _vectorized(core)


def _exact_osc_quadratic() -> Callable:
    e1 = np.exp(-1.0)
    return _vectorized(lambda x: -(np.cos(x) - e1) / (1.0 + x * x))


def _exact_osc_quartic() -> Callable:
    r = 1.0 / np.sqrt(2.0)
    er, cr, sr = np.exp(-r), np.cos(r), np.sin(r)
    return _vectorized(
        lambda x: -(np.cos(x) - er * (cr + sr * x * x)) / (1.0 + x**4)
    )


def _sech_branch(y: float) -> float:
    return 0.0 if abs(y) > 700.0 else 1.0 / np.cosh(y)


@dataclass(frozen=True)
class ExampleSpec:
    """One registered test function and everything needed to drive it."""

    name: str
    fn: PiecewiseFn
    partition: Partition
    degrees: tuple
    nf: int
    exact: Callable
    whole: Callable              # f as a plain function of y, for the oracle
    oracle_breakpoints: tuple = ()
    oracle_osc: Callable | None = None   # rational factor when f = sin(y)*r(y)
    contour_params: tuple | None = None  # (alpha, beta) for the deformed path
    contour_rational: Callable | None = None
    finf: float = 0.0

    def make_field(self, degrees=None) -> Field:
        return sample(self.fn, self.partition, self.degrees if degrees is None else degrees)


def _lorentz_spec(name: str, a: float, degrees, nf: int) -> ExampleSpec:
    a2 = a * a
    return ExampleSpec(
        name=name,
        fn=PiecewiseFn(
            branches=(
                lambda y: 1.0 / (a2 + y * y),
                lambda s: s * s / (a2 * s * s + 1.0),
            ),
            continuity={-1.0: True, 1.0: True},
            name=name,
        ),
        partition=build_partition((-1.0, 1.0), wrap=True),
        degrees=degrees,
        nf=nf,
        exact=_exact_lorentz(a),
        whole=lambda y: 1.0 / (a2 + y * y),
    )


def _quartic_spec() -> ExampleSpec:
    return ExampleSpec(
        name="quartic",
        fn=PiecewiseFn(
            branches=(
                lambda y: 1.0 / (1.0 + y**4),
                lambda s: s**4 / (1.0 + s**4),
            ),
            continuity={-1.0: True, 1.0: True},
            name="quartic",
        ),
        partition=build_partition((-1.0, 1.0), wrap=True),
        degrees=(50, 50),
        nf=100,
        exact=_exact_quartic(),
        whole=lambda y: 1.0 / (1.0 + y**4),
    )


def _piecewise_spec(name: str, alpha: float, nf: int) -> ExampleSpec:
    a1, a2 = 1.0, 2.0
    cont = alpha == (a2 * a2 + 1.0) / (a1 * a1 + 1.0)

    def whole(y):
        return np.where(
            np.abs(y) <= 1.0, 1.0 / (a1 * a1 + y * y), alpha / (a2 * a2 + y * y)
        )

    return ExampleSpec(
        name=name,
        fn=PiecewiseFn(
            branches=(
                lambda y: 1.0 / (a1 * a1 + y * y),
                lambda s: alpha * s * s / (a2 * a2 * s * s + 1.0),
            ),
            continuity={-1.0: cont, 1.0: cont},
            name=name,
        ),
        partition=build_partition((-1.0, 1.0), wrap=True),
        degrees=(120, 120),
        nf=nf,
        exact=_exact_piecewise(a1, a2, alpha),
        whole=whole,
        oracle_breakpoints=(-1.0, 1.0),
    )


def _gauss_spec() -> ExampleSpec:
    def tail(s: float) -> float:
        return 0.0 if s == 0.0 else np.exp(-1.0 / (s * s))

    return ExampleSpec(
        name="gauss",
        fn=PiecewiseFn(
            branches=(lambda y: np.exp(-y * y), tail),
            continuity={-6.0: True, 6.0: True},
            name="gauss",
        ),
        partition=build_partition((-6.0, 6.0), wrap=True),
        degrees=(100, 8),
        nf=200,
        exact=_exact_gauss(),
        whole=lambda y: np.exp(-(y**2)),
    )


def _sech_spec() -> ExampleSpec:
    def tail(s: float) -> float:
        return 0.0 if s == 0.0 else _sech_branch(1.0 / s)

    return ExampleSpec(
        name="sech",
        fn=PiecewiseFn(
            branches=(_sech_branch, tail),
            continuity={-40.0: True, 40.0: True},
            name="sech",
        ),
        partition=build_partition((-40.0, 40.0), wrap=True),
        degrees=(1000, 8),
        nf=700,
        exact=_exact_sech(),
        whole=_sech_branch,
    )


def _abs_exp_spec() -> ExampleSpec:
    def left_tail(s: float) -> float:
        return 0.0 if s == 0.0 else np.exp(1.0 / s)  # s < 0 here

    def right_tail(s: float) -> float:
        return 0.0 if s == 0.0 else np.exp(-1.0 / s)

    return ExampleSpec(
        name="abs_exp",
        fn=PiecewiseFn(
            branches=(np.exp, lambda y: np.exp(-y), left_tail, right_tail),
            continuity={-40.0: True, 0.0: True, 40.0: True},
            # e^{+-y} continued across y = 0 grows; keep the margin short
            continuation_reach=2.0,
            name="abs_exp",
        ),
        partition=build_partition((-40.0, 0.0, 40.0), wrap=False),
        degrees=(80, 80, 40, 40),
        nf=400,
        exact=_exact_abs_exp(),
        whole=lambda y: np.exp(-np.abs(y)),
        oracle_breakpoints=(0.0,),
    )


def _osc_spec(name: str, quartic: bool) -> ExampleSpec:
    if quartic:
        rational = lambda y: 1.0 / (1.0 + y**4)  # noqa: E731
        alpha, beta = np.pi / 8.0, 0.2
        exact = _exact_osc_quartic()
    else:
        rational = lambda y: 1.0 / (1.0 + y * y)  # noqa: E731
        alpha, beta = np.pi / 4.0, 0.5
        exact = _exact_osc_quadratic()

    def finite(y: float) -> float:
        return np.sin(y) * rational(y)

    def tail(s: float) -> float:
        return 0.0 if s == 0.0 else np.sin(1.0 / s) * rational(1.0 / s)

    return ExampleSpec(
        name=name,
        fn=PiecewiseFn(
            branches=(finite, tail),
            continuity={-1.0: True, 1.0: True},
            name=name,
        ),
        partition=build_partition((-1.0, 1.0), wrap=True),
        degrees=(100, 100),
        nf=1000,
        exact=exact,
        whole=finite,
        oracle_osc=rational,
        contour_params=(alpha, beta),
        contour_rational=rational,
    )


EXAMPLES: dict = {
    spec.name: spec
    for spec in (
        _lorentz_spec("lorentz_a1", 1.0, (50, 50), 16),
        _lorentz_spec("lorentz_a2", 2.0, (80, 80), 100),
        _quartic_spec(),
        _piecewise_spec("piecewise_cont", 2.5, 1000),
        _piecewise_spec("piecewise_disc", 1.0, 2048),
        _gauss_spec(),
        _sech_spec(),
        _abs_exp_spec(),
        _osc_spec("osc_quadratic", quartic=False),
        _osc_spec("osc_quartic", quartic=True),
    )
}


def list_examples() -> tuple:
    return tuple(EXAMPLES)


def get_example(name: str) -> ExampleSpec:
    try:
        return EXAMPLES[name]
    except KeyError:
        known = ", ".join(EXAMPLES)
        raise UsageError(f"unknown example {name!r}; known: {known}") from None


def exact_hilbert(name: str, x):
    """Closed-form transform of a registered example at x."""
    return get_example(name).exact(x)
