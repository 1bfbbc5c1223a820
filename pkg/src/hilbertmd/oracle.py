"""Adaptive principal-value quadrature used as an independent referee.

Computes PV integral of f(y)/(x - y) over the whole line with generic
adaptive quadrature: a symmetrized window around the singular point
(which cancels the pole analytically), reciprocal-coordinate tails, and
oscillation-aware tail weights when the integrand carries a sine
factor.  Two passes at different tolerances must agree before a value
is returned.  This shares no code path with the spectral transforms it
referees.
"""

from __future__ import annotations

import warnings
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad as _scipy_quad

from .errors import OracleConvergenceError

__all__ = ["pv_oracle"]


def quad(*args, **kwargs):
    # accuracy is arbitrated by the two-pass agreement check, not by the
    # quadrature's internal estimate, so its roundoff warnings are noise
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        return _scipy_quad(*args, **kwargs)


def _inner(f: Callable, x: float, w: float, tpoints, epsabs: float) -> float:
    def sym(t: float) -> float:
        if t == 0.0:
            return 0.0
        return (f(x - t) - f(x + t)) / t

    val, err = quad(
        sym, 0.0, w, points=tpoints or None, epsabs=epsabs, epsrel=0.0, limit=400
    )
    return val


def _tail_plain(f: Callable, x: float, w: float, side: int, upoints, epsabs: float) -> float:
    # y = x + side/u maps the tail onto u in (0, 1/w]; the PV kernel
    # 1/(x - y) becomes -side*u, and dy = -side/u^2 du, so the tail
    # integral is -side * integral of f(x + side/u)/u du.
    def g(u: float) -> float:
        if u == 0.0:
            return 0.0
        return f(x + side / u) / u

    val, err = quad(
        g, 0.0, 1.0 / w, points=upoints or None, epsabs=epsabs, epsrel=0.0, limit=400
    )
    return -side * val


def _tail_sin(r: Callable, x: float, w: float, side: int, epsabs: float) -> float:
    # Tail of sin(y)*r(y)/(x-y).  For the right tail integrate in y
    # directly; for the left substitute y -> -y so the domain becomes
    # [w - x, infinity) with an odd sine flip.
    if side > 0:

        def g(y: float) -> float:
            return r(y) / (x - y)

        a = x + w
    else:

        def g(z: float) -> float:
            return -r(-z) / (x + z)

        a = w - x
    val, err = quad(g, a, np.inf, weight="sin", wvar=1.0, epsabs=epsabs, limit=400)
    return val


def _pv_once(
    f: Callable,
    x: float,
    epsabs: float,
    breakpoints: Sequence[float],
    osc_factor: Callable | None,
    half_width: float,
) -> float:
    w = half_width
    tpoints = sorted({abs(b - x) for b in breakpoints if 0.0 < abs(b - x) < w})
    total = _inner(f, x, w, tpoints, epsabs)
    for side in (+1, -1):
        if osc_factor is not None:
            total += _tail_sin(osc_factor, x, w, side, epsabs)
        else:
            upts = sorted(
                {
                    1.0 / (side * (b - x))
                    for b in breakpoints
                    if side * (b - x) > w
                }
            )
            total += _tail_plain(f, x, w, side, upts, epsabs)
    return total


def pv_oracle(
    f: Callable,
    x: float,
    tol: float = 1e-10,
    breakpoints: Sequence[float] = (),
    osc_factor: Callable | None = None,
    half_width: float = 1.0,
) -> float:
    """PV integral of f(y)/(x - y) dy over the real line.

    The transform value is this divided by pi.  breakpoints lists the
    points where f has kinks or jumps; osc_factor, when given, declares
    f(y) = sin(y) * osc_factor(y) so the tails can use oscillation-aware
    quadrature.  Raises OracleConvergenceError when two refinement
    passes disagree by more than tol.
    """
    if not np.isfinite(x):
        raise OracleConvergenceError("reference quadrature needs a finite point")
    coarse = _pv_once(f, x, tol * 1e-2, breakpoints, osc_factor, half_width)
    fine = _pv_once(f, x, tol * 1e-4, breakpoints, osc_factor, half_width)
    if not (np.isfinite(coarse) and np.isfinite(fine)):
        raise OracleConvergenceError(f"reference quadrature returned non-finite at x={x}")
    if abs(coarse - fine) > tol:
        raise OracleConvergenceError(
            f"reference passes disagree by {abs(coarse - fine):.3e} at x={x}"
        )
    return fine
