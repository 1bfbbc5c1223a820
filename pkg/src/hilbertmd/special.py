"""Special functions needed by the closed-form reference transforms.

All three are hand-built so the reference values do not lean on the
same machinery they are meant to check: a three-branch Dawson
function, a complex digamma via recurrence plus asymptotic series, and
the scaled exponential integral solved as a boundary-value problem on
a compactified grid.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .chebyshev import bary_eval, cheb_nodes, diff_matrix
from .errors import EvaluationError

__all__ = ["dawson", "digamma", "ScaledEiSolver", "scaled_ei"]

_SQRT_PI = float(np.sqrt(np.pi))


def _dawson_maclaurin(x: np.ndarray) -> np.ndarray:
    # D(x) = sum_k (-2)^k x^(2k+1) / (1*3*5*...*(2k+1))
    out = np.zeros_like(x)
    term = x.copy()
    total = term.copy()
    k = 0
    while True:
        term = term * (-2.0 * x * x) / (2 * k + 3)
        total += term
        k += 1
        if np.all(np.abs(term) <= 1e-18 * (np.abs(total) + 1e-300)) or k > 200:
            break
    out[:] = total
    return out


def _dawson_lattice(x: np.ndarray) -> np.ndarray:
    # Gaussian-lattice expansion over odd multiples of h; terms outside
    # an 8-sigma window are below 1e-28 and dropped.
    h = 0.25
    out = np.empty_like(x)
    for i, xi in enumerate(x):
        n_lo = int(np.floor(4.0 * xi - 32.0))
        n_hi = int(np.ceil(4.0 * xi + 32.0))
        n = np.arange(n_lo | 1, n_hi + 1, 2, dtype=float)
        out[i] = np.sum(np.exp(-((xi - n * h) ** 2)) / n) / _SQRT_PI
    return out


def _dawson_asymptotic(x: np.ndarray) -> np.ndarray:
    inv2 = 1.0 / (2.0 * x * x)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, 13):
        term = term * (2 * k - 1) * inv2
        total += term
    return total / (2.0 * x)


def dawson(x):
    """Dawson integral, exp(-x^2) * integral of exp(t^2) from 0 to x.

    Absolute error stays below 1e-13 on the whole line.  Odd in x.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    mag = np.abs(a)
    out = np.empty_like(mag)
    m1 = mag <= 2.5
    m2 = (mag > 2.5) & (mag <= 50.0)
    m3 = mag > 50.0
    if m1.any():
        out[m1] = _dawson_maclaurin(mag[m1])
    if m2.any():
        out[m2] = _dawson_lattice(mag[m2])
    if m3.any():
        out[m3] = _dawson_asymptotic(mag[m3])
    out *= np.sign(a)
    return float(out[0]) if scalar else out


# Bernoulli numbers B_2 .. B_14 for the digamma asymptotic tail.
_BERN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def digamma(z):
    """Digamma of a complex argument.

    Shifts the argument rightward until its real part reaches 8, then
    applies the logarithmic asymptotic series with Bernoulli terms
    through order 14.  Poles at nonpositive integers are rejected.
    """
    w = complex(z)
    if w.imag == 0.0 and w.real <= 0.0 and w.real == int(w.real):
        raise EvaluationError(f"digamma pole at {w.real:.0f}")
    acc = 0.0 + 0.0j
    while w.real < 8.0:
        acc -= 1.0 / w
        w += 1.0
    inv2 = 1.0 / (w * w)
    tail = 0.0 + 0.0j
    p = inv2
    for k, b in enumerate(_BERN, start=1):
        tail += b / (2 * k) * p
        p *= inv2
    return acc + np.log(w) - 0.5 / w - tail


class ScaledEiSolver:
    """Boundary-value solve for w(x) = exp(-x) * Ei(x) on the whole line.

    w satisfies w' + w = 1/x and decays like 1/x in both directions.
    Three coupled collocation domains cover the line: the reciprocal
    coordinate s = 1/x on [-1, 0] and [0, 1] (where -s^2 u' + u = s and
    the s = 0 rows pin the decay), and x on [-1, 1] where the smooth
    part v = w - exp(-x) log|x| satisfies v' + v = (1 - exp(-x))/x.
    Matching rows tie the three representations together at x = -1 and
    x = 1; log|x| vanishes there so v and w agree at the seams.
    """

    def __init__(self, n_tail: int = 220, n_core: int = 120, refine: int = 2):
        self.n1 = n_tail
        self.n2 = n_core
        self.n3 = n_tail
        self._build(refine)

    def _build(self, refine: int) -> None:
        n1, n2, n3 = self.n1, self.n2, self.n3
        s1 = 0.5 * (cheb_nodes(n1) - 1.0)          # [-1, 0], descending
        x2 = cheb_nodes(n2)                        # [-1, 1]
        s3 = 0.5 * (cheb_nodes(n3) + 1.0)          # [0, 1]
        s1[0], s1[-1] = 0.0, -1.0
        s3[0], s3[-1] = 1.0, 0.0
        d1 = 2.0 * diff_matrix(n1)
        d2 = diff_matrix(n2)
        d3 = 2.0 * diff_matrix(n3)

        m = (n1 + 1) + (n2 + 1) + (n3 + 1)
        a = np.zeros((m, m))
        rhs = np.zeros(m)
        i1 = slice(0, n1 + 1)
        i2 = slice(n1 + 1, n1 + 1 + n2 + 1)
        i3 = slice(n1 + 1 + n2 + 1, m)

        a[i1, i1] = -np.diag(s1 ** 2) @ d1 + np.eye(n1 + 1)
        rhs[i1] = s1
        a[i2, i2] = d2 + np.eye(n2 + 1)
        q = np.empty_like(x2)
        nz = x2 != 0.0
        q[nz] = -np.expm1(-x2[nz]) / x2[nz]
        q[~nz] = 1.0
        rhs[i2] = q
        a[i3, i3] = -np.diag(s3 ** 2) @ d3 + np.eye(n3 + 1)
        rhs[i3] = s3

        # Seam at x = -1: core value matches the left-tail value.
        row = (n1 + 1) + n2            # core node x = -1 (last, descending)
        a[row, :] = 0.0
        a[row, (n1 + 1) + n2] = 1.0    # v at x = -1
        a[row, n1] = -1.0              # u at s = -1 (left tail, last node)
        rhs[row] = 0.0
        # Seam at s = 1: right-tail value matches the core value at x = 1.
        row = (n1 + 1) + (n2 + 1)      # right-tail node s = 1 (first)
        a[row, :] = 0.0
        a[row, (n1 + 1) + (n2 + 1)] = 1.0
        a[row, n1 + 1] = -1.0          # v at x = 1 (first core node)
        rhs[row] = 0.0

        lu = lu_factor(a)
        sol = lu_solve(lu, rhs)
        for _ in range(refine):
            sol += lu_solve(lu, rhs - a @ sol)

        self._u_left = sol[i1]
        self._v_core = sol[i2]
        self._u_right = sol[i3]
        self._a = a
        self._rhs = rhs
        self._sol = sol
        self._seam_rows = ((n1 + 1) + n2, (n1 + 1) + (n2 + 1))

    def residual_inf(self) -> float:
        """Largest collocation-equation residual away from the seam rows."""
        r = np.abs(self._rhs - self._a @ self._sol)
        r[list(self._seam_rows)] = 0.0
        return float(np.max(r))

    def w(self, x: float) -> float:
        """exp(-x) * Ei(x); rejected at x = 0 where Ei diverges."""
        if x == 0.0:
            raise EvaluationError("scaled exponential integral diverges at x = 0")
        if not np.isfinite(x):
            return 0.0
        if abs(x) <= 1.0:
            l = float(x)
            return bary_eval(self._v_core, l) + np.exp(-x) * np.log(abs(x))
        s = 1.0 / x
        if s < 0.0:
            return bary_eval(self._u_left, 2.0 * s + 1.0)
        return bary_eval(self._u_right, 2.0 * s - 1.0)


@lru_cache(maxsize=1)
def _solver() -> ScaledEiSolver:
    return ScaledEiSolver()


def scaled_ei(x):
    """exp(-x) * Ei(x) for scalar or array input (singular at x = 0)."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        return _solver().w(float(arr))
    return np.array([_solver().w(float(t)) for t in arr])
