"""Chebyshev-Lobatto grid primitives.

Nodes, Clenshaw-Curtis quadrature weights, spectral differentiation,
Chebyshev series coefficients, and barycentric evaluation on the
reference interval [-1, 1].  Everything downstream maps physical
domains onto this grid affinely.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.fft import dct

from .errors import GridError

__all__ = [
    "cheb_nodes",
    "cc_weights",
    "diff_matrix",
    "cheb_coeffs",
    "bary_weights",
    "bary_eval",
]

# Tolerated overshoot of |x| past 1 from affine round-trips.
_EDGE_SLACK = 1e-12


def _check_degree(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise GridError(f"grid degree must be an integer, got {n!r}")
    if n < 1:
        raise GridError(f"grid degree must be >= 1, got {n}")
    return int(n)


@lru_cache(maxsize=256)
def _nodes_cached(n: int) -> np.ndarray:
    m = np.arange(n + 1)
    # sin form of cos(m*pi/n): symmetric to the last bit, middle node
    # lands on exact 0.0 for even n.
    x = np.sin(np.pi * (n - 2 * m) / (2 * n))
    x.setflags(write=False)
    return x


def cheb_nodes(n: int) -> np.ndarray:
    """Return the n+1 extreme points of T_n in descending order.

    The first entry is exactly +1.0, the last exactly -1.0, and the grid
    is exactly symmetric under negation (for even n the middle node is
    exactly 0.0).
    """
    return _nodes_cached(_check_degree(n))


@lru_cache(maxsize=256)
def _cc_weights_cached(n: int) -> np.ndarray:
    # Integrals of even-degree Chebyshev polynomials, folded through an
    # order-n cosine transform; odd degrees integrate to zero.
    d = np.zeros(n + 1)
    k = np.arange(0, n + 1, 2)
    d[k] = 2.0 / (1.0 - k.astype(float) ** 2)
    d[0] *= 0.5
    if n % 2 == 0:
        d[n] *= 0.5
    y = dct(d, type=1)
    sgn = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    full = 0.5 * (y + d[0] + sgn * d[n])
    w = (2.0 / n) * full
    w[0] *= 0.5
    w[n] *= 0.5
    w.setflags(write=False)
    return w


def cc_weights(n: int) -> np.ndarray:
    """Clenshaw-Curtis weights on the n+1 Lobatto nodes of [-1, 1].

    Built from the closed-form Chebyshev moments with a fast cosine
    transform, so the cost is O(n log n).  The weights integrate
    polynomials of degree <= n exactly and sum to 2.
    """
    return _cc_weights_cached(_check_degree(n))


@lru_cache(maxsize=64)
def _diff_matrix_cached(n: int) -> np.ndarray:
    x = _nodes_cached(n)
    c = np.ones(n + 1)
    c[0] = 2.0
    c[n] = 2.0
    c *= np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    dx = x[:, None] - x[None, :]
    d = np.outer(c, 1.0 / c) / (dx + np.eye(n + 1))
    # Negative-sum trick: the diagonal absorbs the row sum so constants
    # differentiate to exactly zero.
    d -= np.diag(d.sum(axis=1))
    d.setflags(write=False)
    return d


def diff_matrix(n: int) -> np.ndarray:
    """Dense (n+1) x (n+1) differentiation matrix on the Lobatto grid.

    Row sums vanish identically, so D @ const = 0 to rounding and
    polynomials of degree <= n differentiate exactly.
    """
    return _diff_matrix_cached(_check_degree(n))


def cheb_coeffs(samples: np.ndarray) -> np.ndarray:
    """Chebyshev series coefficients of the interpolant through samples.

    samples[m] is the value at node cos(m*pi/n) (descending order).
    Returns c[0..n] with p(x) = sum c_k T_k(x).  Uses a type-1 cosine
    transform, O(n log n).
    """
    g = np.asarray(samples, dtype=float)
    if g.ndim != 1 or g.size < 2:
        raise GridError("need a 1-d array of at least two node samples")
    n = g.size - 1
    c = dct(g, type=1) / n
    c[0] *= 0.5
    c[n] *= 0.5
    return c


@lru_cache(maxsize=256)
def _bary_weights_cached(n: int) -> np.ndarray:
    lam = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    lam[0] *= 0.5
    lam[n] *= 0.5
    lam.setflags(write=False)
    return lam


def bary_weights(n: int) -> np.ndarray:
    """Barycentric weights for the n+1 Lobatto nodes: (-1)^m, halved at the ends."""
    return _bary_weights_cached(_check_degree(n))


def bary_eval(samples: np.ndarray, x: float) -> float:
    """Evaluate the polynomial interpolant of the node samples at x.

    x must lie in [-1, 1] up to a rounding-slack of 1e-12; evaluation at
    a node returns that sample exactly.
    """
    g = np.asarray(samples, dtype=float)
    if g.ndim != 1 or g.size < 2:
        raise GridError("need a 1-d array of at least two node samples")
    n = g.size - 1
    if not np.isfinite(x):
        raise GridError(f"evaluation point must be finite, got {x}")
    if abs(x) > 1.0 + _EDGE_SLACK:
        raise GridError(f"evaluation point {x} outside [-1, 1]")
    nodes = _nodes_cached(n)
    diff = x - nodes
    hit = np.nonzero(diff == 0.0)[0]
    if hit.size:
        return float(g[hit[0]])
    lam = _bary_weights_cached(n)
    r = lam / diff
    return float(r @ g / r.sum())
