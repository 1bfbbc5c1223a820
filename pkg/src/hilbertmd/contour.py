"""Transform of sin(y) times a rational factor by contour deformation.

Writing sin(y) as complex exponentials, the exponentially growing
direction of each piece is avoided by deforming its integration path
into the half-plane where it decays: a symmetric wedge with vertex at
i*beta and rays at angle alpha off the real axis.  The principal value
picks up half-residue terms at the pole y = x, and conjugate symmetry
collapses everything to one upper-path integral:

    H(x) = Im(I+)/pi - cos(x) * r(x)

where I+ integrates exp(i*y) r(y) / (x - y) over the deformed path.
The wedge must stay below the poles of r, and the evaluation point must
not sit too close to the path.
"""

from __future__ import annotations

import numpy as np

from .chebyshev import cc_weights, cheb_nodes
from .errors import ContourError

__all__ = ["DeformedContour", "hilbert_oscillatory"]

# panel split points along the path parameter; the vertex kink sits at 0
_SPLITS = (-2.0, 0.0, 2.0)


def _ray_distance(p: complex, a: complex, u: complex) -> float:
    """Distance from p to the ray {a + t*u : t >= 0}, |u| = 1."""
    w = p - a
    t = (w * np.conj(u)).real
    if t <= 0.0:
        return abs(w)
    return abs(w - t * u)


class DeformedContour:
    """Wedge path and panel quadrature for one (alpha, beta) geometry."""

    def __init__(self, alpha: float, beta: float, n: int = 200, tail_digits: float = 16.0):
        if not (0.0 < alpha < 0.5 * np.pi):
            raise ContourError(f"ray angle must lie in (0, pi/2), got {alpha}")
        if beta <= 0.0:
            raise ContourError(f"vertex height must be positive, got {beta}")
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.n = int(n)
        # truncate where exp(-Im y) has fallen tail_digits decades
        self.t_max = (tail_digits * np.log(10.0) - beta) / np.sin(alpha)
        if self.t_max <= _SPLITS[-1]:
            raise ContourError("contour truncation shorter than its panel splits")
        edges = [-self.t_max, *_SPLITS, self.t_max]
        l = cheb_nodes(self.n)
        w = cc_weights(self.n)
        self._panels = []
        for p, q in zip(edges, edges[1:]):
            mid, half = 0.5 * (p + q), 0.5 * (q - p)
            t = mid + half * l
            direction = np.exp(1j * alpha) if mid > 0.0 else np.exp(-1j * alpha)
            y = 1j * beta + t * direction
            self._panels.append((y, half * w * direction))

    def min_distance(self, x: float) -> float:
        p = complex(x, 0.0)
        a = 1j * self.beta
        d_up = _ray_distance(p, a, np.exp(1j * self.alpha))
        d_dn = _ray_distance(p, a, -np.exp(-1j * self.alpha))
        return min(d_up, d_dn)

    def upper_integral(self, rational, x: float) -> complex:
        if self.min_distance(x) < 1e-3:
            raise ContourError(
                f"evaluation point {x} within 1e-3 of the deformed path"
            )
        total = 0.0 + 0.0j
        for y, wts in self._panels:
            total += np.sum(wts * np.exp(1j * y) * rational(y) / (x - y))
        return total


def hilbert_oscillatory(
    rational,
    x,
    alpha: float,
    beta: float,
    n: int = 200,
    tail_digits: float = 16.0,
):
    """Transform of sin(y)*rational(y) at x (scalar or array).

    rational must be analytic in the closed wedge between the real axis
    and the deformed path (poles strictly above it) and decay at least
    like 1/|y|^2; it is called with complex arguments.
    """
    path = DeformedContour(alpha, beta, n, tail_digits)
    arr = np.asarray(x, dtype=float)

    def one(xv: float) -> float:
        if np.isnan(xv):
            raise ContourError("cannot evaluate at nan")
        if np.isinf(xv):
            return 0.0
        ip = path.upper_integral(rational, xv)
        rx = complex(rational(complex(xv, 0.0))).real
        return float(ip.imag / np.pi - np.cos(xv) * rx)

    if arr.ndim == 0:
        return one(float(arr))
    return np.array([one(float(t)) for t in arr])
