"""Global rational-basis Hilbert transform on the whole line.

The map theta = 2*arctan(y) sends the line to the unit circle.  In the
basis phi_n(y) = exp(i*n*theta(y)) / (1 - i*y) the transform acts
diagonally, multiplying phi_n by -i*sign(n) (with sign(0) taken as +1),
so one FFT of the boundary samples of f(y)*(1 - i*y) yields expansion
coefficients and the transform is resummed pointwise.  Functions whose
mapped boundary trace is smooth converge geometrically in the number of
grid points; kinks or jumps in f degrade the coefficients to algebraic
decay, which is exactly what the coefficient export is for.
"""

from __future__ import annotations

import numpy as np

from .errors import GridError

__all__ = ["GlobalTransform", "weideman_coeffs", "weideman_hilbert"]


def _sample_circle(f, nf: int, finf: float) -> np.ndarray:
    theta = -np.pi + 2.0 * np.pi * np.arange(nf) / nf
    y = np.tan(0.5 * theta)
    vals = np.empty(nf, dtype=complex)
    vals[0] = finf  # theta = -pi is the point at infinity
    for j in range(1, nf):
        vals[j] = f(float(y[j])) * (1.0 - 1j * y[j])
    return vals


class GlobalTransform:
    """Whole-line transform of f built from one circle FFT."""

    def __init__(self, f, nf: int, finf: float = 0.0, alt_sign: bool = False):
        if nf % 2 != 0 or nf < 4:
            raise GridError(f"global grid size must be even and >= 4, got {nf}")
        self.nf = nf
        fv = _sample_circle(f, nf, finf)
        spec = np.fft.fft(fv)
        n = np.arange(-nf // 2, nf // 2)
        parity = np.where(n % 2 == 0, 1.0, -1.0)
        self.n = n
        self.coeffs = parity * spec[np.mod(n, nf)] / nf
        self._sgn = np.where(n >= 0, 1.0, -1.0)
        self._sigma = 1.0 if alt_sign else -1.0

    def value(self, x: float) -> float:
        if np.isnan(x):
            raise GridError("cannot evaluate at nan")
        if np.isinf(x):
            return 0.0
        theta = 2.0 * np.arctan(x)
        series = np.sum(1j * self._sgn * self.coeffs * np.exp(1j * self.n * theta))
        return float(self._sigma * (series / (1.0 - 1j * x)).real)

    def values(self, xs) -> np.ndarray:
        return np.array([self.value(float(t)) for t in np.asarray(xs, dtype=float)])


def weideman_coeffs(f, nf: int, finf: float = 0.0):
    """(mode index array, complex coefficient array) for f on the circle grid."""
    g = GlobalTransform(f, nf, finf)
    return g.n, g.coeffs


def weideman_hilbert(f, nf: int, x, finf: float = 0.0, alt_sign: bool = False):
    """Transform of f at x (scalar or array) with nf circle samples."""
    g = GlobalTransform(f, nf, finf, alt_sign)
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        return g.value(float(arr))
    return g.values(arr)
