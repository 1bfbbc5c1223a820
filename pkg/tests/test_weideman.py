"""Global rational-basis transform: diagonality, exactness, coefficients."""

import numpy as np
import pytest

from hilbertmd.errors import GridError
from hilbertmd.examples import get_example
from hilbertmd.weideman import GlobalTransform, weideman_coeffs, weideman_hilbert


def phi(n):
    """Basis element (1+iy)^n / (1-iy)^(n+1); the weighted circle trace
    of phi_n is the single Fourier mode exp(i*n*theta)."""
    return lambda y: (1.0 + 1j * y) ** n / (1.0 - 1j * y) ** (n + 1)


XS = np.array([-2.3, -1.0, -0.4, 0.0, 0.7, 1.9, 5.1])


def test_basis_elements_map_to_single_coefficients():
    for n in range(-4, 5):
        idx, c = weideman_coeffs(phi(n), 32, finf=(-1.0) ** n)
        expect = np.where(idx == n, 1.0, 0.0)
        assert np.max(np.abs(c - expect)) <= 1e-14


def test_transform_is_diagonal_on_the_basis():
    # real part maps to imaginary part and back with a sign; both parts
    # are real functions, the second decays like 1/y so its weighted
    # sample at the infinity point is -i*(-1)^n
    for n in range(0, 5):
        p = phi(n)
        nf = 4 * n + 8
        h_re = weideman_hilbert(lambda y: p(y).real, nf, XS)
        h_im = weideman_hilbert(
            lambda y: p(y).imag, nf, XS, finf=-1j * (-1.0) ** n
        )
        ref = np.array([p(t) for t in XS])
        assert np.max(np.abs(h_re - ref.imag)) <= 1e-13
        assert np.max(np.abs(h_im + ref.real)) <= 1e-13


def test_narrow_bump_exact_at_tiny_grids():
    ex = get_example("lorentz_a1")
    for nf in (4, 8, 16):
        err = np.max(np.abs(weideman_hilbert(ex.whole, nf, XS) - ex.exact(XS)))
        assert err <= 1e-13


def test_wide_bump_exact_at_moderate_grid():
    ex = get_example("lorentz_a2")
    xs = np.linspace(-8.0, 8.0, 161)
    err = np.max(np.abs(weideman_hilbert(ex.whole, 80, xs) - ex.exact(xs)))
    assert err <= 1e-13


def test_quartic_coefficients_decay_to_rounding():
    ex = get_example("quartic")
    idx, c = weideman_coeffs(ex.whole, 120)
    mag = np.abs(c)
    assert np.max(mag[np.abs(idx) >= 60]) <= 1e-14
    assert mag[idx == 20][0] >= 1e-10


def test_alternate_sign_convention_flips_the_output():
    ex = get_example("lorentz_a1")
    a = weideman_hilbert(ex.whole, 24, XS)
    b = weideman_hilbert(ex.whole, 24, XS, alt_sign=True)
    assert np.max(np.abs(a + b)) == 0.0


def test_grid_size_validation():
    f = lambda y: 1.0 / (1.0 + y * y)  # noqa: E731
    with pytest.raises(GridError):
        GlobalTransform(f, 25)
    with pytest.raises(GridError):
        GlobalTransform(f, 2)


def test_point_handling():
    ex = get_example("lorentz_a1")
    g = GlobalTransform(ex.whole, 16)
    assert g.value(np.inf) == 0.0
    assert g.value(-np.inf) == 0.0
    with pytest.raises(GridError):
        g.value(np.nan)


def test_values_matches_scalar_loop():
    ex = get_example("quartic")
    g = GlobalTransform(ex.whole, 64)
    xs = np.array([-3.0, 0.25, 1.7])
    assert np.max(np.abs(g.values(xs) - [g.value(float(x)) for x in xs])) == 0.0
