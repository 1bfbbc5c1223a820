"""Registered benchmark functions and their closed-form transforms."""

import numpy as np
import pytest

from hilbertmd.errors import UsageError
from hilbertmd.examples import exact_hilbert, get_example, list_examples
from hilbertmd.oracle import pv_oracle
from hilbertmd.special import dawson

ALL = (
    "lorentz_a1",
    "lorentz_a2",
    "quartic",
    "piecewise_cont",
    "piecewise_disc",
    "gauss",
    "sech",
    "abs_exp",
    "osc_quadratic",
    "osc_quartic",
)


def test_registry_contents():
    assert tuple(list_examples()) == ALL
    with pytest.raises(UsageError):
        get_example("nope")


def test_exact_hilbert_convenience_wrapper():
    assert exact_hilbert("lorentz_a1", 2.0) == get_example("lorentz_a1").exact(2.0)


@pytest.mark.parametrize("name", ALL[:8])
def test_whole_line_function_matches_branches(name):
    ex = get_example(name)
    f = ex.make_field()
    for x in (-3.7, -0.4, 0.9, 6.1):
        assert abs(ex.whole(x) - f.eval(x)) <= 1e-8


def test_oscillatory_whole_line_functions():
    # the sampled field cannot resolve these; the whole-line callable is
    # the ground truth the global and deformed-path routes consume
    exq = get_example("osc_quadratic")
    ex4 = get_example("osc_quartic")
    for x in (-3.7, -0.4, 0.9, 6.1):
        assert abs(exq.whole(x) - np.sin(x) / (1.0 + x * x)) <= 1e-15
        assert abs(ex4.whole(x) - np.sin(x) / (1.0 + x**4)) <= 1e-15


@pytest.mark.parametrize("name", ALL)
def test_exact_transform_against_reference_quadrature(name):
    ex = get_example(name)
    for x in (-2.6, 0.45, 3.8):
        ref = pv_oracle(
            ex.whole, x, breakpoints=ex.oracle_breakpoints, osc_factor=ex.oracle_osc
        ) / np.pi
        assert abs(ref - ex.exact(x)) <= 1e-8


def test_narrow_and_wide_bump_closed_forms():
    ex1 = get_example("lorentz_a1")
    ex2 = get_example("lorentz_a2")
    xs = np.array([-4.0, -0.3, 0.8, 11.0])
    assert np.max(np.abs(ex1.exact(xs) - xs / (1.0 + xs**2))) == 0.0
    assert np.max(np.abs(ex2.exact(xs) - xs / (2.0 * (4.0 + xs**2)))) == 0.0


def test_quartic_closed_form():
    ex = get_example("quartic")
    xs = np.array([-2.0, 0.5, 3.0])
    ref = xs * (1.0 + xs**2) / (np.sqrt(2.0) * (1.0 + xs**4))
    assert np.max(np.abs(ex.exact(xs) - ref)) <= 1e-15


def test_gauss_transform_uses_dawson():
    ex = get_example("gauss")
    for x in (0.0, 1.0, -2.5):
        assert abs(ex.exact(x) - 2.0 / np.sqrt(np.pi) * dawson(x)) <= 1e-15


def test_sech_transform_is_odd_and_vanishes_at_origin():
    ex = get_example("sech")
    assert ex.exact(0.0) == 0.0
    for x in (0.7, 2.2):
        assert abs(ex.exact(x) + ex.exact(-x)) <= 1e-14


def test_kinked_exponential_spot_value():
    ex = get_example("abs_exp")
    assert abs(ex.exact(1.0) - 0.41174091875985175) <= 1e-14
    assert ex.exact(0.0) == 0.0


def test_oscillatory_transforms_at_origin():
    exq = get_example("osc_quadratic")
    assert abs(exq.exact(0.0) + (1.0 - np.exp(-1.0))) <= 1e-15
    ex4 = get_example("osc_quartic")
    assert abs(ex4.exact(0.0) + 0.6251471913796176) <= 1e-13


def test_discontinuous_pair_signed_blowups():
    ex = get_example("piecewise_disc")
    assert ex.exact(1.0) == np.inf
    assert ex.exact(-1.0) == -np.inf
    cont = get_example("piecewise_cont")
    assert np.isfinite(cont.exact(1.0)) and np.isfinite(cont.exact(-1.0))


def test_make_field_honors_degree_override():
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=33)
    assert all(d == 33 for d in f.degrees)
    g = ex.make_field()
    assert g.degrees == tuple(ex.degrees)
