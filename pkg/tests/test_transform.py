"""Split-domain transform: frozen scalars, operator laws, matrix path."""

import numpy as np
import pytest

from hilbertmd.domains import (
    FINITE,
    Domain,
    Partition,
    PiecewiseFn,
    build_partition,
    sample,
)
from hilbertmd.errors import EvaluationError, FunctionSpecError
from hilbertmd.examples import get_example
from hilbertmd.oracle import pv_oracle
from hilbertmd.transform import (
    HilbertPlan,
    build_eval_grid,
    hilbert_matrix,
    hilbert_md,
)


def _indicator_field(n=40):
    part = Partition((-1.0, 1.0), False, (Domain(FINITE, -1.0, 1.0),))
    fn = PiecewiseFn((lambda y: 1.0,), {-1.0: False, 1.0: False})
    return sample(fn, part, (n,))


def _ramp_field(n=40):
    part = Partition((-1.0, 1.0), False, (Domain(FINITE, -1.0, 1.0),))
    fn = PiecewiseFn((lambda y: y,), {-1.0: False, 1.0: False})
    return sample(fn, part, (n,))


def test_indicator_frozen_values():
    f = _indicator_field()
    assert abs(hilbert_md(f, 3.0) - np.log(2.0) / np.pi) <= 1e-13
    assert abs(hilbert_md(f, -3.0) + np.log(2.0) / np.pi) <= 1e-13
    assert abs(hilbert_md(f, 0.5) - np.log(3.0) / np.pi) <= 1e-13


def test_indicator_log_divergence_at_the_edges():
    f = _indicator_field()
    assert hilbert_md(f, 1.0) == np.inf
    assert hilbert_md(f, -1.0) == -np.inf


def test_ramp_frozen_values():
    f = _ramp_field()
    assert abs(hilbert_md(f, 2.0) - (-2.0 + 2.0 * np.log(3.0)) / np.pi) <= 1e-13
    assert abs(hilbert_md(f, 0.0) + 2.0 / np.pi) <= 1e-13


def test_square_vanishes_at_origin():
    part = Partition((-1.0, 1.0), False, (Domain(FINITE, -1.0, 1.0),))
    fn = PiecewiseFn((lambda y: y * y,), {-1.0: False, 1.0: False})
    f = sample(fn, part, (40,))
    assert abs(hilbert_md(f, 0.0)) <= 1e-14


def test_tail_only_frozen_value():
    part = build_partition((-1.0, 1.0), wrap=False)
    fn = PiecewiseFn(
        (lambda y: 0.0, lambda s: s * s, lambda s: s * s),
        {-1.0: False, 1.0: False},
    )
    f = sample(fn, part, 40)
    ref = (1.0 - np.log(3.0) / 4.0) / np.pi
    assert abs(hilbert_md(f, 2.0) - ref) <= 1e-13


def test_matches_reference_quadrature_off_anchor():
    f = _indicator_field()
    for x in (-2.7, 0.3, 1.8):
        ref = pv_oracle(lambda y: 1.0 if -1 <= y <= 1 else 0.0, x,
                        breakpoints=(-1.0, 1.0)) / np.pi
        assert abs(hilbert_md(f, x) - ref) <= 1e-10


def _lorentz_pair(lam=1.0):
    fin = lambda y: 1.0 / (1.0 + (y / lam) ** 2)  # noqa: E731
    tail = lambda s: (lam * s) ** 2 / ((lam * s) ** 2 + 1.0)  # noqa: E731
    return fin, tail


def test_linearity_relative_to_operator_scale():
    part = build_partition((-1.0, 1.0))
    f1 = PiecewiseFn(
        (lambda y: 1.0 / (1.0 + y * y), lambda s: s * s / (1.0 + s * s)),
        {-1.0: True, 1.0: True},
    )
    f2 = PiecewiseFn(
        (lambda y: y / (1.0 + y * y) ** 2,
         lambda s: s**3 / (1.0 + s * s) ** 2),
        {-1.0: True, 1.0: True},
    )
    a, b = 2.0e3, -3.7e3
    comb = PiecewiseFn(
        (lambda y: a * f1.branches[0](y) + b * f2.branches[0](y),
         lambda s: a * f1.branches[1](s) + b * f2.branches[1](s)),
        {-1.0: True, 1.0: True},
    )
    deg = 60
    xs = np.array([-5.1, -1.4, -0.3, 0.0, 0.8, 2.2, 9.0])
    h1 = np.asarray(hilbert_md(sample(f1, part, deg), xs))
    h2 = np.asarray(hilbert_md(sample(f2, part, deg), xs))
    hc = np.asarray(hilbert_md(sample(comb, part, deg), xs))
    scale = np.max(np.abs(a * h1) + np.abs(b * h2))
    assert np.max(np.abs(hc - (a * h1 + b * h2))) / scale <= 1e-12


def test_even_input_gives_odd_output():
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=50)
    xs = np.array([0.17, 0.9, 3.3, 12.0])
    plus = np.asarray(hilbert_md(f, xs))
    minus = np.asarray(hilbert_md(f, -xs))
    assert np.max(np.abs(plus + minus)) <= 1e-13


def test_dilation_law():
    lam = 3.0
    fin, tail = _lorentz_pair(lam)
    part = build_partition((-lam, lam))
    fn = PiecewiseFn((fin, tail), {-lam: True, lam: True})
    f = sample(fn, part, 50)
    xs = np.array([-7.3, -2.1, -0.4, 0.9, 3.3, 6.6])
    # transform of f(y/lam) equals the unit transform evaluated at x/lam
    ref = (xs / lam) / (1.0 + (xs / lam) ** 2)
    assert np.max(np.abs(np.asarray(hilbert_md(f, xs)) - ref)) <= 1e-12


def test_plan_reuse_matches_single_calls():
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=40)
    plan = HilbertPlan(f)
    xs = np.array([-2.0, 0.1, 0.5, 4.4])
    a = plan.values(xs)
    b = np.array([hilbert_md(f, float(x)) for x in xs])
    assert np.max(np.abs(a - b)) <= 1e-15


def test_near_node_and_on_node_points():
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=50)
    node = float(f.domain_nodes(0)[13])
    xn = float(f.partition.domains[0].from_ref(node))
    for x in (xn, xn + 3e-5, xn - 7e-6):
        assert abs(hilbert_md(f, x) - ex.exact(x)) <= 1e-13


def test_infinity_maps_to_zero_and_nan_is_rejected():
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=30)
    assert hilbert_md(f, np.inf) == 0.0
    assert hilbert_md(f, -np.inf) == 0.0
    with pytest.raises(EvaluationError):
        hilbert_md(f, np.nan)


def test_continuous_piecewise_finite_at_anchor():
    ex = get_example("piecewise_cont")
    f = ex.make_field(degrees=120)
    for x in (-1.0, 1.0):
        assert abs(hilbert_md(f, x) - ex.exact(x)) <= 1e-12


def test_discontinuous_piecewise_signed_infinities_at_anchors():
    ex = get_example("piecewise_disc")
    f = ex.make_field(degrees=120)
    assert hilbert_md(f, 1.0) == np.inf == ex.exact(1.0)
    assert hilbert_md(f, -1.0) == -np.inf == ex.exact(-1.0)


def test_matrix_path_agrees_with_pointwise_path():
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=60)
    hm = hilbert_matrix(f.partition, f.degrees, fn=f.fn)
    once = hm.matrix @ np.concatenate(f.samples)
    pts = np.array([r[2] for r in hm.rows])
    fin = np.isfinite(pts)
    md = np.asarray(hilbert_md(f, pts[fin]))
    assert np.max(np.abs(once[fin] - md)) <= 1e-12
    ref = np.array([ex.exact(p) if np.isfinite(p) else 0.0 for p in pts])
    assert np.max(np.abs(once - ref)) <= 1e-12


def test_matrix_anti_involution():
    # applying the operator twice negates a resolvable decaying function
    ex = get_example("lorentz_a1")
    f = ex.make_field(degrees=60)
    hm = hilbert_matrix(f.partition, f.degrees, fn=f.fn)
    stacked = np.concatenate(f.samples)
    twice = hm.matrix @ (hm.matrix @ stacked)
    assert np.max(np.abs(twice + stacked)) <= 1e-12


def test_matrix_path_rejects_discontinuous_functions():
    ex = get_example("piecewise_disc")
    f = ex.make_field(degrees=40)
    with pytest.raises(FunctionSpecError):
        hilbert_matrix(f.partition, f.degrees, fn=f.fn)


def test_eval_grid_covers_all_domains():
    p = build_partition((-1.0, 1.0))
    xs, owners = build_eval_grid(p, (20, 20))
    assert xs.size == owners.size
    assert np.sum(np.isinf(xs)) == 1
    fin = xs[np.isfinite(xs)]
    assert fin.min() < -1.0 and fin.max() > 1.0
