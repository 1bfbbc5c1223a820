"""Travelling-wave solver: residual pieces, Newton behavior, invariances."""

import numpy as np
import pytest

from hilbertmd.errors import GridError, SolverLimitError, UsageError
from hilbertmd.soliton import (
    SolitonProblem,
    apply_tau,
    assemble_jacobian,
    assemble_residual,
    newton_solve,
    rescaled_iterate,
)


def exact_profile(problem):
    """Closed-form state for m=2, c=1: Q = 4/(1+xi^2), v = 4s/(1+s^2)."""
    q = 4.0 / (1.0 + problem.xi**2)
    v = 4.0 * problem.s / (1.0 + problem.s**2)
    return np.concatenate([q, v])


def test_zero_state_has_zero_residual():
    prob = SolitonProblem(m=2, n=40)
    f = assemble_residual(prob, np.zeros(prob.size))
    assert np.max(np.abs(f)) == 0.0


def test_closed_form_annihilates_the_residual():
    prob = SolitonProblem(m=2, n=100)
    f = assemble_residual(prob, exact_profile(prob))
    assert np.max(np.abs(f)) <= 1e-10


def test_jacobian_matches_finite_differences():
    prob = SolitonProblem(m=2, n=60)
    rng = np.random.default_rng(0)
    u = prob.initial_guess() + 0.1 * rng.standard_normal(prob.size)
    du = rng.standard_normal(prob.size)
    du /= np.linalg.norm(du)
    h = 1e-6
    fd = (assemble_residual(prob, u + h * du)
          - assemble_residual(prob, u - h * du)) / (2.0 * h)
    an = assemble_jacobian(prob, u) @ du
    scale = np.max(np.abs(an)) + 1.0
    assert np.max(np.abs(fd - an)) / scale <= 1e-6


def test_tau_rows_replace_the_marked_equations():
    prob = SolitonProblem(m=2, n=40)
    u = prob.initial_guess()
    f, jac = apply_tau(prob, assemble_residual(prob, u),
                       assemble_jacobian(prob, u), u=u)
    for row, idx in zip(prob.tau_rows, prob.tau_indices):
        assert abs(f[idx] - row @ u) <= 1e-13
        assert np.max(np.abs(jac[idx] - row)) == 0.0


def test_apply_tau_needs_the_iterate():
    prob = SolitonProblem(m=2, n=40)
    u = prob.initial_guess()
    with pytest.raises(UsageError):
        apply_tau(prob, assemble_residual(prob, u))


def test_degree_must_be_even():
    with pytest.raises(GridError):
        SolitonProblem(m=2, n=41)


def test_quadratic_case_converges_fast_to_the_closed_form():
    prob = SolitonProblem(m=2, n=100)
    prof = newton_solve(prob)
    assert prof.iterations <= 10
    assert prof.residual < 1e-10
    q_ref = 4.0 / (1.0 + prob.xi**2)
    assert np.max(np.abs(prof.Q - q_ref)) <= 1e-12
    assert abs(prof.peak - 4.0) <= 1e-12


def test_bump_height_does_not_change_the_root():
    a = newton_solve(SolitonProblem(m=2, n=100, amplitude=3.5))
    b = newton_solve(SolitonProblem(m=2, n=100, amplitude=4.0))
    assert np.max(np.abs(a.Q - b.Q)) <= 1e-11


def test_constraints_hold_at_the_root():
    prof = newton_solve(SolitonProblem(m=2, n=100))
    r = prof.diagnostics["constraint_residuals"]
    assert max(abs(v) for v in r) <= 1e-13


def test_speed_rescaling_produces_a_root():
    base = newton_solve(SolitonProblem(m=2, n=100))
    c = 2.0
    prob2 = SolitonProblem(m=2, n=100, c=c)
    u2 = rescaled_iterate(base, c)
    f2 = assemble_residual(prob2, u2)
    assert np.max(np.abs(f2)) <= 1e-8


def test_diagnostics_shape():
    prof = newton_solve(SolitonProblem(m=2, n=100))
    d = prof.diagnostics
    for key in (
        "condition_estimate",
        "pre_tau_rank_defect",
        "pre_tau_sigma_min",
        "tau_kernel_dimension",
        "junction_c1_mismatch",
        "residual_history",
        "peak_amplitude",
    ):
        assert key in d
    # the tau system leaves the center tail sample and one junction
    # direction numerically undetermined; both are reported, not hidden
    assert d["tau_kernel_dimension"] == 2
    assert d["pre_tau_rank_defect"] == 2
    assert d["junction_c1_mismatch"] <= 1e-10
    assert len(d["residual_history"]) == prof.iterations


def test_iteration_budget_is_enforced():
    with pytest.raises(SolverLimitError):
        newton_solve(SolitonProblem(m=3, n=60, max_iter=2))


def test_wrong_size_start_is_rejected():
    prob = SolitonProblem(m=2, n=40)
    with pytest.raises(UsageError):
        newton_solve(prob, u0=np.zeros(5))


def test_cubic_case_is_positive_and_single_peaked():
    prof = newton_solve(SolitonProblem(m=3, n=120, mu=0.5))
    assert prof.residual < 1e-10
    assert np.all(prof.Q > -1e-12)
    k = int(np.argmax(prof.Q))
    assert prof.xi[k] == 0.0
    diffs = np.sign(np.diff(prof.Q))
    # descending-ordered grid: values rise to the center then fall
    changes = np.sum(np.diff(diffs[diffs != 0]) != 0)
    assert changes == 1


def test_even_symmetry_of_the_cubic_profile():
    prof = newton_solve(SolitonProblem(m=3, n=120, mu=0.5))
    assert prof.even_symmetry_error() <= 1e-10
