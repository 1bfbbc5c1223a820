"""Solitary-wave profiles of a nonlocal nonlinear wave equation.

Travelling waves of speed c with power nonlinearity satisfy

    -c*Q - (HQ)' + Q^m / m = 0

with Q -> 0 at infinity, H the Hilbert transform.  The profile is
collocated on two domains, xi in [-1, 1] and the reciprocal s = 1/xi in
[-1, 1].  On the tail the unknown is v(s) = y*Q(y) at y = 1/s, which is
smooth at s = 0 for the O(1/xi^2) decay these waves have; Q is
recovered as s*v.  Newton iteration with relaxation drives the stacked
residual to zero; three tau constraints replace collocation rows:
continuity of Q at xi = +-1 (two junction rows) and Q'(0) = 0 (centering,
which also removes the translation freedom).

The unknown v(0) multiplies nothing in the operator (its sample weight
is s = 0, the derivative row there vanishes, and the transform is zero
at infinity), so the tau system carries one structurally zero column.
The tau rows also enforce only *value* continuity at the junctions;
value-continuous states with a derivative kink at y = +-1 span further
numerically-null directions, and along them the discrete roots form a
one-parameter family whose smooth member is the physical wave.  Newton
steps therefore solve the junction-bordered least-squares system: the
tau Jacobian stacked on two rows measuring the first-derivative
mismatch of Q across the junctions, with targets that drive the
mismatch to zero.  Each step is backtracked until the residual drops,
and the v(0) sample is held at its decaying initial value.  Rank
defect, conditioning, and the kernel dimension are reported, not
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chebyshev import bary_eval, cheb_coeffs, diff_matrix
from .domains import build_partition
from .errors import GridError, SolverDivergenceError, SolverLimitError, UsageError
from .transform import hilbert_matrix

__all__ = [
    "SolitonProblem",
    "SolitonProfile",
    "assemble_residual",
    "assemble_jacobian",
    "apply_tau",
    "newton_solve",
    "rescaled_iterate",
]

# singular values below this (relative to the largest) are treated as
# kernel directions of the tau system; well-determined directions sit
# many orders above, kernel ones at roundoff
_NULL_RCOND = 1e-8


class SolitonProblem:
    """Discretized travelling-wave problem on the two-domain grid."""

    def __init__(
        self,
        m: int,
        n: int = 100,
        c: float = 1.0,
        mu: float | None = None,
        tol: float = 1e-10,
        max_iter: int = 400,
        amplitude: float | None = None,
        delta: float = 0.25,
    ):
        if int(m) != m or m < 2:
            raise UsageError(f"nonlinearity power must be an integer >= 2, got {m}")
        if int(n) != n or n < 2 or n % 2 != 0:
            # even degree guarantees collocation points at xi = 0 and s = 0
            raise GridError(f"per-domain degree must be even and >= 2, got {n}")
        if mu is None:
            mu = 1.0 if m == 2 else 0.5
        if not (0.0 < mu <= 1.0):
            raise UsageError(f"relaxation must lie in (0, 1], got {mu}")
        if amplitude is None:
            # the waves compress and shrink as the power grows; a bump of
            # this height lands in the Newton basin for each power tested
            amplitude = 3.5 if m == 2 else 8.0 / m
        if amplitude <= 0.0:
            raise UsageError(f"initial amplitude must be positive, got {amplitude}")
        self.m = int(m)
        self.n = int(n)
        self.c = float(c)
        self.mu = float(mu)
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        self.amplitude = float(amplitude)

        self.partition = build_partition((-1.0, 1.0), wrap=True)
        fin, inf_ = self.partition.domains
        self.xi = fin.nodes(n)
        self.s = inf_.nodes(n)
        self.size = 2 * n + 2

        # stacked sample weights: Q as-is on [-1,1], Q = s*v on the tail
        self.s_diag = np.concatenate([np.ones(n + 1), self.s])
        d_fin = diff_matrix(n) / fin.half
        d_inf = diff_matrix(n) / inf_.half
        self.d_fin = d_fin
        dmat = np.zeros((self.size, self.size))
        dmat[: n + 1, : n + 1] = d_fin
        # chain rule d/dy = -s^2 d/ds; the s=0 row vanishes with it
        dmat[n + 1 :, n + 1 :] = -np.diag(self.s**2) @ d_inf
        hmat = hilbert_matrix(self.partition, (n, n), delta=delta).matrix
        self.m0 = -self.c * np.diag(self.s_diag) - dmat @ hmat @ np.diag(self.s_diag)

        # tau rows: the two tail junction nodes and the center node
        self.i_junction_hi = n + 1          # s = +1, shares y = +1 with xi-row 0
        self.i_junction_lo = 2 * n + 1      # s = -1, shares y = -1 with xi-row n
        self.i_center = n // 2              # xi = 0
        self.i_tail_zero = n + 1 + n // 2   # s = 0 (structural null index)

        rows = np.zeros((3, self.size))
        rows[0, 0] = 1.0
        rows[0, self.i_junction_hi] = -1.0          # Q(1) - v(1) = 0
        rows[1, n] = 1.0
        rows[1, self.i_junction_lo] = 1.0           # Q(-1) + v(-1) = 0
        rows[2, : n + 1] = d_fin[self.i_center]     # Q'(0) = 0
        self.tau_rows = rows
        self.tau_indices = (self.i_junction_hi, self.i_junction_lo, self.i_center)

        # first-derivative mismatch of Q across the two junctions; zero on
        # junction-smooth states, O(1) on the kink family the tau rows allow.
        # From the tail side dQ/dy = -s^2 d(s*v)/ds, which is -(d_inf g) at
        # s = +-1, so the mismatch rows are d_fin + d_inf @ diag(s).
        dg = d_inf @ np.diag(self.s)
        c1 = np.zeros((2, self.size))
        c1[0, : n + 1] = d_fin[0]
        c1[0, n + 1 :] = dg[0]
        c1[1, : n + 1] = d_fin[n]
        c1[1, n + 1 :] = dg[n]
        self.c1_rows = c1

    def initial_guess(self) -> np.ndarray:
        a = self.amplitude
        q0 = a / (1.0 + self.xi**2)
        v0 = a * self.s / (1.0 + self.s**2)
        return np.concatenate([q0, v0])

    def constraint_residuals(self, u: np.ndarray) -> np.ndarray:
        return self.tau_rows @ u


def assemble_residual(problem: SolitonProblem, u: np.ndarray) -> np.ndarray:
    """Collocation residual of the wave equation, no tau substitution."""
    su = problem.s_diag * u
    return problem.m0 @ u + su**problem.m / problem.m


def assemble_jacobian(problem: SolitonProblem, u: np.ndarray) -> np.ndarray:
    """Derivative of the raw residual with respect to the stacked unknowns."""
    su = problem.s_diag * u
    return problem.m0 + np.diag(su ** (problem.m - 1) * problem.s_diag)


def apply_tau(
    problem: SolitonProblem,
    f: np.ndarray,
    jac: np.ndarray | None = None,
    u: np.ndarray | None = None,
):
    """Replace the three designated rows by the constraint equations.

    The residual rows become the constraint residuals (which needs the
    iterate u); the Jacobian rows become the constraint rows themselves.
    """
    idx = list(problem.tau_indices)
    f = f.copy()
    if u is None:
        raise UsageError("tau substitution of the residual needs the iterate")
    f[idx] = problem.tau_rows @ u
    if jac is not None:
        jac = jac.copy()
        jac[idx, :] = problem.tau_rows
    return f, jac


def _tau_residual(problem: SolitonProblem, u: np.ndarray) -> np.ndarray:
    f = assemble_residual(problem, u)
    f[list(problem.tau_indices)] = problem.tau_rows @ u
    return f


def _tau_jacobian(problem: SolitonProblem, u: np.ndarray) -> np.ndarray:
    jac = assemble_jacobian(problem, u)
    jac[list(problem.tau_indices), :] = problem.tau_rows
    return jac


@dataclass
class SolitonProfile:
    """Converged wave profile with solver diagnostics."""

    m: int
    c: float
    n: int
    xi: np.ndarray
    s: np.ndarray
    Q: np.ndarray
    v: np.ndarray
    iterations: int
    residual: float
    diagnostics: dict = field(default_factory=dict)

    @property
    def coeffs_Q(self) -> np.ndarray:
        return cheb_coeffs(self.Q)

    @property
    def coeffs_v(self) -> np.ndarray:
        return cheb_coeffs(self.v)

    @property
    def peak(self) -> float:
        return float(np.max(self.Q))

    def eval_Q(self, x):
        """Profile value anywhere on the extended line."""
        arr = np.asarray(x, dtype=float)

        def one(t: float) -> float:
            if np.isinf(t):
                return 0.0
            if abs(t) <= 1.0:
                return float(bary_eval(self.Q, t))
            s = 1.0 / t
            return float(s * bary_eval(self.v, s))

        if arr.ndim == 0:
            return one(float(arr))
        return np.array([one(float(t)) for t in arr])

    def even_symmetry_error(self) -> float:
        return float(np.max(np.abs(self.Q - self.Q[::-1])))

    def stacked(self) -> np.ndarray:
        return np.concatenate([self.Q, self.v])


def newton_solve(problem: SolitonProblem, u0: np.ndarray | None = None) -> SolitonProfile:
    """Relaxed Newton iteration from the bump initial guess.

    Each step solves the junction-bordered least-squares system: the
    tau Jacobian stacked on the two first-derivative mismatch rows,
    whose targets remove the current mismatch.  The border closes the
    numerically null directions the tau rows leave open and steers the
    iteration to the derivative-continuous member of the discrete root
    family, which is the physical wave.  Steps are backtracked (up to
    five halvings of the relaxation) until the residual decreases; if
    no trial decreases it, the least bad one is taken.  The v(0) sample
    is pinned to its initial value; nothing in the system determines
    it.  Divergence is declared after five consecutive residual
    increases or any non-finite residual.
    """
    u = problem.initial_guess() if u0 is None else np.asarray(u0, dtype=float).copy()
    if u.size != problem.size:
        raise UsageError(f"initial iterate has size {u.size}, expected {problem.size}")

    history = []
    iterations = 0
    growth = 0
    v_center = float(u[problem.i_tail_zero])

    f = _tau_residual(problem, u)
    res = float(np.max(np.abs(f)))
    while res >= problem.tol:
        if iterations >= problem.max_iter:
            raise SolverLimitError(
                f"no convergence in {problem.max_iter} iterations, "
                f"residual {res:.3e}"
            )
        if not np.isfinite(res):
            raise SolverDivergenceError("residual became non-finite")
        jac = _tau_jacobian(problem, u)
        bordered = np.vstack([jac, problem.c1_rows])
        target = np.concatenate([f, problem.c1_rows @ u])
        step = np.linalg.lstsq(bordered, target, rcond=None)[0]
        best = None
        for k in range(6):
            scale = problem.mu / (2.0**k)
            u_try = u - scale * step
            u_try[problem.i_tail_zero] = v_center
            f_try = _tau_residual(problem, u_try)
            res_try = float(np.max(np.abs(f_try)))
            if res_try < res:
                best = (u_try, f_try, res_try)
                break
            if best is None or res_try < best[2]:
                best = (u_try, f_try, res_try)
        u, f, res_new = best
        iterations += 1
        history.append(res_new)
        growth = growth + 1 if res_new > res else 0
        if growth >= 5:
            raise SolverDivergenceError(
                f"residual grew for five consecutive steps, now {res_new:.3e}"
            )
        res = res_new

    sing = np.linalg.svd(_tau_jacobian(problem, u), compute_uv=False)
    keep = sing >= _NULL_RCOND * sing[0]
    kernel_dim = int(np.sum(~keep))
    cond = float(sing[0] / sing[keep][-1])

    jac_raw = assemble_jacobian(problem, u)
    sing_raw = np.linalg.svd(jac_raw, compute_uv=False)
    tol_rank = max(jac_raw.shape) * np.finfo(float).eps * sing_raw[0]
    defect = int(np.sum(sing_raw < tol_rank))

    n = problem.n
    profile = SolitonProfile(
        m=problem.m,
        c=problem.c,
        n=n,
        xi=problem.xi,
        s=problem.s,
        Q=u[: n + 1].copy(),
        v=u[n + 1 :].copy(),
        iterations=iterations,
        residual=res,
        diagnostics={
            "condition_estimate": cond,
            "pre_tau_rank_defect": defect,
            "pre_tau_sigma_min": float(sing_raw[-1]),
            "tau_kernel_dimension": kernel_dim,
            "junction_c1_mismatch": float(np.max(np.abs(problem.c1_rows @ u))),
            "residual_history": history,
            "constraint_residuals": problem.constraint_residuals(u).tolist(),
            "peak_amplitude": float(np.max(u[: n + 1])),
            "relaxation": problem.mu,
        },
    )
    return profile


def rescaled_iterate(profile: SolitonProfile, c: float) -> np.ndarray:
    """Stacked samples of the speed-c rescaling c*Q(c*xi) of a profile.

    Resampling goes through barycentric interpolation on both blocks;
    with c >= 1 the tail samples map into the tail's own grid.
    """
    if c <= 0.0:
        raise UsageError(f"wave speed must be positive, got {c}")
    qc = c * profile.eval_Q(c * profile.xi)
    vc = np.empty_like(profile.s)
    for j, s in enumerate(profile.s):
        if s == 0.0:
            vc[j] = profile.v[profile.n // 2]
        else:
            # v_c(s) = y*Q_c(y) at y = 1/s
            vc[j] = (c / s) * profile.eval_Q(c / s)
    return np.concatenate([qc, vc])
