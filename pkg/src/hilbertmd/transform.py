"""Multidomain spectral evaluation of the Hilbert transform.

Each domain contributes its piece of the principal-value integral of
f(y)/(x - y).  A domain containing or nearly containing the evaluation
point subtracts a constant from the integrand to remove the pole and
carries the matching logarithm term symbolically; distant domains use
plain quadrature.  Tail domains work in the reciprocal coordinate
s = 1/y with the bounded integrand h(s) = f(1/s)/s.  All logarithm
terms are anchored at breakpoints and assembled at the very end, so
their near-cancellation across neighboring domains costs no precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import bary_weights, cc_weights, cheb_nodes, diff_matrix
from .domains import FINITE, Field, Partition, WRAPPED
from .errors import EvaluationError, FunctionSpecError

__all__ = [
    "HilbertPlan",
    "hilbert_md",
    "HilbertMatrix",
    "hilbert_matrix",
    "build_eval_grid",
]

# |l| - 1 below this counts as inside the domain: the interpolant is
# still trustworthy there and the pole-subtraction stays sample-based.
_INSIDE_TOL = 1e-6
# switch to the cancellation-free kernel form when the evaluation point
# is this close (reference units) to a collocation node
_NEAR_NODE = 1e-4


@dataclass
class _DomainPlan:
    kind: str
    lo: float
    hi: float
    half: float
    mid: float
    nodes_l: np.ndarray      # reference nodes, descending
    nodes_t: np.ndarray      # natural coordinate (y finite, s tails)
    lam: np.ndarray          # barycentric weights
    w: np.ndarray            # reference Clenshaw-Curtis weights
    g: np.ndarray            # branch samples
    h: np.ndarray | None     # g/s with the s=0 limit patched (tails only)
    margin_lo: float         # reference-unit margin beyond l = -1
    margin_hi: float         # reference-unit margin beyond l = +1
    branch: object
    anchor_lo: float | None  # y-anchor of the lo end's log term
    anchor_hi: float | None


def _subtracted_sum(dp: _DomainPlan, l: float, v: float | None = None):
    """Sum of weights times (g - v)/(l - node) with a stable near-node path.

    v defaults to the barycentric interpolant at l, which is what makes
    the near-node kernel form exact; an explicit v (off-domain
    continuation) skips the stable path, which the margin geometry makes
    safe because only end nodes with O(1/n^2) weights can then be near.
    """
    g = dp.g if dp.h is None else dp.h
    diff = l - dp.nodes_l
    am = int(np.argmin(np.abs(diff)))
    d0 = diff[am]
    if v is None:
        if d0 == 0.0:
            p = float(g[am])
        else:
            r = dp.lam / diff
            p = float(r @ g) / float(r.sum())
        use_stable = abs(d0) < _NEAR_NODE
    else:
        p = float(v)
        use_stable = False
    num = g - p
    if use_stable:
        mask = np.ones(g.size, dtype=bool)
        mask[am] = False
        q = np.empty_like(g)
        q[mask] = num[mask] / diff[mask]
        rj = dp.lam[mask] / diff[mask]
        den = dp.lam[am] + d0 * float(rj.sum())
        q[am] = float(((g[am] - g[mask]) * rj).sum()) / den
    else:
        q = num / diff
    return float(dp.w @ q), p


def _contrib_finite(dp: _DomainPlan, x: float):
    l = (x - dp.mid) / dp.half
    dist = abs(l) - 1.0
    if dist <= _INSIDE_TOL:
        s, v = _subtracted_sum(dp, l)
        return s, [(dp.anchor_lo, v), (dp.anchor_hi, -v)], 0.0
    in_margin = (l > 1.0 and dist <= dp.margin_hi) or (
        l < -1.0 and dist <= dp.margin_lo
    )
    if in_margin:
        v = float(dp.branch(x))
        s, _ = _subtracted_sum(dp, l, v=v)
        return s, [(dp.anchor_lo, v), (dp.anchor_hi, -v)], 0.0
    s = float(dp.w @ (dp.g / (l - dp.nodes_l)))
    return s, [], 0.0


def _infinite_logs(dp: _DomainPlan, fx: float):
    if dp.kind == WRAPPED:
        a1, bm = dp.anchor_lo, dp.anchor_hi
        return [(bm, fx), (a1, -fx)], fx * (np.log(abs(a1)) - np.log(abs(bm)))
    if dp.lo == 0.0:  # right tail, junction at y = 1/hi
        bm = dp.anchor_hi
        return [(bm, fx)], -fx * np.log(abs(bm))
    a1 = dp.anchor_lo  # left tail, junction at y = 1/lo
    return [(a1, -fx)], fx * np.log(abs(a1))


def _contrib_infinite(dp: _DomainPlan, x: float):
    if x != 0.0:
        s0 = 1.0 / x
        l0 = (s0 - dp.mid) / dp.half
        dist = abs(l0) - 1.0
        if dist <= _INSIDE_TOL:
            ssum, vh = _subtracted_sum(dp, l0)
            fx = vh / x
            logs, const = _infinite_logs(dp, fx)
            return -ssum / x, logs, const
        hi_ok = dp.kind == WRAPPED or dp.lo == 0.0
        lo_ok = dp.kind == WRAPPED or dp.hi == 0.0
        in_margin = (l0 > 1.0 and hi_ok and dist <= dp.margin_hi) or (
            l0 < -1.0 and lo_ok and dist <= dp.margin_lo
        )
        if in_margin:
            vh = float(dp.branch(s0)) / s0
            ssum, _ = _subtracted_sum(dp, l0, v=vh)
            fx = vh / x
            logs, const = _infinite_logs(dp, fx)
            return -ssum / x, logs, const
    kern = x * dp.nodes_t - 1.0
    h = dp.h
    s = dp.half * float(dp.w @ (h / kern))
    return s, [], 0.0


class HilbertPlan:
    """Prepared transform of one sampled function over its partition."""

    def __init__(self, field: Field, delta: float = 0.25):
        if not (0.0 < delta <= 1.0):
            raise EvaluationError(f"margin fraction must be in (0, 1], got {delta}")
        self.field = field
        self._delta = delta
        part = field.partition
        self.partition = part
        fn = field.fn
        bp = part.breakpoints
        self._continuous = {float(a): fn.is_continuous_at(a) for a in bp}
        self._plans = []
        reach = fn.continuation_reach
        for i, dom in enumerate(part.domains):
            n = field.degrees[i]
            nodes_l = cheb_nodes(n)
            nodes_t = dom.nodes(n)
            g = field.samples[i]
            margin = 2.0 * delta
            if dom.kind == FINITE:
                if reach is not None:
                    margin = min(margin, reach / dom.half)
                h = None
                anchor_lo, anchor_hi = dom.lo, dom.hi
            else:
                h = np.empty_like(g)
                nz = nodes_t != 0.0
                h[nz] = g[nz] / nodes_t[nz]
                if not nz.all():
                    m0 = int(np.nonzero(~nz)[0][0])
                    d_nat = diff_matrix(n) / dom.half
                    h[m0] = float(d_nat[m0] @ g)
                # log anchors must be the exact breakpoint floats; a
                # reciprocal round-trip 1/(1/a) can land one ulp off
                anchor_lo = bp[0] if dom.lo != 0.0 else None
                anchor_hi = bp[-1] if dom.hi != 0.0 else None
            self._plans.append(
                _DomainPlan(
                    kind=dom.kind,
                    lo=dom.lo,
                    hi=dom.hi,
                    half=dom.half,
                    mid=dom.mid,
                    nodes_l=nodes_l,
                    nodes_t=nodes_t,
                    lam=bary_weights(n),
                    w=cc_weights(n),
                    g=g,
                    h=h,
                    margin_lo=margin,
                    margin_hi=margin,
                    branch=fn.branches[i],
                    anchor_lo=anchor_lo,
                    anchor_hi=anchor_hi,
                )
            )

    def value(self, x: float) -> float:
        """Transform value at one point of the extended real line."""
        if np.isnan(x):
            raise EvaluationError("cannot evaluate at nan")
        if np.isinf(x):
            return 0.0
        x = float(x)
        total = 0.0
        logmap: dict = {}
        for dp in self._plans:
            if dp.kind == FINITE:
                s, logs, const = _contrib_finite(dp, x)
            else:
                s, logs, const = _contrib_infinite(dp, x)
            total += s + const
            for anchor, coeff in logs:
                logmap[anchor] = logmap.get(anchor, 0.0) + coeff
        for anchor, coeff in logmap.items():
            d = x - anchor
            if d == 0.0:
                if self._continuous.get(anchor, True):
                    continue  # exact cancellation of the log pair
                return np.inf if coeff < 0.0 else -np.inf
            total += coeff * np.log(abs(d))
        return total / np.pi

    def values(self, xs) -> np.ndarray:
        return np.array([self.value(float(t)) for t in np.asarray(xs, dtype=float)])


def hilbert_md(field: Field, x, delta: float = 0.25):
    """Transform of a sampled function at x (scalar or array).

    Builds (and caches on the field) the evaluation plan.
    """
    plan = getattr(field, "_plan", None)
    if plan is None or plan.field is not field or plan._delta != delta:
        plan = HilbertPlan(field, delta)
        field._plan = plan
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0:
        return plan.value(float(arr))
    return plan.values(arr)


# --- dense matrix form -------------------------------------------------


@dataclass
class HilbertMatrix:
    """Dense transform acting on stacked node samples.

    rows[k] = (domain index, node index within the domain, evaluation
    point on the extended line).  Applying the matrix to stacked samples
    of a continuous decaying function reproduces the pointwise transform
    at every node.
    """

    matrix: np.ndarray
    rows: list
    offsets: list
    partition: Partition
    degrees: tuple


def _h_rows(n: int, dom) -> np.ndarray:
    """Matrix taking g-samples of a tail domain to its h = g/s samples."""
    t = dom.nodes(n)
    m = np.zeros((n + 1, n + 1))
    for k, s in enumerate(t):
        if s != 0.0:
            m[k, k] = 1.0 / s
        else:
            m[k] = diff_matrix(n)[k] / dom.half
    return m


def hilbert_matrix(
    partition: Partition, degrees, delta: float = 0.25, fn=None
) -> HilbertMatrix:
    """Dense matrix of the transform on the stacked collocation grid.

    fn, when given, is only used to reject discontinuous functions: the
    matrix form assumes sample continuity across junctions (its log
    bookkeeping pairs junction samples as equal).
    """
    if fn is not None and not fn.fully_continuous:
        raise FunctionSpecError("matrix form requires a continuous function")
    if not (0.0 < delta <= 1.0):
        raise EvaluationError(f"margin fraction must be in (0, 1], got {delta}")
    doms = partition.domains
    nd = len(doms)
    if isinstance(degrees, (int, np.integer)):
        degrees = [int(degrees)] * nd
    degrees = tuple(int(n) for n in degrees)
    offsets = []
    total = 0
    for n in degrees:
        offsets.append(total)
        total += n + 1

    # evaluation points: every stacked node, mapped to the extended line
    rows = []
    for i, dom in enumerate(doms):
        t = dom.nodes(degrees[i])
        for j, tj in enumerate(t):
            if dom.kind == FINITE:
                x = tj
            else:
                x = np.inf if tj == 0.0 else 1.0 / tj
            rows.append((i, j, x))

    hmaps = {
        i: _h_rows(degrees[i], doms[i]) for i in range(nd) if doms[i].kind != FINITE
    }
    mat = np.zeros((total, total))
    bp = partition.breakpoints

    for k, (di, dj, x) in enumerate(rows):
        if np.isinf(x):
            continue  # transform vanishes at infinity
        owner = partition.locate(x)
        od = doms[owner]
        if od.kind == FINITE:
            ol = od.to_ref(x)
            onode = int(np.argmin(np.abs(ol - cheb_nodes(degrees[owner]))))
        else:
            ol = od.to_ref(1.0 / x if x != 0.0 else 0.0)
            onode = int(np.argmin(np.abs(ol - cheb_nodes(degrees[owner]))))
        own_vec = np.zeros(total)
        own_vec[offsets[owner] + onode] = 1.0  # f(x) as a sample row

        logrows: dict = {}
        consts_row = np.zeros(total)

        for i, dom in enumerate(doms):
            n = degrees[i]
            off = offsets[i]
            nodes_l = cheb_nodes(n)
            lam = bary_weights(n)
            w = cc_weights(n)
            t = dom.nodes(n)
            margin = 2.0 * delta
            if dom.kind == FINITE:
                l = dom.to_ref(x)
                dist = abs(l) - 1.0
                if dist <= _INSIDE_TOL:
                    diff = l - nodes_l
                    am = int(np.argmin(np.abs(diff)))
                    vrow = np.zeros(total)
                    if diff[am] == 0.0:
                        vrow[off + am] = 1.0
                    else:
                        r = lam / diff
                        vrow[off : off + n + 1] = r / r.sum()
                    mask = np.ones(n + 1, dtype=bool)
                    if abs(diff[am]) < _NEAR_NODE:
                        mask[am] = False
                        rj = lam[mask] / diff[mask]
                        den = lam[am] + diff[am] * float(rj.sum())
                        srow = np.zeros(total)
                        srow[off + am] = float(rj.sum()) / den
                        idx = np.nonzero(mask)[0]
                        srow[off + idx] -= rj / den
                        mat[k] += w[am] * srow
                    cw = w[mask] / diff[mask]
                    idx = np.nonzero(mask)[0]
                    row = np.zeros(total)
                    row[off + idx] = cw
                    mat[k] += row - float(cw.sum()) * vrow
                    logrows.setdefault(dom.lo, np.zeros(total))
                    logrows[dom.lo] += vrow
                    logrows.setdefault(dom.hi, np.zeros(total))
                    logrows[dom.hi] -= vrow
                elif (l > 1.0 or l < -1.0) and dist <= margin:
                    diff = l - nodes_l
                    cw = w / diff
                    row = np.zeros(total)
                    row[off : off + n + 1] = cw
                    mat[k] += row - float(cw.sum()) * own_vec
                    logrows.setdefault(dom.lo, np.zeros(total))
                    logrows[dom.lo] += own_vec
                    logrows.setdefault(dom.hi, np.zeros(total))
                    logrows[dom.hi] -= own_vec
                else:
                    diff = l - nodes_l
                    mat[k, off : off + n + 1] += w / diff
            else:
                hmap = hmaps[i]
                if x != 0.0:
                    s0 = 1.0 / x
                    l0 = dom.to_ref(s0)
                    dist = abs(l0) - 1.0
                else:
                    l0 = None
                    dist = np.inf
                hi_ok = dom.kind == WRAPPED or dom.lo == 0.0
                lo_ok = dom.kind == WRAPPED or dom.hi == 0.0
                inside = dist <= _INSIDE_TOL
                marg = (
                    not inside
                    and l0 is not None
                    and (
                        (l0 > 1.0 and hi_ok and dist <= margin)
                        or (l0 < -1.0 and lo_ok and dist <= margin)
                    )
                )
                if inside or marg:
                    diff = l0 - nodes_l
                    am = int(np.argmin(np.abs(diff)))
                    if inside:
                        vrow_h = np.zeros(n + 1)
                        if diff[am] == 0.0:
                            vrow_h[am] = 1.0
                        else:
                            r = lam / diff
                            vrow_h[:] = r / r.sum()
                        vrow = np.zeros(total)
                        vrow[off : off + n + 1] = vrow_h @ hmap
                    else:
                        # v_h = x * f(x) built from the owner sample
                        vrow = x * own_vec
                    mask = np.ones(n + 1, dtype=bool)
                    if inside and abs(diff[am]) < _NEAR_NODE:
                        mask[am] = False
                        rj = lam[mask] / diff[mask]
                        den = lam[am] + diff[am] * float(rj.sum())
                        srow = np.zeros(total)
                        hrow_am = np.zeros(total)
                        hrow_am[off : off + n + 1] = hmap[am]
                        srow += float(rj.sum()) / den * hrow_am
                        idx = np.nonzero(mask)[0]
                        sub = np.zeros(total)
                        sub[off : off + n + 1] = rj @ hmap[idx]
                        srow -= sub / den
                        mat[k] += (-1.0 / x) * w[am] * srow
                    cw = w[mask] / diff[mask]
                    idx = np.nonzero(mask)[0]
                    row = np.zeros(total)
                    row[off : off + n + 1] = cw @ hmap[idx]
                    mat[k] += (-1.0 / x) * (row - float(cw.sum()) * vrow)
                    fxrow = vrow / x
                    if dom.kind == WRAPPED:
                        a1, bm = bp[0], bp[-1]
                        logrows.setdefault(bm, np.zeros(total))
                        logrows[bm] += fxrow
                        logrows.setdefault(a1, np.zeros(total))
                        logrows[a1] -= fxrow
                        consts_row += fxrow * (np.log(abs(a1)) - np.log(abs(bm)))
                    elif dom.lo == 0.0:
                        bm = bp[-1]
                        logrows.setdefault(bm, np.zeros(total))
                        logrows[bm] += fxrow
                        consts_row -= fxrow * np.log(abs(bm))
                    else:
                        a1 = bp[0]
                        logrows.setdefault(a1, np.zeros(total))
                        logrows[a1] -= fxrow
                        consts_row += fxrow * np.log(abs(a1))
                else:
                    kern = x * t - 1.0
                    row = np.zeros(total)
                    row[off : off + n + 1] = (dom.half * w / kern) @ hmap
                    mat[k] += row
        for anchor, vec in logrows.items():
            d = x - anchor
            if d == 0.0:
                continue  # junction samples agree for continuous input
            mat[k] += vec * np.log(abs(d))
        mat[k] += consts_row
        mat[k] /= np.pi

    return HilbertMatrix(mat, rows, offsets, partition, degrees)


def build_eval_grid(partition: Partition, degrees, per_finite: int = 401):
    """Union evaluation grid: all collocation points plus uniform cover.

    Returns (points, owners) with points on the extended line (infinity
    included once when a tail grid carries s = 0) and owners the index
    of the domain owning each point.
    """
    doms = partition.domains
    if isinstance(degrees, (int, np.integer)):
        degrees = [int(degrees)] * len(doms)
    pts = []
    for i, dom in enumerate(doms):
        t = dom.nodes(degrees[i])
        if dom.kind == FINITE:
            pts.extend(t.tolist())
            pts.extend(np.linspace(dom.lo, dom.hi, per_finite).tolist())
        else:
            for s in t:
                pts.append(np.inf if s == 0.0 else 1.0 / s)
    finite_pts = sorted({p for p in pts if np.isfinite(p)})
    has_inf = any(np.isinf(p) for p in pts)
    out = np.array(finite_pts + ([np.inf] if has_inf else []))
    owners = np.array([partition.locate(p) for p in out], dtype=int)
    return out, owners
