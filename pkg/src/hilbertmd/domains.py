"""Partition of the extended real line into spectral domains.

Finite breakpoints a_1 < ... < a_M cut the line into finite panels
[a_i, a_{i+1}].  The two tails are carried in the reciprocal coordinate
s = 1/y: either as one wrapped domain whose s-interval [1/a_1, 1/a_M]
passes through s = 0 (the point at infinity), or as two one-sided tail
domains [1/a_1, 0] and [0, 1/a_M].

Ownership of shared points is deterministic: an interior breakpoint
belongs to the finite panel on its left, the outermost breakpoints
belong to their finite panels, and the point at infinity belongs to the
wrapped domain (or to the negative-s tail when the tails are split).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .chebyshev import bary_eval, cheb_nodes
from .errors import DecayFlagError, FunctionSpecError, GridError, PartitionError

__all__ = [
    "Domain",
    "Partition",
    "PiecewiseFn",
    "Field",
    "build_partition",
    "sample",
]

FINITE = "finite"
WRAPPED = "wrapped"
TAIL = "tail"


@dataclass(frozen=True)
class Domain:
    """One spectral panel.

    kind 'finite' stores its endpoints in the physical coordinate y;
    kinds 'wrapped' and 'tail' store them in the reciprocal coordinate
    s = 1/y.  lo < hi always.
    """

    kind: str
    lo: float
    hi: float

    @property
    def is_infinite(self) -> bool:
        return self.kind != FINITE

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def half(self) -> float:
        return 0.5 * self.width

    def from_ref(self, l):
        """Map reference coordinate(s) in [-1, 1] to this domain's coordinate."""
        return self.mid + self.half * np.asarray(l, dtype=float)

    def to_ref(self, t: float) -> float:
        """Map this domain's coordinate to the reference interval."""
        return (2.0 * t - self.lo - self.hi) / self.width

    def nodes(self, n: int) -> np.ndarray:
        """n+1 collocation points in this domain's own coordinate, descending."""
        pts = self.from_ref(cheb_nodes(n))
        # Pin the ends and an interior zero exactly; affine maps can
        # smudge the last bit and downstream logic keys on exact values.
        pts[0] = self.hi
        pts[-1] = self.lo
        if self.lo < 0.0 < self.hi:
            k = int(np.argmin(np.abs(pts)))
            if abs(pts[k]) < 1e-14 * self.width:
                pts[k] = 0.0
        return pts


@dataclass(frozen=True)
class Partition:
    """Ordered finite panels plus tail coverage of the extended line."""

    breakpoints: tuple
    wrap: bool
    domains: tuple

    @property
    def finite_domains(self) -> tuple:
        return tuple(d for d in self.domains if not d.is_infinite)

    @property
    def infinite_domains(self) -> tuple:
        return tuple(d for d in self.domains if d.is_infinite)

    @property
    def anchors(self) -> tuple:
        """Breakpoints in y, the anchor points of all logarithmic terms."""
        return self.breakpoints

    def locate(self, x: float) -> int:
        """Index of the domain that owns x.  Total on the extended line."""
        bp = self.breakpoints
        a1, bm = bp[0], bp[-1]
        if np.isnan(x):
            raise PartitionError("cannot locate nan")
        if np.isinf(x):
            return self._infinity_owner()
        if a1 <= x <= bm:
            # first panel owns its left end; every panel owns its right end
            for i, d in enumerate(self.domains):
                if d.kind != FINITE:
                    continue
                if x <= d.hi:
                    return i
            return self._last_finite_index()
        if x < a1:
            return self._left_tail_index()
        return self._right_tail_index()

    def owner_ref(self, x: float):
        """(domain index, reference coordinate of x in that domain)."""
        i = self.locate(x)
        d = self.domains[i]
        if d.is_infinite:
            s = 0.0 if np.isinf(x) else 1.0 / x
            return i, d.to_ref(s)
        return i, d.to_ref(x)

    def _last_finite_index(self) -> int:
        return max(i for i, d in enumerate(self.domains) if d.kind == FINITE)

    def _infinity_owner(self) -> int:
        for i, d in enumerate(self.domains):
            if d.kind == WRAPPED:
                return i
            if d.kind == TAIL and d.lo < 0.0:
                return i
        raise PartitionError("partition has no tail coverage")

    def _left_tail_index(self) -> int:
        for i, d in enumerate(self.domains):
            if d.kind == WRAPPED:
                return i
            if d.kind == TAIL and d.lo < 0.0:
                return i
        raise PartitionError("no domain covers the left tail")

    def _right_tail_index(self) -> int:
        for i, d in enumerate(self.domains):
            if d.kind == WRAPPED:
                return i
            if d.kind == TAIL and d.hi > 0.0:
                return i
        raise PartitionError("no domain covers the right tail")

    def descriptor(self) -> str:
        """Plain-text round-trippable description."""
        pts = ",".join(repr(float(b)) for b in self.breakpoints)
        return f"breakpoints={pts};wrap={int(self.wrap)}"

    @staticmethod
    def from_descriptor(text: str) -> "Partition":
        try:
            fields = dict(part.split("=", 1) for part in text.strip().split(";"))
            bps = [float(v) for v in fields["breakpoints"].split(",")]
            wrap = bool(int(fields["wrap"]))
        except (KeyError, ValueError) as exc:
            raise PartitionError(f"bad partition descriptor {text!r}") from exc
        return build_partition(bps, wrap=wrap)


def build_partition(breakpoints: Sequence[float], wrap: bool = True) -> Partition:
    """Assemble a partition from ordered breakpoints.

    wrap=True joins the two tails into a single domain through the point
    at infinity, which requires the outermost breakpoints to straddle
    zero (the reciprocal map must not cross y = 0 inside a tail).
    """
    bp = tuple(float(b) for b in breakpoints)
    if len(bp) < 2:
        raise PartitionError("need at least two breakpoints")
    if any(not np.isfinite(b) for b in bp):
        raise PartitionError("breakpoints must be finite")
    if any(b2 <= b1 for b1, b2 in zip(bp, bp[1:])):
        raise PartitionError(f"breakpoints must be strictly increasing, got {bp}")
    a1, bm = bp[0], bp[-1]
    doms = [Domain(FINITE, bp[i], bp[i + 1]) for i in range(len(bp) - 1)]
    if wrap:
        if a1 == 0.0 or bm == 0.0:
            raise PartitionError("wrapped tails need nonzero outer breakpoints")
        if not (a1 < 0.0 < bm):
            raise PartitionError(
                "wrapped tails need outer breakpoints of opposite sign"
            )
        doms.append(Domain(WRAPPED, 1.0 / a1, 1.0 / bm))
    else:
        if a1 == 0.0 or bm == 0.0:
            raise PartitionError("tail domains need nonzero outer breakpoints")
        if a1 > 0.0 or bm < 0.0:
            raise PartitionError("split tails need outer breakpoints straddling zero")
        doms.append(Domain(TAIL, 1.0 / a1, 0.0))
        doms.append(Domain(TAIL, 0.0, 1.0 / bm))
    return Partition(bp, bool(wrap), tuple(doms))


@dataclass(frozen=True)
class PiecewiseFn:
    """A function given by one analytic branch per domain.

    branches[i] takes the natural coordinate of partition domain i
    (y on finite panels, s on tail/wrapped domains, where the branch
    value is g(s) = f(1/s)) and must remain evaluable on a margin
    beyond the domain, since off-domain continuation is used to
    regularize nearby singular integrals.  continuity maps each
    breakpoint to whether the two adjacent branches agree there.
    decay declares f -> 0 at infinity fast enough that g(s)/s stays
    bounded near s = 0.  continuation_reach caps how far off a domain
    a branch may be continued (None means unrestricted); functions
    whose continuation grows exponentially should set it.
    """

    branches: tuple
    continuity: Mapping[float, bool]
    decay: bool = True
    continuation_reach: float | None = None
    name: str = ""

    def is_continuous_at(self, anchor: float) -> bool:
        return bool(self.continuity.get(float(anchor), True))

    @property
    def fully_continuous(self) -> bool:
        return all(self.continuity.get(float(a), True) for a in self.continuity)


@dataclass
class Field:
    """Node samples of a PiecewiseFn over a partition."""

    partition: Partition
    fn: PiecewiseFn
    degrees: tuple
    samples: tuple  # per domain, in that domain's natural coordinate order

    def domain_nodes(self, i: int) -> np.ndarray:
        return self.partition.domains[i].nodes(self.degrees[i])

    def eval(self, x: float) -> float:
        """Value of the sampled representation at any point of the extended line."""
        i, l = self.partition.owner_ref(x)
        return bary_eval(self.samples[i], l)


def _decay_check(branch: Callable, side: float) -> None:
    # g(s)/s must stay bounded toward s = 0; compare two scales so a
    # non-decaying f (g -> const != 0) fails loudly.
    s_far = side * 1e-3
    s_near = side * 1e-7
    h_far = abs(float(branch(s_far)) / s_far)
    h_near = abs(float(branch(s_near)) / s_near)
    if h_near > 1e3 * (1.0 + h_far):
        raise DecayFlagError(
            "tail branch does not decay: |g(s)/s| grows approaching s=0"
        )


def sample(fn: PiecewiseFn, partition: Partition, degrees) -> Field:
    """Evaluate each branch at its domain's collocation nodes.

    degrees is one integer per domain (or a single integer applied to
    all).  Tail branches are checked against the decay flag.
    """
    nd = len(partition.domains)
    if len(fn.branches) != nd:
        raise FunctionSpecError(
            f"function has {len(fn.branches)} branches, partition has {nd} domains"
        )
    if isinstance(degrees, (int, np.integer)):
        degrees = [int(degrees)] * nd
    degrees = tuple(int(n) for n in degrees)
    if len(degrees) != nd:
        raise GridError(f"need {nd} degrees, got {len(degrees)}")
    if any(n < 1 for n in degrees):
        raise GridError("every domain degree must be >= 1")
    out = []
    for i, d in enumerate(partition.domains):
        if d.is_infinite and not fn.decay:
            raise DecayFlagError(
                "partition has tail domains but the function is not marked decaying"
            )
        pts = d.nodes(degrees[i])
        vals = np.asarray([float(fn.branches[i](t)) for t in pts], dtype=float)
        if d.is_infinite:
            side = -1.0 if d.lo < 0.0 else 1.0
            if d.kind == WRAPPED:
                _decay_check(fn.branches[i], 1.0)
                _decay_check(fn.branches[i], -1.0)
            else:
                _decay_check(fn.branches[i], side)
        if not np.all(np.isfinite(vals)):
            raise FunctionSpecError(
                f"branch {i} returned non-finite values at its own nodes"
            )
        out.append(vals)
    return Field(partition, fn, degrees, tuple(out))
