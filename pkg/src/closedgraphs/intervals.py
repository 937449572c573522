"""Integer proper interval representations."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph, GraphError
from .orderings import Ordering, adjacency_profile, as_ordering, is_proper_interval_ordering


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed interval ``[left[v], right[v]]`` for every vertex ``v``."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    order: Ordering | None = None

    def interval(self, v: int) -> tuple[int, int]:
        return self.left[v], self.right[v]

    def to_json(self) -> list[dict]:
        vertices = self.order.order if self.order is not None else range(len(self.left))
        return [{"vertex": v + 1, "l": self.left[v], "r": self.right[v]} for v in vertices]


def build_representation(G: Graph, sigma) -> IntervalRepresentation:
    """Intervals ``[i(n+1), maxadj(i)(n+1) + i]`` for the vertex at position ``i``.

    Both endpoint sequences strictly increase along ``sigma``, so no interval
    contains another, and ``I_i`` meets ``I_j`` (``i < j``) exactly when
    ``j <= maxadj(i)``.
    """
    sigma = as_ordering(G, sigma)
    violation = is_proper_interval_ordering(G, sigma)
    if violation is not None:
        raise GraphError(f"not a proper interval ordering: {violation}")
    n = G.n
    maxadj = adjacency_profile(G, sigma).maxadj
    left, right = [0] * n, [0] * n
    for i, v in enumerate(sigma.order, start=1):
        left[v] = i * (n + 1)
        right[v] = maxadj[i - 1] * (n + 1) + i
    return IntervalRepresentation(tuple(left), tuple(right), sigma)


class IntervalViolationKind(enum.Enum):
    FALSE_OVERLAP = "FALSE_OVERLAP"
    MISSING_OVERLAP = "MISSING_OVERLAP"
    CONTAINMENT = "CONTAINMENT"


@dataclass(frozen=True)
class IntervalViolation:
    kind: IntervalViolationKind
    u: int
    v: int  # for CONTAINMENT, I_u properly contains I_v

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "u": self.u + 1, "v": self.v + 1}


def _properly_contains(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] <= b[0] and b[1] <= a[1] and a != b


def validate_representation(G: Graph, rep: IntervalRepresentation | Sequence[tuple[int, int]]
                            ) -> list[IntervalViolation]:
    """Every violating pair; an empty list means the representation is valid and proper."""
    if isinstance(rep, IntervalRepresentation):
        intervals = [rep.interval(v) for v in range(len(rep.left))]
    else:
        intervals = [tuple(iv) for iv in rep]
    if len(intervals) != G.n:
        raise GraphError(f"representation covers {len(intervals)} vertices, graph has {G.n}")
    for v, (lo, hi) in enumerate(intervals):
        if lo > hi:
            raise GraphError(f"interval of vertex {v} is empty: [{lo}, {hi}]")
    out = []
    K = IntervalViolationKind
    for u in range(G.n):
        for v in range(u + 1, G.n):
            a, b = intervals[u], intervals[v]
            meet = max(a[0], b[0]) <= min(a[1], b[1])
            if meet and not G.has_edge(u, v):
                out.append(IntervalViolation(K.FALSE_OVERLAP, u, v))
            elif not meet and G.has_edge(u, v):
                out.append(IntervalViolation(K.MISSING_OVERLAP, u, v))
            if _properly_contains(a, b):
                out.append(IntervalViolation(K.CONTAINMENT, u, v))
            elif _properly_contains(b, a):
                out.append(IntervalViolation(K.CONTAINMENT, v, u))
    return out
