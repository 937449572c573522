"""Straight orientations and closed-neighborhood reduction.

A straight enumeration of an oriented graph is an order ``v_1, ..., v_n`` in
which the in-neighbors of each ``v_i`` are exactly its ``h`` immediate
predecessors and the out-neighbors exactly its ``k`` immediate successors, for
some ``h, k >= 0``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, GraphError, GuardError, build_graph
from .orderings import Ordering, as_ordering, is_proper_interval_ordering, recognize


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = {tuple(sorted(a)) for a in self.arrows}
        if len(undirected) != len(self.arrows) or sorted(undirected) != self.base.edges():
            raise GraphError("arrows must orient each base edge exactly once")

    @classmethod
    def from_arrows(cls, base: Graph, arrows: Iterable[tuple[int, int]]) -> Orientation:
        return cls(base, frozenset(tuple(a) for a in arrows))

    def inset(self, v: int) -> set[int]:
        return {u for u, w in self.arrows if w == v}

    def outset(self, v: int) -> set[int]:
        return {w for u, w in self.arrows if u == v}

    def to_json(self) -> list[list[int]]:
        return [[u + 1, v + 1] for u, v in sorted(self.arrows)]


def full_reversal(D: Orientation) -> Orientation:
    return Orientation(D.base, frozenset((v, u) for u, v in D.arrows))


def orient_from_ordering(G: Graph, sigma) -> Orientation:
    """Direct every edge from its earlier to its later endpoint."""
    sigma = as_ordering(G, sigma)
    violation = is_proper_interval_ordering(G, sigma)
    if violation is not None:
        raise GraphError(f"not a proper interval ordering: {violation}")
    pos = sigma.position
    return Orientation(G, frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in G.edges()))


def first_straight_failure(D: Orientation, order: Sequence[int]) -> int | None:
    """1-based index of the first vertex whose inset or outset is not a block, or ``None``."""
    order = as_ordering(D.base, order).order
    ins = [set() for _ in order]
    outs = [set() for _ in order]
    for u, v in D.arrows:
        outs[u].add(v)
        ins[v].add(u)
    for i, v in enumerate(order):
        h, k = len(ins[v]), len(outs[v])
        if ins[v] != set(order[max(i - h, 0):i]) or outs[v] != set(order[i + 1:i + 1 + k]):
            return i + 1
    return None


def is_straight_enumeration(D: Orientation, order: Sequence[int]) -> bool:
    return first_straight_failure(D, order) is None


@dataclass(frozen=True)
class StraightEnumeration:
    order: Ordering
    orientation: Orientation

    def to_json(self) -> dict:
        return {"order": self.order.labels(), "orientation": self.orientation.to_json()}


def straight_orientation(G: Graph) -> StraightEnumeration | None:
    sigma = recognize(G)
    if sigma is None:
        return None
    D = orient_from_ordering(G, sigma)
    failure = first_straight_failure(D, sigma.order)
    if failure is not None:
        raise AssertionError(f"orientation from {sigma} is not straight at index {failure}")
    return StraightEnumeration(sigma, D)


STRAIGHT_SCAN_MAX_N = 7


def all_straight_orientations(G: Graph) -> set[Orientation]:
    """Every orientation of ``G`` that has a straight enumeration.

    Scans all ``n!`` orders.  An order pins the orientation completely, since
    in-neighbors must precede and out-neighbors follow each vertex, so each
    order contributes its forward orientation when that one is straight.
    """
    if G.n > STRAIGHT_SCAN_MAX_N:
        raise GuardError(f"all_straight_orientations is limited to n <= {STRAIGHT_SCAN_MAX_N}")
    n = G.n
    found = set()
    for order in permutations(range(n)):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        # each vertex's forward neighbors must be the next k positions, backward the previous h
        ok = True
        for i, v in enumerate(order):
            ahead = behind = 0
            for u in G.adj[v]:
                if pos[u] > i:
                    ahead |= 1 << pos[u]
                else:
                    behind |= 1 << pos[u]
            k, h = bin(ahead).count("1"), bin(behind).count("1")
            if ahead != ((1 << k) - 1) << (i + 1) or behind != ((1 << h) - 1) << (i - h):
                ok = False
                break
        if ok:
            found.add(frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in G.edges()))
    return {Orientation(G, arrows) for arrows in found}


class EdgeKind(enum.Enum):
    BALANCED = "BALANCED"
    UNBALANCED = "UNBALANCED"


def classify_edge(G: Graph, e: tuple[int, int]) -> EdgeKind:
    u, v = e
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise GraphError(f"{e} is not an edge")
    return EdgeKind.BALANCED if G.closed_mask(u) == G.closed_mask(v) else EdgeKind.UNBALANCED


def is_reduced(G: Graph) -> bool:
    return all(classify_edge(G, e) is EdgeKind.UNBALANCED for e in G.edges())


@dataclass(frozen=True)
class ReducedQuotient:
    """Classes of equal closed neighborhoods and the graph they induce.

    Quotient vertex ``i`` stands for ``classes[i]``; classes are sorted and
    listed by their smallest vertex, which is the representative.
    """

    quotient: Graph
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def expand(self, order: Sequence[int]) -> Ordering:
        """List each class consecutively, in ascending vertex order, following ``order``."""
        return Ordering(v for q in order for v in self.classes[q])


def closed_neighborhood_classes(G: Graph) -> ReducedQuotient:
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(G.closed_mask(v), []).append(v)
    classes = tuple(sorted(tuple(vs) for vs in groups.values()))
    class_of = [0] * G.n
    for i, vs in enumerate(classes):
        for v in vs:
            class_of[v] = i
    edges = {(class_of[u], class_of[v]) for u, v in G.edges() if class_of[u] != class_of[v]}
    return ReducedQuotient(build_graph(len(classes), edges), classes, tuple(class_of))
