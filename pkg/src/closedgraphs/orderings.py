"""Vertex orderings: checkers, exhaustive search, and recognition.

An ordering lists the vertices ``v_1, ..., v_n``.  Two conditions on orderings
are checked here:

* proper interval (umbrella) condition: if ``i < j < k`` and ``v_i ~ v_k`` then
  ``v_i ~ v_j`` and ``v_j ~ v_k``;
* closed condition: two edges sharing their smaller endpoint force an edge
  between their larger endpoints, and two edges sharing their larger endpoint
  force an edge between their smaller endpoints.

Positions are reported 1-based, vertices 0-based.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import Graph, GraphError, GuardError, connected_components, induced_subgraph


class Ordering:
    """A bijection from vertices to positions ``1..n``."""

    __slots__ = ("order", "position")

    def __init__(self, order: Iterable[int]):
        order = tuple(order)
        n = len(order)
        position = [0] * n
        for i, v in enumerate(order, start=1):
            if not isinstance(v, int) or not 0 <= v < n or position[v]:
                raise GraphError(f"ordering {list(order)} is not a permutation of 0..{n - 1}")
            position[v] = i
        self.order = order
        self.position = tuple(position)

    @classmethod
    def parse(cls, text: str) -> Ordering:
        """Parse comma-separated 1-based labels, e.g. ``"3,1,2"``."""
        try:
            labels = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise GraphError(f"malformed ordering {text!r}") from None
        return cls(label - 1 for label in labels)

    def __str__(self):
        return ",".join(str(v + 1) for v in self.order)

    def __repr__(self):
        return f"Ordering({list(self.order)})"

    def __eq__(self, other):
        if isinstance(other, Ordering):
            return self.order == other.order
        return NotImplemented

    def __hash__(self):
        return hash(self.order)

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]

    def reversed(self) -> Ordering:
        return Ordering(reversed(self.order))

    def labels(self) -> list[int]:
        return [v + 1 for v in self.order]


def as_ordering(G: Graph, sigma) -> Ordering:
    sigma = sigma if isinstance(sigma, Ordering) else Ordering(sigma)
    if len(sigma) != G.n:
        raise GraphError(f"ordering has {len(sigma)} vertices, graph has {G.n}")
    return sigma


class ViolationKind(enum.Enum):
    PROPER_TRIPLE = "PROPER_TRIPLE"
    CLOSED_SHARED_MIN = "CLOSED_SHARED_MIN"
    CLOSED_SHARED_MAX = "CLOSED_SHARED_MAX"


@dataclass(frozen=True)
class OrderingViolation:
    """Three vertices ``(v_i, v_j, v_k)`` with ``i < j < k`` that break a condition.

    ``PROPER_TRIPLE``: ``v_i ~ v_k`` but ``v_i v_j`` or ``v_j v_k`` is missing.
    ``CLOSED_SHARED_MIN``: edges ``v_i v_j`` and ``v_i v_k`` but no ``v_j v_k``.
    ``CLOSED_SHARED_MAX``: edges ``v_i v_k`` and ``v_j v_k`` but no ``v_i v_j``.
    """

    kind: ViolationKind
    witness: tuple[int, ...]
    positions: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        """The edges named by the violated hypothesis."""
        a, b, c = self.witness
        if self.kind is ViolationKind.PROPER_TRIPLE:
            return [(a, c)]
        if self.kind is ViolationKind.CLOSED_SHARED_MIN:
            return [(a, b), (a, c)]
        return [(a, c), (b, c)]

    def holds_in(self, G: Graph, sigma: Ordering) -> bool:
        """Re-check the violation directly against ``G``."""
        a, b, c = self.witness
        if tuple(sigma.position[v] for v in self.witness) != self.positions:
            return False
        if not self.positions[0] < self.positions[1] < self.positions[2]:
            return False
        e = G.has_edge
        if self.kind is ViolationKind.PROPER_TRIPLE:
            return e(a, c) and not (e(a, b) and e(b, c))
        if self.kind is ViolationKind.CLOSED_SHARED_MIN:
            return e(a, b) and e(a, c) and not e(b, c)
        return e(a, c) and e(b, c) and not e(a, b)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": [v + 1 for v in self.witness],
            "positions": list(self.positions),
            "edges": [[u + 1, v + 1] for u, v in self.edges()],
        }


def _position_masks(G: Graph, sigma: Ordering) -> list[int]:
    """Adjacency re-indexed by 0-based position."""
    pos = [p - 1 for p in sigma.position]
    out = []
    for v in sigma.order:
        m = 0
        for u in G.adj[v]:
            m |= 1 << pos[u]
        out.append(m)
    return out


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _violation(kind, sigma, i, j, k) -> OrderingViolation:
    return OrderingViolation(kind, (sigma[i], sigma[j], sigma[k]), (i + 1, j + 1, k + 1))


def is_proper_interval_ordering(G: Graph, sigma) -> OrderingViolation | None:
    """``None`` if ``sigma`` is a proper interval ordering, else the least violating triple."""
    sigma = as_ordering(G, sigma)
    pm = _position_masks(G, sigma)
    n = G.n
    for i in range(n):
        later = pm[i] >> (i + 1) << (i + 1)
        if not later:
            continue
        far = later.bit_length() - 1
        for j in range(i + 1, far):
            above = later >> (j + 1) << (j + 1)
            if not above:
                break
            if not pm[i] >> j & 1:
                return _violation(ViolationKind.PROPER_TRIPLE, sigma, i, j, _lowest(above))
            bad = above & ~pm[j]
            if bad:
                return _violation(ViolationKind.PROPER_TRIPLE, sigma, i, j, _lowest(bad))
    return None


def is_closed_ordering(G: Graph, sigma) -> OrderingViolation | None:
    """``None`` if ``sigma`` is closed, else the least violating edge pair.

    Violations are ordered by their position triple; at equal triples the
    shared-minimum form is reported first.
    """
    sigma = as_ordering(G, sigma)
    pm = _position_masks(G, sigma)
    n = G.n
    for i in range(n):
        later_i = pm[i] >> (i + 1) << (i + 1)
        for j in range(i + 1, n):
            ij = pm[i] >> j & 1
            above = ((1 << n) - 1) >> (j + 1) << (j + 1)
            # shared min needs v_i ~ v_j, shared max needs v_i !~ v_j
            min_bad = later_i & above & ~pm[j] if ij else 0
            max_bad = 0 if ij else later_i & pm[j] & above
            bad = min_bad | max_bad
            if bad:
                k = _lowest(bad)
                kind = (ViolationKind.CLOSED_SHARED_MIN if min_bad >> k & 1
                        else ViolationKind.CLOSED_SHARED_MAX)
                return _violation(kind, sigma, i, j, k)
    return None


def orderings_agree(G: Graph, sigma) -> bool:
    return (is_closed_ordering(G, sigma) is None) == (is_proper_interval_ordering(G, sigma) is None)


CLOSED = "closed"
PROPER = "proper"
BRUTE_FORCE_MAX_N = 10


def brute_force_search(G: Graph, which: str) -> Ordering | None:
    """Lexicographically smallest ordering passing the chosen checker, or ``None``.

    Depth-first search over prefixes in ascending vertex order.  A prefix is
    abandoned only when some triple of the condition is already certain to
    fail whatever the remaining vertices' order, so the first complete
    ordering reached is the lexicographic minimum over all ``n!``.
    """
    if which not in (CLOSED, PROPER):
        raise ValueError(f"which must be {CLOSED!r} or {PROPER!r}, got {which!r}")
    if G.n > BRUTE_FORCE_MAX_N:
        raise GuardError(f"brute_force_search is limited to n <= {BRUTE_FORCE_MAX_N}")
    n = G.n
    nb = G.masks
    full = (1 << n) - 1
    consistent = _proper_step if which == PROPER else _closed_step
    prefix: list[int] = []

    def extend(placed: int) -> bool:
        if placed == full:
            return True
        rest = full & ~placed
        m = rest
        while m:
            w = _lowest(m)
            m &= m - 1
            if consistent(nb, placed, w, rest & ~(1 << w)):
                prefix.append(w)
                if extend(placed | 1 << w):
                    return True
                prefix.pop()
        return False

    if not extend(0):
        return None
    sigma = Ordering(prefix)
    check = is_proper_interval_ordering if which == PROPER else is_closed_ordering
    if check(G, sigma) is not None:
        raise AssertionError(f"search produced a rejected ordering {sigma!r}")
    return sigma


def _proper_step(nb, placed, w, rest):
    # triples (a, w, c): a placed, c later, a ~ c  =>  a ~ w and w ~ c
    m = rest
    while m:
        c = _lowest(m)
        m &= m - 1
        a_set = nb[c] & placed
        if a_set and (a_set & ~nb[w] or not nb[w] >> c & 1):
            return False
    return True


def _closed_step(nb, placed, w, rest):
    # triples (a, w, c) with a placed and c later
    m = rest
    while m:
        c = _lowest(m)
        m &= m - 1
        a_set = nb[c] & placed
        if not a_set:
            continue
        wc = nb[w] >> c & 1
        if a_set & nb[w] and not wc:      # a~w, a~c  =>  w~c
            return False
        if wc and a_set & ~nb[w]:         # a~c, w~c  =>  a~w
            return False
    return True


def _lexbfs(G: Graph, vertices: Sequence[int], prior: Sequence[int] | None = None) -> list[int]:
    """LexBFS over ``vertices``; with ``prior``, ties go to the vertex latest in ``prior`` (LexBFS+)."""
    rank = {v: i for i, v in enumerate(prior)} if prior is not None else None
    labels = {v: [] for v in vertices}
    out = []
    n = len(vertices)
    for step in range(n):
        if rank is None:
            v = max(labels, key=lambda u: (labels[u], -u))
        else:
            v = max(labels, key=lambda u: (labels[u], rank[u]))
        del labels[v]
        out.append(v)
        for u in G.adj[v]:
            if u in labels:
                labels[u].append(n - step)
    return out


def _recognize_connected(G: Graph) -> list[int]:
    verts = list(range(G.n))
    sweep = _lexbfs(G, verts)
    sweep = _lexbfs(G, verts, sweep)
    return _lexbfs(G, verts, sweep)


def recognize(G: Graph) -> Ordering | None:
    """A proper interval ordering of ``G``, or ``None`` if ``G`` has none.

    Each component is ordered by three LexBFS sweeps (the second and third
    breaking ties by the previous sweep) and the component orderings are
    concatenated.  The result is only returned after the checker accepts it.
    """
    order = []
    for comp in connected_components(G):
        H, back = induced_subgraph(G, comp)
        order.extend(back[v] for v in _recognize_connected(H))
    sigma = Ordering(order)
    if is_proper_interval_ordering(G, sigma) is not None:
        return None
    return sigma


@dataclass(frozen=True)
class AdjacencyProfile:
    """Per position ``i`` (1-based), the least and greatest adjacent position, or ``i``."""

    minadj: tuple[int, ...]
    maxadj: tuple[int, ...]


def adjacency_profile(G: Graph, sigma) -> AdjacencyProfile:
    sigma = as_ordering(G, sigma)
    lo, hi = [], []
    for i, v in enumerate(sigma.order, start=1):
        ps = [sigma.position[u] for u in G.adj[v]] + [i]
        lo.append(min(ps))
        hi.append(max(ps))
    return AdjacencyProfile(tuple(lo), tuple(hi))
