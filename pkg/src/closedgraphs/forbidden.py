"""Chordality and induced claw / net / tent detection.

Every negative answer comes with a witness that :func:`validate_witness`
re-checks against the host graph edge by edge.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph


class WitnessKind(enum.Enum):
    CHORDLESS_CYCLE = "CHORDLESS_CYCLE"
    CLAW = "CLAW"
    NET = "NET"
    TENT = "TENT"


CLAW, NET, TENT = WitnessKind.CLAW, WitnessKind.NET, WitnessKind.TENT

# Edges between role indices of each pattern's witness tuple.
#   claw: (center, leaf, leaf, leaf)
#   net:  (a, b, c, x, y, z), triangle abc, pendants xa, yb, zc
#   tent: (b, c, e, a, d, f), triangle bce, a on bc, d on ce, f on be
PATTERN_EDGES = {
    CLAW: {(0, 1), (0, 2), (0, 3)},
    NET: {(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)},
    TENT: {(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)},
}
PATTERN_SIZE = {CLAW: 4, NET: 6, TENT: 6}


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: WitnessKind
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "vertices": [v + 1 for v in self.vertices]}


def _induced_edge_roles(G: Graph, vertices) -> set[tuple[int, int]]:
    return {(i, j) for i, j in combinations(range(len(vertices)), 2)
            if G.has_edge(vertices[i], vertices[j])}


def validate_witness(G: Graph, w: ForbiddenWitness) -> bool:
    vs = w.vertices
    if len(set(vs)) != len(vs) or not all(0 <= v < G.n for v in vs):
        return False
    if w.kind is WitnessKind.CHORDLESS_CYCLE:
        k = len(vs)
        expected = {(i, i + 1) for i in range(k - 1)} | {(0, k - 1)}
        return k >= 4 and _induced_edge_roles(G, vs) == expected
    return len(vs) == PATTERN_SIZE[w.kind] and _induced_edge_roles(G, vs) == PATTERN_EDGES[w.kind]


@dataclass(frozen=True)
class EliminationOrdering:
    """Perfect elimination ordering: each vertex's later neighbors form a clique."""

    order: tuple[int, ...]

    def first_failure(self, G: Graph) -> tuple[int, int, int] | None:
        """``(v, x, y)`` with ``x, y`` later non-adjacent neighbors of ``v``, if any."""
        pos = {v: i for i, v in enumerate(self.order)}
        for v in self.order:
            later = sorted(u for u in G.adj[v] if pos[u] > pos[v])
            for x, y in combinations(later, 2):
                if not G.has_edge(x, y):
                    return v, x, y
        return None

    def is_valid(self, G: Graph) -> bool:
        return sorted(self.order) == list(range(G.n)) and self.first_failure(G) is None

    def to_json(self) -> dict:
        return {"elimination_ordering": [v + 1 for v in self.order]}


def maximum_cardinality_search(G: Graph) -> list[int]:
    """Visit order of MCS; ties go to the smallest vertex."""
    weight = [0] * G.n
    visited = [False] * G.n
    out = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        out.append(v)
        for u in G.adj[v]:
            if not visited[u]:
                weight[u] += 1
    return out


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    cycle = cycle[k:] + cycle[:k]
    if cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)


def _cycle_through(G: Graph, v: int, x: int, y: int) -> tuple[int, ...] | None:
    """Chordless cycle ``v, x, ..., y`` from a shortest x-y path avoiding N[v] - {x, y}."""
    blocked = (G.adj[v] | {v}) - {x, y}
    prev = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in sorted(G.adj[u]):
            if w not in prev and w not in blocked:
                prev[w] = u
                queue.append(w)
    if y not in prev:
        return None
    path = []
    u = y
    while u is not None:
        path.append(u)
        u = prev[u]
    return _canonical_cycle([v] + path[::-1])


def _find_chordless_cycle(G: Graph, hint: tuple[int, int, int]) -> tuple[int, ...]:
    v, x, y = hint
    cycle = _cycle_through(G, v, x, y)
    if cycle is not None:
        return cycle
    for v in range(G.n):
        for x, y in combinations(sorted(G.adj[v]), 2):
            if not G.has_edge(x, y):
                cycle = _cycle_through(G, v, x, y)
                if cycle is not None:
                    return cycle
    raise AssertionError("elimination ordering failed but no chordless cycle found")


def is_chordal(G: Graph) -> EliminationOrdering | ForbiddenWitness:
    """Perfect elimination ordering, or an induced cycle of length at least 4."""
    peo = EliminationOrdering(tuple(reversed(maximum_cardinality_search(G))))
    failure = peo.first_failure(G)
    if failure is None:
        return peo
    return ForbiddenWitness(WitnessKind.CHORDLESS_CYCLE, _find_chordless_cycle(G, failure))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _find_claw(G: Graph):
    nb = G.masks
    for c in range(G.n):
        for l1, l2, l3 in combinations(sorted(G.adj[c]), 3):
            if not (nb[l1] >> l2 & 1 or nb[l1] >> l3 & 1 or nb[l2] >> l3 & 1):
                return (c, l1, l2, l3)
    return None


def _triangles(G: Graph):
    nb = G.masks
    for a in range(G.n):
        for b in _bits(nb[a] >> (a + 1) << (a + 1)):
            for c in _bits(nb[a] & nb[b] >> (b + 1) << (b + 1)):
                yield a, b, c


def _find_net(G: Graph):
    nb = G.masks
    cl = [G.closed_mask(v) for v in range(G.n)]
    for a, b, c in _triangles(G):
        for x in _bits(nb[a] & ~cl[b] & ~cl[c]):
            for y in _bits(nb[b] & ~cl[a] & ~cl[c] & ~nb[x]):
                for z in _bits(nb[c] & ~cl[a] & ~cl[b] & ~nb[x] & ~nb[y]):
                    return (a, b, c, x, y, z)
    return None


def _find_tent(G: Graph):
    nb = G.masks
    cl = [G.closed_mask(v) for v in range(G.n)]
    for b, c, e in _triangles(G):
        for a in _bits(nb[b] & nb[c] & ~cl[e]):
            for d in _bits(nb[c] & nb[e] & ~cl[b] & ~nb[a]):
                for f in _bits(nb[b] & nb[e] & ~cl[c] & ~nb[a] & ~nb[d]):
                    return (b, c, e, a, d, f)
    return None


_FINDERS = {CLAW: _find_claw, NET: _find_net, TENT: _find_tent}


def find_induced_pattern(G: Graph, pattern: WitnessKind | str) -> ForbiddenWitness | None:
    """Least induced copy of the pattern, in role order, or ``None``."""
    pattern = WitnessKind(pattern)
    if pattern not in _FINDERS:
        raise ValueError(f"pattern must be CLAW, NET or TENT, got {pattern.value}")
    found = _FINDERS[pattern](G)
    return None if found is None else ForbiddenWitness(pattern, found)


@dataclass(frozen=True)
class Classification:
    chordal: bool
    claw_free: bool
    net_free: bool
    tent_free: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def all_free(self) -> bool:
        return self.chordal and self.claw_free and self.net_free and self.tent_free

    def first_witness(self) -> ForbiddenWitness | None:
        for key in ("chordal", "claw_free", "net_free", "tent_free"):
            if key in self.witnesses:
                return self.witnesses[key]
        return None

    def to_json(self) -> dict:
        return {
            "chordal": self.chordal,
            "claw_free": self.claw_free,
            "net_free": self.net_free,
            "tent_free": self.tent_free,
            "witnesses": {k: w.to_json() for k, w in self.witnesses.items()},
        }


def classify(G: Graph) -> Classification:
    witnesses = {}
    chord = is_chordal(G)
    if isinstance(chord, ForbiddenWitness):
        witnesses["chordal"] = chord
    for key, pattern in (("claw_free", CLAW), ("net_free", NET), ("tent_free", TENT)):
        w = find_induced_pattern(G, pattern)
        if w is not None:
            witnesses[key] = w
    return Classification(
        chordal="chordal" not in witnesses,
        claw_free="claw_free" not in witnesses,
        net_free="net_free" not in witnesses,
        tent_free="tent_free" not in witnesses,
        witnesses=witnesses,
    )
