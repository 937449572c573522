"""Core graph model and traversal primitives.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable; it keeps
each neighborhood both as a ``frozenset`` and as an integer bitmask so that the
exhaustive searches elsewhere in the package can intersect neighborhoods with
single machine operations.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


class DisconnectedGraphError(GraphError):
    """Raised by operations that are only defined for connected graphs."""


class GuardError(GraphError):
    """An exhaustive operation was asked to run beyond its size guard."""


class Graph:
    """Finite simple undirected graph on ``0..n-1``."""

    __slots__ = ("n", "adj", "masks", "_edges")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        sets = tuple(frozenset(a) for a in adj)
        for v, nbrs in enumerate(sets):
            if v in nbrs:
                raise GraphError(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = sets
        self.masks = tuple(sum(1 << u for u in nbrs) for nbrs in sets)
        self._edges = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, [[u for u in range(n) if m >> u & 1] for m in masks])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self):
        return hash((self.n, self.masks))

    def __len__(self):
        return self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, lexicographically."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
            )
        return list(self._edges)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_mask(self, v: int) -> int:
        """Bitmask of N[v]."""
        return self.masks[v] | (1 << v)


def _check_vertex(n: int, v, what: str = "vertex") -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise GraphError(f"{what} {v!r} out of range for n={n}")


def build_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicates are collapsed."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj = [set() for _ in range(n)]
    for pair in edges:
        u, v = tuple(pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has a vertex out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge {(u, v)}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``S``.

    Returns the new graph and the mapping ``new -> old`` as a list; new vertex
    ``i`` is the ``i``-th smallest element of ``S``.
    """
    old = sorted(set(S))
    for v in old:
        _check_vertex(G.n, v)
    index = {v: i for i, v in enumerate(old)}
    adj = [[index[u] for u in G.adj[v] if u in index] for v in old]
    return Graph(len(old), adj), old


def bfs_distances(G: Graph, s: int) -> list[int | None]:
    """Shortest-path distances from ``s``; ``None`` marks unreachable vertices."""
    _check_vertex(G.n, s, "source")
    dist: list[int | None] = [None] * G.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in G.adj[v]:
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def all_pairs_distances(G: Graph) -> list[list[int | None]]:
    return [bfs_distances(G, s) for s in range(G.n)]


def connected_components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(G, s)) if d is not None]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and all(d is not None for d in bfs_distances(G, 0))


def require_connected(G: Graph, what: str) -> None:
    if G.n == 0:
        raise GraphError(f"{what} needs at least one vertex")
    if not is_connected(G):
        raise DisconnectedGraphError(f"{what} is only defined for connected graphs")


def diameter(G: Graph) -> int:
    require_connected(G, "diameter")
    return max(max(row) for row in all_pairs_distances(G))


MAX_ENUMERATION_N = 7


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on ``n`` vertices in ascending edge-bitmask order.

    Bit ``k`` of the mask selects the ``k``-th pair of
    ``itertools.combinations(range(n), 2)``.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise GuardError(f"enumerate_graphs supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield graph_from_code(n, code, pairs)


def graph_from_code(n: int, code: int, pairs=None) -> Graph:
    """Inverse of the bit numbering used by :func:`enumerate_graphs`."""
    if pairs is None:
        pairs = list(combinations(range(n), 2))
    masks = [0] * n
    k = 0
    while code:
        if code & 1:
            u, v = pairs[k]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        code >>= 1
        k += 1
    return Graph.from_masks(masks)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Rejection-sample ``G(n, p)`` until the draw is connected."""
    while True:
        G = random_graph(n, rng, p)
        if is_connected(G):
            return G
