"""Longest shortest paths and the narrowness test.

A longest shortest path is a shortest path between two vertices whose distance
equals the diameter.  A connected graph is narrow when every vertex lies on,
or is adjacent to, every such path.

:func:`is_narrow` decides this without listing paths: a vertex ``v`` breaks
narrowness exactly when some diametral pair still has a shortest path after
``N[v]`` is deleted from its shortest-path DAG.  :func:`narrowness_oracle`
lists every path instead and is kept as the independent cross-check.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .graph import Graph, GraphError, all_pairs_distances, bfs_distances, require_connected

PATH_LIMIT = 10 ** 6


class PathLimitError(GraphError):
    """More shortest paths between one pair than the enumeration guard allows."""


class ShortestPathDag:
    """Arcs ``(x, y)`` lying on some shortest ``s``-``t`` path."""

    def __init__(self, G: Graph, s: int, t: int):
        ds = bfs_distances(G, s)
        dt = bfs_distances(G, t)
        if ds[t] is None:
            raise GraphError(f"{t} is unreachable from {s}")
        self.s, self.t, self.length = s, t, ds[t]
        self.succ: dict[int, list[int]] = {}
        self.depth: dict[int, int] = {}
        for x in range(G.n):
            if ds[x] is None or dt[x] is None or ds[x] + dt[x] != self.length:
                continue
            self.depth[x] = ds[x]
            self.succ[x] = sorted(
                y for y in G.adj[x]
                if ds[y] == ds[x] + 1 and dt[y] is not None and ds[y] + dt[y] == self.length
            )

    @property
    def arcs(self) -> set[tuple[int, int]]:
        return {(x, y) for x, ys in self.succ.items() for y in ys}

    def paths(self, limit: int = PATH_LIMIT) -> Iterator[list[int]]:
        """All ``s``-``t`` paths in lexicographic order."""
        count = 0
        stack = [(self.s, [self.s])]
        while stack:
            x, path = stack.pop()
            if x == self.t:
                count += 1
                if count > limit:
                    raise PathLimitError(
                        f"more than {limit} shortest paths between {self.s} and {self.t}")
                yield path
                continue
            for y in reversed(self.succ[x]):
                stack.append((y, path + [y]))

    def least_path_avoiding(self, blocked: set[int]) -> list[int] | None:
        """Lexicographically least ``s``-``t`` path using no vertex of ``blocked``."""
        if self.s in blocked or self.t in blocked:
            return None
        alive = {self.t}
        for x in sorted(self.succ, key=lambda v: -self.depth[v]):
            if x not in blocked and any(y in alive for y in self.succ[x]):
                alive.add(x)
        if self.s not in alive:
            return None
        path = [self.s]
        while path[-1] != self.t:
            path.append(next(y for y in self.succ[path[-1]] if y in alive))
        return path


@dataclass(frozen=True)
class NarrownessWitness:
    """A vertex at distance at least 2 from every vertex of a longest shortest path."""

    vertex: int
    path: tuple[int, ...]
    diameter: int

    def is_valid(self, G: Graph) -> bool:
        p = self.path
        if len(set(p)) != len(p) or len(p) - 1 != self.diameter:
            return False
        if any(not G.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        dist = all_pairs_distances(G)
        if max(max(row) for row in dist) != self.diameter:
            return False
        if dist[p[0]][p[-1]] != self.diameter:
            return False
        return all(dist[self.vertex][w] >= 2 for w in p)

    def to_json(self) -> dict:
        return {"vertex": self.vertex + 1, "path": [v + 1 for v in self.path],
                "diameter": self.diameter}


def diametral_pairs(G: Graph) -> list[tuple[int, int]]:
    require_connected(G, "diametral_pairs")
    dist = all_pairs_distances(G)
    diam = max(max(row) for row in dist)
    return [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if dist[u][v] == diam]


def enumerate_longest_shortest_paths(G: Graph, limit: int = PATH_LIMIT) -> Iterator[list[int]]:
    """Every longest shortest path, once per direction of travel.

    For each diametral pair ``s < t`` the ``s -> t`` paths come first in
    lexicographic order, then their reversals.
    """
    for s, t in diametral_pairs(G):
        forward = list(ShortestPathDag(G, s, t).paths(limit))
        yield from forward
        for path in forward:
            yield path[::-1]


def is_narrow(G: Graph) -> NarrownessWitness | None:
    """``None`` when ``G`` is narrow, otherwise a witness.

    Vertices are tried in ascending order and, for each, diametral pairs in
    lexicographic order; the witness path is the least surviving DAG path.
    """
    pairs = diametral_pairs(G)
    if not pairs:
        return None
    dags = [ShortestPathDag(G, s, t) for s, t in pairs]
    diam = dags[0].length
    for v in range(G.n):
        blocked = G.adj[v] | {v}
        for dag in dags:
            path = dag.least_path_avoiding(blocked)
            if path is not None:
                return NarrownessWitness(v, tuple(path), diam)
    return None


def narrowness_oracle(G: Graph, limit: int = PATH_LIMIT) -> NarrownessWitness | None:
    """Same verdict as :func:`is_narrow`, by checking every vertex against every listed path."""
    require_connected(G, "narrowness_oracle")
    paths = list(enumerate_longest_shortest_paths(G, limit))
    for v in range(G.n):
        for path in paths:
            if all(w != v and not G.has_edge(v, w) for w in path):
                return NarrownessWitness(v, tuple(path), len(path) - 1)
    return None
