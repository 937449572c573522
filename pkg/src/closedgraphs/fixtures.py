"""Named small graphs.

The claw, net and tent carry fixed vertex roles, exposed as label dicts so
tests and examples can talk about ``x``, ``z`` and so on.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph

CLAW_LABELS = {"center": 0, "leaf1": 1, "leaf2": 2, "leaf3": 3}
NET_LABELS = {"a": 0, "b": 1, "c": 2, "x": 3, "y": 4, "z": 5}
TENT_LABELS = {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4, "f": 5}


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def claw() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])


def net() -> Graph:
    a, b, c, x, y, z = (NET_LABELS[k] for k in "abcxyz")
    return build_graph(6, [(a, b), (b, c), (a, c), (x, a), (y, b), (z, c)])


def tent() -> Graph:
    """The 3-sun: triangle b, c, e with a on bc, d on ce, f on be."""
    a, b, c, d, e, f = (TENT_LABELS[k] for k in "abcdef")
    return build_graph(6, [(b, c), (c, e), (b, e), (a, b), (a, c),
                           (d, c), (d, e), (f, b), (f, e)])


def caterpillar(spine: int, legs: list[int]) -> Graph:
    """Path of ``spine`` vertices with ``legs[i]`` pendant vertices on spine vertex ``i``."""
    if len(legs) != spine:
        raise ValueError("need one leg count per spine vertex")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, k in enumerate(legs):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)
