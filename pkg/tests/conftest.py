"""Shared fixtures and definition-level oracles.

The oracles below restate the ordering conditions as literally as possible
(triple loops, all pairs of edges) so they share no code path with the
bitmask checkers under test.
"""

from itertools import combinations, permutations

import networkx as nx
import pytest

from closedgraphs.fixtures import claw, complete_graph, cycle_graph, net, path_graph, tent


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def naive_proper_violation(G, order):
    n = len(order)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = order[i], order[j], order[k]
                if G.has_edge(a, c) and not (G.has_edge(a, b) and G.has_edge(b, c)):
                    return (i + 1, j + 1, k + 1)
    return None


def naive_closed_violation(G, order):
    """Least ``(positions, kind)`` over all pairs of edges, kind 0 = shared min."""
    pos = {v: i + 1 for i, v in enumerate(order)}
    edges = [tuple(sorted((pos[u], pos[v]))) for u, v in G.edges()]
    at = {p: v for v, p in pos.items()}
    found = []
    for (i, j) in edges:
        for (k, l) in edges:
            if i == k and j != l and not G.has_edge(at[j], at[l]):
                found.append((tuple(sorted((i, j, l))), 0))
            if j == l and i != k and not G.has_edge(at[i], at[k]):
                found.append((tuple(sorted((i, k, j))), 1))
    return min(found) if found else None


def naive_first_ordering(G, accept):
    for p in permutations(range(G.n)):
        if accept(G, p):
            return p
    return None


@pytest.fixture
def named():
    return {
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "claw": claw(),
        "net": net(),
        "tent": tent(),
    }


def all_pairs(n):
    return list(combinations(range(n), 2))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" in nodeid and rep.when == "call" or (
                    outcome == "error" and "test_acceptance.py::" in nodeid):
                lines.append((nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
