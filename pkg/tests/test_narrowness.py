import random

import networkx as nx
import pytest
from hypothesis import given, settings

from closedgraphs.fixtures import NET_LABELS, TENT_LABELS, complete_graph, cycle_graph, net, path_graph, tent
from closedgraphs.graph import DisconnectedGraphError, build_graph, enumerate_graphs, is_connected
from closedgraphs.narrowness import (
    NarrownessWitness,
    PathLimitError,
    ShortestPathDag,
    diametral_pairs,
    enumerate_longest_shortest_paths,
    is_narrow,
    narrowness_oracle,
)

from conftest import to_nx
from test_graph import graphs

N = NET_LABELS
T = TENT_LABELS


def test_diametral_pairs():
    assert diametral_pairs(path_graph(4)) == [(0, 3)]
    assert diametral_pairs(net()) == sorted([(N["x"], N["y"]), (N["x"], N["z"]), (N["y"], N["z"])])
    assert diametral_pairs(complete_graph(3)) == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(DisconnectedGraphError):
        diametral_pairs(build_graph(3, [(0, 1)]))


def test_longest_shortest_paths_examples():
    assert list(enumerate_longest_shortest_paths(path_graph(4))) == [[0, 1, 2, 3], [3, 2, 1, 0]]
    paths = list(enumerate_longest_shortest_paths(net()))
    assert len(paths) == 6
    assert [N["z"], N["c"], N["b"], N["y"]] in paths
    c4 = list(enumerate_longest_shortest_paths(cycle_graph(4)))
    assert len(c4) == 8 and all(len(p) == 3 for p in c4)
    assert {(p[0], p[-1]) for p in c4} == {(0, 2), (2, 0), (1, 3), (3, 1)}


def test_dag_paths_match_networkx():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 9)
        G = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        H = to_nx(G)
        s, t = rng.sample(range(n), 2)
        if not nx.has_path(H, s, t):
            continue
        dag = ShortestPathDag(G, s, t)
        ours = list(dag.paths())
        assert ours == sorted(ours)
        assert sorted(ours) == sorted(nx.all_shortest_paths(H, s, t))
        assert all(len(p) - 1 == dag.length for p in ours)


def test_path_limit_guard():
    # K_{2,2,...}-like layered graph with 3^4 shortest paths
    layers = [[0], [1, 2, 3], [4, 5, 6], [7, 8, 9], [10, 11, 12], [13]]
    edges = [(u, v) for a, b in zip(layers, layers[1:]) for u in a for v in b]
    G = build_graph(14, edges)
    assert len(list(ShortestPathDag(G, 0, 13).paths())) == 81
    with pytest.raises(PathLimitError):
        list(ShortestPathDag(G, 0, 13).paths(limit=80))


def test_net_not_narrow():
    w = is_narrow(net())
    assert w.vertex == N["x"]
    assert set(w.path) == {N["z"], N["c"], N["b"], N["y"]}
    assert {w.path[0], w.path[-1]} == {N["z"], N["y"]}
    assert w.diameter == 3 and w.is_valid(net())


def test_tent_not_narrow():
    w = is_narrow(tent())
    assert w.vertex == T["a"]
    assert w.path == (T["d"], T["e"], T["f"])
    assert w.is_valid(tent())


def test_narrow_examples():
    assert is_narrow(path_graph(5)) is None
    assert is_narrow(complete_graph(5)) is None
    assert narrowness_oracle(complete_graph(5)) is None
    assert is_narrow(build_graph(1, [])) is None
    assert narrowness_oracle(net()) is not None
    with pytest.raises(DisconnectedGraphError):
        is_narrow(build_graph(2, []))
    with pytest.raises(DisconnectedGraphError):
        narrowness_oracle(build_graph(2, []))


def test_witness_validation_rejects_bad_witnesses():
    G = net()
    assert not NarrownessWitness(N["a"], (N["z"], N["c"], N["b"], N["y"]), 3).is_valid(G)
    assert not NarrownessWitness(N["x"], (N["z"], N["c"], N["y"]), 2).is_valid(G)
    assert not NarrownessWitness(N["x"], (N["c"], N["b"], N["y"]), 2).is_valid(G)


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_agreement_small(n):
    for G in enumerate_graphs(n):
        if is_connected(G):
            fast, slow = is_narrow(G), narrowness_oracle(G)
            assert (fast is None) == (slow is None)
            for w in (fast, slow):
                assert w is None or w.is_valid(G)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_oracle_agreement_random(G):
    if not is_connected(G):
        return
    fast = is_narrow(G)
    assert (fast is None) == (narrowness_oracle(G) is None)
    if fast is not None:
        assert fast.is_valid(G)
