from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from closedgraphs.fixtures import (
    CLAW_LABELS,
    NET_LABELS,
    TENT_LABELS,
    claw,
    complete_graph,
    cycle_graph,
    net,
    path_graph,
    tent,
)
from closedgraphs.forbidden import (
    CLAW,
    NET,
    TENT,
    EliminationOrdering,
    ForbiddenWitness,
    WitnessKind,
    classify,
    find_induced_pattern,
    is_chordal,
    validate_witness,
)
from closedgraphs.graph import enumerate_graphs, induced_subgraph
from closedgraphs.orderings import recognize

from conftest import to_nx
from test_graph import graphs

PATTERNS = {CLAW: to_nx(claw()), NET: to_nx(net()), TENT: to_nx(tent())}


def contains_induced(G, pattern):
    H = to_nx(G)
    P = PATTERNS[pattern]
    return any(nx.is_isomorphic(H.subgraph(S), P)
               for S in combinations(range(G.n), P.number_of_nodes()))


def test_chordal_examples():
    w = is_chordal(cycle_graph(4))
    assert w == ForbiddenWitness(WitnessKind.CHORDLESS_CYCLE, (0, 1, 2, 3))
    peo = is_chordal(complete_graph(4))
    assert isinstance(peo, EliminationOrdering) and peo.is_valid(complete_graph(4))
    peo = is_chordal(net())
    assert isinstance(peo, EliminationOrdering) and peo.is_valid(net())


def test_chordal_c5_witness():
    w = is_chordal(cycle_graph(5))
    assert w.kind is WitnessKind.CHORDLESS_CYCLE and len(w.vertices) == 5
    assert validate_witness(cycle_graph(5), w)


@pytest.mark.parametrize("n", range(1, 7))
def test_chordal_matches_networkx(n):
    for G in enumerate_graphs(n):
        result = is_chordal(G)
        if isinstance(result, EliminationOrdering):
            assert result.is_valid(G)
            assert nx.is_chordal(to_nx(G))
        else:
            assert validate_witness(G, result)
            assert not nx.is_chordal(to_nx(G))


def test_pattern_examples():
    w = find_induced_pattern(claw(), CLAW)
    assert w.vertices == (CLAW_LABELS["center"], 1, 2, 3)
    w = find_induced_pattern(net(), NET)
    assert w.vertices == tuple(NET_LABELS[k] for k in "abcxyz")
    w = find_induced_pattern(tent(), TENT)
    assert w.vertices == tuple(TENT_LABELS[k] for k in "bceadf")
    for p in (CLAW, NET, TENT):
        assert find_induced_pattern(complete_graph(4), p) is None
    assert find_induced_pattern(net(), "CLAW") is None
    with pytest.raises(ValueError):
        find_induced_pattern(net(), WitnessKind.CHORDLESS_CYCLE)


def test_validate_witness_rejects_wrong_patterns():
    assert not validate_witness(net(), ForbiddenWitness(TENT, (0, 1, 2, 3, 4, 5)))
    assert not validate_witness(claw(), ForbiddenWitness(CLAW, (1, 0, 2, 3)))
    assert not validate_witness(claw(), ForbiddenWitness(CLAW, (0, 1, 1, 3)))
    assert not validate_witness(cycle_graph(5),
                                ForbiddenWitness(WitnessKind.CHORDLESS_CYCLE, (0, 1, 2, 3)))


@pytest.mark.parametrize("n", range(4, 7))
def test_patterns_match_isomorphism_oracle(n):
    checked = 0
    for code, G in enumerate(enumerate_graphs(n)):
        if n == 6 and code % 7:
            continue
        for p in (CLAW, NET, TENT):
            w = find_induced_pattern(G, p)
            assert (w is not None) == contains_induced(G, p)
            if w is not None:
                assert validate_witness(G, w)
        checked += 1
    assert checked > 0


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_pattern_witnesses_revalidate(G):
    c = classify(G)
    for w in c.witnesses.values():
        assert validate_witness(G, w)
    if G.n <= 8:
        assert c.claw_free == (not contains_induced(G, CLAW))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_pattern_monotone_under_deletion(G):
    for drop in range(G.n):
        keep = [v for v in range(G.n) if v != drop]
        H, back = induced_subgraph(G, keep)
        for p in (CLAW, NET, TENT):
            w = find_induced_pattern(H, p)
            if w is not None:
                lifted = ForbiddenWitness(p, tuple(back[v] for v in w.vertices))
                assert validate_witness(G, lifted)
                assert find_induced_pattern(G, p) is not None


def test_classify_examples():
    c = classify(tent())
    assert (c.chordal, c.claw_free, c.net_free, c.tent_free) == (True, True, True, False)
    c = classify(cycle_graph(5))
    assert not c.chordal and len(c.witnesses["chordal"].vertices) == 5
    c = classify(path_graph(6))
    assert c.all_free and not c.witnesses


@pytest.mark.parametrize("n", range(1, 7))
def test_classify_conjunction_matches_recognize(n):
    for G in enumerate_graphs(n):
        assert classify(G).all_free == (recognize(G) is not None)
