"""Exhaustive and seeded-random cross-validation of the equivalence theorems.

Each property is a function ``G -> bool | None`` (``None`` when the graph is
outside the property's hypotheses).  :func:`run_suite` applies every property
to every labeled graph up to ``min(max_n, 6)`` vertices, plus seeded random
graphs on 7 vertices when ``max_n == 7``, and reports counterexamples in
graph6.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations

from .forbidden import classify, validate_witness
from .formats import serialize_graph6
from .graph import Graph, GraphError, enumerate_graphs, graph_from_code, is_connected, random_graph
from .intervals import build_representation, validate_representation
from .narrowness import is_narrow, narrowness_oracle
from .orderings import (
    CLOSED,
    PROPER,
    brute_force_search,
    is_proper_interval_ordering,
    orderings_agree,
    recognize,
)
from .straight import all_straight_orientations, full_reversal, is_reduced, straight_orientation

EXHAUSTIVE_MAX_N = 6
CHECKER_EQUIVALENCE_MAX_N = 5
SUITE_MIN_N, SUITE_MAX_N = 3, 7
RANDOM_N = 7
RANDOM_COUNT = 200


def cor_equiv(G: Graph) -> bool:
    """Closed ordering exists, proper ordering exists, recognize and straight orientation agree."""
    verdicts = {
        brute_force_search(G, CLOSED) is not None,
        brute_force_search(G, PROPER) is not None,
        recognize(G) is not None,
        straight_orientation(G) is not None,
    }
    return len(verdicts) == 1


def checker_equivalence(G: Graph) -> bool | None:
    """Closed and proper interval checkers agree on every ordering of a connected graph.

    Disconnected graphs are skipped: with an isolated vertex placed between
    the ends of an edge the ordering is closed but not proper interval.
    """
    if G.n > CHECKER_EQUIVALENCE_MAX_N or not is_connected(G):
        return None
    return all(orderings_agree(G, p) for p in permutations(range(G.n)))


def self_certification(G: Graph) -> bool | None:
    sigma = recognize(G)
    if sigma is None:
        return None
    return (is_proper_interval_ordering(G, sigma) is None
            and is_proper_interval_ordering(G, sigma.reversed()) is None)


def representation_round_trip(G: Graph) -> bool | None:
    sigma = recognize(G)
    if sigma is None:
        return None
    return not validate_representation(G, build_representation(G, sigma))


def forbidden_conjunction(G: Graph) -> bool:
    c = classify(G)
    if not all(validate_witness(G, w) for w in c.witnesses.values()):
        return False
    return c.all_free == (recognize(G) is not None)


def narrow_theorem(G: Graph) -> bool | None:
    """Closed iff chordal, claw-free and narrow (connected graphs)."""
    if not is_connected(G):
        return None
    c = classify(G)
    narrow = is_narrow(G) is None
    return (recognize(G) is not None) == (c.chordal and c.claw_free and narrow)


def narrow_net_tent(G: Graph) -> bool | None:
    """For connected chordal claw-free graphs: narrow iff net-free and tent-free."""
    if not is_connected(G):
        return None
    c = classify(G)
    if not (c.chordal and c.claw_free):
        return None
    return (is_narrow(G) is None) == (c.net_free and c.tent_free)


def narrow_oracle_agreement(G: Graph) -> bool | None:
    if not is_connected(G):
        return None
    fast, slow = is_narrow(G), narrowness_oracle(G)
    if (fast is None) != (slow is None):
        return False
    return all(w is None or w.is_valid(G) for w in (fast, slow))


def unique_up_to_reversal(G: Graph) -> bool | None:
    """Connected reduced proper interval graphs have two straight orientations, mutually reversed."""
    if G.m == 0 or not is_connected(G) or not is_reduced(G) or recognize(G) is None:
        return None
    found = all_straight_orientations(G)
    if len(found) != 2:
        return False
    a, b = found
    return full_reversal(a) == b


PROPERTIES = {
    "cor_equiv": cor_equiv,
    "checker_equivalence": checker_equivalence,
    "self_certification": self_certification,
    "representation_round_trip": representation_round_trip,
    "forbidden_conjunction": forbidden_conjunction,
    "narrow_theorem": narrow_theorem,
    "narrow_net_tent": narrow_net_tent,
    "narrow_oracle_agreement": narrow_oracle_agreement,
    "unique_up_to_reversal": unique_up_to_reversal,
}


def check_graphs(graphs) -> tuple[Counter, Counter, list[tuple[str, str]]]:
    checked, failed = Counter(), Counter()
    counterexamples = []
    for G in graphs:
        for name, prop in PROPERTIES.items():
            holds = prop(G)
            if holds is None:
                continue
            checked[name] += 1
            if not holds:
                failed[name] += 1
                counterexamples.append((name, serialize_graph6(G)))
    return checked, failed, counterexamples


def _check_code_range(n: int, lo: int, hi: int):
    pairs = list(combinations(range(n), 2))
    return check_graphs(graph_from_code(n, code, pairs) for code in range(lo, hi))


def _check_random(n: int, p: float, seed: int, count: int):
    rng = random.Random(seed)
    return check_graphs(random_graph(n, rng, p) for _ in range(count))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CGK_THREADS", "1")))
    except ValueError:
        return 1


CHUNK = 4096


def run_suite(max_n: int, seed: int = 0, random_count: int = RANDOM_COUNT,
              threads: int | None = None) -> dict:
    """Run every property and return a deterministic JSON-ready report."""
    if not SUITE_MIN_N <= max_n <= SUITE_MAX_N:
        raise GraphError(f"max_n must be in {SUITE_MIN_N}..{SUITE_MAX_N}, got {max_n}")
    threads = threads or _threads()
    jobs = []
    graph_counts = {}
    for n in range(1, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        total = 1 << (n * (n - 1) // 2)
        graph_counts[str(n)] = total
        jobs.extend((_check_code_range, n, lo, min(lo + CHUNK, total))
                    for lo in range(0, total, CHUNK))
    if max_n >= RANDOM_N:
        graph_counts[f"{RANDOM_N} (random, seed {seed})"] = random_count
        jobs.append((_check_random, RANDOM_N, 0.5, seed, random_count))

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(fn, *args) for fn, *args in jobs]
            results = [f.result() for f in futures]
    else:
        results = [fn(*args) for fn, *args in jobs]

    checked, failed = Counter(), Counter()
    counterexamples = []
    for c, f, ce in results:
        checked.update(c)
        failed.update(f)
        counterexamples.extend(ce)
    return {
        "max_n": max_n,
        "seed": seed,
        "graphs": graph_counts,
        "properties": {
            name: {"checked": checked[name], "counterexamples": failed[name]}
            for name in PROPERTIES
        },
        "counterexamples": [{"property": p, "graph6": g} for p, g in sorted(counterexamples)],
        "total_counterexamples": sum(failed.values()),
    }


def exhaustive(max_n: int):
    """All labeled graphs on ``1..max_n`` vertices."""
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n)
