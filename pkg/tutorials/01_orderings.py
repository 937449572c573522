"""
Closed orderings and proper interval orderings
==============================================

A vertex ordering is *proper* when every edge spanning a position also
touches that position from both sides.  It is *closed* when two edges
sharing their smaller endpoint force an edge between their larger ones,
and dually.  This script checks a few orderings by hand, then lets the
recognizer find one.
"""

from __future__ import annotations

from closedgraphs import (
    Ordering,
    brute_force_search,
    is_closed_ordering,
    is_proper_interval_ordering,
    recognize,
)
from closedgraphs.fixtures import claw, path_graph

# the path 0-1-2-3 in its natural order satisfies both conditions
P4 = path_graph(4)
# a checker returns None when the ordering is fine, else the least violation
print("P4 natural order, proper:", is_proper_interval_ordering(P4, [0, 1, 2, 3]) is None)
print("P4 natural order, closed:", is_closed_ordering(P4, [0, 1, 2, 3]) is None)

# swapping the first two vertices breaks the umbrella condition;
# the checker reports the least violating triple of positions
bad = Ordering.parse("2,1,3,4")
violation = is_proper_interval_ordering(P4, bad)
print("P4 with 2,1,3,4:", violation.kind.name, "at positions", violation.positions)

# the claw has no good ordering at all, so the exhaustive search gives up
print("claw, brute force:", brute_force_search(claw(), "closed"))
print("claw, recognize:  ", recognize(claw()))

# the recognizer runs LexBFS sweeps and hands its answer to the checker
sigma = recognize(path_graph(6))
print("P6 ordering found by recognize:", sigma)
