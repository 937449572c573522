"""
Straight enumerations and interval models
=========================================

A proper interval ordering orients every edge forward and turns the graph
into a straight enumeration.  The same ordering also yields an interval
model where adjacency means overlap and no interval nests inside another.
"""

from __future__ import annotations

from closedgraphs import (
    all_straight_orientations,
    build_representation,
    full_reversal,
    recognize,
    straight_orientation,
    validate_representation,
)
from closedgraphs.fixtures import caterpillar, path_graph

G = caterpillar(4, [1, 0, 0, 1])
print("caterpillar edges:", G.edges())

se = straight_orientation(G)
print("straight enumeration order:", se.order)
print("arrows:", se.orientation.to_json())

# a reduced connected proper interval graph has exactly two straight
# orientations, and they are reversals of one another
a, b = all_straight_orientations(path_graph(4))
print("P4 orientations are mutual reversals:", full_reversal(a) == b)

rep = build_representation(G, recognize(G))
for row in rep.to_json():
    print("   ", row)
print("violations:", validate_representation(G, rep))
