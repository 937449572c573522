"""
Forbidden induced subgraphs
===========================

Proper interval graphs are exactly the graphs with no induced chordless
cycle of length at least four, claw, net or tent.  ``classify`` looks for
each of them and returns a witness for every one it finds.
"""

from __future__ import annotations

from closedgraphs import classify, is_chordal, validate_witness
from closedgraphs.fixtures import claw, cycle_graph, net, path_graph, tent

for name, G in [("P5", path_graph(5)), ("C5", cycle_graph(5)), ("claw", claw()),
                ("net", net()), ("tent", tent())]:
    c = classify(G)
    print(f"{name:5s} chordal={c.chordal!s:5s} claw_free={c.claw_free!s:5s} "
          f"net_free={c.net_free!s:5s} tent_free={c.tent_free!s:5s}")
    w = c.first_witness()
    if w is not None:
        # every witness can be re-checked against the graph independently
        print("      witness", w.kind.name, w.vertices, "valid:", validate_witness(G, w))

# chordality on its own: an elimination ordering, or a chordless cycle
print(is_chordal(path_graph(4)))
print(is_chordal(cycle_graph(6)))
