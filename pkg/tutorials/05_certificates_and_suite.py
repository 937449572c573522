"""
Certificates and the property suite
===================================

``certify`` bundles a YES answer (ordering, intervals, straight
enumeration) or a NO answer (a forbidden structure) and validates it
before returning.  ``run_suite`` then sweeps every small labeled graph and
counts counterexamples to each property.
"""

from __future__ import annotations

import json

from closedgraphs import certify
from closedgraphs.fixtures import cycle_graph, path_graph, tent
from closedgraphs.suite import run_suite

for G in (path_graph(3), cycle_graph(4), tent()):
    print(json.dumps(certify(G).to_json()))

report = run_suite(4, seed=0)
print("graphs per n:", report["graphs"])
print("total counterexamples:", report["total_counterexamples"])
