"""
Narrow graphs
=============

A connected graph is narrow when every vertex lies on, or next to, every
longest shortest path.  The net and the tent are the smallest chordal
claw-free graphs that fail this, and ``is_narrow`` says exactly where.
"""

from __future__ import annotations

from closedgraphs import diameter, enumerate_longest_shortest_paths, is_narrow, narrowness_oracle
from closedgraphs.fixtures import NET_LABELS, TENT_LABELS, net, path_graph, tent

names = {v: k for k, v in NET_LABELS.items()}
G = net()
print("net diameter:", diameter(G))
for p in enumerate_longest_shortest_paths(G):
    print("   ", "-".join(names[v] for v in p))

w = is_narrow(G)
print("net witness: vertex", names[w.vertex], "misses path", "-".join(names[v] for v in w.path))

names = {v: k for k, v in TENT_LABELS.items()}
w = is_narrow(tent())
print("tent witness: vertex", names[w.vertex], "misses path", "-".join(names[v] for v in w.path))

# a path is narrow, and the slow definition-level oracle agrees
print("P5 narrow:", is_narrow(path_graph(5)) is None, narrowness_oracle(path_graph(5)) is None)
