"""Certifying recognition of closed graphs, a.k.a. proper interval graphs.

The main entry points are :func:`recognize` (ordering or ``None``),
:func:`certify` (re-validated YES/NO certificate), :func:`classify`
(chordal / claw / net / tent flags with witnesses) and :func:`is_narrow`.
"""

from .certificates import NoCertificate, YesCertificate, certify
from .forbidden import (
    EliminationOrdering,
    ForbiddenWitness,
    WitnessKind,
    classify,
    find_induced_pattern,
    is_chordal,
    validate_witness,
)
from .formats import parse_graph, parse_graphs, serialize_graph
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    GuardError,
    bfs_distances,
    build_graph,
    connected_components,
    diameter,
    enumerate_graphs,
    induced_subgraph,
    is_connected,
)
from .intervals import IntervalRepresentation, build_representation, validate_representation
from .narrowness import (
    NarrownessWitness,
    ShortestPathDag,
    diametral_pairs,
    enumerate_longest_shortest_paths,
    is_narrow,
    narrowness_oracle,
)
from .orderings import (
    AdjacencyProfile,
    Ordering,
    OrderingViolation,
    ViolationKind,
    adjacency_profile,
    brute_force_search,
    is_closed_ordering,
    is_proper_interval_ordering,
    orderings_agree,
    recognize,
)
from .straight import (
    EdgeKind,
    Orientation,
    ReducedQuotient,
    StraightEnumeration,
    all_straight_orientations,
    classify_edge,
    closed_neighborhood_classes,
    full_reversal,
    is_straight_enumeration,
    orient_from_ordering,
    straight_orientation,
)

__version__ = "0.1.0"
