"""Path-to-cycle closure in vertex- and edge-transitive graphs.

Library layout: :mod:`graph` (types, predicates), :mod:`io` (graph6/DOT),
:mod:`families` (generators and witnesses), :mod:`symmetry` (automorphisms,
orbits, transitivity), :mod:`connectivity` (Menger kappa and bounds),
:mod:`cycles` (closure deciders), :mod:`census` (small-graph enumeration),
:mod:`claims` (the verification harness), :mod:`search` (counterexample
search), :mod:`oracles` (brute-force cross-checks), :mod:`cli`.
"""

from .census import canonical_form, enumerate_connected_graphs
from .claims import CLAIM_CATALOG, CLAIM_IDS, ClaimReport, verify_claim
from .connectivity import (
    ConnectivityResult,
    check_mader_watkins,
    check_watkins_equality,
    vertex_connectivity,
)
from .cycles import (
    ClosureAnswer,
    blocking_certificate,
    closes_to_cycle,
    closes_to_induced_cycle,
    enumerate_paths,
    is_induced_path,
    is_path,
)
from .errors import CyclosureError
from .families import (
    FamilySpec,
    LabeledGraph,
    format_spec,
    line_graph,
    make_family,
    parse_spec,
    witness,
)
from .graph import Cycle, Graph, Path, build_graph, is_bipartite, is_connected, regularity
from .io import parse_graph6, to_dot, to_graph6
from .search import search_counterexample
from .symmetry import (
    OrbitPartition,
    automorphism_generators,
    automorphism_group_order,
    edge_orbits,
    is_automorphism,
    is_edge_transitive,
    is_vertex_transitive,
    vertex_orbits,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIM_CATALOG",
    "CLAIM_IDS",
    "ClaimReport",
    "ClosureAnswer",
    "ConnectivityResult",
    "Cycle",
    "CyclosureError",
    "FamilySpec",
    "Graph",
    "LabeledGraph",
    "OrbitPartition",
    "Path",
    "automorphism_generators",
    "automorphism_group_order",
    "blocking_certificate",
    "build_graph",
    "canonical_form",
    "check_mader_watkins",
    "check_watkins_equality",
    "closes_to_cycle",
    "closes_to_induced_cycle",
    "edge_orbits",
    "enumerate_connected_graphs",
    "enumerate_paths",
    "format_spec",
    "is_automorphism",
    "is_bipartite",
    "is_connected",
    "is_edge_transitive",
    "is_induced_path",
    "is_path",
    "is_vertex_transitive",
    "line_graph",
    "make_family",
    "parse_graph6",
    "parse_spec",
    "regularity",
    "search_counterexample",
    "to_dot",
    "to_graph6",
    "verify_claim",
    "vertex_connectivity",
    "vertex_orbits",
    "witness",
]
