"""Resolving sets and metric dimension of generalized Hamming graphs.

Vertices of HG(n1, n2, n3; K) are triples over [n1] x [n2] x [n3]; two
differ by an edge when the number of disagreeing coordinates lies in K.
The package verifies resolving sets, predicts verdicts from forbidden
configurations in an edge-colored landmark graph, constructs minimum
resolving sets for the diagonal family, and certifies dimensions by
exhaustive search.
"""

from .errors import (
    BudgetExceeded,
    DisconnectedGraph,
    HammingDimError,
    InvalidBlock,
    InvalidOrder,
    InvalidPair,
    InvalidVertex,
    IsLandmark,
    NotApplicable,
    NotFound,
    ParseError,
    Unreachable,
    Unsupported,
)
from .hamming import GhgParams, Vertex, hamming_discrepancy, hamming_graph
from .resolving import (
    Certificate,
    LandmarkSet,
    Verdict,
    block_sum_violations,
    is_resolving,
    is_resolving_by_distance,
    loop_profile,
    lower_bound,
)
from .landmark import (
    CycleReport,
    ForbiddenReport,
    Footprint,
    FootprintShape,
    Hyperedge,
    LandmarkGraph,
    SystemClass,
    SystemKind,
    basic_part,
    build_landmark_graph,
    classify,
    extend_triple_looped,
    footprint,
    forbidden_scan,
    predict_resolving,
)
from .construct import (
    ColoredCubicGraph,
    FIXTURE_NAMES,
    construct_cubic,
    fixture,
    graph_to_landmarks,
    metric_basis,
)
from .search import (
    SearchOptions,
    SearchProgress,
    enumerate_two_basic,
    exists_resolving_of_size,
    metric_dimension,
)
from .formats import (
    emit_landmarks,
    emit_pls,
    emit_triples,
    parse_landmarks,
    parse_pls,
    parse_triples,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "ColoredCubicGraph",
    "CycleReport",
    "DisconnectedGraph",
    "FIXTURE_NAMES",
    "ForbiddenReport",
    "Footprint",
    "FootprintShape",
    "GhgParams",
    "HammingDimError",
    "Hyperedge",
    "InvalidBlock",
    "InvalidOrder",
    "InvalidPair",
    "InvalidVertex",
    "IsLandmark",
    "LandmarkGraph",
    "LandmarkSet",
    "NotApplicable",
    "NotFound",
    "ParseError",
    "SearchOptions",
    "SearchProgress",
    "SystemClass",
    "SystemKind",
    "Unreachable",
    "Unsupported",
    "Verdict",
    "Vertex",
    "basic_part",
    "block_sum_violations",
    "build_landmark_graph",
    "classify",
    "construct_cubic",
    "enumerate_two_basic",
    "emit_landmarks",
    "emit_pls",
    "emit_triples",
    "exists_resolving_of_size",
    "extend_triple_looped",
    "fixture",
    "footprint",
    "forbidden_scan",
    "graph_to_landmarks",
    "hamming_discrepancy",
    "hamming_graph",
    "is_resolving",
    "is_resolving_by_distance",
    "loop_profile",
    "lower_bound",
    "metric_basis",
    "metric_dimension",
    "parse_landmarks",
    "parse_pls",
    "parse_triples",
    "predict_resolving",
]
