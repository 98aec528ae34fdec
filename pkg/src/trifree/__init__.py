"""Dense minors or large independent sets in triangle-free graphs.

Every result carries a certificate that can be rechecked from scratch:
minor models with connected, disjoint branch sets; independent sets;
packings of short internally disjoint paths.
"""

from .errors import GraphInputError, OracleBudgetError, ParameterError, TrifreeError, ValidationError
from .generators import GenSpec, generate
from .graph import (
    Graph,
    average_degree,
    closed_neighborhood,
    induced_subgraph,
    is_triangle_free,
    neighborhood_ball,
    parse_edge_list,
    format_edge_list,
    read_edge_list,
    write_edge_list,
)
from .indep_engine import (
    IndependentSetCertificate,
    bipartite_min_vertex_cover,
    g3k_certificate,
    peel_low_degree,
    recursive_independent_set,
    sparse_neighborhood_set,
    strip_high_degree,
    turan_greedy,
)
from .minor_engine import (
    MinorCertificate,
    MinorModel,
    Params,
    chernoff_tail_bound,
    dense_minor_via_balls,
    derive_params,
    extract_dense_minor,
    randomized_contraction,
    sample_anchors,
    validate_minor_model,
    viable_edge_graph,
)
from .pipeline import DichotomyConfig, DichotomyResult, dichotomy, parse_report, report, thomason_threshold
from .short_paths import PathPacking, PowerGraph, max_disjoint_short_paths, short_path_power

__version__ = "0.1.0"

__all__ = [
    "GraphInputError",
    "OracleBudgetError",
    "ParameterError",
    "TrifreeError",
    "ValidationError",
    "GenSpec",
    "generate",
    "Graph",
    "average_degree",
    "closed_neighborhood",
    "induced_subgraph",
    "is_triangle_free",
    "neighborhood_ball",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
    "IndependentSetCertificate",
    "bipartite_min_vertex_cover",
    "g3k_certificate",
    "peel_low_degree",
    "recursive_independent_set",
    "sparse_neighborhood_set",
    "strip_high_degree",
    "turan_greedy",
    "MinorCertificate",
    "MinorModel",
    "Params",
    "chernoff_tail_bound",
    "dense_minor_via_balls",
    "derive_params",
    "extract_dense_minor",
    "randomized_contraction",
    "sample_anchors",
    "validate_minor_model",
    "viable_edge_graph",
    "DichotomyConfig",
    "DichotomyResult",
    "dichotomy",
    "parse_report",
    "report",
    "thomason_threshold",
    "PathPacking",
    "PowerGraph",
    "max_disjoint_short_paths",
    "short_path_power",
]
