"""Exact domination and accurate domination numbers of small graphs.

Library layers: ``graph`` and ``io`` (representation and formats), ``solver``
(exact gamma and gamma_a), ``corona`` (corona-type constructions), ``trees``
(tree characterisation and witnesses), ``formulas`` (closed forms) and
``verify`` (theorem checks against exact search).
"""
from .graph import Graph, GraphError, VertexSet, build_standard, complete, complete_bipartite, cycle, path
from .io import ParseError, parse_edge_list, parse_graph, parse_graph6, write_dot, write_edge_list, write_graph6
from .solver import (
    CapExceededError,
    DominationResult,
    check_hitting_gamma_set,
    check_lemma_2_1,
    gamma,
    gamma_a,
    is_accurate_dominating,
    is_dominating,
    min_accurate_dominating_sets,
    min_dominating_sets,
)
from .corona import (
    GraphFamily,
    NeighborhoodPartition,
    corona_k1,
    f_corona,
    load_construction_spec,
    natural_iso_check,
    p_corona,
    s2_subdivision,
)
from .trees import find_witness_partition, is_corona_graph, support_respecting_gamma_set, tree_gamma_a_equals_gamma
from .formulas import Prediction, f_corona_predict, gamma_a_closed, gamma_closed, p_corona_predict, s2_predict
from .verify import RunConfig, VerificationReport, check_disconnected_rule, run_check

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "build_standard",
    "complete",
    "complete_bipartite",
    "cycle",
    "path",
    "ParseError",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "write_dot",
    "write_edge_list",
    "write_graph6",
    "CapExceededError",
    "DominationResult",
    "check_hitting_gamma_set",
    "check_lemma_2_1",
    "gamma",
    "gamma_a",
    "is_accurate_dominating",
    "is_dominating",
    "min_accurate_dominating_sets",
    "min_dominating_sets",
    "GraphFamily",
    "NeighborhoodPartition",
    "corona_k1",
    "f_corona",
    "load_construction_spec",
    "natural_iso_check",
    "p_corona",
    "s2_subdivision",
    "find_witness_partition",
    "is_corona_graph",
    "support_respecting_gamma_set",
    "tree_gamma_a_equals_gamma",
    "Prediction",
    "f_corona_predict",
    "gamma_a_closed",
    "gamma_closed",
    "p_corona_predict",
    "s2_predict",
    "RunConfig",
    "VerificationReport",
    "check_disconnected_rule",
    "run_check",
]

__version__ = "0.1.0"
