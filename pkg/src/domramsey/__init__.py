"""Exact upper domination / irredundance parameters and small nonclassical Ramsey numbers."""
from .canon import canonical_form, is_isomorphic
from .graph import (EdgeColoring, Graph, complement, encode_graph6, induced, make_graph, parse_graph6,
                    vset)
from .invariants import (independence_number, is_independent, is_irredundant, is_minimal_dominating,
                         upper_domination_number, upper_irredundance_number)
from .search import (Certificate, ParamKind, RamseyVariant, certify_upper, compute_ramsey,
                     evaluate_coloring, find_avoidance, verify_certificate)
from .structure import contains_g1, find_biclique_minus_matching, find_induced, is_gamma_perfect

__all__ = [
    "Certificate", "EdgeColoring", "Graph", "ParamKind", "RamseyVariant", "canonical_form",
    "certify_upper", "complement", "compute_ramsey", "contains_g1", "encode_graph6",
    "evaluate_coloring", "find_avoidance", "find_biclique_minus_matching", "find_induced",
    "independence_number", "induced", "is_gamma_perfect", "is_independent", "is_irredundant",
    "is_isomorphic", "is_minimal_dominating", "make_graph", "parse_graph6",
    "upper_domination_number", "upper_irredundance_number", "verify_certificate", "vset",
]
