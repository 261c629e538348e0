"""General position polynomials of graphs: exact enumeration, closed forms
for named families, graph operations and unimodality checks."""

from .closed_forms import (
    broom_threshold,
    clique_polynomial,
    closed_form,
    icliques_polynomial,
    psi_join,
)
from .engine import (
    collinear_triples,
    gp_number,
    gp_polynomial,
    intersection_census,
    is_general_position,
    maximal_gp_sets,
    psi_inclusion_exclusion,
)
from .families import FamilySpec, build_family, parse_family, trees_equal_nonisomorphic_check
from .graph import (
    UNREACHABLE,
    Graph,
    GraphInputError,
    cartesian_product,
    corona,
    disjoint_union,
    distance_matrix,
    from_edge_list,
    join,
)
from .poly import Polynomial, binomial_power, is_log_concave, is_unimodal, multiply

__all__ = [
    "UNREACHABLE", "FamilySpec", "Graph", "GraphInputError", "Polynomial",
    "binomial_power", "broom_threshold", "build_family", "cartesian_product",
    "clique_polynomial", "closed_form", "collinear_triples", "corona",
    "disjoint_union", "distance_matrix", "from_edge_list", "gp_number",
    "gp_polynomial", "icliques_polynomial", "intersection_census",
    "is_general_position", "is_log_concave", "is_unimodal", "join",
    "maximal_gp_sets", "multiply", "parse_family", "psi_inclusion_exclusion",
    "psi_join", "trees_equal_nonisomorphic_check",
]
