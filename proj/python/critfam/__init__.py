"""Vertex-critical graph family G(q,k) with exact coloring and induced-pattern checks."""

from ._core import (
    DEFAULT_NODE_BUDGET,
    Graph,
    ParseError,
    TooLarge,
    UnknownPattern,
    canonical_coloring,
    chromatic_number,
    complete_graph,
    criticality,
    cycle_graph,
    family,
    find_induced,
    find_isomorphism,
    freeness,
    is_k_colorable,
    partition_classes,
    path_graph,
    survey,
    verify_family,
)

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "Graph",
    "ParseError",
    "TooLarge",
    "UnknownPattern",
    "canonical_coloring",
    "chromatic_number",
    "complete_graph",
    "criticality",
    "cycle_graph",
    "family",
    "find_induced",
    "find_isomorphism",
    "freeness",
    "is_k_colorable",
    "partition_classes",
    "path_graph",
    "survey",
    "verify_family",
]
