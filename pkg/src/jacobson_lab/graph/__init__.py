"""Jacobson graphs and their closed-form invariants."""

from jacobson_lab.graph.jgraph import (
    EdgeCountFormula,
    JacobsonGraph,
    adjacent,
    build_graph,
    degree_closed_form,
    degree_corrected,
    degree_oracle,
    edge_count_closed_form,
    edge_count_corrected,
    edge_count_oracle,
    export,
    to_networkx,
    vertex_label,
)
from jacobson_lab.graph.lengths import NO_CYCLE, LengthValue, length_of

__all__ = [
    "EdgeCountFormula",
    "JacobsonGraph",
    "LengthValue",
    "NO_CYCLE",
    "length_of",
    "adjacent",
    "build_graph",
    "degree_closed_form",
    "degree_corrected",
    "degree_oracle",
    "edge_count_closed_form",
    "edge_count_corrected",
    "edge_count_oracle",
    "export",
    "to_networkx",
    "vertex_label",
]
