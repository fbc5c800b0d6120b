"""Connected graphs and trees of maximal spectral radius for a given degree sequence."""

__version__ = "0.1.0"

from .bfd import BfdOrdering, construct_bfd_tree, find_bfd_ordering, is_bfd_ordering, spider
from .graph import (
    DegreeSequence,
    DisconnectedGraphError,
    Graph,
    canonical_form,
    degree_sequence,
    is_connected,
    is_connected_graphical,
    is_graphical,
    is_tree,
    is_tree_sequence,
)
from .io import decode_graph6, encode_graph6, parse_degree_sequence, read_graph, write_graph
from .majorization import chain, compare, monotonicity_check
from .oracle import enumerate_connected_graphs, enumerate_trees, extremal_report
from .spectral import PerronResult, perron
from .transforms import hill_climb, maximize, shift_edge, shifting_test, switch_edges, switching_test

__all__ = [
    "BfdOrdering",
    "DegreeSequence",
    "DisconnectedGraphError",
    "Graph",
    "PerronResult",
    "canonical_form",
    "chain",
    "compare",
    "construct_bfd_tree",
    "decode_graph6",
    "degree_sequence",
    "encode_graph6",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "extremal_report",
    "find_bfd_ordering",
    "hill_climb",
    "is_bfd_ordering",
    "is_connected",
    "is_connected_graphical",
    "is_graphical",
    "is_tree",
    "is_tree_sequence",
    "maximize",
    "monotonicity_check",
    "parse_degree_sequence",
    "perron",
    "read_graph",
    "shift_edge",
    "shifting_test",
    "spider",
    "switch_edges",
    "switching_test",
    "write_graph",
]
