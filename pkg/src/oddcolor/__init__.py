"""Odd graph coloring toolkit.

A proper coloring is odd when every vertex with neighbors sees some color
an odd number of times among them.  The package provides the verifier and
exact solver for the odd chromatic number, the contraction algorithm that
odd-colors any graph from a d-degenerate minor-closed family with 2d+1
colors, and a constructive engine that odd-colors any 1-plane graph with
23 colors by reducible configurations, cross-checked by an executable
discharging audit.
"""

from .coloring import (
    Coloring,
    PartialColoringError,
    forbidden_set,
    greedy_extend,
    is_odd_coloring,
    odd_colors,
    tau_o,
)
from .embedding import (
    Face,
    InvalidEmbeddingError,
    OnePlaneGraph,
    Violation,
    underlying_graph,
    validate,
)
from .exact import INCONCLUSIVE, Inconclusive, SearchConfig, chi_o, exists_odd_k_coloring
from .graphs import Graph, NotAnEdgeError, NotAVertexError, bridges, degeneracy_order
from .minor_closed import (
    NotDegenerateError,
    has_k4_minor,
    odd_color_k4_minor_free,
    odd_color_minor_closed,
)
from .reduction import (
    NoConfigFoundError,
    PatternNotFoundError,
    ReductionTrace,
    Thresholds,
    find_reducible,
    odd_color_1planar,
    uncross_six_four,
    uncross_two_face,
)

__all__ = [
    "Coloring",
    "Face",
    "Graph",
    "INCONCLUSIVE",
    "Inconclusive",
    "InvalidEmbeddingError",
    "NoConfigFoundError",
    "NotAnEdgeError",
    "NotAVertexError",
    "NotDegenerateError",
    "OnePlaneGraph",
    "PartialColoringError",
    "PatternNotFoundError",
    "ReductionTrace",
    "SearchConfig",
    "Thresholds",
    "Violation",
    "bridges",
    "chi_o",
    "degeneracy_order",
    "exists_odd_k_coloring",
    "find_reducible",
    "forbidden_set",
    "greedy_extend",
    "has_k4_minor",
    "is_odd_coloring",
    "odd_color_1planar",
    "odd_color_k4_minor_free",
    "odd_color_minor_closed",
    "odd_colors",
    "tau_o",
    "underlying_graph",
    "uncross_six_four",
    "uncross_two_face",
    "validate",
]

__version__ = "0.1.0"
