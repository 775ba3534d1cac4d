"""Exact counts of edge colourings that avoid a coloured clique pattern."""

from .counting import count, count_colorings, count_extensions, count_multipartite
from .errors import BudgetExceeded, InvariantViolation, LemmaInapplicable
from .graphs import SimpleGraph, complete_graph, complete_multipartite, parse_graph, turan_graph
from .patterns import Pattern, canonicalize, catalog, matches

__all__ = [
    "BudgetExceeded",
    "InvariantViolation",
    "LemmaInapplicable",
    "Pattern",
    "SimpleGraph",
    "canonicalize",
    "catalog",
    "complete_graph",
    "complete_multipartite",
    "count",
    "count_colorings",
    "count_extensions",
    "count_multipartite",
    "matches",
    "parse_graph",
    "turan_graph",
]
