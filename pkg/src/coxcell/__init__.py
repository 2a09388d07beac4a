"""Cell complexes for virtual Artin groups built from a Coxeter graph."""

from .bundled import bundled_graph, resolve_graph
from .coxeter_core import (
    CoxeterGraph,
    CoxeterGroup,
    GroupElement,
    classify,
    length,
    min_coset_rep,
    min_double_coset_rep,
    multiply,
    parse_graph,
)

__version__ = "0.1.0"

__all__ = [
    "CoxeterGraph",
    "CoxeterGroup",
    "GroupElement",
    "bundled_graph",
    "classify",
    "length",
    "min_coset_rep",
    "min_double_coset_rep",
    "multiply",
    "parse_graph",
    "resolve_graph",
]
