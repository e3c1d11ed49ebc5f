"""Induced Ramsey numbers of small graphs: arrowing decisions, exhaustive
order sweeps with certificates, and checks of published values."""
from .arrow import Colour, EdgeColoring, decide_arrowing, decide_weak_arrowing, verify_coloring
from .expr import parse_graph
from .graphs import Graph
from .ramsey import ir_exact, ir_exact_multicopy, ir_lower, ir_upper_by_construction

__version__ = "0.1.0"

__all__ = [
    "Colour",
    "EdgeColoring",
    "Graph",
    "decide_arrowing",
    "decide_weak_arrowing",
    "ir_exact",
    "ir_exact_multicopy",
    "ir_lower",
    "ir_upper_by_construction",
    "parse_graph",
    "verify_coloring",
]
