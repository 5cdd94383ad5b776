"""Exact burning numbers, burning-number bounds, and resumable tree campaigns."""

__version__ = "0.1.0"

from .graph import Graph, closed_neighborhood, distances_from, eccentricity_radius, graph_stats, strip_leaves
from .formats import parse_graph
from .exact import (
    BurningSchedule,
    ExactResult,
    burning_number_bruteforce,
    burning_number_exact,
    is_well_burnable,
    spanning_tree_oracle,
    verify_schedule,
)

__all__ = [
    "Graph",
    "parse_graph",
    "distances_from",
    "eccentricity_radius",
    "closed_neighborhood",
    "graph_stats",
    "strip_leaves",
    "BurningSchedule",
    "ExactResult",
    "verify_schedule",
    "burning_number_exact",
    "burning_number_bruteforce",
    "is_well_burnable",
    "spanning_tree_oracle",
]
