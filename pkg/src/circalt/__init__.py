"""Circular altitude, chromatic and circular chromatic numbers, iterated Mycielskians."""

from .graph_core import (
    Graph,
    chromatic_number,
    clique_number,
    complement,
    emit_graph6,
    parse_graph6,
)
from .mycielski import LabelledGraph, MycLabel, iterated_mycielskian, mycielskian

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "LabelledGraph",
    "MycLabel",
    "chromatic_number",
    "clique_number",
    "complement",
    "emit_graph6",
    "iterated_mycielskian",
    "mycielskian",
    "parse_graph6",
]
