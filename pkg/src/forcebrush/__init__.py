"""Exact zero forcing and brushing numbers for small graphs, plus executable
certificates for B(G) <= Z(L(G)) and Z(G) <= Z(L(G))."""

from .brushing import BrushWitness, Verdict, brushing_number, min_path_edge_cover, verify_brush_witness
from .families import generate_family
from .forcing import ForcingProcess, closure, is_zero_forcing, record_process, zero_forcing_number
from .formats import parse_edgelist, parse_graph6, write_graph6
from .graph import (
    CycleFound,
    Graph,
    Orientation,
    components,
    is_acyclic,
    line_graph,
    topological_order,
)
from .transfer import TransferResult, transfer

__version__ = "0.1.0"

__all__ = [
    "BrushWitness",
    "CycleFound",
    "ForcingProcess",
    "Graph",
    "Orientation",
    "TransferResult",
    "Verdict",
    "brushing_number",
    "closure",
    "components",
    "generate_family",
    "is_acyclic",
    "is_zero_forcing",
    "line_graph",
    "min_path_edge_cover",
    "parse_edgelist",
    "parse_graph6",
    "record_process",
    "topological_order",
    "transfer",
    "verify_brush_witness",
    "write_graph6",
    "zero_forcing_number",
]
