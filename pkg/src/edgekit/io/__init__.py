"""Readers and writers for graph interchange formats.

DIMACS (9th-challenge shortest-path and 2nd-challenge edge formats), CSV
edge lists, graph6/sparse6 ASCII encodings, and DOT export.  Parse errors
always carry 1-based line/column positions.
"""

from .csv_edges import read_csv, write_csv
from .dimacs import (
    read_dimacs_color,
    read_dimacs_sp,
    write_dimacs_color,
    write_dimacs_sp,
)
from .dot import write_dot
from .graph6 import (
    graph6_decode,
    graph6_encode,
    sparse6_decode,
    sparse6_encode,
)

__all__ = [
    "read_csv",
    "write_csv",
    "read_dimacs_color",
    "read_dimacs_sp",
    "write_dimacs_color",
    "write_dimacs_sp",
    "write_dot",
    "graph6_decode",
    "graph6_encode",
    "sparse6_decode",
    "sparse6_encode",
]
