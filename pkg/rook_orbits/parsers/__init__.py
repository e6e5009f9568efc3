"""
Parsers for command-line inputs and the F4 data file.
"""

from rook_orbits.parsers.forms import (
    parse_linear_form,
    parse_matrix_form,
    parse_placement,
    parse_root,
    parse_xi,
)
from rook_orbits.parsers.f4_data import (
    ExceptionalPlacement,
    F4Data,
    PrintedValue,
    Prop42Claim,
    TableRow,
    load_f4_data,
)

__all__ = [
    "parse_root",
    "parse_placement",
    "parse_linear_form",
    "parse_matrix_form",
    "parse_xi",
    "load_f4_data",
    "F4Data",
    "TableRow",
    "Prop42Claim",
    "ExceptionalPlacement",
    "PrintedValue",
]
