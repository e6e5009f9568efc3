"""
Parsers for roots, placements, forms and xi values given on the command line.
"""

import json
import logging
from fractions import Fraction
from typing import Any, Mapping, Sequence

from rook_orbits.andre import MatrixForm
from rook_orbits.coadjoint import LinearForm, XiMap
from rook_orbits.exact import parse_rational
from rook_orbits.rootsys import Root, RookPlacement, RootSystem

logger = logging.getLogger(__name__)


def parse_root(text: str, rank: int) -> Root:
    """
    Parse a root written over the simple roots, e.g. ``"1,2,3,2"``.

    Raises:
        ValueError: If the text is malformed or has the wrong length
    """
    root = Root.parse(text)
    if root.rank != rank:
        raise ValueError(f"Root {text!r} has {root.rank} coordinates, expected {rank}")
    return root


def parse_placement(text: str, system: RootSystem) -> RookPlacement:
    """
    Parse ``"r1;r2;..."`` into a rook placement of ``system``.

    An empty string is the empty placement.

    Raises:
        ValueError: If a root is not a positive root of the system or the
            roots do not form a rook placement
    """
    parts = [part for part in (piece.strip() for piece in text.split(';')) if part]
    roots = []
    for part in parts:
        root = parse_root(part, system.rank)
        if not system.is_positive_root(root):
            raise ValueError(f"{root} is not a positive root of {system.kind}")
        roots.append(root)
    placement = RookPlacement(tuple(roots))
    if not system.is_rook_placement(placement):
        raise ValueError(f"{placement} is not a rook placement of {system.kind}")
    logger.debug(f"Parsed placement {placement}")
    return placement


def _load_json(value: str | Mapping | Sequence) -> Any:
    if isinstance(value, str):
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Not valid JSON: {exc}") from exc
    return value


def parse_linear_form(value: str | Mapping[str, Any], system: RootSystem) -> LinearForm:
    """
    Parse ``{"coeffs": {"<root>": "p/q", ...}}`` into a linear form.

    A bare mapping of roots to values is accepted as well.

    Raises:
        ValueError: On malformed JSON, a root outside the positive roots or
            a non-rational value
    """
    data = _load_json(value)
    if not isinstance(data, Mapping):
        raise ValueError("A linear form must be a JSON object")
    coeffs = data.get('coeffs', data)
    if not isinstance(coeffs, Mapping):
        raise ValueError("'coeffs' must be a JSON object")

    parsed: dict[Root, Fraction] = {}
    for key, raw in coeffs.items():
        root = parse_root(str(key), system.rank)
        if not system.is_positive_root(root):
            raise ValueError(f"{root} is not a positive root of {system.kind}")
        parsed[root] = parse_rational(raw)
    return LinearForm(parsed)


def parse_matrix_form(value: str | Sequence[Sequence[Any]]) -> MatrixForm:
    """
    Parse a row-major array of ``"p/q"`` entries into a matrix form.

    Raises:
        ValueError: If the array is not square and strictly lower triangular
    """
    data = _load_json(value)
    if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
        raise ValueError("A matrix form must be a JSON array of rows")
    return MatrixForm(tuple(tuple(parse_rational(entry) for entry in row) for row in data))


def parse_xi(text: str, placement: RookPlacement) -> XiMap:
    """
    Parse a comma list of nonzero rationals, one per root of the placement.

    Raises:
        ValueError: On a count mismatch or a zero value
    """
    parts = [part.strip() for part in text.split(',') if part.strip()]
    if len(parts) != len(placement):
        raise ValueError(
            f"Got {len(parts)} xi values for a placement of {len(placement)} roots"
        )
    xi = {root: parse_rational(part) for root, part in zip(placement, parts)}
    for root, value in xi.items():
        if not value:
            raise ValueError(f"xi({root}) must be nonzero")
    return xi
