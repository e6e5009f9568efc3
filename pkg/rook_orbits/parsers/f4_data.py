"""
Loader for the versioned F4 data file.

The file records printed values only: the maximal rook placements D_1..D_24,
the exceptional placements D_25..D_32 with the roots handled by the local
sum test, the 24 rows of the certificate table, the separating-root triples
and the values shown for the row-17 worked example. Nothing in it is
computed.
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from rook_orbits.constants import (
    DATA_SCHEMA_VERSION,
    EXPECTED_EXCEPTIONAL_PLACEMENTS,
    EXPECTED_MAXIMAL_PLACEMENTS,
    EXPECTED_PROP42_TRIPLES,
    EXPECTED_TABLE_ROWS,
)
from rook_orbits.exact import parse_rational
from rook_orbits.exceptions import DataFileError
from rook_orbits.rootsys import Root, RookPlacement, RootSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TableRow:
    """
    One row of the certificate table.

    Attributes:
        index: Row number 1..24
        placement: The roots beta_1..beta_m in printed order
        simple_order: Printed order on the simple roots (1-based indices,
            not necessarily a permutation)
        i_tuple: Printed row-index tuple (i_1, ..., i_m)
    """
    index: int
    placement: RookPlacement
    simple_order: tuple[int, ...]
    i_tuple: tuple[int, ...]

    @property
    def order_is_permutation(self) -> bool:
        return sorted(self.simple_order) == list(range(1, len(self.simple_order) + 1))


@dataclass(frozen=True)
class Prop42Claim:
    """A printed (D_i, beta_0, alpha_0) triple, all 1-based indices."""
    placement_index: int
    beta0_index: int
    alpha0_index: int


@dataclass(frozen=True)
class ExceptionalPlacement:
    """
    One of D_25..D_32.

    Attributes:
        index: 25..32
        placement: Roots in printed order
        lemma41_roots: 1-based positions of the roots handled by the local sum test
    """
    index: int
    placement: RookPlacement
    lemma41_roots: tuple[int, ...]


@dataclass(frozen=True)
class PrintedValue:
    """A minor printed in the worked example, with 1-based row and column sets."""
    name: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    printed: Fraction


@dataclass
class F4Data:
    """
    Everything read from the data file.

    Attributes:
        source: Path the data was loaded from
        maximal: D_1..D_24 keyed by index
        exceptional: D_25..D_32
        table: The 24 table rows
        prop42: The printed separating-root triples
        multi_maximal: Indices of the D_i printed as having a second maximal root
        worked_row: Table row of the worked example
        worked_values: Its printed intermediate values
    """
    source: Path
    maximal: dict[int, RookPlacement]
    exceptional: list[ExceptionalPlacement]
    table: list[TableRow]
    prop42: list[Prop42Claim]
    multi_maximal: tuple[int, ...]
    worked_row: int
    worked_values: list[PrintedValue] = field(default_factory=list)

    def placement(self, index: int) -> RookPlacement:
        """D_index for 1 <= index <= 32."""
        if index in self.maximal:
            return self.maximal[index]
        for entry in self.exceptional:
            if entry.index == index:
                return entry.placement
        raise KeyError(f"No placement D_{index} in {self.source}")

    def row(self, index: int) -> TableRow:
        for row in self.table:
            if row.index == index:
                return row
        raise KeyError(f"No table row {index} in {self.source}")


def _roots(raw: Any, system: RootSystem, where: str) -> RookPlacement:
    if not isinstance(raw, list) or not raw:
        raise DataFileError(f"{where}: 'roots' must be a non-empty list")
    roots = []
    for text in raw:
        try:
            root = Root.parse(str(text))
        except ValueError as exc:
            raise DataFileError(f"{where}: {exc}") from exc
        if root.rank != system.rank or not system.is_positive_root(root):
            raise DataFileError(f"{where}: {text} is not a positive root of {system.kind}")
        roots.append(root)
    try:
        return RookPlacement(tuple(roots))
    except ValueError as exc:
        raise DataFileError(f"{where}: {exc}") from exc


def _indices(raw: Any, upper: int, where: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(raw, list) or any(not isinstance(value, int) for value in raw):
        raise DataFileError(f"{where}: expected a list of integers")
    if length is not None and len(raw) != length:
        raise DataFileError(f"{where}: expected {length} entries, got {len(raw)}")
    if any(not 1 <= value <= upper for value in raw):
        raise DataFileError(f"{where}: entries must lie in 1..{upper}")
    return tuple(raw)


def _expect_count(items: list, expected: int, what: str) -> None:
    if len(items) != expected:
        raise DataFileError(f"Expected {expected} {what}, found {len(items)}")


def _parse(raw: dict, system: RootSystem, source: Path) -> F4Data:
    schema = raw.get('schema')
    if schema != DATA_SCHEMA_VERSION:
        raise DataFileError(f"Unsupported data schema {schema!r}, expected {DATA_SCHEMA_VERSION}")
    if raw.get('system', system.kind) != system.kind:
        raise DataFileError(f"Data file is for {raw.get('system')}, not {system.kind}")

    rank = system.rank
    maximal_raw = raw['maximal_placements']
    _expect_count(maximal_raw, EXPECTED_MAXIMAL_PLACEMENTS, 'maximal placements')
    maximal = {
        entry['index']: _roots(entry['roots'], system, f"D_{entry['index']}")
        for entry in maximal_raw
    }
    if sorted(maximal) != list(range(1, EXPECTED_MAXIMAL_PLACEMENTS + 1)):
        raise DataFileError("Maximal placements must be numbered 1..24 without gaps")

    exceptional_raw = raw['exceptional_placements']
    _expect_count(exceptional_raw, EXPECTED_EXCEPTIONAL_PLACEMENTS, 'exceptional placements')
    exceptional = []
    for entry in exceptional_raw:
        where = f"D_{entry['index']}"
        placement = _roots(entry['roots'], system, where)
        exceptional.append(ExceptionalPlacement(
            index=entry['index'],
            placement=placement,
            lemma41_roots=_indices(entry['lemma41_roots'], len(placement), where),
        ))

    table_raw = raw['table']
    _expect_count(table_raw, EXPECTED_TABLE_ROWS, 'table rows')
    table = []
    for entry in table_raw:
        where = f"table row {entry['row']}"
        placement = _roots(entry['roots'], system, where)
        table.append(TableRow(
            index=entry['row'],
            placement=placement,
            simple_order=_indices(entry['simple_order'], rank, where, length=rank),
            i_tuple=_indices(entry['i_tuple'], rank, where, length=len(placement)),
        ))

    prop42_raw = raw['prop42']
    _expect_count(prop42_raw, EXPECTED_PROP42_TRIPLES, 'separating-root triples')
    prop42 = []
    for entry in prop42_raw:
        claim = Prop42Claim(entry['placement'], entry['beta0'], entry['alpha0'])
        if claim.placement_index not in maximal:
            raise DataFileError(f"Separating-root triple names unknown D_{claim.placement_index}")
        size = len(maximal[claim.placement_index])
        if not 1 <= claim.beta0_index <= size or not 1 <= claim.alpha0_index <= rank:
            raise DataFileError(f"Separating-root triple out of range: {claim}")
        prop42.append(claim)

    multi_maximal = _indices(raw['multi_maximal'], EXPECTED_MAXIMAL_PLACEMENTS, 'multi_maximal')

    worked = raw['worked_example']
    worked_values = [
        PrintedValue(
            name=value['name'],
            rows=_indices(value['rows'], rank, value['name']),
            cols=_indices(value['cols'], rank, value['name']),
            printed=parse_rational(value['printed']),
        )
        for value in worked['values']
    ]

    return F4Data(
        source=source,
        maximal=maximal,
        exceptional=exceptional,
        table=table,
        prop42=prop42,
        multi_maximal=multi_maximal,
        worked_row=worked['row'],
        worked_values=worked_values,
    )


def load_f4_data(path: str | Path, system: RootSystem) -> F4Data:
    """
    Load and validate the F4 data file.

    Args:
        path: Location of the JSON data file
        system: The F4 root system the roots are checked against

    Returns:
        The parsed data

    Raises:
        DataFileError: If the file is missing, unreadable, of another schema
            version or fails validation
    """
    path = Path(path)
    logger.debug(f"Loading data file: {path}")
    try:
        raw = json.loads(path.read_text(encoding='utf-8'))
    except FileNotFoundError as exc:
        raise DataFileError(f"Data file not found: {path}") from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise DataFileError(f"Cannot read data file {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise DataFileError(f"Data file {path} must hold a JSON object")

    try:
        data = _parse(raw, system, path)
    except (KeyError, TypeError, ValueError) as exc:
        raise DataFileError(f"Invalid data file {path}: {exc!r}") from exc

    logger.debug(
        f"Loaded {len(data.maximal)} maximal placements, {len(data.table)} table rows, "
        f"{len(data.prop42)} separating-root triples"
    )
    return data
