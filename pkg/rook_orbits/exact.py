"""
Exact rational scalars and small matrix routines.

Scalars are ``fractions.Fraction`` throughout the package. Matrix work that
goes beyond a 2x2 determinant is delegated to sympy, which keeps every
intermediate value exact (fraction-free Bareiss elimination for
determinants).
"""

import random
from fractions import Fraction
from typing import Sequence

import sympy

from rook_orbits.constants import SAMPLE_DENOMINATORS, SAMPLE_NUMERATOR_BOUND

Rational = Fraction
Matrix = Sequence[Sequence[Fraction]]


def format_rational(value: Fraction | int) -> str:
    """Serialize a rational as ``"p/q"`` with ``q > 0``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str | int | Fraction) -> Fraction:
    """
    Parse ``"p/q"`` or an integer into a Fraction.

    Raises:
        ValueError: If the text is not an exact rational
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    cleaned = str(text).strip()
    if not cleaned or '.' in cleaned or 'e' in cleaned.lower():
        raise ValueError(f"Not an exact rational: {text!r}")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Not an exact rational: {text!r}") from exc


def to_sympy(value: Fraction | int) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: object) -> Fraction:
    """Convert a sympy rational number to a Fraction."""
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def to_sympy_matrix(rows: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(entry) for entry in row] for row in rows])


def _check_square(rows: Matrix) -> int:
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise ValueError(f"Matrix is not square: {size} rows, row of length {len(row)}")
    return size


def determinant(rows: Matrix) -> Fraction:
    """
    Exact determinant of a square rational matrix.

    The empty matrix has determinant 1.

    Args:
        rows: Row-major square matrix of rationals

    Returns:
        The determinant as a Fraction

    Raises:
        ValueError: If the matrix is not square
    """
    size = _check_square(rows)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return Fraction(rows[0][0])
    if size == 2:
        return Fraction(rows[0][0]) * rows[1][1] - Fraction(rows[0][1]) * rows[1][0]
    return from_sympy(to_sympy_matrix(rows).det(method='bareiss'))


def matrix_rank(rows: Matrix) -> int:
    """Rank of a rational matrix (0 for an empty matrix)."""
    if not rows or not rows[0]:
        return 0
    return int(to_sympy_matrix(rows).rank())


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    """
    Draw a small random rational p/q.

    Args:
        rng: Seeded generator
        nonzero: Redraw until the value is nonzero

    Returns:
        A Fraction with |p| <= SAMPLE_NUMERATOR_BOUND and q in SAMPLE_DENOMINATORS
    """
    while True:
        numerator = rng.randint(-SAMPLE_NUMERATOR_BOUND, SAMPLE_NUMERATOR_BOUND)
        denominator = rng.choice(SAMPLE_DENOMINATORS)
        if numerator or not nonzero:
            return Fraction(numerator, denominator)


def format_matrix(rows: Matrix) -> list[list[str]]:
    """Matrix as nested lists of ``"p/q"`` strings."""
    return [[format_rational(entry) for entry in row] for row in rows]
