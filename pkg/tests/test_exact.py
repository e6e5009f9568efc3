"""
Tests for exact rational helpers.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rook_orbits.constants import SAMPLE_DENOMINATORS, SAMPLE_NUMERATOR_BOUND
from rook_orbits.exact import (
    determinant,
    format_matrix,
    format_rational,
    matrix_rank,
    parse_rational,
    random_rational,
)


class TestFormatRational:
    """Tests for the "p/q" serialization."""

    def test_reduces_fraction(self):
        """Test that values are written in lowest terms."""
        assert format_rational(Fraction(3, 6)) == "1/2"

    def test_integer_keeps_denominator(self):
        """Test that integers are written with denominator 1."""
        assert format_rational(2) == "2/1"
        assert format_rational(0) == "0/1"

    def test_sign_on_numerator(self):
        """Test that the denominator is always positive."""
        assert format_rational(Fraction(1, -2)) == "-1/2"

    def test_format_matrix(self):
        """Test nested formatting."""
        assert format_matrix([[Fraction(1), Fraction(-1, 3)]]) == [["1/1", "-1/3"]]


class TestParseRational:
    """Tests for parse_rational."""

    def test_parse_fraction_text(self):
        """Test parsing p/q."""
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational(" -2/6 ") == Fraction(-1, 3)

    def test_parse_integer_text(self):
        """Test parsing a bare integer."""
        assert parse_rational("-2") == Fraction(-2)

    def test_passes_numbers_through(self):
        """Test that ints and Fractions are accepted as they are."""
        assert parse_rational(5) == Fraction(5)
        assert parse_rational(Fraction(2, 3)) == Fraction(2, 3)

    @pytest.mark.parametrize("text", ["0.5", "1e3", "", "1/0", "abc"])
    def test_rejects_inexact_or_malformed(self, text):
        """Test that decimals, exponents and garbage are rejected."""
        with pytest.raises(ValueError):
            parse_rational(text)


class TestDeterminant:
    """Tests for determinant and matrix_rank."""

    def test_empty_matrix(self):
        """Test that the empty determinant is 1."""
        assert determinant([]) == 1

    def test_small_matrices(self):
        """Test the closed forms for sizes 1 and 2."""
        assert determinant([[Fraction(5, 2)]]) == Fraction(5, 2)
        assert determinant([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2

    def test_three_by_three(self):
        """Test a 3x3 determinant with fractional entries."""
        rows = [
            [Fraction(1, 2), Fraction(0), Fraction(1)],
            [Fraction(2), Fraction(1), Fraction(0)],
            [Fraction(0), Fraction(3), Fraction(1)],
        ]
        # 1/2*(1 - 0) - 0 + 1*(6 - 0)
        assert determinant(rows) == Fraction(13, 2)

    def test_result_is_fraction(self):
        """Test that the sympy path returns a Fraction."""
        rows = [[Fraction(i == j) for j in range(4)] for i in range(4)]
        result = determinant(rows)
        assert isinstance(result, Fraction)
        assert result == 1

    def test_non_square_rejected(self):
        """Test that a ragged matrix raises ValueError."""
        with pytest.raises(ValueError, match="not square"):
            determinant([[Fraction(1), Fraction(2)]])

    def test_rank(self):
        """Test matrix rank, including the empty matrix."""
        assert matrix_rank([]) == 0
        assert matrix_rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1

    @given(
        st.lists(
            st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=5), min_size=3, max_size=3),
            min_size=3, max_size=3,
        ),
        st.fractions(min_value=-20, max_value=20, max_denominator=5).filter(lambda v: v != 0),
    )
    def test_scaling_a_row_scales_determinant(self, rows, factor):
        """Test multilinearity in the first row."""
        scaled = [[factor * value for value in rows[0]]] + rows[1:]
        assert determinant(scaled) == factor * determinant(rows)


class TestRandomRational:
    """Tests for random_rational."""

    def test_deterministic_for_seed(self):
        """Test that equal seeds give equal draws."""
        first = [random_rational(random.Random(3)) for _ in range(5)]
        second = [random_rational(random.Random(3)) for _ in range(5)]
        assert first == second

    def test_nonzero_and_bounded(self):
        """Test the nonzero flag and the sampling bounds."""
        rng = random.Random(11)
        for _ in range(200):
            value = random_rational(rng, nonzero=True)
            assert value != 0
            assert abs(value) <= SAMPLE_NUMERATOR_BOUND
            assert value.denominator in SAMPLE_DENOMINATORS
