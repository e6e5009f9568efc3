"""
Tests for Chevalley structure tables.
"""

import random
from fractions import Fraction

import pytest

from rook_orbits.chevalley import AlgebraElement, BasisElement, build_chevalley
from rook_orbits.exceptions import ConsistencyError
from rook_orbits.rootsys import Root, build_root_system

ALPHA, BETA = Root((1, 0)), Root((0, 1))
TOP = Root((3, 2))


@pytest.fixture
def g2_table():
    return build_chevalley(build_root_system('G2'))


class TestStructureConstants:
    """Tests for the constants N_{a,b}."""

    @pytest.mark.parametrize("kind", ['A1', 'A3', 'G2'])
    def test_tables_validate(self, kind):
        """Test that freshly built tables satisfy every axiom."""
        build_chevalley(build_root_system(kind)).validate()

    def test_f4_table_validates(self):
        """Test the F4 table with sampled Jacobi triples."""
        table = build_chevalley(build_root_system('F4'))
        table.validate(seed=3)
        assert table.is_chevalley

    def test_extraspecial_signs(self, g2_table):
        """Test the positive signs on extraspecial pairs."""
        assert g2_table.n(ALPHA, BETA) == 1
        assert g2_table.n(ALPHA, Root((1, 1))) == 2
        assert g2_table.n(ALPHA, Root((2, 1))) == 3

    def test_antisymmetry(self, g2_table):
        """Test N_{a,b} = -N_{b,a} for all roots."""
        roots = g2_table.roots()
        for a in roots:
            for b in roots:
                assert g2_table.n(a, b) == -g2_table.n(b, a)

    def test_zero_off_root_sums(self, g2_table):
        """Test that N vanishes when a+b is not a root."""
        assert g2_table.n(ALPHA, ALPHA) == 0
        assert g2_table.n(BETA, Root((1, 1))) == 0

    def test_broken_table_is_rejected(self, g2_table):
        """Test that validate catches a flipped sign."""
        constants = dict(g2_table.n_consts)
        constants[(ALPHA, BETA)] = -constants[(ALPHA, BETA)]
        broken = type(g2_table)(
            system=g2_table.system,
            n_consts=constants,
            cartan_pairings=g2_table.cartan_pairings,
            coroot_coords=g2_table.coroot_coords,
        )
        with pytest.raises(ConsistencyError):
            broken.validate()


class TestBrackets:
    """Tests for brackets of basis elements and general elements."""

    def test_root_vector_pair_gives_coroot(self, g2_table):
        """Test [e_a, e_-a] = h_a."""
        assert g2_table.bracket_basis(BasisElement.e(ALPHA), BasisElement.e(-ALPHA)) == {
            BasisElement.h(1): 1,
        }

    def test_cartan_action(self, g2_table):
        """Test [h_i, e_g] = <g, alpha_i^vee> e_g."""
        assert g2_table.bracket_basis(BasisElement.h(1), BasisElement.e(ALPHA)) == {
            BasisElement.e(ALPHA): 2,
        }
        assert g2_table.bracket_basis(BasisElement.e(BETA), BasisElement.h(1)) == {
            BasisElement.e(BETA): 3,
        }

    def test_bracket_is_bilinear(self, g2_table):
        """Test the bracket of combinations."""
        x = AlgebraElement.from_roots({ALPHA: 2})
        y = AlgebraElement.from_roots({BETA: Fraction(1, 3)})
        assert g2_table.bracket(x, y) == AlgebraElement.from_roots({Root((1, 1)): Fraction(2, 3)})

    def test_zero_coefficients_are_dropped(self):
        """Test that an element never stores zeros."""
        x = AlgebraElement.from_roots({ALPHA: 0, BETA: 1})
        assert len(x) == 1
        assert (x - x).is_zero

    def test_nilpotency_of_highest_root_vector(self, g2_table):
        """Test that ad e_top is nilpotent of degree 3 on g."""
        x = AlgebraElement.from_roots({TOP: 1})
        assert g2_table.nilpotency_degree(x) == 3

    def test_nilpotency_needs_nilradical(self, g2_table):
        """Test that negative root vectors are rejected."""
        with pytest.raises(ValueError):
            g2_table.nilpotency_degree(AlgebraElement.from_roots({-ALPHA: 1}))


class TestAdMatrix:
    """Tests for the basis order and ad-matrices."""

    def test_basis_order(self, g2_table):
        """Test positive vectors by decreasing root, then Cartan, then negatives."""
        order = g2_table.basis_order()
        assert len(order) == 14
        assert order[0] == BasisElement.e(TOP)
        assert order[5] == BasisElement.e(ALPHA)
        assert order[6:8] == [BasisElement.h(1), BasisElement.h(2)]
        assert order[8] == BasisElement.e(-ALPHA)
        assert order[-1] == BasisElement.e(-TOP)

    def test_cartan_last(self, g2_table):
        """Test that cartan_last moves h_i to the end of the Cartan block."""
        order = g2_table.basis_order(cartan_last=1)
        assert order[6:8] == [BasisElement.h(2), BasisElement.h(1)]
        with pytest.raises(ValueError):
            g2_table.basis_order(cartan_last=3)

    def test_ad_matrix_entries(self, g2_table):
        """Test that column j holds [x, basis[j]]."""
        order = g2_table.basis_order()
        index = {element: i for i, element in enumerate(order)}
        matrix = g2_table.ad_matrix(AlgebraElement.from_roots({ALPHA: 1}))
        assert matrix[index[BasisElement.e(Root((1, 1)))]][index[BasisElement.e(BETA)]] == 1
        assert matrix[index[BasisElement.e(ALPHA)]][index[BasisElement.h(1)]] == -2

    def test_ad_of_zero(self, g2_table):
        """Test that ad 0 is the zero matrix."""
        matrix = g2_table.ad_matrix(AlgebraElement())
        assert all(value == 0 for row in matrix for value in row)


class TestRescaling:
    """Tests for rescaled tables."""

    def test_rescaled_constants(self, g2_table):
        """Test N'_{a,b} = N_{a,b} t_a t_b / t_{a+b}."""
        scaled = g2_table.rescaled({ALPHA: 2, BETA: 3})
        assert scaled.n(ALPHA, BETA) == Fraction(6)
        assert not scaled.is_chevalley

    def test_rescaled_table_is_a_lie_algebra(self, g2_table):
        """Test Jacobi on a random rescaling (magnitudes may change)."""
        scaled = g2_table.random_rescaling(random.Random(5))
        scaled.validate(check_magnitudes=False)

    def test_zero_scale_rejected(self, g2_table):
        """Test that a zero scale raises ValueError."""
        with pytest.raises(ValueError, match="nonzero"):
            g2_table.rescaled({ALPHA: 0})
