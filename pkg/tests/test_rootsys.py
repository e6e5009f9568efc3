"""
Tests for root systems and rook placements.
"""

import pytest

from rook_orbits.rootsys import (
    Root,
    RookPlacement,
    _is_decomposable,
    build_root_system,
    enumerate_rook_placements,
    maximal_rook_placements,
    parse_system_kind,
)


@pytest.fixture
def g2():
    return build_root_system('G2')


@pytest.fixture
def f4():
    return build_root_system('F4')


class TestParseSystemKind:
    """Tests for parse_system_kind."""

    @pytest.mark.parametrize("text,expected", [
        ('A3', ('A', 3)),
        ('a(3)', ('A', 3)),
        ('G2', ('G', 2)),
        ('f4', ('F', 4)),
    ])
    def test_accepted_kinds(self, text, expected):
        """Test the accepted spellings."""
        assert parse_system_kind(text) == expected

    @pytest.mark.parametrize("text", ['B3', 'G3', 'F2', 'A0', 'A13', 'E8', ''])
    def test_rejected_kinds(self, text):
        """Test that unsupported kinds raise ValueError."""
        with pytest.raises(ValueError):
            parse_system_kind(text)


class TestRoot:
    """Tests for the Root value type."""

    def test_parse_and_str(self):
        """Test the compact text form."""
        root = Root.parse("1,2,3,2")
        assert root.coeffs == (1, 2, 3, 2)
        assert str(root) == "1,2,3,2"

    def test_parse_rejects_garbage(self):
        """Test that non-integer coordinates are rejected."""
        with pytest.raises(ValueError):
            Root.parse("1,x")

    def test_arithmetic(self):
        """Test sums, differences and height."""
        a, b = Root((1, 0)), Root((0, 1))
        assert a + b == Root((1, 1))
        assert (a - b).coeffs == (1, -1)
        assert (a + b).height == 2
        assert (a - a).is_zero

    def test_dimension_mismatch(self):
        """Test that roots of different rank cannot be added."""
        with pytest.raises(ValueError, match="Dimension mismatch"):
            Root((1, 0)) + Root((1, 0, 0))

    def test_placement_rejects_repeats(self):
        """Test that a placement holds distinct roots."""
        with pytest.raises(ValueError, match="Repeated"):
            RookPlacement((Root((1, 0)), Root((1, 0))))


class TestPositiveRoots:
    """Tests for positive root generation and the canonical order."""

    @pytest.mark.parametrize("kind,count", [
        ('A1', 1), ('A2', 3), ('A3', 6), ('A5', 15), ('G2', 6), ('F4', 24),
    ])
    def test_root_counts(self, kind, count):
        """Test |Phi+| for each supported family."""
        assert len(build_root_system(kind).positive_roots) == count

    def test_g2_canonical_order(self, g2):
        """Test the canonical order of G2: by height, alpha before beta."""
        assert [root.coeffs for root in g2.positive_roots] == [
            (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2),
        ]

    def test_highest_roots(self, g2, f4):
        """Test that the last root is the highest root."""
        assert g2.highest_root == Root((3, 2))
        assert f4.highest_root == Root((2, 3, 4, 2))

    def test_g2_lengths(self, g2):
        """Test short and long roots of G2."""
        assert g2.norm(Root((1, 0))) == 1
        assert g2.norm(Root((0, 1))) == 3
        assert g2.norm(Root((3, 2))) == 3
        assert g2.norm(Root((2, 1))) == 1

    def test_f4_lengths(self, f4):
        """Test that alpha_1, alpha_2 are long and alpha_3, alpha_4 short."""
        assert [f4.norm(root) for root in f4.simple_roots] == [2, 2, 1, 1]

    def test_coroot_pairing(self, g2):
        """Test Cartan integers of G2."""
        assert g2.coroot_pairing(Root((0, 1)), 1) == -3
        assert g2.coroot_pairing(Root((1, 0)), 2) == -1
        assert g2.coroot_pairing(Root((1, 0)), 1) == 2

    def test_position_of_non_root(self, g2):
        """Test that position rejects vectors outside Phi+."""
        with pytest.raises(ValueError, match="not a positive root"):
            g2.position(Root((2, 2)))

    def test_inner_product_length_check(self, g2):
        """Test that vectors of the wrong length are rejected."""
        with pytest.raises(ValueError, match="Dimension mismatch"):
            g2.inner_product((1, 0, 0), (1, 0))


class TestSingularRoots:
    """Tests for S(beta), S(D) and R(D)."""

    def test_singular_set_of_highest_g2_root(self, g2):
        """Test S(3a+2b) = {b, a+b, 2a+b, 3a+b}."""
        assert g2.singular_set(Root((3, 2))) == {
            Root((0, 1)), Root((1, 1)), Root((2, 1)), Root((3, 1)),
        }

    def test_simple_root_has_empty_singular_set(self, g2):
        """Test that a simple root has no singular roots."""
        assert g2.singular_set(Root((1, 0))) == frozenset()

    def test_regular_is_complement(self, g2):
        """Test R(D) = Phi+ minus S(D)."""
        placement = [Root((3, 2))]
        assert g2.regular_roots(placement) == {Root((1, 0)), Root((3, 2))}

    def test_singular_set_requires_positive_root(self, g2):
        """Test that S(beta) needs a positive root."""
        with pytest.raises(ValueError):
            g2.singular_set(Root((-1, 0)))


class TestOrder:
    """Tests for the partial order on Phi+."""

    def test_leq_f4(self, f4):
        """Test 0110 <= 1120 and the converse."""
        low, high = Root((0, 1, 1, 0)), Root((1, 1, 2, 0))
        assert f4.leq(low, high)
        assert not f4.leq(high, low)
        assert not f4.less(low, low)
        assert f4.leq(low, low)

    def test_maximal_roots(self, f4):
        """Test the maximal members of a set."""
        roots = [Root((1, 1, 2, 0)), Root((0, 1, 1, 0)), Root((1, 0, 0, 0))]
        assert f4.maximal_roots(roots) == [Root((1, 1, 2, 0))]

    def test_sum_decompositions(self, f4):
        """Test decompositions of a non-root vector and of zero."""
        assert f4.sum_decompositions((1, 0, 1, 0)) == [(Root((1, 0, 0, 0)), Root((0, 0, 1, 0)))]
        assert f4.sum_decompositions((0, 0, 0, 0)) == [()]
        assert f4.sum_decompositions((-1, 0, 0, 0)) == []

    def test_sum_decompositions_of_root_include_itself(self, g2):
        """Test that a root decomposes as itself among others."""
        decompositions = g2.sum_decompositions(Root((1, 1)))
        assert (Root((1, 1)),) in decompositions
        assert (Root((1, 0)), Root((0, 1))) in decompositions
        assert len(decompositions) == 2

    @pytest.mark.parametrize("kind", ["G2", "A3", "F4"])
    def test_order_laws(self, kind):
        """Test reflexivity, antisymmetry and transitivity of leq on Phi+."""
        system = build_root_system(kind)
        roots = system.positive_roots
        below = {(a, b): system.leq(a, b) for a in roots for b in roots}
        for a in roots:
            assert below[a, a]
            for b in roots:
                if below[a, b] and below[b, a]:
                    assert a == b
                if not below[a, b]:
                    continue
                for c in roots:
                    if below[b, c]:
                        assert below[a, c]

    @pytest.mark.parametrize("kind", ["G2", "F4"])
    def test_leq_is_coordinatewise(self, kind):
        """Test that alpha <= beta exactly when every simple coordinate grows."""
        system = build_root_system(kind)
        for a in system.positive_roots:
            for b in system.positive_roots:
                expected = all(x <= y for x, y in zip(a.coeffs, b.coeffs))
                assert system.leq(a, b) == expected

    def test_decomposable_cache_is_shared(self, g2):
        """Test that repeated comparisons are served from the module cache."""
        g2.leq(Root((1, 0)), Root((3, 2)))
        hits = _is_decomposable.cache_info().hits
        g2.leq(Root((1, 0)), Root((3, 2)))
        assert _is_decomposable.cache_info().hits > hits
        assert not hasattr(g2, "_decomposable_cache")


class TestRookPlacements:
    """Tests for rook placements and their enumeration."""

    def test_rook_condition(self, g2):
        """Test the pairwise non-positive inner product rule."""
        assert g2.is_rook_placement([Root((1, 0)), Root((0, 1))])
        assert not g2.is_rook_placement([Root((1, 0)), Root((2, 1))])
        assert not g2.is_rook_placement([Root((2, 2))])

    def test_singular_pair(self, f4):
        """Test a rook placement of two short roots whose difference is a root."""
        placement = [Root((0, 1, 1, 0)), Root((0, 0, 1, 0))]
        assert f4.is_rook_placement(placement)
        assert not f4.is_nonsingular(placement)
        assert f4.is_orthogonal(placement)

    def test_a2_counts(self):
        """Test the rook placements of A2 under each filter."""
        a2 = build_root_system('A2')
        assert len(enumerate_rook_placements(a2, 'all')) == 5
        assert len(enumerate_rook_placements(a2, 'nonsingular')) == 5
        assert len(enumerate_rook_placements(a2, 'orthogonal-nonsingular')) == 4

    def test_type_a_counts_are_bell_numbers(self):
        """Test that rook placements of A_n are counted by Bell numbers."""
        assert len(enumerate_rook_placements(build_root_system('A3'))) == 15
        assert len(enumerate_rook_placements(build_root_system('A4'))) == 52

    def test_g2_orthogonal_nonsingular(self, g2):
        """Test the orthogonal non-singular placements of G2."""
        placements = enumerate_rook_placements(g2, 'orthogonal-nonsingular')
        pairs = {placement.as_set() for placement in placements if len(placement) == 2}
        assert len(placements) == 10
        assert pairs == {
            frozenset({Root((1, 0)), Root((3, 2))}),
            frozenset({Root((0, 1)), Root((2, 1))}),
            frozenset({Root((1, 1)), Root((3, 1))}),
        }

    def test_enumeration_order(self, g2):
        """Test that the empty placement comes first and sizes never decrease."""
        placements = enumerate_rook_placements(g2)
        assert len(placements[0]) == 0
        sizes = [len(placement) for placement in placements]
        assert sizes == sorted(sizes)

    def test_unknown_filter(self, g2):
        """Test that an unknown filter raises ValueError."""
        with pytest.raises(ValueError, match="Unknown placement filter"):
            enumerate_rook_placements(g2, 'everything')

    def test_f4_has_24_maximal_placements(self, f4):
        """Test the number of maximal rook placements of F4."""
        assert len(maximal_rook_placements(f4)) == 24
