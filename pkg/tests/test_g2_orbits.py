"""
Tests for the G2 basic subvarieties.
"""

import random
from fractions import Fraction

import pytest

from rook_orbits.chevalley import build_chevalley
from rook_orbits.coadjoint import LinearForm, f_form
from rook_orbits.exceptions import ConsistencyError
from rook_orbits.g2_orbits import (
    ALPHA,
    ALPHA_BETA,
    BETA,
    CASES,
    HIGHEST,
    THREE_ALPHA_BETA,
    TWO_ALPHA_BETA,
    G2Constants,
    classify,
    g2_constants,
    g2_dimension_report,
    g2_equations,
    get_case,
    random_admissible_table,
    system_holds,
    verify_cases,
    verify_partition,
    verify_singular_collapse,
)
from rook_orbits.models import Status
from rook_orbits.rootsys import Root, build_root_system


@pytest.fixture(scope='module')
def table():
    return build_chevalley(build_root_system('G2'))


@pytest.fixture
def constants():
    return G2Constants(1, 2, 3, -1, -3)


class TestConstants:
    """Tests for c1..c5."""

    def test_realized_constants(self, table):
        """Test the constants of the built Chevalley table."""
        assert g2_constants(table).as_tuple() == (1, 2, 3, -1, -3)

    def test_relation_is_enforced(self):
        """Test that c1*c5 = c3*c4 is required."""
        with pytest.raises(ValueError, match="c1\\*c5"):
            G2Constants(1, 2, 3, 1, -3)

    def test_zero_constant_rejected(self):
        """Test that every constant is nonzero."""
        with pytest.raises(ValueError, match="nonzero"):
            G2Constants(0, 2, 3, -1, -3)

    def test_rescaled_tables_stay_admissible(self, table):
        """Test that random rescalings give valid constants."""
        rng = random.Random(8)
        for _ in range(5):
            constants = g2_constants(random_admissible_table(table, rng))
            assert constants.c1 * constants.c5 == constants.c3 * constants.c4

    def test_needs_g2_table(self):
        """Test that other systems are rejected."""
        with pytest.raises(ValueError, match="G2"):
            g2_constants(build_chevalley(build_root_system('A2')))


class TestCases:
    """Tests for the twelve cases and their equations."""

    def test_twelve_cases(self):
        """Test the case list."""
        assert len(CASES) == 12
        assert get_case(1).placement.roots == ()
        assert get_case(12).placement.roots == (ALPHA, HIGHEST)

    def test_case_index_range(self):
        """Test that get_case checks its index."""
        with pytest.raises(ValueError):
            get_case(13)
        with pytest.raises(ValueError):
            get_case(0)

    def test_equations_need_matching_xi(self, constants):
        """Test that xi must live on the case's placement."""
        with pytest.raises(ValueError):
            g2_equations(get_case(8), {ALPHA: Fraction(1)}, constants)

    @pytest.mark.parametrize("case", CASES, ids=lambda case: f"case{case.index}")
    def test_base_point_satisfies_its_system(self, case, constants):
        """Test that f_{D,xi} satisfies the system of its own case."""
        xi = {root: Fraction(index + 2, 3) for index, root in enumerate(case.placement)}
        form = f_form(list(case.placement), xi)
        assert g2_equations(case, xi, constants).holds(form)
        assert system_holds(case, form, constants)


class TestClassify:
    """Tests for the classifier."""

    @pytest.mark.parametrize("coeffs,index,xi", [
        ({}, 1, {}),
        ({ALPHA: 2}, 2, {ALPHA: 2}),
        ({BETA: 3}, 3, {BETA: 3}),
        ({ALPHA: 7, ALPHA_BETA: 3}, 4, {ALPHA_BETA: 3}),
        ({TWO_ALPHA_BETA: 1}, 5, {TWO_ALPHA_BETA: 1}),
        ({THREE_ALPHA_BETA: 1}, 6, {THREE_ALPHA_BETA: 1}),
        ({HIGHEST: 1}, 7, {HIGHEST: 1}),
        ({ALPHA: 1, BETA: 5}, 8, {ALPHA: 1, BETA: 5}),
        ({BETA: 1, TWO_ALPHA_BETA: 1}, 9, {BETA: 1, TWO_ALPHA_BETA: 1}),
        ({BETA: 1, THREE_ALPHA_BETA: 1}, 10, {BETA: 1, THREE_ALPHA_BETA: 1}),
        ({ALPHA_BETA: 1, THREE_ALPHA_BETA: 1}, 11, {ALPHA_BETA: 1, THREE_ALPHA_BETA: 1}),
        ({ALPHA: 1, HIGHEST: 1}, 12, {ALPHA: 1, HIGHEST: 1}),
    ])
    def test_examples(self, coeffs, index, xi, constants):
        """Test one form per case with the realized constants."""
        case, found = classify(LinearForm(coeffs), constants)
        assert case.index == index
        assert found == {root: Fraction(value) for root, value in xi.items()}

    def test_quadric_mixes_coordinates(self, constants):
        """Test a case 9 form whose xi(b) differs from lambda_b."""
        form = LinearForm({BETA: 1, ALPHA_BETA: 1, TWO_ALPHA_BETA: 1})
        case, xi = classify(form, constants)
        # xi(b) = (2*c2*1*1 - c1*1) / (2*c2*1)
        assert case.index == 9
        assert xi == {BETA: Fraction(3, 4), TWO_ALPHA_BETA: 1}

    def test_vanishing_quadric_drops_to_case_5(self, constants):
        """Test that lambda_b is absorbed when the quadric vanishes."""
        case, xi = classify(LinearForm({BETA: 1, ALPHA_BETA: 2, TWO_ALPHA_BETA: 1}), constants)
        assert case.index == 5
        assert xi == {TWO_ALPHA_BETA: 1}

    def test_exactly_one_system_holds(self, constants):
        """Test that only the classified case's system holds."""
        form = LinearForm({ALPHA: 2, BETA: -1, ALPHA_BETA: 3, TWO_ALPHA_BETA: 1,
                           THREE_ALPHA_BETA: Fraction(1, 2), HIGHEST: 4})
        case, _ = classify(form, constants)
        holding = [other.index for other in CASES if system_holds(other, form, constants)]
        assert holding == [case.index]

    def test_rejects_foreign_root(self, constants):
        """Test that forms off the G2 roots are rejected."""
        with pytest.raises(ValueError, match="not a positive root"):
            classify(LinearForm({Root((2, 2)): 1}), constants)


class TestVerification:
    """Tests for the sampling checks and the dimension report."""

    def test_verify_selected_cases(self, table):
        """Test sampled orbits of two cases on the realized and one rescaled table."""
        report = verify_cases(table, 3, 5, cases=[get_case(9), get_case(12)], random_tables=1)
        assert len(report.checks) == 4
        assert not report.failed

    def test_verify_all_cases_on_rescaled_tables(self, table):
        """Test every case on the realized table and five rescaled copies."""
        report = verify_cases(table, 5, 3, random_tables=5)
        assert len(report.checks) == 72
        assert not report.failed
        assert {check.name.split(': ')[0] for check in report.checks} == {
            'realized', *(f"rescaled {i}" for i in range(1, 6))
        }

    def test_partition(self, table):
        """Test the partition on a small batch of forms."""
        report = verify_partition(table, 40, 1)
        assert report.checks[0].status is Status.PASS
        assert sum(report.data['case_counts'].values()) == 40

    def test_singular_collapse(self, table):
        """Test that {a; a+b} samples land in case 4."""
        assert verify_singular_collapse(table, 5, 2).status is Status.PASS

    def test_dimension_report(self, table):
        """Test that only case 11 has an orbit smaller than its variety."""
        report = g2_dimension_report(table)
        statuses = {check.name: check.status for check in report.checks}
        assert statuses['case 11'] is Status.FLAG
        assert statuses['orbit smaller than variety'] is Status.PASS
        assert not report.failed
        case_11 = next(check for check in report.checks if check.name == 'case 11')
        assert case_11.detail['kirillov_rank'] == 2
        assert case_11.detail['singular'] == 3

    def test_classifier_consistency_error(self, constants, monkeypatch):
        """Test that a classifier without a fitting xi raises ConsistencyError."""
        monkeypatch.setattr('rook_orbits.g2_orbits._classify_index', lambda form, k: 2)
        with pytest.raises(ConsistencyError):
            classify(LinearForm({BETA: 1}), constants)
