"""
Basic subvarieties of G2: the twelve equation systems, the classifier that
places a form in exactly one of them, and sampling-based verification.

Roots of G2 are written over the short simple root alpha = (1, 0) and the
long simple root beta = (0, 1). The structure constants enter only through
c1..c5:

    [e_a, e_b] = c1 e_{a+b}          [e_a, e_{a+b}] = c2 e_{2a+b}
    [e_a, e_{2a+b}] = c3 e_{3a+b}    [e_{3a+b}, e_b] = c4 e_{3a+2b}
    [e_{a+b}, e_{2a+b}] = c5 e_{3a+2b}

so every check can be repeated for any rescaled table (c1 c5 = c3 c4).
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

import sympy

from rook_orbits.chevalley import AlgebraElement, StructureTable
from rook_orbits.coadjoint import (
    LinearForm,
    basic_variety_samples,
    f_form,
    kirillov_rank,
    orbit_samples,
)
from rook_orbits.constants import (
    DEFAULT_PARTITION_FORMS,
    DEFAULT_RANDOM_TABLES,
    MAX_COUNTEREXAMPLES,
    PROGRESS_EVERY,
    ZERO_COORDINATE_PROBABILITY,
)
from rook_orbits.exact import format_rational, from_sympy, random_rational, to_sympy
from rook_orbits.exceptions import ConsistencyError
from rook_orbits.models import CheckResult, Report, Status
from rook_orbits.rootsys import Root, RookPlacement

logger = logging.getLogger(__name__)

ALPHA = Root((1, 0))
BETA = Root((0, 1))
ALPHA_BETA = Root((1, 1))
TWO_ALPHA_BETA = Root((2, 1))
THREE_ALPHA_BETA = Root((3, 1))
HIGHEST = Root((3, 2))

G2_ROOTS: tuple[Root, ...] = (ALPHA, BETA, ALPHA_BETA, TWO_ALPHA_BETA, THREE_ALPHA_BETA, HIGHEST)

ROOT_LABELS: dict[Root, str] = {
    ALPHA: 'a',
    BETA: 'b',
    ALPHA_BETA: 'ab',
    TWO_ALPHA_BETA: '2ab',
    THREE_ALPHA_BETA: '3ab',
    HIGHEST: '3a2b',
}


# =============================================================================
# Structure constants
# =============================================================================

@dataclass(frozen=True)
class G2Constants:
    """
    The five structure constants the G2 equations depend on.

    Attributes:
        c1..c5: Nonzero rationals with c1*c5 == c3*c4
    """
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction
    c5: Fraction

    def __post_init__(self):
        for name in ('c1', 'c2', 'c3', 'c4', 'c5'):
            value = Fraction(getattr(self, name))
            if not value:
                raise ValueError(f"{name} must be nonzero")
            object.__setattr__(self, name, value)
        if self.c1 * self.c5 != self.c3 * self.c4:
            raise ValueError(f"Constants violate c1*c5 = c3*c4: {self.as_tuple()}")

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.c1, self.c2, self.c3, self.c4, self.c5)

    def to_json(self) -> list[str]:
        return [format_rational(value) for value in self.as_tuple()]


def g2_constants(table: StructureTable) -> G2Constants:
    """
    Read c1..c5 off a G2 structure table.

    Raises:
        ValueError: If the table is not of type G2
    """
    if table.system.kind != 'G2':
        raise ValueError(f"g2_constants needs a G2 table, got {table.system.kind}")
    return G2Constants(
        c1=table.n(ALPHA, BETA),
        c2=table.n(ALPHA, ALPHA_BETA),
        c3=table.n(ALPHA, TWO_ALPHA_BETA),
        c4=table.n(THREE_ALPHA_BETA, BETA),
        c5=table.n(ALPHA_BETA, TWO_ALPHA_BETA),
    )


def random_admissible_table(table: StructureTable, rng: random.Random) -> StructureTable:
    """A G2 table with randomly rescaled root vectors, hence new admissible c1..c5."""
    g2_constants(table)
    return table.random_rescaling(rng)


# =============================================================================
# Polynomial systems
# =============================================================================

LAMBDA = {root: sympy.Symbol(f"l_{label}") for root, label in ROOT_LABELS.items()}
XI = {root: sympy.Symbol(f"xi_{label}") for root, label in ROOT_LABELS.items()}
C1, C2, C3, C4, C5 = sympy.symbols('c1 c2 c3 c4 c5')
GENERATORS = tuple(LAMBDA[root] for root in G2_ROOTS)


@dataclass(frozen=True)
class PolyEquation:
    """
    A polynomial equation p(lambda) = 0 with rational coefficients.

    Attributes:
        label: The equation as written before substituting constants
        poly: The left-hand side minus the right-hand side over the six lambda_gamma
    """
    label: str
    poly: sympy.Poly
    terms: tuple[tuple[tuple[int, ...], Fraction], ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(
            (monomial, from_sympy(coeff)) for monomial, coeff in self.poly.terms()
        ))

    def residual(self, form: LinearForm) -> Fraction:
        """p evaluated at lambda, exactly."""
        values = [form[root] for root in G2_ROOTS]
        total = Fraction(0)
        for monomial, coeff in self.terms:
            term = coeff
            for value, power in zip(values, monomial):
                if power:
                    term *= value ** power
            total += term
        return total


@dataclass(frozen=True)
class PolySystem:
    """
    The defining system of one basic subvariety, constants substituted.

    Attributes:
        case_index: The case it belongs to
        equations: Its equations
    """
    case_index: int
    equations: tuple[PolyEquation, ...]

    def residuals(self, form: LinearForm) -> dict[str, Fraction]:
        return {equation.label: equation.residual(form) for equation in self.equations}

    def holds(self, form: LinearForm) -> bool:
        return all(not equation.residual(form) for equation in self.equations)

    def violated(self, form: LinearForm) -> dict[str, str]:
        """Nonzero residuals by equation label."""
        return {
            label: format_rational(value)
            for label, value in self.residuals(form).items() if value
        }


@dataclass(frozen=True)
class G2Case:
    """
    One row of the G2 table.

    Attributes:
        index: 1..12
        placement: The non-singular rook placement D
    """
    index: int
    placement: RookPlacement

    def builds(self, xi: Mapping[Root, Fraction], constants: G2Constants) -> PolySystem:
        return g2_equations(self, xi, constants)

    def __str__(self) -> str:
        return f"case {self.index} {self.placement}"


CASES: tuple[G2Case, ...] = tuple(
    G2Case(index, RookPlacement(roots)) for index, roots in enumerate([
        (),
        (ALPHA,),
        (BETA,),
        (ALPHA_BETA,),
        (TWO_ALPHA_BETA,),
        (THREE_ALPHA_BETA,),
        (HIGHEST,),
        (ALPHA, BETA),
        (BETA, TWO_ALPHA_BETA),
        (BETA, THREE_ALPHA_BETA),
        (ALPHA_BETA, THREE_ALPHA_BETA),
        (ALPHA, HIGHEST),
    ], start=1)
)


def get_case(index: int) -> G2Case:
    if not 1 <= index <= len(CASES):
        raise ValueError(f"G2 case must lie in 1..{len(CASES)}, got {index}")
    return CASES[index - 1]


def _quadric_2ab() -> sympy.Expr:
    # 2 c2 l_b l_2ab - c1 l_ab^2
    return 2 * C2 * LAMBDA[BETA] * LAMBDA[TWO_ALPHA_BETA] - C1 * LAMBDA[ALPHA_BETA] ** 2


def _quartic_3ab() -> sympy.Expr:
    return (6 * C3 ** 2 * LAMBDA[BETA] * LAMBDA[THREE_ALPHA_BETA] ** 2
            - C1 * C2 * LAMBDA[TWO_ALPHA_BETA] ** 3)


def _quadric_3ab() -> sympy.Expr:
    return (2 * C3 * LAMBDA[ALPHA_BETA] * LAMBDA[THREE_ALPHA_BETA]
            - C2 * LAMBDA[TWO_ALPHA_BETA] ** 2)


def _quadric_highest() -> sympy.Expr:
    return (2 * C5 * LAMBDA[ALPHA] * LAMBDA[HIGHEST]
            - 2 * C3 * LAMBDA[ALPHA_BETA] * LAMBDA[THREE_ALPHA_BETA]
            + C2 * LAMBDA[TWO_ALPHA_BETA] ** 2)


def _vanish(*roots: Root) -> list[tuple[sympy.Expr, sympy.Expr]]:
    return [(LAMBDA[root], sympy.Integer(0)) for root in roots]


def _pin(root: Root) -> tuple[sympy.Expr, sympy.Expr]:
    return (LAMBDA[root], XI[root])


def _symbolic_system(index: int) -> list[tuple[sympy.Expr, sympy.Expr]]:
    """(lhs, rhs) pairs of a case in the symbols lambda, xi and c."""
    a, b, ab, a2b, a3b, top = G2_ROOTS
    systems: dict[int, list[tuple[sympy.Expr, sympy.Expr]]] = {
        1: _vanish(*G2_ROOTS),
        2: [_pin(a)] + _vanish(b, ab, a2b, a3b, top),
        3: [_pin(b)] + _vanish(a, ab, a2b, a3b, top),
        4: [_pin(ab)] + _vanish(a2b, a3b, top),
        5: [_pin(a2b), (_quadric_2ab(), sympy.Integer(0))] + _vanish(a3b, top),
        6: [(_quartic_3ab(), sympy.Integer(0)), (_quadric_3ab(), sympy.Integer(0)),
            _pin(a3b)] + _vanish(top),
        7: [(_quadric_highest(), sympy.Integer(0)), _pin(top)],
        8: [_pin(a), _pin(b)] + _vanish(ab, a2b, a3b, top),
        9: [_pin(a2b), (_quadric_2ab(), 2 * C2 * XI[b] * XI[a2b])] + _vanish(a3b, top),
        10: [(_quartic_3ab(), 6 * C3 ** 2 * XI[b] * XI[a3b] ** 2),
             (_quadric_3ab(), sympy.Integer(0)), _pin(a3b)] + _vanish(top),
        11: [(_quadric_3ab(), 2 * C3 * XI[ab] * XI[a3b]), _pin(a3b)] + _vanish(top),
        12: [(_quadric_highest(), 2 * C5 * XI[a] * XI[top]), _pin(top)],
    }
    return systems[index]


def _check_domain(case: G2Case, xi: Mapping[Root, Fraction]) -> None:
    if set(xi) != case.placement.as_set():
        raise ValueError(
            f"xi must be defined on {case.placement} for case {case.index}, "
            f"got {{{'; '.join(map(str, xi))}}}"
        )
    for root, value in xi.items():
        if not value:
            raise ValueError(f"xi({root}) must be nonzero")


def g2_equations(case: G2Case, xi: Mapping[Root, Fraction], constants: G2Constants) -> PolySystem:
    """
    The equation system of a case with xi and c1..c5 substituted.

    Raises:
        ValueError: If xi is not a nonzero map on the case's placement
    """
    _check_domain(case, xi)
    substitution: dict[sympy.Symbol, sympy.Rational] = {
        symbol: to_sympy(value)
        for symbol, value in zip((C1, C2, C3, C4, C5), constants.as_tuple())
    }
    substitution.update({XI[root]: to_sympy(value) for root, value in xi.items()})

    equations = []
    for lhs, rhs in _symbolic_system(case.index):
        label = f"{sympy.sstr(lhs)} = {sympy.sstr(rhs)}"
        poly = sympy.Poly((lhs - rhs).subs(substitution), *GENERATORS, domain='QQ')
        equations.append(PolyEquation(label=label, poly=poly))
    return PolySystem(case_index=case.index, equations=tuple(equations))


# =============================================================================
# Classification
# =============================================================================

def _check_g2_form(form: LinearForm) -> None:
    for root in form.support:
        if root not in ROOT_LABELS:
            raise ValueError(f"{root} is not a positive root of G2")


def _quadric_2ab_value(form: LinearForm, k: G2Constants) -> Fraction:
    return 2 * k.c2 * form[BETA] * form[TWO_ALPHA_BETA] - k.c1 * form[ALPHA_BETA] ** 2


def _quartic_3ab_value(form: LinearForm, k: G2Constants) -> Fraction:
    return (6 * k.c3 ** 2 * form[BETA] * form[THREE_ALPHA_BETA] ** 2
            - k.c1 * k.c2 * form[TWO_ALPHA_BETA] ** 3)


def _quadric_3ab_value(form: LinearForm, k: G2Constants) -> Fraction:
    return 2 * k.c3 * form[ALPHA_BETA] * form[THREE_ALPHA_BETA] - k.c2 * form[TWO_ALPHA_BETA] ** 2


def _quadric_highest_value(form: LinearForm, k: G2Constants) -> Fraction:
    return (2 * k.c5 * form[ALPHA] * form[HIGHEST]
            - 2 * k.c3 * form[ALPHA_BETA] * form[THREE_ALPHA_BETA]
            + k.c2 * form[TWO_ALPHA_BETA] ** 2)


# Root whose xi value is solved from the inhomogeneous equation of a case
SOLVED_ROOT: dict[int, Root] = {9: BETA, 10: BETA, 11: ALPHA_BETA, 12: ALPHA}


def read_xi(case: G2Case, form: LinearForm, constants: G2Constants) -> Optional[dict[Root, Fraction]]:
    """
    The xi that the case's system forces on lambda.

    Pinned coordinates give xi directly; in cases 9 to 12 the remaining value
    is solved from the inhomogeneous equation. Returns None when no nonzero
    xi exists (a pinned coordinate or the solved value is 0).
    """
    _check_g2_form(form)
    k = constants
    solved = SOLVED_ROOT.get(case.index)
    xi = {root: form[root] for root in case.placement if root != solved}
    if not all(xi.values()):
        return None

    if case.index == 9:
        xi[BETA] = _quadric_2ab_value(form, k) / (2 * k.c2 * xi[TWO_ALPHA_BETA])
    elif case.index == 10:
        xi[BETA] = _quartic_3ab_value(form, k) / (6 * k.c3 ** 2 * xi[THREE_ALPHA_BETA] ** 2)
    elif case.index == 11:
        xi[ALPHA_BETA] = _quadric_3ab_value(form, k) / (2 * k.c3 * xi[THREE_ALPHA_BETA])
    elif case.index == 12:
        xi[ALPHA] = _quadric_highest_value(form, k) / (2 * k.c5 * xi[HIGHEST])

    if not all(xi.values()):
        return None
    return xi


def system_holds(case: G2Case, form: LinearForm, constants: G2Constants) -> bool:
    """True if lambda satisfies the case's system for some admissible xi."""
    xi = read_xi(case, form, constants)
    if xi is None:
        return False
    return g2_equations(case, xi, constants).holds(form)


def _classify_index(form: LinearForm, k: G2Constants) -> int:
    if form[HIGHEST]:
        return 7 if not _quadric_highest_value(form, k) else 12
    if form[THREE_ALPHA_BETA]:
        if _quadric_3ab_value(form, k):
            return 11
        return 6 if not _quartic_3ab_value(form, k) else 10
    if form[TWO_ALPHA_BETA]:
        return 5 if not _quadric_2ab_value(form, k) else 9
    if form[ALPHA_BETA]:
        return 4
    if form[BETA]:
        return 3 if not form[ALPHA] else 8
    if form[ALPHA]:
        return 2
    return 1


def classify(form: LinearForm, constants: G2Constants) -> tuple[G2Case, dict[Root, Fraction]]:
    """
    The unique basic subvariety containing lambda, with its xi.

    The decision runs from the highest root down: the first nonzero
    coordinate among lambda_{3a+2b}, lambda_{3a+b}, lambda_{2a+b},
    lambda_{a+b}, lambda_b, lambda_a picks the branch, and within a branch
    the case is decided by whether the branch's quadric (or quartic) vanishes.
    Each quotient in the branch conditions has its denominator guarded by the
    branch, so comparisons are made on cleared polynomials.

    Raises:
        ValueError: If the form has a coefficient off the positive roots of G2
    """
    _check_g2_form(form)
    case = get_case(_classify_index(form, constants))
    xi = read_xi(case, form, constants)
    if xi is None:
        raise ConsistencyError(f"Classifier chose {case} but no xi fits {form}")
    return case, xi


# =============================================================================
# Verification
# =============================================================================

def _format_xi(xi: Mapping[Root, Fraction]) -> dict[str, str]:
    return {str(root): format_rational(value) for root, value in xi.items()}


def _format_witness(x: AlgebraElement) -> dict[str, str]:
    return {str(element.root): format_rational(value) for element, value in x}


def random_xi(case: G2Case, rng: random.Random) -> dict[Root, Fraction]:
    return {root: random_rational(rng, nonzero=True) for root in case.placement}


def verify_case(
    table: StructureTable,
    case: G2Case,
    xi: Mapping[Root, Fraction],
    samples: int,
    seed: int
) -> CheckResult:
    """
    Sample O_{D,xi} exactly and check each point against the case's system
    and the classifier.

    Points of O_{D,xi} are sums of independent single-root orbit samples.
    For |D| = 2 the orbit Omega_{D,xi} of f_{D,xi} is sampled as well.

    Raises:
        ValueError: If samples < 1 or xi does not match the case
    """
    if samples < 1:
        raise ValueError(f"verify_case needs at least one sample, got {samples}")
    constants = g2_constants(table)
    system = g2_equations(case, xi, constants)
    placement = list(case.placement)

    points: list[tuple[str, tuple[AlgebraElement, ...], LinearForm]] = [
        ('variety', sample.witnesses, sample.form)
        for sample in basic_variety_samples(table, placement, xi, samples, seed)
    ]
    if len(placement) == 2:
        points += [
            ('orbit', (), form) for form in orbit_samples(table, placement, xi, samples, seed)
        ]

    failures: list[dict[str, Any]] = []
    failed = 0
    for source, witnesses, form in points:
        violated = system.violated(form)
        found_case, found_xi = classify(form, constants)
        misclassified = found_case.index != case.index or found_xi != dict(xi)
        if violated or misclassified:
            failed += 1
            if len(failures) < MAX_COUNTEREXAMPLES:
                failures.append({
                    'source': source,
                    'form': form.to_json(),
                    'residuals': violated,
                    'classified_as': found_case.index,
                    'classified_xi': _format_xi(found_xi),
                    'witnesses': [_format_witness(x) for x in witnesses],
                })

    logger.debug(f"{case}: {len(points) - failed}/{len(points)} samples consistent")
    return CheckResult(
        name=f"case {case.index}",
        status=Status.FAIL if failed else Status.PASS,
        message=f"{len(points) - failed}/{len(points)} samples satisfy the system and classify back",
        detail={
            'placement': [str(root) for root in case.placement],
            'xi': _format_xi(xi),
            'constants': constants.to_json(),
            'equations': [equation.label for equation in system.equations],
            'samples': len(points),
            'failures': failures,
        },
    )


def verify_cases(
    table: StructureTable,
    samples: int,
    seed: int,
    cases: Optional[Sequence[G2Case]] = None,
    random_tables: int = DEFAULT_RANDOM_TABLES
) -> Report:
    """
    verify_case for the given cases (all twelve by default) on the table and
    on ``random_tables`` randomly rescaled copies of it.
    """
    rng = random.Random(seed)
    tables = [('realized', table)] + [
        (f"rescaled {i + 1}", random_admissible_table(table, rng)) for i in range(random_tables)
    ]
    report = Report(title='G2 orbit-in-variety', command='g2 verify')
    for label, current in tables:
        constants = g2_constants(current)
        logger.info(f"Checking {label} table, c = ({', '.join(map(str, constants.as_tuple()))})")
        for case in cases or CASES:
            xi = random_xi(case, rng)
            result = verify_case(current, case, xi, samples, rng.randrange(2 ** 32))
            result.name = f"{label}: {result.name}"
            report.add(result)
    return report


def random_g2_form(rng: random.Random) -> LinearForm:
    """A form with each coordinate zero with probability ZERO_COORDINATE_PROBABILITY."""
    return LinearForm({
        root: (Fraction(0) if rng.random() < ZERO_COORDINATE_PROBABILITY
               else random_rational(rng, nonzero=True))
        for root in G2_ROOTS
    })


def verify_partition(
    table: StructureTable,
    count: int = DEFAULT_PARTITION_FORMS,
    seed: int = 0
) -> Report:
    """
    Every form lies in exactly one basic subvariety.

    Half of the forms are random with coordinates zeroed at random, half are
    drawn from a random case's basic subvariety (reaching the branches with
    a vanishing quadric). For each form, the classified case's system holds
    and every other case's system fails for every xi.
    """
    constants = g2_constants(table)
    rng = random.Random(seed)
    report = Report(title='G2 partition', command='g2 partition')
    failures: list[dict[str, Any]] = []
    failed = 0
    counts = {case.index: 0 for case in CASES}

    for index in range(count):
        expected: Optional[tuple[G2Case, dict[Root, Fraction]]] = None
        if index % 2:
            case = rng.choice(CASES)
            xi = random_xi(case, rng)
            form = basic_variety_samples(table, list(case.placement), xi, 1, rng.randrange(2 ** 32))[0].form
            expected = (case, xi)
        else:
            form = random_g2_form(rng)

        found_case, found_xi = classify(form, constants)
        counts[found_case.index] += 1
        holding = [case.index for case in CASES if system_holds(case, form, constants)]
        ok = holding == [found_case.index]
        if expected is not None:
            ok = ok and expected[0].index == found_case.index and expected[1] == found_xi
        if not ok:
            failed += 1
            if len(failures) < MAX_COUNTEREXAMPLES:
                failures.append({
                    'form': form.to_json(),
                    'classified_as': found_case.index,
                    'systems_holding': holding,
                    'expected': expected[0].index if expected else None,
                })
        if (index + 1) % (PROGRESS_EVERY * 10) == 0:
            logger.info(f"Partition: {index + 1}/{count} forms checked")

    report.data['case_counts'] = {str(k): v for k, v in counts.items()}
    report.add(CheckResult(
        name='exactly one system',
        status=Status.FAIL if failed else Status.PASS,
        message=f"{count - failed}/{count} forms lie in exactly one basic subvariety",
        detail={'forms': count, 'failures': failures},
    ))
    return report


def verify_singular_collapse(table: StructureTable, samples: int, seed: int) -> CheckResult:
    """
    The only singular rook placement {a, a+b}: points of its orbit and of
    its basic subvariety classify as case 4 with the same xi(a+b).
    """
    constants = g2_constants(table)
    rng = random.Random(seed)
    xi = {ALPHA: random_rational(rng, nonzero=True), ALPHA_BETA: random_rational(rng, nonzero=True)}
    placement = [ALPHA, ALPHA_BETA]
    forms = orbit_samples(table, placement, xi, samples, seed)
    forms += [sample.form for sample in basic_variety_samples(table, placement, xi, samples, seed)]

    bad = []
    for form in forms:
        case, found = classify(form, constants)
        if case.index != 4 or found != {ALPHA_BETA: xi[ALPHA_BETA]}:
            bad.append({'form': form.to_json(), 'classified_as': case.index})
    return CheckResult(
        name='singular collapse',
        status=Status.FAIL if bad else Status.PASS,
        message=f"{len(forms) - len(bad)}/{len(forms)} samples of {{a; a+b}} classify as case 4",
        detail={'xi': _format_xi(xi), 'failures': bad[:MAX_COUNTEREXAMPLES]},
    )


def jacobian_dimension(case: G2Case, xi: Mapping[Root, Fraction], constants: G2Constants) -> int:
    """6 minus the rank at f_{D,xi} of the Jacobian of the case's equations."""
    system = g2_equations(case, xi, constants)
    jacobian = sympy.Matrix([equation.poly.as_expr() for equation in system.equations]).jacobian(list(GENERATORS))
    base = f_form(list(case.placement), xi)
    point = {LAMBDA[root]: to_sympy(base[root]) for root in G2_ROOTS}
    return len(G2_ROOTS) - int(jacobian.subs(point).rank())


def g2_dimension_report(table: StructureTable) -> Report:
    """
    For each case: |S(D)|, the Jacobian dimension of the variety and the
    Kirillov rank at f_{D,xi} (xi = 1). Case 11 is expected to be the only
    one with an orbit smaller than its variety.
    """
    constants = g2_constants(table)
    system = table.system
    report = Report(title='G2 dimensions', command='g2 dims')
    gaps = []
    for case in CASES:
        xi = {root: Fraction(1) for root in case.placement}
        singular = len(system.singular_roots(case.placement))
        variety = jacobian_dimension(case, xi, constants)
        orbit = kirillov_rank(table, f_form(list(case.placement), xi))
        if variety != singular or orbit > singular:
            status = Status.FAIL
        elif orbit < singular:
            status = Status.FLAG
            gaps.append(case.index)
        else:
            status = Status.PASS
        report.add(CheckResult(
            name=f"case {case.index}",
            status=status,
            message=f"|S(D)| = {singular}, variety dim = {variety}, Kirillov rank = {orbit}",
            detail={'singular': singular, 'variety_dimension': variety, 'kirillov_rank': orbit},
        ))
    report.add(CheckResult(
        name='orbit smaller than variety',
        status=Status.PASS if gaps == [11] else Status.FAIL,
        message=f"cases with Kirillov rank < |S(D)|: {gaps}",
        detail={'cases': gaps},
    ))
    return report
