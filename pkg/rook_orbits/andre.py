"""
Andre's basic subvarieties in type A.

The positive roots of A_{n-1} are e_i - e_j (1 <= i < j <= n). Dual forms are
strictly lower-triangular n x n matrices: the coefficient lambda(e_{i,j})
sits at row j, column i. The minors Delta^D_alpha are the invariants that
cut out a basic subvariety O_{D,xi}.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import sympy

from rook_orbits.chevalley import AlgebraElement, StructureTable
from rook_orbits.coadjoint import LinearForm, coadjoint_act, f_form, random_nilradical_element
from rook_orbits.constants import MAX_COUNTEREXAMPLES, PROGRESS_EVERY, ZERO_COORDINATE_PROBABILITY
from rook_orbits.exact import determinant, format_rational, from_sympy, random_rational, to_sympy
from rook_orbits.exceptions import ConsistencyError
from rook_orbits.models import CheckResult, Report, Status
from rook_orbits.rootsys import Root, RookPlacement, RootSystem, enumerate_rook_placements

logger = logging.getLogger(__name__)


# =============================================================================
# Roots as matrix positions
# =============================================================================

def epsilon_pair(root: Root) -> tuple[int, int]:
    """
    The pair (i, j) with root = e_i - e_j.

    Raises:
        ValueError: If the coefficients are not a contiguous block of ones
    """
    support = [k for k, c in enumerate(root.coeffs) if c]
    if (not support
            or any(root.coeffs[k] != 1 for k in support)
            or support != list(range(support[0], support[-1] + 1))):
        raise ValueError(f"{root} is not a positive root of type A")
    return support[0] + 1, support[-1] + 2


def root_of_pair(rank: int, i: int, j: int) -> Root:
    """The root e_i - e_j of A_rank."""
    if not 1 <= i < j <= rank + 1:
        raise ValueError(f"No root e_{i} - e_{j} in A{rank}")
    return Root(tuple(1 if i - 1 <= k < j - 1 else 0 for k in range(rank)))


def row_of(root: Root) -> int:
    return epsilon_pair(root)[0]


def col_of(root: Root) -> int:
    return epsilon_pair(root)[1]


def total_order_key(root: Root) -> tuple[int, int]:
    """e_i - e_j <_t e_r - e_s iff s < j, or s = j and i < r."""
    i, j = epsilon_pair(root)
    return (-j, i)


def type_a_leq(alpha: Root, beta: Root) -> bool:
    """Combinatorial form of e_i - e_j <= e_r - e_s: r <= i and s >= j."""
    i, j = epsilon_pair(alpha)
    r, s = epsilon_pair(beta)
    return r <= i and s >= j


def _require_type_a(system: RootSystem) -> int:
    if system.family != 'A':
        raise ValueError(f"Andre's construction needs a system of type A, got {system.kind}")
    return system.rank + 1


# =============================================================================
# Matrix forms
# =============================================================================

@dataclass(frozen=True)
class MatrixForm:
    """
    A form on n as a strictly lower-triangular matrix.

    Attributes:
        entries: Row-major n x n rationals, zero on and above the diagonal
    """
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(value) for value in row) for row in self.entries)
        size = len(rows)
        for r, row in enumerate(rows):
            if len(row) != size:
                raise ValueError("Matrix form must be square")
            if any(row[c] for c in range(r, size)):
                raise ValueError("Matrix form must be strictly lower triangular")
        object.__setattr__(self, 'entries', rows)

    @classmethod
    def zeros(cls, size: int) -> 'MatrixForm':
        return cls(tuple((Fraction(0),) * size for _ in range(size)))

    @classmethod
    def from_linear_form(cls, system: RootSystem, form: LinearForm) -> 'MatrixForm':
        size = _require_type_a(system)
        rows = [[Fraction(0)] * size for _ in range(size)]
        for root, value in form:
            i, j = epsilon_pair(root)
            rows[j - 1][i - 1] = value
        return cls(tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, row: int, col: int) -> Fraction:
        """1-based entry access."""
        return self.entries[row - 1][col - 1]

    def to_linear_form(self, system: RootSystem) -> LinearForm:
        size = _require_type_a(system)
        if size != self.size:
            raise ValueError(f"Matrix of size {self.size} does not match {system.kind}")
        return LinearForm({
            root_of_pair(system.rank, i, j): self.entry(j, i)
            for i in range(1, size + 1) for j in range(i + 1, size + 1)
        })

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix([[to_sympy(value) for value in row] for row in self.entries])

    def to_json(self) -> list[list[str]]:
        return [[format_rational(value) for value in row] for row in self.entries]


@dataclass(frozen=True)
class MinorSpec:
    """
    Rows and columns of the minor Delta^D_alpha.

    Attributes:
        rows: Increasing row indices R_D(alpha)
        cols: Increasing column indices C_D(alpha)
    """
    rows: tuple[int, ...]
    cols: tuple[int, ...]


# =============================================================================
# Minors and membership
# =============================================================================

def regular_roots(system: RootSystem, placement: Iterable[Root]) -> frozenset[Root]:
    """R(D) = Phi+ minus S(D)."""
    return system.regular_roots(placement)


def basic_dim(system: RootSystem, placement: Iterable[Root]) -> int:
    """dim O_{D,xi} = |S(D)|."""
    return len(system.singular_roots(placement))


def d_alpha(system: RootSystem, placement: Iterable[Root], alpha: Root) -> frozenset[Root]:
    """
    D(alpha) = {alpha} together with the beta in D with beta >= alpha.

    Raises:
        ValueError: If alpha is D-singular
    """
    roots = list(placement)
    if alpha not in system.regular_roots(roots):
        raise ValueError(f"{alpha} is singular for the placement")
    return frozenset([alpha] + [beta for beta in roots if system.leq(alpha, beta)])


def minor_spec(system: RootSystem, placement: Iterable[Root], alpha: Root) -> MinorSpec:
    """R_D(alpha) collects the j and C_D(alpha) the i of each e_i - e_j in D(alpha)."""
    members = d_alpha(system, placement, alpha)
    pairs = [epsilon_pair(root) for root in members]
    return MinorSpec(
        rows=tuple(sorted(j for _, j in pairs)),
        cols=tuple(sorted(i for i, _ in pairs)),
    )


def _minor(form: MatrixForm, spec: MinorSpec) -> Fraction:
    return determinant([[form.entry(r, c) for c in spec.cols] for r in spec.rows])


def delta_minor(
    system: RootSystem,
    placement: Iterable[Root],
    alpha: Root,
    form: MatrixForm
) -> Fraction:
    """Delta^D_alpha(lambda)."""
    return _minor(form, minor_spec(system, placement, alpha))


def f_matrix(system: RootSystem, placement: Sequence[Root], xi: Mapping[Root, Fraction]) -> MatrixForm:
    return MatrixForm.from_linear_form(system, f_form(placement, xi))


def minor_signature(
    system: RootSystem,
    placement: Sequence[Root],
    form: MatrixForm
) -> tuple[Fraction, ...]:
    """All minors Delta^D_alpha(lambda), alpha in R(D) in <_t order."""
    regular = sorted(system.regular_roots(placement), key=total_order_key)
    return tuple(delta_minor(system, placement, alpha, form) for alpha in regular)


def membership(
    system: RootSystem,
    placement: Sequence[Root],
    xi: Mapping[Root, Fraction],
    form: MatrixForm
) -> bool:
    """lambda lies in O_{D,xi} iff its minors agree with those of f_{D,xi}."""
    _require_type_a(system)
    base = f_matrix(system, placement, xi)
    return minor_signature(system, placement, form) == minor_signature(system, placement, base)


def decompose(system: RootSystem, form: MatrixForm) -> tuple[RookPlacement, dict[Root, Fraction]]:
    """
    The unique (D, xi) with lambda in O_{D,xi}.

    Starting from D = {} the smallest regular root (in <_t) whose minor
    disagrees with f_{D,xi} is added, with xi chosen so the minor matches.
    Adding a root only changes minors of roots above it in <_t, so at most
    |Phi+| roots are ever added.

    Raises:
        ConsistencyError: If a step leaves the rook placements or the loop
            does not terminate
    """
    size = _require_type_a(system)
    if form.size != size:
        raise ValueError(f"Matrix of size {form.size} does not match {system.kind}")

    cache: dict[MinorSpec, Fraction] = {}

    def form_minor(spec: MinorSpec) -> Fraction:
        if spec not in cache:
            cache[spec] = _minor(form, spec)
        return cache[spec]

    placement: list[Root] = []
    xi: dict[Root, Fraction] = {}
    for _ in range(len(system.positive_roots) + 1):
        base = f_matrix(system, placement, xi)
        regular = sorted(system.regular_roots(placement), key=total_order_key)
        mismatch = None
        for alpha in regular:
            spec = minor_spec(system, placement, alpha)
            if form_minor(spec) != _minor(base, spec):
                mismatch = alpha
                break
        if mismatch is None:
            result = RookPlacement(tuple(system.sorted_roots(placement)))
            logger.debug(f"decompose: D = {result}")
            return result, xi

        extended = placement + [mismatch]
        if not system.is_rook_placement(extended):
            raise ConsistencyError(f"decompose added {mismatch}, leaving the rook placements")
        spec = minor_spec(system, extended, mismatch)
        unit = _minor(f_matrix(system, extended, {**xi, mismatch: Fraction(1)}), spec)
        if not unit:
            raise ConsistencyError(f"Minor of f at {mismatch} vanishes")
        xi[mismatch] = form_minor(spec) / unit
        placement = extended
    raise ConsistencyError("decompose did not terminate")


# =============================================================================
# The matrix group acting on forms
# =============================================================================

def upper_matrix(system: RootSystem, x: AlgebraElement) -> sympy.Matrix:
    """x in n as a strictly upper-triangular matrix (x_gamma at row i, column j)."""
    size = _require_type_a(system)
    if not x.in_nilradical:
        raise ValueError("upper_matrix needs an element of n")
    matrix = sympy.zeros(size, size)
    for element, value in x:
        i, j = epsilon_pair(element.root)
        matrix[i - 1, j - 1] = to_sympy(value)
    return matrix


def group_element(nilpotent: sympy.Matrix) -> sympy.Matrix:
    """exp of a nilpotent matrix, summed until the powers vanish."""
    size = nilpotent.shape[0]
    result = sympy.eye(size)
    term = sympy.eye(size)
    k = 1
    while True:
        term = term * nilpotent / k
        if term.is_zero_matrix:
            return result
        result += term
        k += 1


def matrix_action(g: sympy.Matrix, form: MatrixForm) -> MatrixForm:
    """g.lambda = (g lambda g^-1)_low."""
    product = g * form.to_sympy() * g.inv()
    size = form.size
    return MatrixForm(tuple(
        tuple(from_sympy(product[r, c]) if c < r else Fraction(0) for c in range(size))
        for r in range(size)
    ))


def variety_dimension(
    system: RootSystem,
    placement: Sequence[Root],
    xi: Mapping[Root, Fraction],
    symbols: Optional[Mapping[Root, sympy.Symbol]] = None
) -> int:
    """
    |Phi+| minus the rank at f_{D,xi} of the Jacobian of the defining
    minors Delta^D_alpha, alpha in R(D).
    """
    size = _require_type_a(system)
    roots = system.positive_roots
    symbols = symbols or {root: sympy.Symbol(f"l_{row_of(root)}_{col_of(root)}") for root in roots}
    generic = sympy.zeros(size, size)
    for root in roots:
        i, j = epsilon_pair(root)
        generic[j - 1, i - 1] = symbols[root]

    equations = []
    for alpha in sorted(system.regular_roots(placement), key=total_order_key):
        spec = minor_spec(system, placement, alpha)
        block = generic.extract([r - 1 for r in spec.rows], [c - 1 for c in spec.cols])
        equations.append(block.det(method='berkowitz'))

    variables = [symbols[root] for root in roots]
    jacobian = sympy.Matrix(equations).jacobian(variables)
    base = f_form(placement, xi)
    point = {symbols[root]: to_sympy(base[root]) for root in roots}
    rank = jacobian.subs(point).rank()
    return len(roots) - int(rank)


# =============================================================================
# Verification
# =============================================================================

def random_matrix_form(system: RootSystem, rng: random.Random) -> MatrixForm:
    """A random strictly lower form, each entry zero with probability ZERO_COORDINATE_PROBABILITY."""
    size = _require_type_a(system)
    return MatrixForm(tuple(
        tuple(
            random_rational(rng, nonzero=True)
            if c < r and rng.random() >= ZERO_COORDINATE_PROBABILITY else Fraction(0)
            for c in range(size)
        )
        for r in range(size)
    ))


def decomposition_to_json(placement: RookPlacement, xi: Mapping[Root, Fraction]) -> dict:
    """``{"D": [[i, j], ...], "xi": ["p/q", ...]}`` with D in canonical order."""
    return {
        'D': [list(epsilon_pair(root)) for root in placement],
        'xi': [format_rational(xi[root]) for root in placement],
    }


def _perturbed(xi: Mapping[Root, Fraction], root: Root) -> dict[Root, Fraction]:
    shifted = dict(xi)
    shifted[root] = xi[root] + 1 if xi[root] != -1 else Fraction(1)
    return shifted


def verify_andre_partition(system: RootSystem, count: int, seed: int) -> Report:
    """
    Every random form lies in exactly one basic subvariety.

    For each form: decompose gives a rook placement whose membership holds,
    perturbing xi on any one root breaks membership, and decomposing f_{D,xi}
    returns (D, xi) again. For n = 3 the minor signatures of all (D, xi)
    with xi in {-1, 1, 2} are also checked pairwise.
    """
    size = _require_type_a(system)
    rng = random.Random(seed)
    report = Report(title=f"{system.kind} basic subvarieties", command='andre partition')
    failures: dict[str, list] = {'membership': [], 'perturbation': [], 'idempotence': [], 'rook': []}
    sizes: dict[int, int] = {}

    for index in range(count):
        form = random_matrix_form(system, rng)
        placement, xi = decompose(system, form)
        sizes[len(placement)] = sizes.get(len(placement), 0) + 1
        if not system.is_rook_placement(placement):
            failures['rook'].append(form.to_json())
        if not membership(system, placement.roots, xi, form):
            failures['membership'].append(form.to_json())
        if any(membership(system, placement.roots, _perturbed(xi, root), form) for root in placement):
            failures['perturbation'].append(form.to_json())
        if decompose(system, f_matrix(system, placement.roots, xi)) != (placement, xi):
            failures['idempotence'].append(form.to_json())
        if (index + 1) % PROGRESS_EVERY == 0:
            logger.debug(f"  {index + 1}/{count} forms decomposed")

    for name, found in failures.items():
        report.add(CheckResult(
            name=name,
            status=Status.FAIL if found else Status.PASS,
            message=f"{len(found)} of {count} forms fail" if found else f"{count} forms",
            detail={'counterexamples': found[:MAX_COUNTEREXAMPLES]},
        ))
    report.data['placement_sizes'] = {str(k): v for k, v in sorted(sizes.items())}

    if size == 3:
        report.add(_exhaustive_disjointness(system))
    return report


def _exhaustive_disjointness(system: RootSystem) -> CheckResult:
    values = (Fraction(-1), Fraction(1), Fraction(2))
    pairs = []
    for placement in enumerate_rook_placements(system, 'all'):
        for choice in itertools.product(values, repeat=len(placement)):
            pairs.append((placement.roots, dict(zip(placement.roots, choice))))
    clashes = [
        (str(RookPlacement(d)), str(RookPlacement(e)))
        for d, xi in pairs for e, eta in pairs
        if (d, xi) != (e, eta) and membership(system, e, eta, f_matrix(system, d, xi))
    ]
    return CheckResult(
        name='exhaustive disjointness',
        status=Status.FAIL if clashes else Status.PASS,
        message=f"{len(pairs)} pairs (D, xi) checked pairwise",
        detail={'clashes': clashes[:MAX_COUNTEREXAMPLES]},
    )


def verify_andre_oracle(table: StructureTable, count: int, seed: int) -> Report:
    """
    The matrix action agrees with the abstract coadjoint action, minors are
    orbit invariants, and decompose recovers (D, xi) from orbit samples.

    Each sample starts from a random point y.f_{D,xi} of the orbit, not
    from the base point itself.
    """
    system = table.system
    _require_type_a(system)
    rng = random.Random(seed)
    placements = enumerate_rook_placements(system, 'all')
    report = Report(title=f"{system.kind} matrix oracle", command='andre partition')
    disagreements, not_invariant, lost = [], [], []

    for _ in range(count):
        placement = rng.choice(placements)
        xi = {root: random_rational(rng, nonzero=True) for root in placement}
        y = random_nilradical_element(system, rng)
        start = coadjoint_act(table, y, f_form(placement, xi))
        x = random_nilradical_element(system, rng)
        g = group_element(upper_matrix(system, x))

        abstract = MatrixForm.from_linear_form(system, coadjoint_act(table, x, start))
        concrete = matrix_action(g, MatrixForm.from_linear_form(system, start))
        if abstract != concrete:
            disagreements.append({'x': repr(x), 'y': repr(y), 'D': str(placement)})
        if not membership(system, placement.roots, xi, concrete):
            not_invariant.append(str(placement))
        found, found_xi = decompose(system, concrete)
        if found.as_set() != placement.as_set() or found_xi != xi:
            lost.append(str(placement))

    for name, found_items in (
        ('matrix action equals coadjoint action', disagreements),
        ('minors are orbit invariants', not_invariant),
        ('decompose recovers (D, xi)', lost),
    ):
        report.add(CheckResult(
            name=name,
            status=Status.FAIL if found_items else Status.PASS,
            message=f"{len(found_items)} of {count} samples fail" if found_items else f"{count} samples",
            detail={'counterexamples': found_items[:MAX_COUNTEREXAMPLES]},
        ))
    return report


def verify_andre_dimensions(system: RootSystem, count: int, seed: int) -> CheckResult:
    """dim O_{D,xi} = |S(D)| against the Jacobian rank at f_{D,xi}, for random D."""
    _require_type_a(system)
    rng = random.Random(seed)
    placements = enumerate_rook_placements(system, 'all')
    symbols = {root: sympy.Symbol(f"l_{row_of(root)}_{col_of(root)}") for root in system.positive_roots}
    mismatches = []
    for _ in range(count):
        placement = rng.choice(placements)
        xi = {root: random_rational(rng, nonzero=True) for root in placement}
        expected = basic_dim(system, placement)
        computed = variety_dimension(system, placement.roots, xi, symbols)
        if computed != expected:
            mismatches.append({'D': str(placement), 'expected': expected, 'computed': computed})
    return CheckResult(
        name='dimension equals |S(D)|',
        status=Status.FAIL if mismatches else Status.PASS,
        message=f"{len(mismatches)} of {count} placements differ" if mismatches else f"{count} placements",
        detail={'mismatches': mismatches[:MAX_COUNTEREXAMPLES]},
    )
