"""
Distinctness certificates for orbits of orthogonal rook placements in F4.

For an orthogonal non-singular placement D every root beta in D gets a
justification showing that xi(beta) is determined by the orbit of f_{D,xi}:
it is maximal in D, or a simple root alpha_0 separates it (tool Prop42), or the
local sum test applies (tool Lemma41), or a pairing-matrix tuple exists for
some order on the simple roots and on D (tool Prop43).

The pairing matrix has rows indexed by the simple roots in a chosen order
and columns by the roots of D in a chosen order, with entries
p_{i,j} = 2(alpha_i, beta_j) / (alpha_i, alpha_i).
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterator, Mapping, Optional, Sequence

from rook_orbits.chevalley import AlgebraElement, BasisElement, StructureTable
from rook_orbits.constants import PROGRESS_EVERY
from rook_orbits.exact import determinant, format_rational
from rook_orbits.exceptions import ConsistencyError
from rook_orbits.models import CheckResult, Report, Status
from rook_orbits.parsers.f4_data import F4Data, TableRow
from rook_orbits.rootsys import (
    Root,
    RookPlacement,
    RootSystem,
    enumerate_rook_placements,
    maximal_rook_placements,
)

logger = logging.getLogger(__name__)


# =============================================================================
# Pairing matrices and their minors
# =============================================================================

@dataclass(frozen=True)
class PairingMatrix:
    """
    The matrix p_{i,j} for fixed orders on the simple roots and on D.

    Attributes:
        simple_order: 1-based simple-root indices labelling rows 1..rank
        columns: The roots beta_1..beta_m labelling columns 1..m
        entries: Row-major p_{i,j}
    """
    simple_order: tuple[int, ...]
    columns: tuple[Root, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def row_count(self) -> int:
        return len(self.entries)

    @property
    def column_count(self) -> int:
        return len(self.columns)

    def entry(self, row: int, col: int) -> Fraction:
        """1-based p_{row,col}."""
        return self.entries[row - 1][col - 1]

    def to_json(self) -> dict[str, Any]:
        return {
            'simple_order': list(self.simple_order),
            'columns': [str(root) for root in self.columns],
            'entries': [[format_rational(value) for value in row] for row in self.entries],
        }


def _check_simple_order(system: RootSystem, simple_order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(simple_order)
    if sorted(order) != list(range(1, system.rank + 1)):
        raise ValueError(f"{list(order)} is not an order on the {system.rank} simple roots")
    return order


def p_matrix(
    system: RootSystem,
    simple_order: Sequence[int],
    d_order: Sequence[Root]
) -> PairingMatrix:
    """
    Build the pairing matrix.

    Args:
        system: Root system
        simple_order: Permutation of 1..rank, the row order
        d_order: Roots of D in column order

    Returns:
        The exact matrix of p_{i,j}

    Raises:
        ValueError: If simple_order is not a permutation
    """
    order = _check_simple_order(system, simple_order)
    columns = tuple(d_order)
    entries = tuple(
        tuple(system.coroot_pairing(beta, index) for beta in columns)
        for index in order
    )
    return PairingMatrix(simple_order=order, columns=columns, entries=entries)


def dtilde_minor(matrix: PairingMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """
    Minor of the pairing matrix on 1-based row and column sets.

    Both sets are taken in increasing order; the empty minor is 1.

    Raises:
        ValueError: If the sets differ in size
    """
    if len(rows) != len(cols):
        raise ValueError(f"Minor needs as many rows as columns, got {len(rows)} and {len(cols)}")
    return determinant([
        [matrix.entry(r, c) for c in sorted(cols)] for r in sorted(rows)
    ])


# =============================================================================
# Minor conditions of a row-index tuple
# =============================================================================

@dataclass(frozen=True)
class MinorCondition:
    """
    One nonvanishing or vanishing requirement on a tuple.

    Attributes:
        kind: 'nonzero' or 'zero'
        k: Step 1..m the condition belongs to
        l: The excluded row index of a vanishing condition (0 for nonzero ones)
        rows: Row set of the minor
        cols: Column set of the minor
        value: The exact minor
    """
    kind: str
    k: int
    l: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction

    @property
    def satisfied(self) -> bool:
        return bool(self.value) if self.kind == 'nonzero' else not self.value

    def to_json(self) -> dict[str, Any]:
        return {
            'kind': self.kind,
            'k': self.k,
            'l': self.l,
            'rows': list(self.rows),
            'cols': list(self.cols),
            'value': format_rational(self.value),
            'satisfied': self.satisfied,
        }


def _condition_sets(
    i_tuple: Sequence[int],
    row_count: int
) -> Iterator[tuple[str, int, int, tuple[int, ...], tuple[int, ...]]]:
    """
    Index sets of every condition on i_tuple, step by step.

    Step k asks for a nonzero minor on I_k = {i_s : s <= k, i_s >= i_k} with
    columns J_k = {s : i_s in I_k}. For each row l > i_k not among
    i_1..i_{k-1} it asks for a vanishing minor on {l} + {i_s : s < k, i_s > l}
    with columns {k} + {s < k : i_s > l}.
    """
    for k in range(1, len(i_tuple) + 1):
        i_k = i_tuple[k - 1]
        steps = range(1, k + 1)
        rows = tuple(sorted(i_tuple[s - 1] for s in steps if i_tuple[s - 1] >= i_k))
        cols = tuple(s for s in steps if i_tuple[s - 1] >= i_k)
        yield 'nonzero', k, 0, rows, cols

        earlier = i_tuple[:k - 1]
        for l in range(i_k + 1, row_count + 1):
            if l in earlier:
                continue
            above = [s for s in range(1, k) if i_tuple[s - 1] > l]
            yield (
                'zero', k, l,
                tuple(sorted([l] + [i_tuple[s - 1] for s in above])),
                tuple(sorted([k] + above)),
            )


def prop43_conditions(matrix: PairingMatrix, i_tuple: Sequence[int]) -> list[MinorCondition]:
    """Every condition on i_tuple with its exact minor."""
    return [
        MinorCondition(kind, k, l, rows, cols, dtilde_minor(matrix, rows, cols))
        for kind, k, l, rows, cols in _condition_sets(i_tuple, matrix.row_count)
    ]


def _satisfies(
    matrix: PairingMatrix,
    i_tuple: Sequence[int],
    cache: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction]
) -> bool:
    for kind, _, _, rows, cols in _condition_sets(i_tuple, matrix.row_count):
        key = (rows, cols)
        if key not in cache:
            cache[key] = dtilde_minor(matrix, rows, cols)
        if bool(cache[key]) != (kind == 'nonzero'):
            return False
    return True


def find_prop43_certificate(
    system: RootSystem,
    d_order: Sequence[Root],
    simple_order: Sequence[int]
) -> Optional[tuple[int, ...]]:
    """
    Search every tuple of distinct row indices for one meeting all conditions.

    Args:
        system: Root system
        d_order: Roots of D in column order
        simple_order: Permutation of 1..rank, the row order

    Returns:
        The tuple, or None if no tuple works

    Raises:
        ConsistencyError: If two tuples satisfy the conditions
    """
    matrix = p_matrix(system, simple_order, d_order)
    cache: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
    found = [
        candidate
        for candidate in itertools.permutations(range(1, matrix.row_count + 1), matrix.column_count)
        if _satisfies(matrix, candidate, cache)
    ]
    if len(found) > 1:
        raise ConsistencyError(
            f"Tuples {found} all certify {[str(root) for root in d_order]} "
            f"under the order {list(simple_order)}"
        )
    return found[0] if found else None


def linear_extensions(system: RootSystem, placement: Sequence[Root]) -> list[tuple[Root, ...]]:
    """Orders on D listing no root before a larger one."""
    roots = system.sorted_roots(placement)
    return [
        order for order in itertools.permutations(roots)
        if not any(
            system.less(order[i], order[j])
            for i in range(len(order)) for j in range(i + 1, len(order))
        )
    ]


# =============================================================================
# Separating simple roots and the local sum test
# =============================================================================

def check_prop42(system: RootSystem, placement: Sequence[Root], beta0: Root, alpha0: Root) -> bool:
    """
    (alpha_0, beta_0) != 0 and (alpha_0, beta) = 0 for every other beta in D
    with beta not below beta_0.

    Raises:
        ValueError: If beta_0 is not in D or alpha_0 is not simple
    """
    roots = list(placement)
    if beta0 not in roots:
        raise ValueError(f"{beta0} is not in the placement")
    if alpha0 not in system.simple_roots:
        raise ValueError(f"{alpha0} is not a simple root")
    if not system.inner_product(alpha0, beta0):
        return False
    return all(
        not system.inner_product(alpha0, beta)
        for beta in roots
        if beta != beta0 and not system.less(beta, beta0)
    )


def lemma41_decomposition(
    system: RootSystem,
    placement: Sequence[Root],
    beta: Root
) -> Optional[tuple[Root, ...]]:
    """
    The unique decomposition beta_0 - beta = gamma_1 + ... + gamma_k when
    every partial sum beta + sum over J of gamma_j is a positive root.

    Returns:
        The decomposition, or None if the test fails

    Raises:
        ValueError: If D has no unique maximal root or beta is not submaximal
    """
    roots = list(placement)
    maxima = system.maximal_roots(roots)
    if len(maxima) != 1:
        raise ValueError(f"Placement has {len(maxima)} maximal roots, not one")
    beta0 = maxima[0]
    if beta not in roots or beta == beta0:
        raise ValueError(f"{beta} is not a non-maximal root of the placement")
    if any(system.less(beta, gamma) for gamma in roots if gamma != beta0):
        raise ValueError(f"{beta} is not submaximal")

    decompositions = system.sum_decompositions(beta0 - beta)
    if len(decompositions) != 1:
        return None
    gammas = decompositions[0]
    for size in range(len(gammas) + 1):
        for subset in itertools.combinations(gammas, size):
            total = beta
            for gamma in subset:
                total = total + gamma
            if not system.is_positive_root(total):
                return None
    return gammas


def check_lemma41(system: RootSystem, placement: Sequence[Root], beta: Root) -> bool:
    return lemma41_decomposition(system, placement, beta) is not None


# =============================================================================
# Certificates
# =============================================================================

class Tool(str, Enum):
    """How the value xi(beta) is pinned by the orbit."""
    MAXIMAL_ROOT = 'MaximalRoot'
    PROP42 = 'Prop42'
    LEMMA41 = 'Lemma41'
    PROP43 = 'Prop43'
    EXCLUDED = 'Excluded'


@dataclass
class Justification:
    tool: Tool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {'tool': self.tool.value, **self.detail}


@dataclass
class Certificate:
    """
    Justifications for the roots of one placement.

    Attributes:
        placement: The rook placement
        per_root: Justification of each justified root
    """
    placement: RookPlacement
    per_root: dict[Root, Justification] = field(default_factory=dict)

    @property
    def unjustified(self) -> list[Root]:
        return [root for root in self.placement if root not in self.per_root]

    @property
    def excluded(self) -> bool:
        return any(j.tool is Tool.EXCLUDED for j in self.per_root.values())

    @property
    def complete(self) -> bool:
        return not self.unjustified and not self.excluded

    def tool_of(self, root: Root) -> Optional[Tool]:
        justification = self.per_root.get(root)
        return justification.tool if justification else None

    def to_json(self) -> dict[str, Any]:
        return {
            'placement': [str(root) for root in self.placement],
            'complete': self.complete,
            'roots': {str(root): j.to_json() for root, j in self.per_root.items()},
            'unjustified': [str(root) for root in self.unjustified],
        }


def _singularity_witness(system: RootSystem, placement: RookPlacement) -> Optional[tuple[Root, Root]]:
    for a, b in itertools.permutations(placement, 2):
        if system.is_positive_root(a - b):
            return a, b
    return None


def _search_prop43(
    system: RootSystem,
    placement: RookPlacement
) -> Optional[tuple[tuple[int, ...], tuple[Root, ...], tuple[int, ...]]]:
    extensions = linear_extensions(system, placement)
    for simple_order in itertools.permutations(range(1, system.rank + 1)):
        for d_order in extensions:
            found = find_prop43_certificate(system, d_order, simple_order)
            if found is not None:
                return simple_order, d_order, found
    return None


def certify_distinctness(system: RootSystem, placement: RookPlacement) -> Certificate:
    """
    Justify every root of a rook placement.

    Tools are tried in the order maximal root, separating simple root, local
    sum test, and a row-index tuple search over all simple-root orders and all orders on D.
    Roots of a singular placement are all Excluded with a witness pair.

    Raises:
        ValueError: If the placement is not an orthogonal rook placement
    """
    if not system.is_rook_placement(placement):
        raise ValueError(f"{placement} is not a rook placement of {system.kind}")
    certificate = Certificate(placement)

    witness = _singularity_witness(system, placement)
    if witness is not None:
        reason = f"{witness[0]} - {witness[1]} is a positive root"
        for root in placement:
            certificate.per_root[root] = Justification(Tool.EXCLUDED, {'reason': reason})
        return certificate
    if not system.is_orthogonal(placement):
        raise ValueError(f"{placement} is not orthogonal")

    roots = list(placement)
    maxima = set(system.maximal_roots(roots))
    for beta in roots:
        if beta in maxima:
            certificate.per_root[beta] = Justification(Tool.MAXIMAL_ROOT)
            continue
        for index, alpha0 in enumerate(system.simple_roots, start=1):
            if check_prop42(system, roots, beta, alpha0):
                certificate.per_root[beta] = Justification(Tool.PROP42, {'alpha0': index})
                break
        if beta in certificate.per_root:
            continue
        try:
            gammas = lemma41_decomposition(system, roots, beta)
        except ValueError:
            gammas = None
        if gammas is not None:
            certificate.per_root[beta] = Justification(
                Tool.LEMMA41, {'decomposition': [str(gamma) for gamma in gammas]}
            )

    if certificate.unjustified:
        found = _search_prop43(system, placement)
        if found is not None:
            simple_order, d_order, i_tuple = found
            detail = {
                'simple_order': list(simple_order),
                'd_order': [str(root) for root in d_order],
                'i_tuple': list(i_tuple),
            }
            for beta in certificate.unjustified:
                certificate.per_root[beta] = Justification(Tool.PROP43, dict(detail))

    if certificate.unjustified:
        logger.warning(
            f"{placement}: no justification for "
            f"{', '.join(str(root) for root in certificate.unjustified)}"
        )
    return certificate


def certify_all(system: RootSystem) -> Report:
    """Certify every orthogonal non-singular rook placement of the system."""
    placements = enumerate_rook_placements(system, 'orthogonal-nonsingular')
    logger.info(f"Certifying {len(placements)} orthogonal non-singular placements of {system.kind}")

    report = Report(title=f"{system.kind} distinctness certificates", command='f4 certify')
    tool_counts = {tool.value: 0 for tool in Tool}
    incomplete = []
    certificates = []
    for count, placement in enumerate(placements, start=1):
        certificate = certify_distinctness(system, placement)
        certificates.append(certificate.to_json())
        for justification in certificate.per_root.values():
            tool_counts[justification.tool.value] += 1
        if not certificate.complete:
            incomplete.append(placement)
            report.add(CheckResult(
                name=str(placement),
                status=Status.FAIL,
                message='unjustified: ' + ', '.join(str(root) for root in certificate.unjustified),
                detail=certificate.to_json(),
            ))
        if count % PROGRESS_EVERY == 0:
            logger.info(f"  {count}/{len(placements)} placements certified")

    report.add(CheckResult(
        name='all placements complete',
        status=Status.FAIL if incomplete else Status.PASS,
        message=f"{len(placements) - len(incomplete)} of {len(placements)} complete",
        detail={'placements': len(placements), 'incomplete': len(incomplete)},
    ))
    report.data['tool_counts'] = tool_counts
    report.data['certificates'] = certificates
    return report


# =============================================================================
# Checks against the printed data
# =============================================================================

def pairing_cross_check(
    table: StructureTable,
    placement: Sequence[Root],
    xi: Mapping[Root, Fraction]
) -> bool:
    """
    The (h_i, e_beta) entry of the transposed ad-matrix of sum xi(beta) e_beta
    equals -xi(beta) p_{i,beta} for every simple index i and beta in D.
    """
    y = AlgebraElement.from_roots({root: xi[root] for root in placement})
    order = table.basis_order()
    index = {element: position for position, element in enumerate(order)}
    ad = table.ad_matrix(y)
    system = table.system
    for i in range(1, system.rank + 1):
        h = index[BasisElement.h(i)]
        for beta in placement:
            # transposed entry (h_i, e_beta) is the coefficient of e_beta in [y, h_i]
            value = ad[index[BasisElement.e(beta)]][h]
            if value != -xi[beta] * system.coroot_pairing(beta, i):
                return False
    return True


def verify_maximal_list(system: RootSystem, data: F4Data) -> Report:
    """Compare the enumerated maximal rook placements with D_1..D_24."""
    report = Report(title='maximal placements', command='f4 maximal')
    printed = data.maximal

    bad = [index for index, placement in printed.items() if not system.is_rook_placement(placement)]
    report.add(CheckResult(
        name='printed placements are rook placements',
        status=Status.FAIL if bad else Status.PASS,
        message=f"not rook placements: {bad}" if bad else f"{len(printed)} checked",
    ))

    computed = maximal_rook_placements(system)
    computed_sets = {placement.as_set() for placement in computed}
    printed_sets = {placement.as_set(): index for index, placement in printed.items()}
    missing = sorted(index for key, index in printed_sets.items() if key not in computed_sets)
    extra = [str(p) for p in computed if p.as_set() not in printed_sets]
    report.add(CheckResult(
        name='enumeration equals D_1..D_24',
        status=Status.PASS if not missing and not extra else Status.FAIL,
        message=f"{len(computed)} maximal placements enumerated",
        detail={'computed': len(computed), 'missing': missing, 'extra': extra},
    ))

    not_first = [
        index for index, placement in printed.items()
        if placement.roots[0] not in system.maximal_roots(placement)
    ]
    report.add(CheckResult(
        name='beta_1 is maximal',
        status=Status.FAIL if not_first else Status.PASS,
        message=f"fails for {not_first}" if not_first else 'holds for every D_i',
    ))

    maximal_positions = {
        index: [position for position, root in enumerate(placement, start=1)
                if root in system.maximal_roots(placement)]
        for index, placement in printed.items()
    }
    multi = sorted(index for index, positions in maximal_positions.items() if len(positions) > 1)
    report.add(CheckResult(
        name='placements with a second maximal root',
        status=Status.PASS if multi == sorted(data.multi_maximal) else Status.FAIL,
        message=f"computed {multi}, printed {sorted(data.multi_maximal)}",
        detail={f"D_{index}": maximal_positions[index] for index in multi},
    ))

    second = sorted(index for index in multi if 2 in maximal_positions[index])
    report.add(CheckResult(
        name='beta_2 is the second maximal root',
        status=Status.PASS if second == multi else Status.FLAG,
        message=(
            'beta_2 is maximal in every one' if second == multi
            else f"beta_2 is maximal only in {second}; "
                 f"elsewhere the second maximal root sits at another position"
        ),
        detail={f"D_{index}": maximal_positions[index] for index in multi},
    ))

    first = printed[1].roots
    chain = all(
        first[i] in system.singular_set(first[j])
        for i in range(1, len(first)) for j in range(i)
    )
    report.add(CheckResult(
        name='D_1 singular chain',
        status=Status.PASS if chain else Status.FAIL,
        message='beta_i lies in S(beta_j) for all j < i' if chain else 'chain broken',
    ))
    return report


def verify_prop42_list(system: RootSystem, data: F4Data) -> Report:
    """Evaluate every printed separating-root triple."""
    report = Report(title='separating-root triples', command='f4 certify')
    for claim in data.prop42:
        placement = data.placement(claim.placement_index)
        beta0 = placement.roots[claim.beta0_index - 1]
        alpha0 = system.simple_roots[claim.alpha0_index - 1]
        holds = check_prop42(system, placement.roots, beta0, alpha0)
        report.add(CheckResult(
            name=f"D_{claim.placement_index} beta_{claim.beta0_index} alpha_{claim.alpha0_index}",
            status=Status.PASS if holds else Status.FAIL,
            detail={'beta0': str(beta0), 'alpha0': str(alpha0)},
        ))
    return report


def verify_exceptional_list(system: RootSystem, data: F4Data) -> Report:
    """D_25..D_32: the roots printed for the local sum test pass, and the certificate is complete."""
    report = Report(title='exceptional placements', command='f4 certify')
    for entry in data.exceptional:
        placement = entry.placement
        name = f"D_{entry.index}"
        if not (system.is_nonsingular(placement) and system.is_orthogonal(placement)):
            report.add(CheckResult(name, Status.FAIL, 'not orthogonal non-singular'))
            continue

        lemma = {}
        for position in entry.lemma41_roots:
            beta = placement.roots[position - 1]
            try:
                lemma[f"beta_{position}"] = check_lemma41(system, placement.roots, beta)
            except ValueError as exc:
                logger.debug(f"{name} beta_{position}: {exc}")
                lemma[f"beta_{position}"] = False

        certificate = certify_distinctness(system, placement)
        tools = {
            f"beta_{position}": (certificate.tool_of(root).value if certificate.tool_of(root) else None)
            for position, root in enumerate(placement, start=1)
        }
        if not all(lemma.values()) or not certificate.complete:
            status = Status.FAIL
        elif any(tools[key] != Tool.LEMMA41.value for key in lemma):
            status = Status.FLAG
        else:
            status = Status.PASS
        report.add(CheckResult(
            name=name,
            status=status,
            message=', '.join(f"{key} {tools[key]}" for key in tools),
            detail={'lemma41': lemma, 'certificate': certificate.to_json()},
        ))
    return report


def _completions(order: Sequence[int], rank: int) -> list[tuple[int, ...]]:
    """Permutations obtained by replacing one copy of a repeated index with a missing one."""
    missing = [index for index in range(1, rank + 1) if index not in order]
    if len(missing) != 1:
        return []
    results = []
    for position, value in enumerate(order):
        if order.count(value) > 1:
            candidate = list(order)
            candidate[position] = missing[0]
            results.append(tuple(candidate))
    return results


def _row_check(system: RootSystem, row: TableRow) -> CheckResult:
    name = f"row {row.index}"
    printed = tuple(row.i_tuple)
    detail: dict[str, Any] = {
        'placement': [str(root) for root in row.placement],
        'simple_order': list(row.simple_order),
        'printed': list(printed),
    }

    if not row.order_is_permutation:
        outcomes = []
        for order in _completions(row.simple_order, system.rank):
            found = find_prop43_certificate(system, row.placement.roots, order)
            outcomes.append({
                'simple_order': list(order),
                'computed': list(found) if found else None,
                'matches': found == printed,
            })
        detail['completions'] = outcomes
        reproducing = [o['simple_order'] for o in outcomes if o['matches']]
        return CheckResult(
            name, Status.FLAG,
            f"printed order {list(row.simple_order)} is not a permutation; "
            + (f"completion {reproducing[0]} reproduces {list(printed)}" if reproducing
               else 'no completion reproduces the printed tuple'),
            detail,
        )

    matrix = p_matrix(system, row.simple_order, row.placement.roots)
    found = find_prop43_certificate(system, row.placement.roots, row.simple_order)
    detail['matrix'] = matrix.to_json()
    detail['computed'] = list(found) if found else None
    detail['conditions'] = [c.to_json() for c in prop43_conditions(matrix, found or printed)]
    if found == printed:
        return CheckResult(name, Status.PASS, f"certificate {list(found)} confirmed", detail)
    return CheckResult(
        name, Status.FLAG,
        f"MISMATCH: computed {list(found) if found else None}, printed {list(printed)}",
        detail,
    )


def verify_prop44_table(
    system: RootSystem,
    data: F4Data,
    rows: Optional[Sequence[int]] = None,
    table: Optional[StructureTable] = None
) -> Report:
    """
    Recompute the row-index tuple of every table row under its printed orders.

    Mismatches are FLAGged with both tuples and all minor values. The
    printed worked example is compared by absolute value. With a structure
    table the pairing semantics are cross-checked against ad-matrices.
    """
    report = Report(title='certificate table', command='f4 table')
    selected = [row for row in data.table if rows is None or row.index in rows]
    matches = 0
    for row in selected:
        check = report.add(_row_check(system, row))
        matches += check.status is Status.PASS
        logger.debug(f"{check.name}: {check.status.value} {check.message}")
    report.data['matches'] = matches
    report.data['rows'] = len(selected)

    if rows is None or data.worked_row in rows:
        report.add(_worked_example_check(system, data))

    if table is not None:
        failures = [
            row.index for row in selected
            if not pairing_cross_check(
                table, row.placement.roots,
                {root: Fraction(j) for j, root in enumerate(row.placement, start=1)},
            )
        ]
        report.add(CheckResult(
            name='pairing matches ad-matrix',
            status=Status.FAIL if failures else Status.PASS,
            message=f"rows {failures}" if failures else f"{len(selected)} rows",
        ))
    return report


def _worked_example_check(system: RootSystem, data: F4Data) -> CheckResult:
    row = data.row(data.worked_row)
    matrix = p_matrix(system, row.simple_order, row.placement.roots)
    values = []
    for printed in data.worked_values:
        computed = dtilde_minor(matrix, printed.rows, printed.cols)
        values.append({
            'name': printed.name,
            'rows': list(printed.rows),
            'cols': list(printed.cols),
            'printed': format_rational(printed.printed),
            'computed': format_rational(computed),
            'agrees': abs(computed) == abs(printed.printed),
        })
    disagreeing = [value['name'] for value in values if not value['agrees']]
    return CheckResult(
        name=f"row {row.index} printed values",
        status=Status.FLAG if disagreeing else Status.PASS,
        message=f"differ in absolute value: {', '.join(disagreeing)}" if disagreeing
        else 'all printed values agree up to sign',
        detail={'values': values},
    )
