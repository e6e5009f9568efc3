"""
Linear forms on n, the forms f_{D,xi}, and the coadjoint action of N = exp(n).

For x in n and a form lambda, (exp(x).lambda)(y) = lambda(exp(-ad x) y). The
exponential series stops once (ad x)^k y vanishes, so every result is an
exact rational form.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Sequence

import sympy

from rook_orbits.chevalley import AlgebraElement, BasisElement, StructureTable
from rook_orbits.exact import format_rational, matrix_rank, random_rational, to_sympy
from rook_orbits.rootsys import Root, RookPlacement, RootSystem

logger = logging.getLogger(__name__)

XiMap = dict[Root, Fraction]


class LinearForm:
    """
    A form lambda = sum of lambda_gamma e*_gamma on n.

    Zero coefficients are never stored; missing roots read as 0.
    """

    def __init__(self, coeffs: Optional[Mapping[Root, Fraction | int]] = None):
        self.coeffs: dict[Root, Fraction] = {
            root: Fraction(value) for root, value in (coeffs or {}).items() if value
        }

    def __getitem__(self, root: Root) -> Fraction:
        return self.coeffs.get(root, Fraction(0))

    def __iter__(self) -> Iterator[tuple[Root, Fraction]]:
        return iter(self.coeffs.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: 'LinearForm') -> 'LinearForm':
        total = dict(self.coeffs)
        for root, value in other.coeffs.items():
            total[root] = total.get(root, Fraction(0)) + value
        return LinearForm(total)

    @property
    def support(self) -> frozenset[Root]:
        return frozenset(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> dict:
        """``{"coeffs": {"<root>": "p/q", ...}}``"""
        return {'coeffs': {str(root): format_rational(value) for root, value in self.coeffs.items()}}

    def __repr__(self) -> str:
        terms = ', '.join(f"{root}: {value}" for root, value in self.coeffs.items())
        return f"LinearForm({{{terms}}})"


@dataclass
class OrbitSample:
    """
    A sampled point of an orbit or basic subvariety.

    Attributes:
        witnesses: The group parameters x used (one per single-root orbit summand)
        form: The resulting linear form
    """
    witnesses: tuple[AlgebraElement, ...]
    form: LinearForm


def check_xi(placement: RookPlacement | Sequence[Root], xi: Mapping[Root, Fraction]) -> None:
    """
    Raises:
        ValueError: If xi is not defined exactly on the placement or takes the value 0
    """
    roots = set(placement)
    if set(xi) != roots:
        raise ValueError(
            f"xi is defined on {{{'; '.join(map(str, xi))}}} "
            f"but the placement is {{{'; '.join(map(str, roots))}}}"
        )
    for root, value in xi.items():
        if not value:
            raise ValueError(f"xi({root}) must be nonzero")


def f_form(placement: RookPlacement | Sequence[Root], xi: Mapping[Root, Fraction]) -> LinearForm:
    """f_{D,xi} = sum over alpha in D of xi(alpha) e*_alpha."""
    check_xi(placement, xi)
    return LinearForm({root: xi[root] for root in placement})


def _check_support(system: RootSystem, form: LinearForm) -> None:
    for root in form.support:
        if not system.is_positive_root(root):
            raise ValueError(f"Form has a coefficient on {root}, not a positive root of {system.kind}")


def _apply_ad(
    table: StructureTable,
    x: AlgebraElement,
    vector: Mapping[Root, Fraction],
    scale: Fraction
) -> dict[Root, Fraction]:
    """scale * [x, vector] for x and vector in n."""
    image: dict[Root, Fraction] = {}
    for element, x_value in x:
        for root, value in vector.items():
            constant = table.n(element.root, root)
            if constant:
                target = element.root + root
                image[target] = image.get(target, Fraction(0)) + scale * x_value * value * constant
    return {root: value for root, value in image.items() if value}


def coadjoint_act(table: StructureTable, x: AlgebraElement, form: LinearForm) -> LinearForm:
    """
    The form exp(x).lambda, evaluated exactly.

    Args:
        table: Structure constants
        x: Element of n
        form: The form lambda

    Returns:
        The transformed form

    Raises:
        ValueError: If x is not in n
    """
    if not x.in_nilradical:
        raise ValueError("coadjoint_act needs an element of n")
    _check_support(table.system, form)
    if x.is_zero or form.is_zero:
        return LinearForm(form.coeffs)

    result: dict[Root, Fraction] = {}
    for gamma in table.system.positive_roots:
        # accumulates lambda((-ad x)^k / k! e_gamma) until the term vanishes
        vector = {gamma: Fraction(1)}
        value = form[gamma]
        k = 1
        while vector:
            vector = _apply_ad(table, x, vector, Fraction(-1, k))
            value += sum((form[root] * coeff for root, coeff in vector.items()), Fraction(0))
            k += 1
        result[gamma] = value
    return LinearForm(result)


def coadjoint_matrix(table: StructureTable, x: AlgebraElement) -> sympy.Matrix:
    """
    exp(-ad x) restricted to n, as an exact sympy matrix over the canonical
    order of positive roots (column j is the image of e_gamma_j).

    A form acts as a row vector: (exp(x).lambda) = lambda_row * matrix.
    """
    if not x.in_nilradical:
        raise ValueError("coadjoint_matrix needs an element of n")
    roots = table.system.positive_roots
    index = {root: i for i, root in enumerate(roots)}
    size = len(roots)
    ad = sympy.zeros(size, size)
    for column, gamma in enumerate(roots):
        image = table.bracket(x, AlgebraElement.basis(BasisElement.e(gamma)))
        for element, value in image:
            ad[index[element.root], column] = to_sympy(value)

    result = sympy.eye(size)
    term = sympy.eye(size)
    k = 1
    while True:
        term = term * (-ad) / k
        if term.is_zero_matrix:
            break
        result += term
        k += 1
    return result


def random_nilradical_element(system: RootSystem, rng: random.Random) -> AlgebraElement:
    """x = sum of x_gamma e_gamma with small random rational x_gamma."""
    return AlgebraElement.from_roots(
        {root: random_rational(rng) for root in system.positive_roots}
    )


def sample_orbit(
    table: StructureTable,
    placement: RookPlacement | Sequence[Root],
    xi: Mapping[Root, Fraction],
    count: int,
    seed: int
) -> list[OrbitSample]:
    """
    Points exp(x).f_{D,xi} of the coadjoint orbit, with their witnesses.

    With seed 0 the first sample uses x = 0, i.e. f_{D,xi} itself.
    """
    if count < 0:
        raise ValueError(f"Sample count must be non-negative, got {count}")
    rng = random.Random(seed)
    base = f_form(placement, xi)
    samples = []
    for index in range(count):
        if seed == 0 and index == 0:
            x = AlgebraElement()
        else:
            x = random_nilradical_element(table.system, rng)
        samples.append(OrbitSample(witnesses=(x,), form=coadjoint_act(table, x, base)))
    return samples


def orbit_samples(
    table: StructureTable,
    placement: RookPlacement | Sequence[Root],
    xi: Mapping[Root, Fraction],
    count: int,
    seed: int
) -> list[LinearForm]:
    """Forms of the orbit Omega_{D,xi} drawn deterministically from seed."""
    return [sample.form for sample in sample_orbit(table, placement, xi, count, seed)]


def basic_variety_samples(
    table: StructureTable,
    placement: RookPlacement | Sequence[Root],
    xi: Mapping[Root, Fraction],
    count: int,
    seed: int
) -> list[OrbitSample]:
    """
    Points of the basic subvariety O_{D,xi}, the sum over alpha in D of the
    single-root orbits Omega_{{alpha}, xi(alpha)}, each summand with its own
    random group element.
    """
    if count < 0:
        raise ValueError(f"Sample count must be non-negative, got {count}")
    check_xi(placement, xi)
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        witnesses = []
        total = LinearForm()
        for root in placement:
            x = random_nilradical_element(table.system, rng)
            witnesses.append(x)
            total = total + coadjoint_act(table, x, LinearForm({root: xi[root]}))
        samples.append(OrbitSample(witnesses=tuple(witnesses), form=total))
    return samples


def kirillov_matrix(table: StructureTable, form: LinearForm) -> list[list[Fraction]]:
    """B_f(gamma, delta) = f([e_gamma, e_delta]) over the positive roots."""
    roots = table.system.positive_roots
    return [
        [table.n(gamma, delta) * form[gamma + delta] for delta in roots]
        for gamma in roots
    ]


def kirillov_rank(table: StructureTable, form: LinearForm) -> int:
    """Rank of the Kirillov form of f, the dimension of the orbit of f."""
    _check_support(table.system, form)
    rank = matrix_rank(kirillov_matrix(table, form))
    logger.debug(f"Kirillov rank {rank} for {form}")
    return rank
