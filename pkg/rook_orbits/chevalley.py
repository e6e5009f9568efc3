"""
Chevalley basis of the full Lie algebra g = n + h + n^- of a root system.

Structure constants N_{a,b} are built from the extraspecial pairs with
positive signs; every other constant follows from the standard relations
between structure constants. The finished table is checked for
antisymmetry, the |N_{a,b}| = p+1 rule and the Jacobi identity before it
is returned.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional

from rook_orbits.exact import random_rational
from rook_orbits.exceptions import ConsistencyError
from rook_orbits.rootsys import Root, RootSystem

logger = logging.getLogger(__name__)

# Exhaustive Jacobi check up to this many basis elements, sampled above it
JACOBI_EXHAUSTIVE_LIMIT: int = 60
JACOBI_SAMPLE_SIZE: int = 20000


@dataclass(frozen=True)
class BasisElement:
    """
    A Chevalley basis vector: e_gamma for a root gamma, or h_i for a simple root.

    Attributes:
        root: The root of a root vector (None for Cartan elements)
        cartan_index: Simple-root index 1..rank of a Cartan element (0 for root vectors)
    """
    root: Optional[Root] = None
    cartan_index: int = 0

    @classmethod
    def e(cls, root: Root) -> 'BasisElement':
        return cls(root=root)

    @classmethod
    def h(cls, index: int) -> 'BasisElement':
        return cls(cartan_index=index)

    @property
    def is_cartan(self) -> bool:
        return self.root is None

    @property
    def is_positive(self) -> bool:
        """True for e_gamma with gamma a positive root."""
        return self.root is not None and all(c >= 0 for c in self.root.coeffs)

    def __str__(self) -> str:
        if self.root is None:
            return f"h{self.cartan_index}"
        return f"e[{self.root}]"


class AlgebraElement:
    """
    A finitely supported rational combination of basis elements.

    Zero coefficients are never stored.
    """

    def __init__(self, coeffs: Optional[Mapping[BasisElement, Fraction | int]] = None):
        self.coeffs: dict[BasisElement, Fraction] = {
            element: Fraction(value)
            for element, value in (coeffs or {}).items() if value
        }

    @classmethod
    def from_roots(cls, values: Mapping[Root, Fraction | int]) -> 'AlgebraElement':
        """The element sum of values[gamma] * e_gamma."""
        return cls({BasisElement.e(root): value for root, value in values.items()})

    @classmethod
    def basis(cls, element: BasisElement) -> 'AlgebraElement':
        return cls({element: 1})

    def __getitem__(self, element: BasisElement) -> Fraction:
        return self.coeffs.get(element, Fraction(0))

    def __iter__(self) -> Iterator[tuple[BasisElement, Fraction]]:
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        total = dict(self.coeffs)
        for element, value in other.coeffs.items():
            total[element] = total.get(element, Fraction(0)) + value
        return AlgebraElement(total)

    def __neg__(self) -> 'AlgebraElement':
        return self.scaled(-1)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + (-other)

    def scaled(self, factor: Fraction | int) -> 'AlgebraElement':
        return AlgebraElement({k: v * factor for k, v in self.coeffs.items()})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def in_nilradical(self) -> bool:
        """Supported on positive root vectors, i.e. an element of n."""
        return all(element.is_positive for element in self.coeffs)

    def __repr__(self) -> str:
        terms = ' + '.join(f"{value}*{element}" for element, value in self.coeffs.items())
        return f"AlgebraElement({terms or '0'})"


@dataclass(frozen=True, eq=False)
class StructureTable:
    """
    Bracket constants of a Chevalley basis (possibly with rescaled root vectors).

    Attributes:
        system: The root system
        n_consts: N_{a,b} for every ordered pair of roots with a+b a root
        cartan_pairings: 2(alpha_i, gamma)/(alpha_i, alpha_i) keyed by (i, gamma)
        coroot_coords: Coordinates of h_gamma = [e_gamma, e_-gamma] over h_1..h_n
        is_chevalley: False once root vectors have been rescaled
    """
    system: RootSystem
    n_consts: Mapping[tuple[Root, Root], Fraction] = field(repr=False)
    cartan_pairings: Mapping[tuple[int, Root], Fraction] = field(repr=False)
    coroot_coords: Mapping[Root, tuple[Fraction, ...]] = field(repr=False)
    is_chevalley: bool = True

    def n(self, a: Root, b: Root) -> Fraction:
        """N_{a,b}, zero when a+b is not a root."""
        return self.n_consts.get((a, b), Fraction(0))

    def roots(self) -> list[Root]:
        """All roots, positive ones first (canonical order), then their negatives."""
        positives = list(self.system.positive_roots)
        return positives + [-root for root in positives]

    # -------------------------------------------------------------------------
    # Brackets
    # -------------------------------------------------------------------------

    def bracket_basis(self, a: BasisElement, b: BasisElement) -> dict[BasisElement, Fraction]:
        """[a, b] for two basis elements, as a coefficient map."""
        if a.is_cartan and b.is_cartan:
            return {}
        if a.is_cartan:
            return {b: self.cartan_pairings[(a.cartan_index, b.root)]}
        if b.is_cartan:
            return {a: -self.cartan_pairings[(b.cartan_index, a.root)]}
        total = a.root + b.root
        if total.is_zero:
            return {
                BasisElement.h(i + 1): coeff
                for i, coeff in enumerate(self.coroot_coords[a.root]) if coeff
            }
        value = self.n_consts.get((a.root, b.root))
        if value:
            return {BasisElement.e(total): value}
        return {}

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of the table to arbitrary elements."""
        total: dict[BasisElement, Fraction] = {}
        for a, x_a in x:
            for b, y_b in y:
                for element, value in self.bracket_basis(a, b).items():
                    total[element] = total.get(element, Fraction(0)) + x_a * y_b * value
        return AlgebraElement(total)

    # -------------------------------------------------------------------------
    # Adjoint matrices
    # -------------------------------------------------------------------------

    def basis_order(self, cartan_last: Optional[int] = None) -> list[BasisElement]:
        """
        The total order <=_t on the basis.

        Positive root vectors by decreasing root, then h_1..h_n, then negative
        root vectors e_-gamma with gamma increasing. ``cartan_last`` moves
        h_i to the end of the Cartan block.
        """
        positives = [BasisElement.e(root) for root in reversed(self.system.positive_roots)]
        cartan_indices = list(range(1, self.system.rank + 1))
        if cartan_last is not None:
            if cartan_last not in cartan_indices:
                raise ValueError(f"No simple root with index {cartan_last}")
            cartan_indices.remove(cartan_last)
            cartan_indices.append(cartan_last)
        cartan = [BasisElement.h(i) for i in cartan_indices]
        negatives = [BasisElement.e(-root) for root in self.system.positive_roots]
        return positives + cartan + negatives

    def ad_matrix(self, x: AlgebraElement, cartan_last: Optional[int] = None) -> list[list[Fraction]]:
        """
        Matrix of ad x in the <=_t order: entry (i, j) is the coefficient of
        basis[i] in [x, basis[j]].
        """
        order = self.basis_order(cartan_last)
        index = {element: i for i, element in enumerate(order)}
        size = len(order)
        matrix = [[Fraction(0)] * size for _ in range(size)]
        for column, element in enumerate(order):
            image = self.bracket(x, AlgebraElement.basis(element))
            for target, value in image:
                matrix[index[target]][column] = value
        return matrix

    def nilpotency_degree(self, x: AlgebraElement) -> int:
        """
        Least k with (ad x)^k = 0 on g.

        Raises:
            ValueError: If x is not in n
        """
        if not x.in_nilradical:
            raise ValueError("nilpotency_degree needs an element of n")
        vectors = [AlgebraElement.basis(element) for element in self.basis_order()]
        degree = 0
        while vectors:
            vectors = [image for image in (self.bracket(x, v) for v in vectors) if not image.is_zero]
            degree += 1
        return degree

    # -------------------------------------------------------------------------
    # Rescaling
    # -------------------------------------------------------------------------

    def rescaled(self, scales: Mapping[Root, Fraction | int]) -> 'StructureTable':
        """
        Table of the basis e_gamma -> t_gamma e_gamma, e_-gamma -> e_-gamma / t_gamma.

        Args:
            scales: Nonzero t_gamma for positive roots (missing roots keep 1)

        Returns:
            A table with N'_{a,b} = N_{a,b} t_a t_b / t_{a+b}
        """
        def factor(root: Root) -> Fraction:
            if self.system.is_positive_root(root):
                return Fraction(scales.get(root, 1))
            return 1 / Fraction(scales.get(-root, 1))

        for root, value in scales.items():
            if not value:
                raise ValueError(f"Scale for {root} must be nonzero")
        n_consts = {
            (a, b): value * factor(a) * factor(b) / factor(a + b)
            for (a, b), value in self.n_consts.items()
        }
        return StructureTable(
            system=self.system,
            n_consts=n_consts,
            cartan_pairings=self.cartan_pairings,
            coroot_coords=self.coroot_coords,
            is_chevalley=False,
        )

    def random_rescaling(self, rng: random.Random) -> 'StructureTable':
        """Rescale every positive root vector by a random nonzero small rational."""
        scales = {root: random_rational(rng, nonzero=True) for root in self.system.positive_roots}
        return self.rescaled(scales)

    # -------------------------------------------------------------------------
    # Verification
    # -------------------------------------------------------------------------

    def string_length(self, a: Root, b: Root) -> int:
        """p = max{k : b - k*a is a root}."""
        p = 0
        probe = b - a
        while self.system.is_root(probe):
            p += 1
            probe = probe - a
        return p

    def jacobi_defect(self, a: BasisElement, b: BasisElement, c: BasisElement) -> AlgebraElement:
        """[a,[b,c]] + [b,[c,a]] + [c,[a,b]] (zero in a Lie algebra)."""
        ea, eb, ec = (AlgebraElement.basis(v) for v in (a, b, c))
        return (
            self.bracket(ea, self.bracket(eb, ec))
            + self.bracket(eb, self.bracket(ec, ea))
            + self.bracket(ec, self.bracket(ea, eb))
        )

    def _jacobi_triples(self, seed: int) -> Iterable[tuple[BasisElement, ...]]:
        basis = self.basis_order()
        if len(basis) <= JACOBI_EXHAUSTIVE_LIMIT:
            return itertools.combinations(basis, 3)
        rng = random.Random(seed)
        return (tuple(rng.sample(basis, 3)) for _ in range(JACOBI_SAMPLE_SIZE))

    def validate(self, check_magnitudes: bool = True, seed: int = 0) -> None:
        """
        Check antisymmetry, N != 0 exactly on root sums, |N| = p+1 and Jacobi.

        Raises:
            ConsistencyError: On the first violated axiom
        """
        roots = self.roots()
        for a in roots:
            for b in roots:
                total = a + b
                expected_nonzero = not total.is_zero and self.system.is_root(total)
                value = self.n(a, b)
                if bool(value) != expected_nonzero:
                    raise ConsistencyError(f"N({a}; {b}) = {value} but a+b root is {expected_nonzero}")
                if value != -self.n(b, a):
                    raise ConsistencyError(f"N({a}; {b}) is not antisymmetric")
                if check_magnitudes and value and abs(value) != self.string_length(a, b) + 1:
                    raise ConsistencyError(f"|N({a}; {b})| = {abs(value)} violates the p+1 rule")
        checked = 0
        for triple in self._jacobi_triples(seed):
            defect = self.jacobi_defect(*triple)
            if not defect.is_zero:
                raise ConsistencyError(
                    f"Jacobi identity fails on {', '.join(map(str, triple))}: {defect}"
                )
            checked += 1
        logger.debug(f"{self.system.kind}: Jacobi identity holds on {checked} basis triples")


# =============================================================================
# Construction
# =============================================================================

def _positive_constants(system: RootSystem) -> dict[tuple[Root, Root], Fraction]:
    """
    N_{r,s} for positive r, s with r+s a root.

    Roots xi are processed by increasing height. The extraspecial pair of xi
    (r0 minimal with xi - r0 positive) gets N = +(p+1); every other special
    pair follows from the four-root relation
        N_{r,s} = (xi,xi)/N_{r0,s0} * [ N_{s,-r0} N_{r,-s0} / |s-r0|^2
                                      + N_{-r0,r} N_{s,-s0} / |r-r0|^2 ]
    with a term omitted when its difference is not a root.
    """
    positives = system.positive_roots
    constants: dict[tuple[Root, Root], Fraction] = {}

    def string_length(a: Root, b: Root) -> int:
        p = 0
        probe = b - a
        while system.is_root(probe):
            p += 1
            probe = probe - a
        return p

    def mixed(a: Root, b: Root) -> Fraction:
        # N_{a,-b} for positive a, b with a - b a root
        c = a - b
        if system.is_positive_root(c):
            return -system.norm(c) / system.norm(a) * constants[(b, c)]
        d = b - a
        return system.norm(d) / system.norm(b) * constants[(d, a)]

    def lookup(a: Root, b: Root) -> Fraction:
        total = a + b
        if total.is_zero or not system.is_root(total):
            return Fraction(0)
        a_positive = system.is_positive_root(a)
        b_positive = system.is_positive_root(b)
        if a_positive and b_positive:
            return constants[(a, b)]
        if not a_positive and not b_positive:
            return -constants[(-a, -b)]
        if a_positive:
            return mixed(a, -b)
        return -mixed(b, -a)

    def term(a: Root, b: Root, c: Root, d: Root) -> Fraction:
        total = a + b
        if total.is_zero or not system.is_root(total):
            return Fraction(0)
        return lookup(a, b) * lookup(c, d) / system.norm(total)

    for xi in positives:
        pairs = [
            (r, xi - r) for r in positives
            if system.is_positive_root(xi - r) and system.position(r) < system.position(xi - r)
        ]
        if not pairs:
            continue
        r0, s0 = pairs[0]
        extraspecial = Fraction(string_length(r0, s0) + 1)
        constants[(r0, s0)] = extraspecial
        constants[(s0, r0)] = -extraspecial
        for r, s in pairs[1:]:
            value = system.norm(xi) / extraspecial * (
                term(s, -r0, r, -s0) + term(-r0, r, s, -s0)
            )
            constants[(r, s)] = value
            constants[(s, r)] = -value

    # Extend to all ordered pairs of roots
    every_root = list(positives) + [-root for root in positives]
    table: dict[tuple[Root, Root], Fraction] = {}
    for a in every_root:
        for b in every_root:
            value = lookup(a, b)
            if value:
                table[(a, b)] = value
    return table


@lru_cache(maxsize=None)
def build_chevalley(system: RootSystem) -> StructureTable:
    """
    Build and verify the Chevalley basis structure table of a root system.

    Args:
        system: Root system (A_n, G2 or F4)

    Returns:
        The verified structure table

    Raises:
        ConsistencyError: If the constructed table violates an axiom
    """
    every_root = list(system.positive_roots) + [-root for root in system.positive_roots]
    cartan_pairings = {
        (i, gamma): system.coroot_pairing(gamma, i)
        for i in range(1, system.rank + 1)
        for gamma in every_root
    }
    coroot_coords = {
        gamma: tuple(
            gamma.coeffs[i] * system.gram[i][i] / system.norm(gamma)
            for i in range(system.rank)
        )
        for gamma in every_root
    }
    table = StructureTable(
        system=system,
        n_consts=_positive_constants(system),
        cartan_pairings=cartan_pairings,
        coroot_coords=coroot_coords,
    )
    table.validate()
    logger.debug(f"{system.kind}: Chevalley table with {len(table.n_consts)} constants verified")
    return table
