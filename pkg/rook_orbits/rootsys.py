"""
Root systems A_n, G2 and F4 and the combinatorics of rook placements.

Roots are integer coefficient vectors over the simple roots. All geometry
goes through the rational Gram matrix of the simple roots, so inner products
are exact in every type (G2 included).
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from rook_orbits.constants import MAX_TYPE_A_RANK, SUPPORTED_FAMILIES

logger = logging.getLogger(__name__)

PLACEMENT_FILTERS: tuple[str, ...] = ('all', 'nonsingular', 'orthogonal-nonsingular')

_KIND_PATTERN = re.compile(r'^\s*([AaGgFf])\s*\(?\s*(\d+)\s*\)?\s*$')


@dataclass(frozen=True)
class Root:
    """
    A vector of the root lattice, written over the simple roots.

    Attributes:
        coeffs: Integer coordinates over alpha_1..alpha_n
    """
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))

    @classmethod
    def parse(cls, text: str) -> 'Root':
        """Parse the compact form ``"1,2,3,2"``."""
        parts = [part.strip() for part in text.strip().strip('()[]').split(',')]
        if not parts or any(not part.lstrip('-').isdigit() for part in parts):
            raise ValueError(f"Not a root vector: {text!r}")
        return cls(tuple(int(part) for part in parts))

    @classmethod
    def simple(cls, index: int, rank: int) -> 'Root':
        """The simple root alpha_index (1-based) of a rank-``rank`` system."""
        return cls(tuple(1 if i == index - 1 else 0 for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_rank(self, other: 'Root') -> None:
        if other.rank != self.rank:
            raise ValueError(f"Dimension mismatch: {self} and {other}")

    def __add__(self, other: 'Root') -> 'Root':
        self._check_rank(other)
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'Root') -> 'Root':
        self._check_rank(other)
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'Root':
        return Root(tuple(-c for c in self.coeffs))

    def scaled(self, factor: int) -> 'Root':
        return Root(tuple(factor * c for c in self.coeffs))

    def __str__(self) -> str:
        return ','.join(str(c) for c in self.coeffs)


def canonical_key(root: Root) -> tuple:
    """
    Sort key of the canonical order: by height, then lexicographically with
    the larger coefficient vector first (so alpha_1 precedes alpha_2).
    """
    return (root.height, tuple(-c for c in root.coeffs))


@dataclass(frozen=True)
class RookPlacement:
    """
    An ordered set of distinct positive roots.

    The rook condition itself depends on the root system and is checked
    with ``RootSystem.is_rook_placement``.

    Attributes:
        roots: The roots, in the order they were given
    """
    roots: tuple[Root, ...] = ()

    def __post_init__(self):
        roots = tuple(self.roots)
        if len(set(roots)) != len(roots):
            raise ValueError(f"Repeated root in placement: {', '.join(map(str, roots))}")
        object.__setattr__(self, 'roots', roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root: object) -> bool:
        return root in self.roots

    def as_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    def __str__(self) -> str:
        return '{' + '; '.join(str(root) for root in self.roots) + '}'


@dataclass(frozen=True)
class RootSystem:
    """
    Positive part of an irreducible root system.

    Attributes:
        family: 'A', 'G' or 'F'
        rank: Number of simple roots
        gram: Inner products of the simple roots
        positive_roots: Positive roots in canonical order
    """
    family: str
    rank: int
    gram: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    positive_roots: tuple[Root, ...] = field(repr=False)

    @property
    def kind(self) -> str:
        """Display name such as 'A3', 'G2' or 'F4'."""
        return f"{self.family}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(Root.simple(i, self.rank) for i in range(1, self.rank + 1))

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @cached_property
    def _positions(self) -> dict[Root, int]:
        return {root: index for index, root in enumerate(self.positive_roots)}

    @cached_property
    def _root_coeffs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(root.coeffs for root in self.positive_roots)

    def position(self, root: Root) -> int:
        """Index of a positive root in the canonical order."""
        try:
            return self._positions[root]
        except KeyError:
            raise ValueError(f"{root} is not a positive root of {self.kind}") from None

    def sorted_roots(self, roots: Iterable[Root]) -> list[Root]:
        return sorted(roots, key=self.position)

    def _as_root(self, vector: Root | Sequence[int]) -> Root:
        root = vector if isinstance(vector, Root) else Root(tuple(vector))
        if root.rank != self.rank:
            raise ValueError(f"Dimension mismatch: {root} in a rank-{self.rank} system")
        return root

    # -------------------------------------------------------------------------
    # Geometry
    # -------------------------------------------------------------------------

    def inner_product(self, a: Root | Sequence[int], b: Root | Sequence[int]) -> Fraction:
        """
        Exact inner product coeffs(a)^T * gram * coeffs(b).

        Raises:
            ValueError: If either vector has the wrong length
        """
        a_coeffs = self._as_root(a).coeffs
        b_coeffs = self._as_root(b).coeffs
        total = Fraction(0)
        for i, a_i in enumerate(a_coeffs):
            if not a_i:
                continue
            row = self.gram[i]
            for j, b_j in enumerate(b_coeffs):
                if b_j:
                    total += a_i * b_j * row[j]
        return total

    def norm(self, a: Root) -> Fraction:
        return self.inner_product(a, a)

    def coroot_pairing(self, gamma: Root, simple_index: int) -> Fraction:
        """2(alpha_i, gamma)/(alpha_i, alpha_i) for the simple root alpha_i (1-based)."""
        alpha = Root.simple(simple_index, self.rank)
        return 2 * self.inner_product(alpha, gamma) / self.gram[simple_index - 1][simple_index - 1]

    # -------------------------------------------------------------------------
    # Membership
    # -------------------------------------------------------------------------

    def is_positive_root(self, vector: Root | Sequence[int]) -> bool:
        return self._as_root(vector) in self._positions

    def is_root(self, vector: Root | Sequence[int]) -> bool:
        root = self._as_root(vector)
        return root in self._positions or -root in self._positions

    def _require_positive(self, root: Root) -> Root:
        root = self._as_root(root)
        if root not in self._positions:
            raise ValueError(f"{root} is not a positive root of {self.kind}")
        return root

    def singular_set(self, beta: Root) -> frozenset[Root]:
        """
        S(beta) = {alpha in Phi+ : beta - alpha in Phi+}.

        Raises:
            ValueError: If beta is not a positive root
        """
        beta = self._require_positive(beta)
        return frozenset(
            alpha for alpha in self.positive_roots
            if (beta - alpha) in self._positions
        )

    def singular_roots(self, placement: Iterable[Root]) -> frozenset[Root]:
        """S(D), the union of S(beta) over beta in D."""
        result: set[Root] = set()
        for beta in placement:
            result |= self.singular_set(beta)
        return frozenset(result)

    def regular_roots(self, placement: Iterable[Root]) -> frozenset[Root]:
        """R(D), the positive roots outside S(D)."""
        return frozenset(self.positive_roots) - self.singular_roots(placement)

    # -------------------------------------------------------------------------
    # Rook placements
    # -------------------------------------------------------------------------

    def _pairs(self, placement: Iterable[Root]) -> Iterator[tuple[Root, Root]]:
        roots = list(placement)
        for i, a in enumerate(roots):
            for b in roots[i + 1:]:
                yield a, b

    def is_rook_placement(self, placement: Iterable[Root]) -> bool:
        """Pairwise inner products are non-positive (and every root is positive)."""
        roots = list(placement)
        if len(set(roots)) != len(roots):
            return False
        if not all(self.is_positive_root(root) for root in roots):
            return False
        return all(self.inner_product(a, b) <= 0 for a, b in self._pairs(roots))

    def is_nonsingular(self, placement: Iterable[Root]) -> bool:
        """No difference of two members is a positive root."""
        return all(
            not self.is_root(a - b) for a, b in self._pairs(placement)
        )

    def is_orthogonal(self, placement: Iterable[Root]) -> bool:
        return all(self.inner_product(a, b) == 0 for a, b in self._pairs(placement))

    # -------------------------------------------------------------------------
    # Order
    # -------------------------------------------------------------------------

    def leq(self, alpha: Root, beta: Root) -> bool:
        """alpha <= beta iff beta - alpha is a (possibly empty) sum of positive roots."""
        alpha = self._require_positive(alpha)
        beta = self._require_positive(beta)
        return _is_decomposable(self._root_coeffs, (beta - alpha).coeffs)

    def less(self, alpha: Root, beta: Root) -> bool:
        return alpha != beta and self.leq(alpha, beta)

    def maximal_roots(self, placement: Iterable[Root]) -> list[Root]:
        """The <=-maximal members of a set of positive roots, in the given order."""
        roots = list(placement)
        return [
            beta for beta in roots
            if not any(self.less(beta, gamma) for gamma in roots)
        ]

    def sum_decompositions(self, gamma: Root | Sequence[int]) -> list[tuple[Root, ...]]:
        """
        All multisets of positive roots summing to gamma.

        Each multiset is listed once, non-decreasing in the canonical order.
        The zero vector has exactly one (empty) decomposition.
        """
        target = self._as_root(gamma).coeffs
        if any(c < 0 for c in target):
            return []

        roots = self.positive_roots
        results: list[tuple[Root, ...]] = []
        chosen: list[Root] = []

        def extend(remaining: tuple[int, ...], start: int) -> None:
            if not any(remaining):
                results.append(tuple(chosen))
                return
            for index in range(start, len(roots)):
                root = roots[index]
                if all(r <= c for r, c in zip(root.coeffs, remaining)):
                    chosen.append(root)
                    extend(tuple(c - r for c, r in zip(remaining, root.coeffs)), index)
                    chosen.pop()

        extend(target, 0)
        return results


# =============================================================================
# Construction
# =============================================================================

def parse_system_kind(kind: str) -> tuple[str, int]:
    """
    Parse a system name such as 'A3', 'a(3)', 'G2' or 'f4'.

    Returns:
        Tuple of (family letter, rank)

    Raises:
        ValueError: If the kind is not supported
    """
    match = _KIND_PATTERN.match(str(kind))
    if not match:
        raise ValueError(f"Unsupported root system kind: {kind!r}")
    family, rank = match.group(1).upper(), int(match.group(2))
    if family not in SUPPORTED_FAMILIES:
        raise ValueError(f"Unsupported root system kind: {kind!r}")
    if family == 'G' and rank != 2 or family == 'F' and rank != 4:
        raise ValueError(f"Unsupported root system kind: {kind!r}")
    if family == 'A' and not 1 <= rank <= MAX_TYPE_A_RANK:
        raise ValueError(f"Type A rank must lie in 1..{MAX_TYPE_A_RANK}, got {rank}")
    return family, rank


def _gram_matrix(family: str, rank: int) -> tuple[tuple[Fraction, ...], ...]:
    if family == 'G':
        rows = [[Fraction(1), Fraction(-3, 2)],
                [Fraction(-3, 2), Fraction(3)]]
    elif family == 'F':
        # alpha_1 = e2-e3, alpha_2 = e3-e4, alpha_3 = e4, alpha_4 = (e1-e2-e3-e4)/2
        rows = [[Fraction(2), Fraction(-1), Fraction(0), Fraction(0)],
                [Fraction(-1), Fraction(2), Fraction(-1), Fraction(0)],
                [Fraction(0), Fraction(-1), Fraction(1), Fraction(-1, 2)],
                [Fraction(0), Fraction(0), Fraction(-1, 2), Fraction(1)]]
    else:
        rows = [[Fraction(0)] * rank for _ in range(rank)]
        for i in range(rank):
            rows[i][i] = Fraction(2)
            if i + 1 < rank:
                rows[i][i + 1] = rows[i + 1][i] = Fraction(-1)
    return tuple(tuple(row) for row in rows)


def _generate_positive_roots(gram: tuple[tuple[Fraction, ...], ...]) -> tuple[Root, ...]:
    """Close the simple roots under root strings, level by level in height."""
    rank = len(gram)
    simple = [Root.simple(i, rank) for i in range(1, rank + 1)]

    def pairing(gamma: Root, i: int) -> Fraction:
        value = sum(
            (gamma.coeffs[k] * gram[k][i] for k in range(rank)), Fraction(0)
        )
        return 2 * value / gram[i][i]

    found = set(simple)
    level = list(simple)
    while level:
        next_level = []
        for gamma in level:
            for i, alpha in enumerate(simple):
                # alpha-string through gamma: gamma - p*alpha, ..., gamma + q*alpha
                p = 0
                probe = gamma - alpha
                while probe in found:
                    p += 1
                    probe = probe - alpha
                q = p - pairing(gamma, i)
                candidate = gamma + alpha
                if q > 0 and candidate not in found:
                    found.add(candidate)
                    next_level.append(candidate)
        level = next_level
    return tuple(sorted(found, key=canonical_key))


@lru_cache(maxsize=None)
def _is_decomposable(generators: tuple[tuple[int, ...], ...], coeffs: tuple[int, ...]) -> bool:
    """Whether coeffs is a sum of the generator vectors (the empty sum included)."""
    if any(c < 0 for c in coeffs):
        return False
    if not any(coeffs):
        return True
    return any(
        _is_decomposable(generators, tuple(c - g for c, g in zip(coeffs, generator)))
        for generator in generators
        if all(g <= c for g, c in zip(generator, coeffs))
    )


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    gram = _gram_matrix(family, rank)
    roots = _generate_positive_roots(gram)
    logger.debug(f"Built {family}{rank}: {len(roots)} positive roots")
    return RootSystem(family=family, rank=rank, gram=gram, positive_roots=roots)


def build_root_system(kind: str) -> RootSystem:
    """
    Build the positive system of the named kind.

    Args:
        kind: 'A<n>' (rank n, i.e. sl_{n+1}), 'G2' or 'F4'

    Returns:
        The root system with its canonical positive-root order

    Raises:
        ValueError: For an unsupported kind
    """
    family, rank = parse_system_kind(kind)
    return _build(family, rank)


def _compatibility(system: RootSystem, placement_filter: str) -> list[list[bool]]:
    roots = system.positive_roots
    size = len(roots)
    table = [[False] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            a, b = roots[i], roots[j]
            product = system.inner_product(a, b)
            ok = product <= 0
            if placement_filter != 'all':
                ok = ok and not system.is_root(a - b)
            if placement_filter == 'orthogonal-nonsingular':
                ok = ok and product == 0
            table[i][j] = table[j][i] = ok
    return table


def _placement_key(system: RootSystem, placement: RookPlacement) -> tuple:
    return (len(placement), tuple(system.position(root) for root in placement))


def enumerate_rook_placements(
    system: RootSystem,
    placement_filter: str = 'all'
) -> list[RookPlacement]:
    """
    Enumerate all rook placements passing a filter, the empty one included.

    Backtracks over the canonical order, extending only by roots compatible
    with every root already chosen.

    Args:
        system: Root system
        placement_filter: 'all', 'nonsingular' or 'orthogonal-nonsingular'

    Returns:
        Placements sorted by size, then by canonical positions
    """
    if placement_filter not in PLACEMENT_FILTERS:
        raise ValueError(
            f"Unknown placement filter {placement_filter!r}; "
            f"expected one of {', '.join(PLACEMENT_FILTERS)}"
        )
    roots = system.positive_roots
    compatible = _compatibility(system, placement_filter)
    results: list[RookPlacement] = []
    chosen: list[int] = []

    def extend(start: int) -> None:
        results.append(RookPlacement(tuple(roots[i] for i in chosen)))
        for index in range(start, len(roots)):
            if all(compatible[index][j] for j in chosen):
                chosen.append(index)
                extend(index + 1)
                chosen.pop()

    extend(0)
    results.sort(key=lambda placement: _placement_key(system, placement))
    logger.debug(f"{system.kind}: {len(results)} rook placements ({placement_filter})")
    return results


def maximal_rook_placements(system: RootSystem) -> list[RookPlacement]:
    """Rook placements not properly contained in another rook placement."""
    roots = system.positive_roots
    compatible = _compatibility(system, 'all')
    maximal = []
    for placement in enumerate_rook_placements(system, 'all'):
        members = [system.position(root) for root in placement]
        extendable = any(
            index not in members and all(compatible[index][j] for j in members)
            for index in range(len(roots))
        )
        if not extendable:
            maximal.append(placement)
    return maximal
