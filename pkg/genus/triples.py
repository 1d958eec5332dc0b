"""
(p, q, r) signatures, defect arithmetic and the Riemann-Hurwitz genus
All comparisons use exact rationals.
"""

import heapq
import math
from fractions import Fraction
from typing import Iterable, Iterator, Tuple

from utils.errors import InvariantViolation, SpecParseError, StructuralError


SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"

EXACTNESS_LIMIT = Fraction(1, 6)
HURWITZ_TRIPLE = (2, 3, 7)


class TripleSignature:
    """A candidate (p, q, r) with p <= q <= r"""

    __slots__ = ("p", "q", "r")

    def __init__(self, p: int, q: int, r: int):
        p, q, r = sorted((p, q, r))
        if p < 2:
            raise StructuralError(f"triple entries must be at least 2, got {(p, q, r)}")
        self.p = p
        self.q = q
        self.r = r

    @classmethod
    def parse(cls, text: str) -> "TripleSignature":
        parts = [t for t in text.replace("(", " ").replace(")", " ").replace(",", " ").split() if t]
        if len(parts) != 3:
            raise SpecParseError(f"a triple needs three entries: {text!r}")
        try:
            return cls(*(int(t) for t in parts))
        except ValueError:
            raise SpecParseError(f"could not parse triple {text!r}") from None
        except StructuralError as exc:
            raise SpecParseError(str(exc)) from None

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def reciprocal_sum(self) -> Fraction:
        return Fraction(1, self.p) + Fraction(1, self.q) + Fraction(1, self.r)

    @property
    def defect(self) -> Fraction:
        return 1 - self.reciprocal_sum

    @property
    def kind(self) -> str:
        d = self.defect
        if d < 0:
            return SPHERICAL
        if d == 0:
            return EUCLIDEAN
        return HYPERBOLIC

    @property
    def odd_count(self) -> int:
        return sum(1 for v in self.as_tuple() if v % 2)

    def satisfies_parity(self) -> bool:
        """At most one odd entry, the constraint every S_n and D_n pair obeys."""
        return self.odd_count <= 1

    @property
    def is_hurwitz(self) -> bool:
        return self.as_tuple() == HURWITZ_TRIPLE

    def sort_key(self):
        return (-self.reciprocal_sum, self.as_tuple())

    def __eq__(self, other) -> bool:
        return isinstance(other, TripleSignature) and self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        return f"TripleSignature{self.as_tuple()}"

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.r})"


def enumerate_triples(spectrum: Iterable[int], parity_prune: bool = False) -> Iterator[TripleSignature]:
    """Every triple over the spectrum, by decreasing 1/p + 1/q + 1/r, ties lexicographic.

    Lazy: triples are produced from a heap over sorted index triples i <= j <= k,
    so arbitrarily large spectra are fine.
    """
    values = sorted({v for v in spectrum if v >= 2})
    if not values:
        return

    def key(i, j, k):
        t = TripleSignature(values[i], values[j], values[k])
        return (t.sort_key(), (i, j, k))

    heap = [key(0, 0, 0)]
    last = len(values) - 1
    while heap:
        _, (i, j, k) = heapq.heappop(heap)
        # each index triple has exactly one parent, so nothing is pushed twice
        if k < last:
            heapq.heappush(heap, key(i, j, k + 1))
        if k == j and j < last:
            heapq.heappush(heap, key(i, j + 1, j + 1))
        if i == j == k and i < last:
            heapq.heappush(heap, key(i + 1, i + 1, i + 1))
        triple = TripleSignature(values[i], values[j], values[k])
        if parity_prune and not triple.satisfies_parity():
            continue
        yield triple


def riemann_hurwitz_genus(order: int, triple: TripleSignature) -> int:
    """1 + |G|/2 * defect for hyperbolic triples; 0 spherical; 1 euclidean."""
    kind = triple.kind
    if kind == SPHERICAL:
        return 0
    if kind == EUCLIDEAN:
        return 1
    value = 1 + Fraction(order, 2) * triple.defect
    if value.denominator != 1:
        raise InvariantViolation(f"genus for |G|={order} and {triple} is not an integer: {value}")
    return value.numerator


def is_exact_by_defect(triple: TripleSignature) -> bool:
    """A minimal hyperbolic triple pins the genus when its defect is at most 1/6."""
    return triple.kind == HYPERBOLIC and triple.defect <= EXACTNESS_LIMIT


def order_forces_exactness(order: int, triple: TripleSignature) -> bool:
    """|G| > 12(sigma^0 - 1) with sigma^0 from the triple; equivalent to defect < 1/6."""
    genus = riemann_hurwitz_genus(order, triple)
    return order > 12 * (genus - 1)


def hurwitz_bound(order: int) -> int:
    """Least genus any group of this order can have once its genus is at least 2."""
    return 1 + math.ceil(Fraction(order, 84))
