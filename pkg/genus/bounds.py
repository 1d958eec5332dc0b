"""
Quotient bounds on minimal triples and genera
A (p, q, r) pair of G maps onto a pair of G/N whose orders divide (p, q, r).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from genus.published_tables import published_minimal_triple
from genus.triples import TripleSignature
from groups.catalog import GroupSpec, QuotientRelation, quotient_images, realize
from groups.permutation import Permutation
from utils.errors import InvariantViolation


logger = logging.getLogger(__name__)

KnownTriple = Callable[[GroupSpec], Optional[TripleSignature]]


@dataclass(frozen=True)
class SandwichBound:
    """Worst and best triple the minimal pair of spec can have"""

    spec: GroupSpec
    lower: TripleSignature
    upper: TripleSignature
    lower_source: GroupSpec
    upper_source: GroupSpec

    @property
    def forced(self) -> Optional[TripleSignature]:
        """The cover's triple when both bounds have the same reciprocal sum."""
        if self.lower.reciprocal_sum == self.upper.reciprocal_sum:
            return self.lower
        return None


def quotients_of(spec: GroupSpec) -> List[Tuple[GroupSpec, int]]:
    if not spec.is_signed:
        return []
    return [(rel.target, rel.kernel_order) for rel in quotient_images(spec)]


def covers_of(spec: GroupSpec) -> List[Tuple[GroupSpec, int]]:
    """Groups C with spec = C/N among the catalogued relations."""
    n = spec.n
    if spec.family == "S" and n >= 3:
        return [(GroupSpec("B", n), 2 ** n)] + ([(GroupSpec("D", n), 2 ** (n - 1))] if n >= 4 else [])
    if spec.family == "D" and spec.is_signed and n % 2 == 1 and n >= 5:
        return [(GroupSpec("B", n), 2)]
    return []


def sandwich_bound(
    spec: GroupSpec,
    known: KnownTriple = published_minimal_triple,
    include_trivial: bool = True,
) -> Optional[SandwichBound]:
    """Bracket the minimal triple of spec between its covers and its quotients.

    A cover's minimal triple is never better than spec's; a quotient's is never
    worse. The trivial relation N = 1 uses spec's own known triple on both sides.
    """
    lowers = [(known(cover), cover) for cover, _ in covers_of(spec)]
    uppers = [(known(quotient), quotient) for quotient, _ in quotients_of(spec)]
    if include_trivial:
        own = known(spec)
        lowers.append((own, spec))
        uppers.append((own, spec))
    lowers = [(t, s) for t, s in lowers if t is not None]
    uppers = [(t, s) for t, s in uppers if t is not None]
    if not lowers or not uppers:
        return None
    # tightest: the best cover and the worst quotient
    lower, lower_source = max(lowers, key=lambda item: (item[0].reciprocal_sum, str(item[1])))
    upper, upper_source = min(uppers, key=lambda item: (item[0].reciprocal_sum, str(item[1])))
    if lower.reciprocal_sum > upper.reciprocal_sum:
        logger.warning("inconsistent bounds for %s: %s from %s beats %s from %s",
                       spec, lower, lower_source, upper, upper_source)
        return None
    bound = SandwichBound(spec, lower, upper, lower_source, upper_source)
    logger.debug("sandwich for %s: %s (%s) .. %s (%s)", spec, lower, lower_source, upper, upper_source)
    return bound


def quotient_genus_bound(genus: int, kernel_order: int) -> Fraction:
    """Largest genus G/N can have when G has the given genus: 1 + (genus - 1)/|N|."""
    return 1 + Fraction(genus - 1, kernel_order)


def satisfies_quotient_bound(quotient_genus: int, genus: int, kernel_order: int) -> bool:
    """sigma^0(G/N) - 1 <= (sigma^0(G) - 1)/|N|."""
    return quotient_genus <= quotient_genus_bound(genus, kernel_order)


def check_quotient_image(relation: QuotientRelation, triple: TripleSignature,
                         x: Permutation, y: Permutation) -> Tuple[Permutation, Permutation]:
    """Project a (p, q, r) generating pair of G into G/N.

    The images must generate G/N with orders dividing p, q and r.
    """
    px, py = relation.project(x), relation.project(y)
    orders = (px.order(), py.order(), (px * py).order())
    if any(want % got for want, got in zip(triple.as_tuple(), orders)):
        raise InvariantViolation(f"{relation.target} images have orders {orders}, which do not divide {triple}")
    if not realize(relation.target).handle.is_generating_pair(px, py):
        raise InvariantViolation(f"images of a {relation.source} pair do not generate {relation.target}")
    return px, py
