"""
Named constructors for every group family in scope
Dihedral, symmetric, hyperoctahedral (B_n), demihyperoctahedral (D_n) and the sporadic root-system groups
"""

import logging
import math
import re
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

from sympy.utilities.iterables import partitions

from groups.engine import DEFAULT_THRESHOLD, ClassOracle, GroupHandle, build
from groups.permutation import Images, Permutation, elements_of_cycle_type
from groups.roots import as_permutation_group, close_roots
from groups.signed import (
    SignedPermutation,
    SignVector,
    from_degree_2n,
    multiply,
    to_degree_2n,
)
from utils.errors import InvariantViolation, PreconditionError, SpecParseError


logger = logging.getLogger(__name__)

SPORADIC_ORDERS = {
    "G2": 12,
    "H3": 120,
    "H4": 14400,
    "F4": 1152,
    "E6": 51840,
    "E7": 2903040,
}

ALIASES = {"I3": "H3", "I4": "H4"}

# Names the published tables use for each sporadic type
DISPLAY_NAMES = {"H3": "I3", "H4": "I4"}

RANKED_FAMILIES = {"Dih": 3, "S": 2, "B": 3, "D": 3}

SPEC_RE = re.compile(r"^(?P<family>Dih|S|B|D)(?P<n>\d+)$")


@dataclass(frozen=True, order=True)
class GroupSpec:
    """Family tag plus rank parameter where the family has one"""

    family: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.family in RANKED_FAMILIES:
            minimum = RANKED_FAMILIES[self.family]
            if self.n is None or self.n < minimum:
                raise SpecParseError(f"{self.family} needs a rank of at least {minimum}, got {self.n}")
        elif self.family in SPORADIC_ORDERS:
            if self.n is not None:
                raise SpecParseError(f"{self.family} takes no rank parameter")
        else:
            raise SpecParseError(f"unknown group family {self.family!r}")

    def __str__(self) -> str:
        return self.family if self.n is None else f"{self.family}{self.n}"

    @property
    def display(self) -> str:
        if self.family == "S":
            return f"Σ{self.n}"
        if self.n is None:
            return DISPLAY_NAMES.get(self.family, self.family)
        return str(self)

    @property
    def is_sporadic(self) -> bool:
        return self.family in SPORADIC_ORDERS

    @property
    def is_signed(self) -> bool:
        """True when elements are signed permutations in the realization."""
        return self.family == "B" or (self.family == "D" and self.n >= 4)

    def expected_order(self) -> int:
        n = self.n
        if self.family == "Dih":
            return 2 * n
        if self.family == "S":
            return math.factorial(n)
        if self.family == "B":
            return math.factorial(n) * 2 ** n
        if self.family == "D":
            return math.factorial(n) * 2 ** (n - 1)
        return SPORADIC_ORDERS[self.family]


def parse_spec(text: str) -> GroupSpec:
    """Parse "Dih<n>", "S<n>", "B<n>", "D<n>" or a sporadic name (I3/I4 alias H3/H4)."""
    if not isinstance(text, str):
        raise SpecParseError("group spec must be a string")
    cleaned = text.strip()
    upper = cleaned.upper()
    if upper in ALIASES:
        return GroupSpec(ALIASES[upper])
    if upper in SPORADIC_ORDERS:
        return GroupSpec(upper)
    match = SPEC_RE.match(cleaned) or SPEC_RE.match(cleaned[:1].upper() + cleaned[1:])
    if not match:
        raise SpecParseError(f"could not parse group spec {text!r}")
    return GroupSpec(match.group("family"), int(match.group("n")))


def _partitions(k: int) -> Iterator[List[int]]:
    """Partitions of k as descending length lists; k = 0 gives the empty partition."""
    if k == 0:
        yield []
        return
    for parts in partitions(k):
        lengths = []
        for length, mult in sorted(parts.items(), reverse=True):
            lengths.extend([length] * mult)
        yield lengths


def _centralizer_order(lengths: List[int], weight: int = 1) -> int:
    """prod (w*i)^{a_i} a_i! over cycle lengths i with multiplicity a_i."""
    total = 1
    counts = {}
    for length in lengths:
        counts[length] = counts.get(length, 0) + 1
    for length, mult in counts.items():
        total *= (weight * length) ** mult * math.factorial(mult)
    return total


def _consecutive_cycles(lengths: List[int], start: int = 1) -> List[List[int]]:
    cycles = []
    point = start
    for length in lengths:
        cycles.append(list(range(point, point + length)))
        point += length
    return cycles


class SymmetricClasses(ClassOracle):
    """Classes of S_n indexed by cycle type"""

    def __init__(self, n: int):
        self.n = n

    def representatives(self) -> List[Tuple[Permutation, int]]:
        reps = []
        for lengths in _partitions(self.n):
            perm = Permutation.from_cycles(_consecutive_cycles(lengths), self.n)
            reps.append((perm, math.factorial(self.n) // _centralizer_order(lengths)))
        return reps

    def spectrum(self):
        return {math.lcm(*lengths) for lengths in _partitions(self.n)}

    def elements_of_order(self, q: int) -> Iterator[Images]:
        def stream():
            for lengths in _partitions(self.n):
                if math.lcm(*lengths) == q:
                    yield from elements_of_cycle_type(self.n, lengths)

        return stream()


def signed_class_rep(n: int, positive: List[int], negative: List[int]) -> SignedPermutation:
    """Consecutive cycles, positive ones first; each negative cycle carries one sign digit."""
    cycles = _consecutive_cycles(positive + negative)
    perm = Permutation.from_cycles(cycles, n)
    bits = 0
    for cycle in cycles[len(positive):]:
        bits |= 1 << (cycle[0] - 1)
    return SignedPermutation(perm, SignVector(bits, n))


class SignedClasses(ClassOracle):
    """Classes of B_n (or D_n) indexed by signed cycle type (positive lengths, negative lengths)"""

    def __init__(self, n: int, demi: bool):
        self.n = n
        self.demi = demi

    def signed_types(self) -> Iterator[Tuple[List[int], List[int]]]:
        for k in range(self.n, -1, -1):
            for positive in _partitions(k):
                for negative in _partitions(self.n - k):
                    if self.demi and len(negative) % 2:
                        continue
                    yield positive, negative

    def representatives(self) -> List[Tuple[Permutation, int]]:
        b_order = math.factorial(self.n) * 2 ** self.n
        flip = SignedPermutation(Permutation.identity(self.n), SignVector.unit(self.n, 1))
        reps = []
        for positive, negative in self.signed_types():
            size = b_order // (_centralizer_order(positive, 2) * _centralizer_order(negative, 2))
            rep = signed_class_rep(self.n, positive, negative)
            if self.demi and not negative and all(length % 2 == 0 for length in positive):
                # The B_n class splits into two D_n classes of equal size.
                twin = multiply(multiply(flip, rep), flip)
                reps.append((to_degree_2n(rep), size // 2))
                reps.append((to_degree_2n(twin), size // 2))
            else:
                reps.append((to_degree_2n(rep), size))
        return reps

    def spectrum(self):
        orders = set()
        for positive, negative in self.signed_types():
            orders.add(math.lcm(*positive, *(2 * length for length in negative)))
        return orders


@dataclass
class Realization:
    """A realized group together with how it was built and how its elements are written"""

    spec: GroupSpec
    handle: GroupHandle
    method: str
    note: Optional[str] = None

    @property
    def order(self) -> int:
        return self.handle.order

    def encode(self, element: Permutation) -> str:
        if self.spec.is_signed:
            return str(from_degree_2n(element))
        return str(element)

    def decode(self, text: str) -> Permutation:
        if self.spec.is_signed:
            return to_degree_2n(SignedPermutation.parse(text, degree=self.spec.n))
        return Permutation.parse(text, degree=self.handle.degree)

    def to_signed(self, element: Permutation) -> SignedPermutation:
        if not self.spec.is_signed:
            raise PreconditionError("not-signed", f"{self.spec} is not realized by signed permutations")
        return from_degree_2n(element)


def dihedral_generators(n: int) -> List[Permutation]:
    """Rotation and reflection of a regular n-gon on vertices 1..n."""
    rotation = Permutation(tuple((i + 1) % n for i in range(n)))
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return [rotation, reflection]


def symmetric_generators(n: int) -> List[Permutation]:
    return [Permutation.from_cycles([[1, 2]], n), Permutation.from_cycles([list(range(1, n + 1))], n)]


def signed_generators(n: int, demi: bool) -> List[SignedPermutation]:
    section = [SignedPermutation(perm, SignVector.zeros(n)) for perm in symmetric_generators(n)]
    flip = SignVector.unit(n, n - 1, n) if demi else SignVector.unit(n, n)
    return section + [SignedPermutation(Permutation.identity(n), flip)]


def realize(spec: GroupSpec, threshold: int = DEFAULT_THRESHOLD) -> Realization:
    """Build the group named by spec and check its order against the closed form."""
    note = None
    if spec.family == "Dih":
        gens, method, oracle = dihedral_generators(spec.n), "dihedral-polygon", None
    elif spec.family == "G2":
        gens, method, oracle = dihedral_generators(6), "dihedral-hexagon", None
        note = "G2 is the dihedral group of order 12"
    elif spec.family == "S":
        gens, method, oracle = symmetric_generators(spec.n), "symmetric", SymmetricClasses(spec.n)
    elif spec.family == "D" and spec.n == 3:
        gens, method, oracle = symmetric_generators(4), "symmetric", SymmetricClasses(4)
        note = "D3 = Σ4; realized as Σ4"
    elif spec.family in ("B", "D"):
        demi = spec.family == "D"
        gens = [to_degree_2n(g) for g in signed_generators(spec.n, demi)]
        method, oracle = "signed-2n", SignedClasses(spec.n, demi)
    else:
        rs = close_roots(spec.family)
        gens, method, oracle = as_permutation_group(rs), "root-action", None

    handle = build(gens, threshold=threshold, label=spec.display, oracle=oracle, origin=spec)
    expected = spec.expected_order()
    if handle.order != expected:
        raise InvariantViolation(f"{spec} realized with order {handle.order}, expected {expected}")
    logger.info("realized %s (%s): order %d on %d points", spec.display, method, handle.order, handle.degree)
    return Realization(spec=spec, handle=handle, method=method, note=note)


@dataclass(frozen=True)
class QuotientRelation:
    """G -> G/N with |N| = kernel_order; project maps realized elements to realized elements"""

    source: GroupSpec
    target: GroupSpec
    kernel_order: int
    project: Callable[[Permutation], Permutation]


def _project_to_symmetric(element: Permutation) -> Permutation:
    return from_degree_2n(element).perm


def fold_center(x: SignedPermutation) -> SignedPermutation:
    """B_n -> D_n for odd n: [s, b] -> [s, b + parity(b) * (1, ..., 1)]."""
    n = x.degree
    if n % 2 == 0:
        raise PreconditionError("even-rank-center-fold", f"B{n} -> D{n} needs odd n")
    signs = x.signs + SignVector.ones(n) if x.signs.weight % 2 else x.signs
    return SignedPermutation(x.perm, signs)


def _project_to_demi(element: Permutation) -> Permutation:
    return to_degree_2n(fold_center(from_degree_2n(element)))


def quotient_map(source: GroupSpec, target: GroupSpec) -> QuotientRelation:
    n = source.n
    if source.family in ("B", "D") and target == GroupSpec("S", n) and source.is_signed:
        kernel = 2 ** n if source.family == "B" else 2 ** (n - 1)
        return QuotientRelation(source, target, kernel, _project_to_symmetric)
    if source.family == "B" and target.family == "D" and target.n == n:
        if n % 2 == 0:
            raise PreconditionError("even-rank-center-fold", f"B{n} -> D{n} is only a quotient for odd n")
        if not target.is_signed:
            raise PreconditionError("unsupported-quotient", f"{target} is not realized by signed permutations")
        return QuotientRelation(source, target, 2, _project_to_demi)
    raise PreconditionError("unsupported-quotient", f"no quotient map {source} -> {target}")


def quotient_images(spec: GroupSpec) -> List[QuotientRelation]:
    """Every known quotient of a B_n or D_n realization."""
    if not spec.is_signed:
        raise PreconditionError("unsupported-quotient", f"{spec} has no catalogued quotients")
    relations = [quotient_map(spec, GroupSpec("S", spec.n))]
    if spec.family == "B" and spec.n % 2 == 1 and spec.n >= 5:
        relations.append(quotient_map(spec, GroupSpec("D", spec.n)))
    return relations
