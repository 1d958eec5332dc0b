"""
Permutations of a finite domain {1..n}
Exact composition, inversion, orders and cycle structure for every group representation

Points are 1-based in all text and public results; images are stored 0-based.
Products read left to right: (a * b)(i) = b(a(i)), the same convention as
sympy.combinatorics.Permutation.
"""

import math
import re
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from sympy.combinatorics import Permutation as SymPermutation

from utils.errors import SpecParseError, StructuralError


Images = Tuple[int, ...]

CYCLE_RE = re.compile(r"\(([^()]*)\)")


def compose_images(a: Images, b: Images) -> Images:
    """Left-to-right product of raw image tuples."""
    return tuple(b[i] for i in a)


def invert_images(a: Images) -> Images:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def cycle_lengths(a: Images) -> List[int]:
    """Lengths of all cycles, fixed points included."""
    seen = bytearray(len(a))
    lengths = []
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = 1
            point = a[point]
            length += 1
        lengths.append(length)
    return lengths


def order_of_images(a: Images) -> int:
    return math.lcm(*cycle_lengths(a))


def power_images(a: Images, k: int) -> Images:
    """k-th power by walking each cycle k steps."""
    n = len(a)
    if k < 0:
        a = invert_images(a)
        k = -k
    result = [0] * n
    seen = bytearray(n)
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = 1
            cycle.append(point)
            point = a[point]
        step = k % len(cycle)
        for idx, point in enumerate(cycle):
            result[point] = cycle[(idx + step) % len(cycle)]
    return tuple(result)


class CycleType:
    """Multiset of cycle lengths of a permutation, fixed points included"""

    __slots__ = ("lengths", "degree")

    def __init__(self, lengths: Iterable[int]):
        self.lengths: Tuple[int, ...] = tuple(sorted(lengths, reverse=True))
        self.degree = sum(self.lengths)
        if any(length < 1 for length in self.lengths):
            raise StructuralError("cycle lengths must be positive")

    @property
    def order(self) -> int:
        return math.lcm(*self.lengths) if self.lengths else 1

    @property
    def parity(self) -> int:
        """Sign of the permutation, +1 or -1."""
        return -1 if (self.degree - len(self.lengths)) % 2 else 1

    @property
    def fixed_point_count(self) -> int:
        return sum(1 for length in self.lengths if length == 1)

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for length in self.lengths:
            counts[length] = counts.get(length, 0) + 1
        return counts

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleType) and self.lengths == other.lengths

    def __hash__(self) -> int:
        return hash(self.lengths)

    def __repr__(self) -> str:
        return f"CycleType({list(self.lengths)})"


class Permutation:
    """Immutable bijection of {1..n}"""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if not images:
            raise StructuralError("degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise StructuralError(f"not a bijection of {{1..{len(images)}}}")
        self._images: Images = images

    @classmethod
    def _trusted(cls, images: Images) -> "Permutation":
        perm = object.__new__(cls)
        perm._images = images
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise StructuralError("degree must be at least 1")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Permutation":
        return cls([i - 1 for i in images])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-based cycles; cycles are applied left to right."""
        result = tuple(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            if not cycle:
                continue
            if len(set(cycle)) != len(cycle):
                raise StructuralError(f"repeated point in cycle {tuple(cycle)}")
            if min(cycle) < 1 or max(cycle) > degree:
                raise StructuralError(f"cycle {tuple(cycle)} leaves the domain 1..{degree}")
            images = list(range(degree))
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                images[src - 1] = dst - 1
            result = compose_images(result, tuple(images))
        return cls._trusted(result)

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Permutation":
        """Parse cycle notation such as "(1 2)(3 4 5)"; "()" is the identity."""
        if not isinstance(text, str):
            raise SpecParseError("cycle notation must be a string")
        stripped = text.strip()
        if CYCLE_RE.sub("", stripped).strip():
            raise SpecParseError(f"could not parse permutation {text!r}")
        cycles = []
        for body in CYCLE_RE.findall(stripped):
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                cycles.append([int(t) for t in tokens])
            except ValueError:
                raise SpecParseError(f"could not parse permutation {text!r}") from None
        largest = max((max(c) for c in cycles if c), default=1)
        if degree is None:
            degree = largest
        elif largest > degree:
            raise SpecParseError(f"point {largest} exceeds degree {degree} in {text!r}")
        try:
            return cls.from_cycles(cycles, degree)
        except StructuralError as exc:
            raise SpecParseError(str(exc)) from None

    @classmethod
    def from_sympy(cls, perm: SymPermutation) -> "Permutation":
        return cls._trusted(tuple(perm.array_form))

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Images:
        """0-based image tuple."""
        return self._images

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._trusted(power_images(self._images, k))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"

    def __str__(self) -> str:
        parts = []
        for cycle in self.cycles():
            if len(cycle) > 1:
                parts.append("(" + " ".join(str(p) for p in cycle) + ")")
        return "".join(parts) or "()"

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    def inverse(self) -> "Permutation":
        return inverse(self)

    def order(self) -> int:
        return order(self)

    def cycles(self) -> List[Tuple[int, ...]]:
        """All cycles as 1-based tuples, each starting at its smallest point."""
        seen = bytearray(self.degree)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = 1
                cycle.append(point + 1)
                point = self._images[point]
            out.append(tuple(cycle))
        return out

    def cycle_structure(self) -> CycleType:
        return cycle_structure(self)

    def fixed_points(self) -> Set[int]:
        return fixed_points(self)

    def cycle_of(self, point: int) -> Tuple[int, ...]:
        """The 1-based cycle containing ``point``."""
        cycle = [point]
        nxt = self(point)
        while nxt != point:
            cycle.append(nxt)
            nxt = self(nxt)
        return tuple(cycle)

    def parity(self) -> int:
        return self.cycle_structure().parity

    def conjugate(self, by: "Permutation") -> "Permutation":
        """by^-1 * self * by."""
        return compose(compose(inverse(by), self), by)

    def to_sympy(self) -> SymPermutation:
        return SymPermutation(list(self._images))


def _check_degrees(a: Permutation, b: Permutation):
    if a.degree != b.degree:
        raise StructuralError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Product a*b acting left to right: apply a, then b."""
    _check_degrees(a, b)
    return Permutation._trusted(compose_images(a.images, b.images))


def inverse(a: Permutation) -> Permutation:
    return Permutation._trusted(invert_images(a.images))


def order(a: Permutation) -> int:
    return order_of_images(a.images)


def cycle_structure(a: Permutation) -> CycleType:
    return CycleType(cycle_lengths(a.images))


def fixed_points(a: Permutation) -> Set[int]:
    return {i + 1 for i, j in enumerate(a.images) if i == j}


def elements_of_cycle_type(degree: int, lengths: Sequence[int]) -> Iterator[Images]:
    """Stream every permutation of the given cycle type exactly once.

    The next cycle always starts at the smallest unused point; the remaining
    points of that cycle run over ordered selections of unused points.
    """
    if sum(lengths) != degree:
        raise StructuralError(f"cycle type {list(lengths)} does not sum to {degree}")
    images = list(range(degree))
    used = [False] * degree

    def remaining_lengths(pool: Dict[int, int]) -> List[int]:
        return sorted((k for k, v in pool.items() if v > 0), reverse=True)

    def place(pool: Dict[int, int]) -> Iterator[Images]:
        try:
            leader = used.index(False)
        except ValueError:
            yield tuple(images)
            return
        for length in remaining_lengths(pool):
            pool[length] -= 1
            used[leader] = True
            yield from extend(pool, [leader], length)
            used[leader] = False
            pool[length] += 1

    def extend(pool: Dict[int, int], cycle: List[int], length: int) -> Iterator[Images]:
        if len(cycle) == length:
            for src, dst in zip(cycle, cycle[1:] + cycle[:1]):
                images[src] = dst
            yield from place(pool)
            for src in cycle:
                images[src] = src
            return
        for point in range(cycle[0] + 1, degree):
            if used[point]:
                continue
            used[point] = True
            cycle.append(point)
            yield from extend(pool, cycle, length)
            cycle.pop()
            used[point] = False

    pool: Dict[int, int] = {}
    for length in lengths:
        pool[length] = pool.get(length, 0) + 1
    yield from place(pool)
