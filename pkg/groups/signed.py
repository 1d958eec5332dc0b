"""
Signed permutations [sigma, b] of B_n = Z2 wr S_n and its subgroup D_n

Sign vectors are int bitsets: bit i-1 holds the digit of coordinate i.
Multiplication is [s, b]*[t, c] = [s*t, t^-1(b) + c], where t^-1(b) moves the
digit in position j to position t(j); with left-to-right composition this is
the pairing for which the degree-2n image below is a homomorphism.
"""

import random
import re
from typing import Iterator, Optional, Sequence

from groups.permutation import (
    Images,
    Permutation,
    compose_images,
    invert_images,
    order_of_images,
)
from utils.errors import SpecParseError, StructuralError


SIGNED_RE = re.compile(r"^\s*\[\s*(?P<cycles>[^|]*)\|\s*(?P<bits>[01]*)\s*\]\s*$")


class SignVector:
    """n binary digits stored as a bitset"""

    __slots__ = ("bits", "length")

    def __init__(self, bits: int, length: int):
        if length < 1:
            raise StructuralError("sign vector length must be at least 1")
        if bits < 0 or bits >> length:
            raise StructuralError(f"bitset {bits:#x} does not fit in {length} digits")
        self.bits = bits
        self.length = length

    @classmethod
    def zeros(cls, length: int) -> "SignVector":
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> "SignVector":
        return cls((1 << length) - 1, length)

    @classmethod
    def unit(cls, length: int, *positions: int) -> "SignVector":
        """Ones exactly at the given 1-based positions (e_i + e_j + ...)."""
        bits = 0
        for position in positions:
            bits ^= 1 << (position - 1)
        return cls(bits, length)

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise SpecParseError(f"not a bitstring: {text!r}")
        bits = 0
        for idx, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << idx
        return cls(bits, len(text))

    @property
    def weight(self) -> int:
        return bin(self.bits).count("1")

    def is_even(self) -> bool:
        return self.weight % 2 == 0

    def __add__(self, other: "SignVector") -> "SignVector":
        if self.length != other.length:
            raise StructuralError(f"sign vector length mismatch: {self.length} vs {other.length}")
        return SignVector(self.bits ^ other.bits, self.length)

    def __getitem__(self, position: int) -> int:
        """Digit at a 1-based position."""
        return (self.bits >> (position - 1)) & 1

    def __eq__(self, other) -> bool:
        return isinstance(other, SignVector) and (self.bits, self.length) == (other.bits, other.length)

    def __hash__(self) -> int:
        return hash((self.bits, self.length))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"SignVector({self})"


def push_bits(bits: int, perm: Images) -> int:
    """Move the digit in position j to position perm(j) (0-based positions)."""
    out = 0
    j = 0
    while bits:
        if bits & 1:
            out |= 1 << perm[j]
        bits >>= 1
        j += 1
    return out


class SignedPermutation:
    """Element [sigma, b] of B_n"""

    __slots__ = ("perm", "signs")

    def __init__(self, perm: Permutation, signs: SignVector):
        if perm.degree != signs.length:
            raise StructuralError(f"degree mismatch: permutation {perm.degree}, signs {signs.length}")
        self.perm = perm
        self.signs = signs

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(Permutation.identity(n), SignVector.zeros(n))

    @classmethod
    def from_parts(cls, images: Images, bits: int) -> "SignedPermutation":
        return cls(Permutation._trusted(images), SignVector(bits, len(images)))

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "SignedPermutation":
        """Parse "[(1 2) | 1100]"; the bitstring fixes the degree."""
        match = SIGNED_RE.match(text)
        if not match:
            raise SpecParseError(f"could not parse signed permutation {text!r}")
        signs = SignVector.parse(match.group("bits"))
        if degree is not None and signs.length != degree:
            raise SpecParseError(f"expected {degree} sign digits in {text!r}")
        perm = Permutation.parse(match.group("cycles"), degree=signs.length)
        return cls(perm, signs)

    @property
    def degree(self) -> int:
        return self.perm.degree

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return multiply(self, other)

    def __pow__(self, k: int) -> "SignedPermutation":
        base = self if k >= 0 else self.inverse()
        result = SignedPermutation.identity(self.degree)
        for _ in range(abs(k)):
            result = multiply(result, base)
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.perm == other.perm and self.signs == other.signs

    def __hash__(self) -> int:
        return hash((self.perm, self.signs))

    def __str__(self) -> str:
        return f"[{self.perm} | {self.signs}]"

    def __repr__(self) -> str:
        return f"SignedPermutation({self})"

    def inverse(self) -> "SignedPermutation":
        inv = invert_images(self.perm.images)
        return SignedPermutation.from_parts(inv, push_bits(self.signs.bits, inv))

    def is_identity(self) -> bool:
        return self.signs.bits == 0 and self.perm.is_identity()

    def order(self) -> int:
        return signed_order(self)


def _check_degrees(x: SignedPermutation, y: SignedPermutation):
    if x.degree != y.degree:
        raise StructuralError(f"degree mismatch: {x.degree} vs {y.degree}")


def multiply(x: SignedPermutation, y: SignedPermutation) -> SignedPermutation:
    """[s, b] * [t, c] = [s*t, t^-1(b) + c]."""
    _check_degrees(x, y)
    images = compose_images(x.perm.images, y.perm.images)
    bits = push_bits(x.signs.bits, y.perm.images) ^ y.signs.bits
    return SignedPermutation.from_parts(images, bits)


def signed_order(x: SignedPermutation) -> int:
    """Order of x: order(sigma) times 2 when the sigma-power still carries signs."""
    k = order_of_images(x.perm.images)
    power = x ** k
    return k if power.signs.bits == 0 else 2 * k


def to_degree_2n(x: SignedPermutation) -> Permutation:
    """Faithful action on {+-1..+-n}; point (i, e) sits at index i + e*n."""
    n = x.degree
    sigma = x.perm.images
    bits = x.signs.bits
    images = [0] * (2 * n)
    for i in range(n):
        target = sigma[i]
        flip = (bits >> target) & 1
        images[i] = target + flip * n
        images[i + n] = target + (1 - flip) * n
    return Permutation._trusted(tuple(images))


def from_degree_2n(perm: Permutation) -> SignedPermutation:
    """Inverse of to_degree_2n; rejects permutations that do not respect +-pairs."""
    if perm.degree % 2:
        raise StructuralError("degree-2n image must have even degree")
    n = perm.degree // 2
    images = perm.images
    sigma = [0] * n
    bits = 0
    for i in range(n):
        target = images[i]
        point, flip = target % n, target // n
        if images[i + n] != point + (1 - flip) * n:
            raise StructuralError(f"{perm} does not preserve the +-pairing")
        sigma[i] = point
        bits |= flip << point
    return SignedPermutation.from_parts(tuple(sigma), bits)


def is_in_dn(x: SignedPermutation) -> bool:
    return x.signs.is_even()


def pi(x: SignedPermutation) -> Permutation:
    """Quotient map B_n -> S_n, [sigma, b] -> sigma."""
    return x.perm


def all_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    """Every element of B_n; only meant for small n."""
    from itertools import permutations

    for images in permutations(range(n)):
        for bits in range(1 << n):
            yield SignedPermutation.from_parts(tuple(images), bits)


def random_signed(n: int, rng: random.Random, even: bool = False) -> SignedPermutation:
    images = list(range(n))
    rng.shuffle(images)
    bits = rng.getrandbits(n)
    if even and bin(bits).count("1") % 2:
        bits ^= 1
    return SignedPermutation.from_parts(tuple(images), bits)


def signed_cycle(n: int, points: Sequence[int], negative: bool) -> SignedPermutation:
    """A single cycle on 1-based points, carrying one sign digit when negative."""
    perm = Permutation.from_cycles([points], n)
    signs = SignVector.unit(n, points[0]) if negative else SignVector.zeros(n)
    return SignedPermutation(perm, signs)
