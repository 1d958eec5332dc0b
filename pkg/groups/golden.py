"""
Exact arithmetic in Z[phi]/d, phi = (1 + sqrt 5)/2, phi^2 = phi + 1
"""

import math
from typing import Tuple, Union

from utils.errors import StructuralError


Scalar = Union["GoldenScalar", int]


class GoldenScalar:
    """(a + b*phi) / d in canonical form: d > 0 and gcd(a, b, d) = 1"""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int, b: int = 0, d: int = 1):
        if d == 0:
            raise StructuralError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(math.gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self.a = a
        self.b = b
        self.d = d

    @staticmethod
    def _coerce(value: Scalar) -> "GoldenScalar":
        if isinstance(value, GoldenScalar):
            return value
        if isinstance(value, int):
            return GoldenScalar(value)
        raise TypeError(f"cannot use {type(value).__name__} as a golden scalar")

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conjugate(self) -> "GoldenScalar":
        """Galois conjugate: phi -> 1 - phi."""
        return GoldenScalar(self.a + self.b, -self.b, self.d)

    def norm_numerator(self) -> int:
        """(a + b phi)(a + b - b phi) = a^2 + ab - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def __add__(self, other: Scalar) -> "GoldenScalar":
        o = self._coerce(other)
        return GoldenScalar(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self) -> "GoldenScalar":
        return GoldenScalar(-self.a, -self.b, self.d)

    def __sub__(self, other: Scalar) -> "GoldenScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "GoldenScalar":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "GoldenScalar":
        o = self._coerce(other)
        ac = self.a * o.a
        be = self.b * o.b
        return GoldenScalar(ac + be, self.a * o.b + self.b * o.a + be, self.d * o.d)

    __rmul__ = __mul__

    def inverse(self) -> "GoldenScalar":
        norm = self.norm_numerator()
        if norm == 0:
            raise ZeroDivisionError("zero has no inverse")
        return GoldenScalar((self.a + self.b) * self.d, -self.b * self.d, norm)

    def __truediv__(self, other: Scalar) -> "GoldenScalar":
        return self * self._coerce(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GoldenScalar(other)
        return isinstance(other, GoldenScalar) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GoldenScalar({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            body = str(self.a)
        elif self.a == 0:
            body = f"{self.b}φ"
        else:
            body = f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}φ"
        return body if self.d == 1 else f"({body})/{self.d}"


PHI = GoldenScalar(0, 1)
ZERO = GoldenScalar(0)
ONE = GoldenScalar(1)
