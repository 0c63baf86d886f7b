"""Exact arithmetic in Q[sqrt(5)], written in the basis 1, phi.

Every scalar is p + q*phi with p, q exact rationals and phi = (1+sqrt(5))/2
the positive root of x^2 = x + 1.  Products are reduced eagerly with
phi^2 = 1 + phi, so equality is plain coefficient equality.  Signs are
decided by integer arithmetic only (see GoldenNum.sign), never by floats.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DomainError

_Rat = int | Fraction

_SQRT5 = math.sqrt(5.0)
_PHI_FLOAT = (1.0 + _SQRT5) / 2.0

_PARSE_RE = re.compile(
    r"""^\s*(?P<p>[+-]?\d+(?:/\d+)?)\s*
         (?:(?P<sign>[+-])\s*(?P<q>\d+(?:/\d+)?)\s*\*\s*phi)?\s*$""",
    re.VERBOSE,
)


class GoldenNum:
    """An element p + q*phi of Q[sqrt(5)] in canonical form."""

    __slots__ = ("p", "q")

    def __init__(self, p: _Rat = 0, q: _Rat = 0) -> None:
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def parse(cls, text: str) -> GoldenNum:
        """Parse the serialization "p+q*phi" (also accepts a bare rational)."""
        m = _PARSE_RE.match(text)
        if m is None:
            raise DomainError(f"not a valid golden number: {text!r}")
        p = Fraction(m.group("p"))
        if m.group("q") is None:
            return cls(p, 0)
        q = Fraction(m.group("q"))
        if m.group("sign") == "-":
            q = -q
        return cls(p, q)

    def __repr__(self) -> str:
        return f"GoldenNum({self.p!r}, {self.q!r})"

    def __str__(self) -> str:
        sign = "-" if self.q < 0 else "+"
        return f"{self.p}{sign}{abs(self.q)}*phi"

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def __neg__(self) -> GoldenNum:
        return GoldenNum(-self.p, -self.q)

    def __add__(self, other: object) -> GoldenNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenNum(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other: object) -> GoldenNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenNum(self.p - other.p, self.q - other.q)

    def __rsub__(self, other: object) -> GoldenNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: object) -> GoldenNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (p1 + q1 phi)(p2 + q2 phi) with phi^2 = 1 + phi
        cross = self.q * other.q
        return GoldenNum(self.p * other.p + cross,
                         self.p * other.q + self.q * other.p + cross)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> GoldenNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> GoldenNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> GoldenNum:
        """Galois conjugate: phi maps to 1 - phi."""
        return GoldenNum(self.p + self.q, -self.q)

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = p^2 + p q - q^2, a rational."""
        return self.p * self.p + self.p * self.q - self.q * self.q

    def inverse(self) -> GoldenNum:
        if not self:
            raise DomainError("zero has no inverse in Q[sqrt(5)]")
        n = self.norm()
        return GoldenNum((self.p + self.q) / n, -self.q / n)

    def sign(self) -> int:
        """Sign of the real embedding, computed with rational arithmetic.

        For q != 0 and p, q of opposite signs the comparison |p/q| vs phi
        reduces to the sign of the norm p^2 + pq - q^2, because t^2 - t - 1
        is negative exactly between the roots of phi's minimal polynomial.
        """
        p, q = self.p, self.q
        if q == 0:
            return _sgn(p)
        if p == 0:
            return _sgn(q)
        sp, sq = _sgn(p), _sgn(q)
        if sp == sq:
            return sp
        n = p * p + p * q - q * q
        if sq > 0:
            # p < 0 < q: positive iff -p/q < phi iff norm < 0
            return 1 if n < 0 else -1
        # q < 0 < p: positive iff p/(-q) > phi iff norm > 0
        return 1 if n > 0 else -1

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * _PHI_FLOAT

    def is_integral(self) -> bool:
        """True if the element lies in the subring Z[phi]."""
        return self.p.denominator == 1 and self.q.denominator == 1


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _coerce(x: object) -> GoldenNum | None:
    if isinstance(x, GoldenNum):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenNum(x, 0)
    return None


ZERO = GoldenNum(0, 0)
ONE = GoldenNum(1, 0)
PHI = GoldenNum(0, 1)
PHI_BAR = GoldenNum(-1, 1)  # 1/phi = phi - 1
PHI_SQ = GoldenNum(1, 1)


class GVec2:
    """A plane vector with GoldenNum components."""

    __slots__ = ("x", "y")

    def __init__(self, x: GoldenNum | _Rat, y: GoldenNum | _Rat) -> None:
        self.x = x if isinstance(x, GoldenNum) else GoldenNum(x)
        self.y = y if isinstance(y, GoldenNum) else GoldenNum(y)

    @classmethod
    def from_abcd(cls, abcd: tuple[int, int, int, int]) -> GVec2:
        a, b, c, d = abcd
        return cls(GoldenNum(a, b), GoldenNum(c, d))

    def abcd(self) -> tuple[int, int, int, int]:
        """Integer coefficients (a, b, c, d) of [a+b*phi, c+d*phi]."""
        if not (self.x.is_integral() and self.y.is_integral()):
            raise DomainError(f"vector {self} is not in Z[phi]^2")
        return (int(self.x.p), int(self.x.q), int(self.y.p), int(self.y.q))

    def __repr__(self) -> str:
        return f"GVec2({self.x}, {self.y})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GVec2) and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __add__(self, other: GVec2) -> GVec2:
        return GVec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: GVec2) -> GVec2:
        return GVec2(self.x - other.x, self.y - other.y)

    def scale(self, s: GoldenNum | _Rat) -> GVec2:
        return GVec2(self.x * s, self.y * s)

    def swap(self) -> GVec2:
        return GVec2(self.y, self.x)

    def floats(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))


class GMat2:
    """A 2x2 matrix [[a, b], [c, d]] over Q[sqrt(5)], acting on column vectors."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: GoldenNum | _Rat, b: GoldenNum | _Rat,
                 c: GoldenNum | _Rat, d: GoldenNum | _Rat) -> None:
        coerce = lambda v: v if isinstance(v, GoldenNum) else GoldenNum(v)
        self.a, self.b, self.c, self.d = coerce(a), coerce(b), coerce(c), coerce(d)

    @classmethod
    def identity(cls) -> GMat2:
        return cls(1, 0, 0, 1)

    def __repr__(self) -> str:
        return f"GMat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GMat2) and self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __matmul__(self, other: GMat2) -> GMat2:
        return GMat2(self.a * other.a + self.b * other.c,
                     self.a * other.b + self.b * other.d,
                     self.c * other.a + self.d * other.c,
                     self.c * other.b + self.d * other.d)

    def apply(self, v: GVec2) -> GVec2:
        return GVec2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def det(self) -> GoldenNum:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> GMat2:
        det = self.det()
        if not det:
            raise DomainError("matrix is singular")
        inv = det.inverse()
        return GMat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)
