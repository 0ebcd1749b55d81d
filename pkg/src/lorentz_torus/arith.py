"""Exact integer, rational and quadratic-surd arithmetic.

Integers are Python ints and rationals are :class:`fractions.Fraction`; both are
arbitrary precision.  :class:`QuadraticSurd` adds elements ``a + b*sqrt(d)``
for a fixed radicand ``d``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, always non-negative; ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def isqrt(n: int) -> int:
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def as_fraction(x: RationalLike | str) -> Fraction:
    """Coerce ints, Fractions and ``"N/P"`` strings to a Fraction.

    Floats and decimal strings are refused: they cannot carry values like 1/3.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"N/P"`` or a bare integer.  Decimal points are rejected."""
    s = text.strip()
    if not s:
        raise DomainError("empty rational")
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"not an exact rational: {text!r}") from None
    if d == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(x: RationalLike) -> str:
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_to_decimal(x: RationalLike, digits: int = 20) -> str:
    """Render ``x`` with ``digits`` significant digits."""
    x = as_fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


@dataclass(frozen=True)
class QuadraticSurd:
    """The number ``a + b*sqrt(d)`` with rational ``a``, ``b``.

    ``d`` is kept exactly as given, it is not reduced to its squarefree part.
    When ``b != 0`` the radicand must be a non-square integer ``>= 2``.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if self.b != 0 and (self.d < 2 or is_perfect_square(self.d)):
            raise DomainError(f"radicand {self.d} must be a non-square integer >= 2")

    @classmethod
    def rational(cls, a: RationalLike, d: int) -> QuadraticSurd:
        return cls(as_fraction(a), Fraction(0), d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticSurd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        # rational surds compare equal to Fractions, so they must hash alike
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))

    def _check(self, other: QuadraticSurd) -> None:
        if self.d != other.d:
            raise DomainError(f"mismatched radicands {self.d} and {other.d}")

    def _coerce(self, other: object) -> QuadraticSurd | None:
        if isinstance(other, QuadraticSurd):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadraticSurd.rational(other, self.d)
        return None

    def __add__(self, other: object) -> QuadraticSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other: object) -> QuadraticSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticSurd(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: object) -> QuadraticSurd:
        return -self + other

    def __mul__(self, other: object) -> QuadraticSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return surd_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadraticSurd:
        if k < 0:
            raise DomainError("negative powers are not supported")
        result = QuadraticSurd.rational(1, self.d)
        base = self
        while k:
            if k & 1:
                result = surd_mul(result, base)
            base = surd_mul(base, base)
            k >>= 1
        return result

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """``(a + b√d)(a - b√d) = a² - d b²``."""
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of ``a + b√d``, decided by comparing squares."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a² with d b²
        diff = self.a * self.a - self.d * self.b * self.b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    def _cmp(self, other: object) -> int | None:
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other: object) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other: object) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other: object) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other: object) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_decimal(self, digits: int = 20) -> str:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            value = a + b * Decimal(self.d).sqrt()
            ctx.prec = digits
            return str(+value)

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        root = f"sqrt({self.d})"
        b = self.b
        term = root if abs(b) == 1 else f"{format_rational(abs(b))}*{root}"
        if self.a == 0:
            return term if b > 0 else f"-{term}"
        return f"{format_rational(self.a)} {'+' if b > 0 else '-'} {term}"


def surd_mul(x: QuadraticSurd, y: QuadraticSurd) -> QuadraticSurd:
    """``(a1 + b1√d)(a2 + b2√d) = (a1a2 + b1b2d) + (a1b2 + a2b1)√d``."""
    if x.d != y.d:
        raise DomainError(f"mismatched radicands {x.d} and {y.d}")
    return QuadraticSurd(
        x.a * y.a + x.b * y.b * x.d,
        x.a * y.b + y.a * x.b,
        x.d,
    )


_SURD_RE = re.compile(
    r"""^\s*(?:(?P<a>-?\d+(?:/\d+)?)\s*(?P<op>[+-])\s*|(?P<neg>-))?
        (?:(?P<b>\d+(?:/\d+)?)\*)?sqrt\((?P<d>\d+)\)\s*$""",
    re.VERBOSE,
)


def parse_surd(text: str, d: int | None = None) -> QuadraticSurd:
    """Inverse of ``str(QuadraticSurd)``.

    A plain rational has no visible radicand, so ``d`` must then be supplied.
    """
    match = _SURD_RE.match(text)
    if match is None:
        if d is None:
            raise DomainError(f"radicand needed to parse rational surd {text!r}")
        return QuadraticSurd.rational(parse_rational(text), d)
    b = parse_rational(match["b"]) if match["b"] else Fraction(1)
    if match["neg"] or match["op"] == "-":
        b = -b
    a = parse_rational(match["a"]) if match["a"] else Fraction(0)
    radicand = int(match["d"])
    if d is not None and d != radicand:
        raise DomainError(f"radicand {radicand} differs from expected {d}")
    return QuadraticSurd(a, b, radicand)
