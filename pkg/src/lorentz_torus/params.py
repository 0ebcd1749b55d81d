"""Admissible Lorentz-boost parameters and the triples ``m² - np = 1``.

A boost with relative speed ``V`` and light speed ``c`` descends to the torus
exactly when its matrix ``[[m, -n], [-p, m]]`` is integral, with
``m = 1/sqrt(1 - V²/c²)``, ``n = mV`` and ``p = mV/c²``.  Only ``V > 0`` is
handled here; negative speeds are reduced to positive ones by the caller.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    DomainError,
    QuadraticSurd,
    RationalLike,
    as_fraction,
    gcd,
    is_perfect_square,
    isqrt,
)


class InvalidTriple(ValueError):
    """``(m, n, p)`` violates one of the triple conditions.

    ``criterion`` is one of ``"equation"``, ``"m_too_small"``,
    ``"n_not_positive"``, ``"p_not_positive"``.
    """

    def __init__(self, criterion: str, message: str):
        super().__init__(message)
        self.criterion = criterion


class Inadmissible(ValueError):
    """A speed or parameter pair does not come from any triple."""

    def __init__(self, criterion: str, reason: str):
        super().__init__(reason)
        self.criterion = criterion
        self.reason = reason


@dataclass(frozen=True, order=True)
class Triple:
    m: int
    n: int
    p: int

    def __post_init__(self) -> None:
        m, n, p = self.m, self.n, self.p
        if m < 2:
            raise InvalidTriple("m_too_small", f"m={m} must be >= 2")
        if n < 1:
            raise InvalidTriple("n_not_positive", f"n={n} must be positive")
        if p < 1:
            raise InvalidTriple("p_not_positive", f"p={p} must be positive")
        if m * m - n * p != 1:
            raise InvalidTriple("equation", f"{m}^2 - {n}*{p} != 1")
        # implied by the equation
        assert gcd(m, n) == 1 and gcd(m, p) == 1

    def __iter__(self):
        return iter((self.m, self.n, self.p))

    def precedes(self, other: Triple) -> bool:
        """Strict componentwise order: every entry strictly smaller."""
        return self.m < other.m and self.n < other.n and self.p < other.p

    @property
    def c_squared(self) -> Fraction:
        return Fraction(self.n, self.p)

    @property
    def V(self) -> Fraction:
        return Fraction(self.n, self.m)


def triple_check(m: int, n: int, p: int) -> Triple:
    return Triple(m, n, p)


@dataclass(frozen=True)
class ParamPair:
    """An admissible ``(V, c)`` held exactly.

    ``c`` itself is irrational and is kept as ``sqrt(radicand) / c_den`` with
    ``radicand = m² - 1`` and ``c_den = p`` of the generating triple.
    """

    V: Fraction
    c_squared: Fraction
    radicand: int
    c_den: int

    def __post_init__(self) -> None:
        if not self.V > 0:
            raise DomainError("V must be positive")
        if not self.V * self.V < self.c_squared:
            raise DomainError("V must be slower than c")
        if self.c_squared * self.c_den**2 != self.radicand:
            raise DomainError("c representation is inconsistent with c_squared")
        if is_perfect_square(self.c_squared.numerator * self.c_squared.denominator):
            raise DomainError("c must be irrational")

    @property
    def c(self) -> QuadraticSurd:
        return QuadraticSurd(0, Fraction(1, self.c_den), self.radicand)

    @property
    def beta(self) -> QuadraticSurd:
        """``V/c`` as an exact surd over the same radicand."""
        return QuadraticSurd(0, self.V * self.c_den / self.radicand, self.radicand)


def pair_from_triple(t: Triple) -> ParamPair:
    return ParamPair(
        V=Fraction(t.n, t.m),
        c_squared=Fraction(t.n, t.p),
        radicand=t.m * t.m - 1,
        c_den=t.p,
    )


def triple_from_V(V: RationalLike) -> Triple:
    """The unique triple with ``n/m == V``, or :class:`Inadmissible`."""
    V = as_fraction(V)
    if V <= 0:
        raise DomainError("V must be positive")
    n, m = V.numerator, V.denominator
    if m < 2:
        raise Inadmissible("m_too_small", "denominator m of V must be >= 2")
    if (m * m - 1) % n:
        raise Inadmissible("n_not_divides", "n does not divide m²−1")
    return Triple(m, n, (m * m - 1) // n)


def mnp_from_pair(V: RationalLike, c_squared: RationalLike) -> Triple:
    """Recover ``(m, n, p)`` from ``(V, c²)`` entirely in rationals."""
    V = as_fraction(V)
    c_squared = as_fraction(c_squared)
    if not (V > 0 and V * V < c_squared):
        raise DomainError("need 0 < V^2 < c^2")
    m_sq = 1 / (1 - V * V / c_squared)
    if m_sq.denominator != 1 or not is_perfect_square(m_sq.numerator):
        raise Inadmissible("m_not_integer", f"m^2 = {m_sq} is not a square integer")
    m = isqrt(m_sq.numerator)
    if m < 2:  # pragma: no cover - m^2 > 1 whenever V > 0
        raise Inadmissible("m_too_small", "m must be >= 2")
    n = m * V
    if n.denominator != 1:
        raise Inadmissible("n_not_integer", f"n = mV = {n} is not an integer")
    p = n / c_squared
    if p.denominator != 1:
        raise Inadmissible("p_not_integer", f"p = mV/c^2 = {p} is not an integer")
    return Triple(m, int(n), int(p))


def is_admissible_c(c_squared: RationalLike) -> bool:
    """True iff ``sqrt(c²)`` is irrational, i.e. ``N*P`` is not a square."""
    c_squared = as_fraction(c_squared)
    if c_squared <= 0:
        raise DomainError("c^2 must be positive")
    return not is_perfect_square(c_squared.numerator * c_squared.denominator)


class Family(str, enum.Enum):
    N_LARGE = "n_large"  # (m, m²-1, 1): c, V grow without bound
    P_LARGE = "p_large"  # (m, 1, m²-1): c, V shrink to 0


def family_triple(m: int, family: Family | str) -> Triple:
    family = Family(family)
    if m < 2:
        raise DomainError("m must be >= 2")
    if family is Family.N_LARGE:
        return Triple(m, m * m - 1, 1)
    return Triple(m, 1, m * m - 1)
