"""Continued fractions of square roots and the Pell equation ``x² - d y² = 1``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, islice, repeat
from typing import Iterator

from . import _kernels
from .arith import DomainError, RationalLike, as_fraction, is_perfect_square, isqrt

Pair = tuple[RationalLike, RationalLike]


@dataclass(frozen=True)
class CFExpansion:
    """``sqrt(d) = [a0; period, period, ...]`` with one minimal period."""

    d: int
    a0: int
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise DomainError("empty period")
        if self.period[-1] != 2 * self.a0:
            raise DomainError(f"period of sqrt({self.d}) must end with 2*a0")

    def partial_quotients(self) -> Iterator[int]:
        """``a0, a1, a2, ...`` without end."""
        return chain((self.a0,), chain.from_iterable(repeat(self.period)))


@dataclass(frozen=True)
class Convergent:
    P: int
    Q: int
    index: int


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    d: int

    def __post_init__(self) -> None:
        if self.x < 1 or self.y < 0:
            raise DomainError(f"({self.x}, {self.y}) is not a non-negative solution")
        if self.x * self.x - self.d * self.y * self.y != 1:
            raise DomainError(f"({self.x}, {self.y}) does not solve x^2 - {self.d}y^2 = 1")

    def as_pair(self) -> tuple[int, int]:
        return self.x, self.y


def _require_nonsquare(d: int) -> None:
    if d < 2 or is_perfect_square(d):
        raise DomainError(f"d={d} must be a non-square integer >= 2")


def cf_sqrt(d: int) -> CFExpansion:
    """Periodic continued fraction of ``sqrt(d)``.

    Runs the integer recurrence on states ``(m_i, q_i, a_i)``; the period
    closes at the first ``a_i == 2*a0``, which is where ``(m_i, q_i)`` first
    repeats.
    """
    _require_nonsquare(d)
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return CFExpansion(d, a0, tuple(period))


def iter_convergents(cf: CFExpansion) -> Iterator[Convergent]:
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for i, a in enumerate(cf.partial_quotients()):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield Convergent(p, q, i)


def convergents(cf: CFExpansion, count: int) -> list[Convergent]:
    """The first ``count`` convergents ``P_i/Q_i`` of the expansion."""
    if count < 1:
        raise DomainError("count must be >= 1")
    return list(islice(iter_convergents(cf), count))


def min_solution_index(cf: CFExpansion) -> int:
    """Convergent index of the fundamental solution, by period parity."""
    s = len(cf.period)
    return s - 1 if s % 2 == 0 else 2 * s - 1


def scan_min_solution(d: int) -> tuple[int, PellSolution]:
    """First convergent that solves the equation, found by scanning."""
    for c in iter_convergents(cf_sqrt(d)):
        if c.P * c.P - d * c.Q * c.Q == 1:
            return c.index, PellSolution(c.P, c.Q, d)
    raise AssertionError("unreachable")  # pragma: no cover


def pell_min_solution(d: int) -> PellSolution:
    """Fundamental (least nontrivial) solution of ``x² - d y² = 1``."""
    cf = cf_sqrt(d)
    idx = min_solution_index(cf)
    c = convergents(cf, idx + 1)[-1]
    if c.P * c.P - d * c.Q * c.Q == 1:
        return PellSolution(c.P, c.Q, d)
    # parity rule should never miss, but the scan is cheap insurance
    return scan_min_solution(d)[1]  # pragma: no cover


def brute_force_min_solution(d: int, y_max: int, backend: str | None = None) -> PellSolution | None:
    """Least solution with ``1 <= y <= y_max`` by direct search, or None."""
    _require_nonsquare(d)
    hit = _kernels.pell_search(d, y_max, backend=backend)
    return None if hit is None else PellSolution(hit[0], hit[1], d)


def _satisfies(pair: Pair, dsq: Fraction) -> bool:
    x, y = pair
    return x * x - dsq * y * y == 1


def pell_compose(s: Pair, t: Pair, dsq: RationalLike) -> Pair:
    """``(u, v) ⊗ (x, y) = (ux + D vy, vx + uy)`` for solutions of ``X² - D Y² = 1``.

    ``D`` may be rational; components may be rational too.
    """
    dsq = as_fraction(dsq)
    for pair in (s, t):
        if not _satisfies(pair, dsq):
            raise DomainError(f"{pair} does not solve X^2 - ({dsq})Y^2 = 1")
    return _compose(s, t, dsq)


def _compose(s: Pair, t: Pair, dsq: Fraction) -> Pair:
    u, v = s
    x, y = t
    dvy = dsq * v * y
    if dvy.denominator == 1:
        dvy = dvy.numerator
    return u * x + dvy, v * x + u * y


def pell_powers(s: Pair, dsq: RationalLike) -> Iterator[Pair]:
    """``s^0, s^1, s^2, ...`` by repeated left multiplication."""
    dsq = as_fraction(dsq)
    if not _satisfies(s, dsq):
        raise DomainError(f"{s} does not solve X^2 - ({dsq})Y^2 = 1")
    cur: Pair = (1, 0)
    while True:
        yield cur
        cur = _compose(s, cur, dsq)


def pell_power(s: Pair, k: int, dsq: RationalLike, method: str = "fold") -> Pair:
    """k-fold ⊗-power of ``s``; ``k = 0`` gives ``(1, 0)``.

    ``method="fold"`` walks the powers one by one; ``method="binary"`` squares
    and multiplies, which is cheaper for a single large ``k``.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    dsq = as_fraction(dsq)
    if method == "fold":
        return next(islice(pell_powers(s, dsq), k, None))
    if method != "binary":
        raise ValueError(f"unknown method {method!r}")
    if not _satisfies(s, dsq):
        raise DomainError(f"{s} does not solve X^2 - ({dsq})Y^2 = 1")
    result: Pair = (1, 0)
    base = s
    while k:
        if k & 1:
            result = _compose(result, base, dsq)
        base = _compose(base, base, dsq)
        k >>= 1
    return result


def pell_solutions(d: int, count: int) -> list[PellSolution]:
    """The first ``count`` nontrivial solutions in increasing order."""
    if count < 0:
        raise DomainError("count must be >= 0")
    fund = pell_min_solution(d)
    powers = islice(pell_powers(fund.as_pair(), d), 1, count + 1)
    return [PellSolution(x, y, d) for x, y in powers]
