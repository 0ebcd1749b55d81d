"""Spectra of admissible light speeds.

For fixed admissible ``c`` the speeds ``V`` with ``(V, c)`` admissible are
``V_k = n_k / m_k`` where ``(m_k, p_k)`` runs over the powers of the
fundamental solution of ``X² - c² Y² = 1``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .arith import DomainError, RationalLike, as_fraction, gcd
from .params import Triple, is_admissible_c
from .pell import pell_min_solution


@dataclass(frozen=True)
class SpectrumTerm:
    k: int
    triple: Triple
    V: Fraction
    gap_squared: Fraction  # c² - V_k², equal to c² / m_k²


@dataclass(frozen=True)
class Spectrum:
    c_squared: Fraction
    n_star: int
    p_star: int
    terms: tuple[SpectrumTerm, ...] = field(default_factory=tuple)

    @property
    def triples(self) -> list[Triple]:
        return [term.triple for term in self.terms]

    @property
    def speeds(self) -> list[Fraction]:
        return [term.V for term in self.terms]

    def signed_speeds(self) -> list[Fraction]:
        """``-V_K, ..., -V_1, V_1, ..., V_K``."""
        pos = self.speeds
        return [-v for v in reversed(pos)] + pos


def _require_admissible(c_squared: Fraction) -> None:
    if c_squared <= 0 or not is_admissible_c(c_squared):
        raise DomainError(f"c^2 = {c_squared} is not an admissible light speed")


def minimal_triple(c_squared: RationalLike) -> Triple:
    """Least triple with ``n/p == c²``, from the Pell equation with ``d = n* p*``."""
    c_squared = as_fraction(c_squared)
    _require_admissible(c_squared)
    n_star, p_star = c_squared.numerator, c_squared.denominator
    sol = pell_min_solution(n_star * p_star)
    return Triple(sol.x, sol.y * n_star, sol.y * p_star)


def spectrum(c_squared: RationalLike, count: int) -> Spectrum:
    """First ``count`` terms ``V_1 < V_2 < ...`` of the spectrum of ``c``."""
    c_squared = as_fraction(c_squared)
    if count < 1:
        raise DomainError("count must be >= 1")
    first = minimal_triple(c_squared)
    m1, n1, p1 = first.m, first.n, first.p
    terms = []
    m, p = 1, 0
    for k in range(1, count + 1):
        # c² p1 == n1, so the recurrence stays in integers
        m, p = m1 * m + n1 * p, m1 * p + p1 * m
        n, rem = divmod(m * m - 1, p)
        assert rem == 0, "p_k must divide m_k^2 - 1"
        terms.append(SpectrumTerm(k, Triple(m, n, p), Fraction(n, m), c_squared / (m * m)))
    return Spectrum(c_squared, c_squared.numerator, c_squared.denominator, tuple(terms))


def spectrum_index(t: Triple) -> int:
    """Position ``k`` of ``t`` in the spectrum of ``c² = n/p``."""
    first = minimal_triple(t.c_squared)
    m1, n1, p1 = first.m, first.n, first.p
    m, p, k = m1, p1, 1
    while m < t.m:
        m, p = m1 * m + n1 * p, m1 * p + p1 * m
        k += 1
    if m != t.m:  # pragma: no cover - every triple lies on its spectrum
        raise AssertionError(f"{t} is missing from its spectrum")
    return k


def accumulation_report(s: Spectrum) -> list[Fraction]:
    """``c² - V_k²`` for each term; tends to 0 so ``V_k -> c``."""
    if not s.terms:
        raise DomainError("empty spectrum")
    return [s.c_squared - term.V * term.V for term in s.terms]


def closer_than(c_squared: RationalLike, V: RationalLike, eps: RationalLike) -> bool:
    """Exact test of ``0 <= c - V < eps`` for ``V >= 0`` and rational ``eps > 0``."""
    c_squared, V, eps = as_fraction(c_squared), as_fraction(V), as_fraction(eps)
    # c - V < eps  <=>  c² < (V + eps)²  since both sides are positive
    return V * V <= c_squared < (V + eps) ** 2


def brute_force_spectra(m_max: int, backend: str | None = None) -> dict[Fraction, list[Triple]]:
    """Every triple with ``m <= m_max``, grouped by ``c² = n/p`` and sorted by ``m``.

    Independent of the Pell machinery: it only factors ``m² - 1``.
    """
    if m_max < 2:
        raise DomainError("m_max must be >= 2")
    ms, ns = _kernels.divisor_pairs(m_max, backend=backend)
    groups: dict[tuple[int, int], list[Triple]] = defaultdict(list)
    for m, n in zip(ms.tolist(), ns.tolist()):
        p = (m * m - 1) // n
        g = gcd(n, p)
        # n < m < p, so (m, n, p) and (m, p, n) are distinct triples
        groups[n // g, p // g].append(Triple(m, n, p))
        groups[p // g, n // g].append(Triple(m, p, n))
    # rows arrive ordered by m, so each group is already sorted
    return {Fraction(num, den): triples for (num, den), triples in groups.items()}
