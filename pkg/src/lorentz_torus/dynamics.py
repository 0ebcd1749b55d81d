"""The torus automorphism of a triple and its dynamics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .arith import DomainError, QuadraticSurd, RationalLike, as_fraction
from .params import Triple

SurdVector = tuple[QuadraticSurd, QuadraticSurd]


class PeriodSearchError(RuntimeError):
    """``max_iter`` ran out before the orbit closed."""


@dataclass(frozen=True)
class TorusAutomorphism:
    """Integer matrix ``[[a11, a12], [a21, a22]]`` acting on R²/Z².

    Coordinates are ``(x, t)``.  The determinant must be ±1.
    """

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise DomainError(f"determinant {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def trace(self) -> int:
        return self.a11 + self.a22

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a11, self.a12, self.a21, self.a22

    def rows(self) -> list[list[int]]:
        return [[self.a11, self.a12], [self.a21, self.a22]]

    def inverse(self) -> TorusAutomorphism:
        d = self.det
        return TorusAutomorphism(d * self.a22, -d * self.a12, -d * self.a21, d * self.a11)

    def __matmul__(self, other: TorusAutomorphism) -> TorusAutomorphism:
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return TorusAutomorphism(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def apply(self, v: SurdVector) -> SurdVector:
        x, t = v
        return self.a11 * x + self.a12 * t, self.a21 * x + self.a22 * t


@dataclass(frozen=True)
class RationalPoint:
    """A point of the torus with rational coordinates in ``[0, 1)``."""

    x: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "t", as_fraction(self.t))
        if not (0 <= self.x < 1 and 0 <= self.t < 1):
            raise DomainError(f"({self.x}, {self.t}) is not in [0, 1)^2")

    @classmethod
    def wrap(cls, x: RationalLike, t: RationalLike) -> RationalPoint:
        x, t = as_fraction(x), as_fraction(t)
        return cls(x - math.floor(x), t - math.floor(t))

    @property
    def denominator(self) -> int:
        """Least ``q`` with both coordinates in ``Z/q``."""
        return math.lcm(self.x.denominator, self.t.denominator)


@dataclass(frozen=True)
class EigenData:
    """Exact eigen-structure of ``[[m, -n], [-p, m]]``.

    ``stable_dir = (sqrt(np), p)`` belongs to ``lambda1 = m - sqrt(np)`` and
    ``unstable_dir = (-sqrt(np), p)`` to ``lambda2 = m + sqrt(np)``; these are
    ``(c, 1)`` and ``(-c, 1)`` scaled by ``p``.
    """

    lambda1: QuadraticSurd
    lambda2: QuadraticSurd
    stable_dir: SurdVector
    unstable_dir: SurdVector


def matrix_from_triple(t: Triple) -> TorusAutomorphism:
    return TorusAutomorphism(t.m, -t.n, -t.p, t.m)


def eigen(t: Triple) -> EigenData:
    D = t.n * t.p  # == m² - 1, never a square
    root = QuadraticSurd(0, 1, D)
    p = QuadraticSurd.rational(t.p, D)
    return EigenData(
        lambda1=t.m - root,
        lambda2=t.m + root,
        stable_dir=(root, p),
        unstable_dir=(-root, p),
    )


def eigen_residual(M: TorusAutomorphism, lam: QuadraticSurd, v: SurdVector) -> SurdVector:
    """``M v - lam v`` computed exactly."""
    mx, mt = M.apply(v)
    return mx - lam * v[0], mt - lam * v[1]


def is_anosov(M: TorusAutomorphism) -> bool:
    """Hyperbolic iff ``|trace| > 2`` (no eigenvalue on the unit circle).

    With determinant -1 the eigenvalues are real with product -1, so only a
    zero trace puts them on the unit circle.
    """
    if M.det == 1:
        return abs(M.trace) > 2
    if M.det == -1:
        return M.trace != 0
    return False  # pragma: no cover - excluded by the constructor


def apply_point(M: TorusAutomorphism, pt: RationalPoint) -> RationalPoint:
    return RationalPoint.wrap(M.a11 * pt.x + M.a12 * pt.t, M.a21 * pt.x + M.a22 * pt.t)


def _lattice_coords(pt: RationalPoint) -> tuple[int, int, int]:
    q = pt.denominator
    return int(pt.x * q), int(pt.t * q), q


def orbit(M: TorusAutomorphism, pt: RationalPoint, max_iter: int) -> list[RationalPoint]:
    """The periodic cycle through ``pt``, starting at ``pt``.

    Iterates on the integer lattice ``(Z/q)²`` which carries every point of the
    orbit, so each step is exact integer arithmetic.
    """
    if max_iter < 1:
        raise DomainError("max_iter must be >= 1")
    i0, j0, q = _lattice_coords(pt)
    a, b, c, d = M.entries
    cycle = [(i0, j0)]
    i, j = i0, j0
    for _ in range(max_iter):
        i, j = (a * i + b * j) % q, (c * i + d * j) % q
        if i == i0 and j == j0:
            return [RationalPoint(Fraction(u, q), Fraction(v, q)) for u, v in cycle]
        cycle.append((i, j))
    raise PeriodSearchError(
        f"orbit did not close within max_iter={max_iter}; at most q^2={q * q} steps are needed"
    )


def period_of(M: TorusAutomorphism, pt: RationalPoint, max_iter: int) -> int:
    """Least ``k >= 1`` with ``M^k pt == pt`` on the torus."""
    if max_iter < 1:
        raise DomainError("max_iter must be >= 1")
    i0, j0, q = _lattice_coords(pt)
    a, b, c, d = M.entries
    i, j = i0, j0
    for k in range(1, max_iter + 1):
        i, j = (a * i + b * j) % q, (c * i + d * j) % q
        if i == i0 and j == j0:
            return k
    raise PeriodSearchError(
        f"orbit did not close within max_iter={max_iter}; at most q^2={q * q} steps are needed"
    )


def matrix_order_mod(M: TorusAutomorphism, q: int) -> int:
    """Order of ``M`` in ``GL2(Z/q)``."""
    if q < 1:
        raise DomainError("q must be >= 1")
    a, b, c, d = (v % q for v in M.entries)
    ident = (1 % q, 0, 0, 1 % q)
    cur = (a, b, c, d)
    k = 1
    while cur != ident:
        w, x, y, z = cur
        cur = ((w * a + x * c) % q, (w * b + x * d) % q, (y * a + z * c) % q, (y * b + z * d) % q)
        k += 1
    return k


@dataclass(frozen=True)
class OrbitStats:
    counts: np.ndarray  # (grid, grid) visit counts, indexed [x cell, t cell]
    steps: int
    final: tuple[float, float]

    @property
    def grid(self) -> int:
        return self.counts.shape[0]

    @property
    def visited(self) -> int:
        return int(np.count_nonzero(self.counts))

    @property
    def occupancy(self) -> float:
        return self.visited / self.counts.size


def orbit_sample(M: TorusAutomorphism, seed: tuple[float, float], steps: int,
                 grid: int = 32, backend: str | None = None) -> OrbitStats:
    """Float orbit of ``seed`` binned on a ``grid x grid`` box partition.

    A diagnostic only: rounding makes the float orbit a pseudo-orbit.
    """
    if steps < 1:
        raise DomainError("steps must be >= 1")
    x, t = (float(v) % 1.0 for v in seed)
    counts, fx, ft = _kernels.orbit_counts(M.entries, x, t, steps, grid, backend=backend)
    return OrbitStats(counts, steps, (fx, ft))
