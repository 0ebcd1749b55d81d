import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_torus.arith import DomainError, QuadraticSurd
from lorentz_torus.dynamics import (
    PeriodSearchError,
    RationalPoint,
    TorusAutomorphism,
    apply_point,
    eigen,
    eigen_residual,
    is_anosov,
    matrix_from_triple,
    matrix_order_mod,
    orbit,
    orbit_sample,
    period_of,
)
from lorentz_torus.params import Triple

from .oracles import brute_force_triples

F = Fraction
A = TorusAutomorphism(3, -2, -4, 3)


@pytest.mark.parametrize("triple, entries", [
    ((3, 2, 4), (3, -2, -4, 3)),
    ((2, 3, 1), (2, -3, -1, 2)),
    ((2, 1, 3), (2, -1, -3, 2)),
])
def test_matrix_from_triple(triple, entries):
    M = matrix_from_triple(Triple(*triple))
    assert M.entries == entries
    assert M.det == 1


def test_non_unimodular_rejected():
    with pytest.raises(DomainError):
        TorusAutomorphism(2, 0, 0, 1)


def test_eigen_examples():
    e = eigen(Triple(3, 2, 4))
    assert e.lambda2 == QuadraticSurd(3, 1, 8)
    assert e.lambda1 == QuadraticSurd(3, -1, 8)
    assert eigen(Triple(2, 3, 1)).lambda2 == QuadraticSurd(2, 1, 3)


def test_eigenvalue_matches_beta_form():
    # lambda1 = sqrt(1 - beta^2)/(1 + beta) with beta = V/c; check lambda1 (1 + beta) = sqrt(1 - beta^2)
    t = Triple(3, 2, 4)
    e = eigen(t)
    beta = QuadraticSurd(0, F(1, 3), 8)  # V/c = (2/3)/(sqrt(8)/4)
    lhs = e.lambda1 * (1 + beta)
    assert lhs * lhs == 1 - beta * beta
    assert lhs > 0


@pytest.mark.parametrize("m, n, p", brute_force_triples(12))
def test_eigen_structure(m, n, p):
    t = Triple(m, n, p)
    M = matrix_from_triple(t)
    e = eigen(t)
    assert e.lambda1 * e.lambda2 == 1
    assert e.lambda1 + e.lambda2 == 2 * m
    assert 0 < e.lambda1 < 1 < e.lambda2
    for lam, v in ((e.lambda1, e.stable_dir), (e.lambda2, e.unstable_dir)):
        assert all(c.is_zero() for c in eigen_residual(M, lam, v))


@pytest.mark.parametrize("entries, expected", [
    ((3, -2, -4, 3), True),
    ((1, 1, 0, 1), False),
    ((2, 1, 1, 1), True),
    ((0, 1, 1, 0), False),
    ((1, 1, 1, 0), True),
])
def test_is_anosov(entries, expected):
    assert is_anosov(TorusAutomorphism(*entries)) is expected


def test_apply_point():
    assert apply_point(A, RationalPoint(F(1, 2), F(1, 2))) == RationalPoint(F(1, 2), F(1, 2))
    assert apply_point(A, RationalPoint(0, 0)) == RationalPoint(0, 0)
    assert apply_point(A, RationalPoint(0, F(1, 3))) == RationalPoint(F(1, 3), 0)


def test_rational_point_bounds():
    with pytest.raises(DomainError):
        RationalPoint(F(1), 0)
    assert RationalPoint.wrap(F(-2, 3), F(7, 2)) == RationalPoint(F(1, 3), F(1, 2))


def test_period_of():
    assert period_of(A, RationalPoint(0, F(1, 3)), 100) == 4
    assert period_of(A, RationalPoint(F(1, 2), F(1, 2)), 100) == 1
    assert period_of(A, RationalPoint(0, 0), 1) == 1
    assert [(p.x, p.t) for p in orbit(A, RationalPoint(0, F(1, 3)), 100)] == [
        (0, F(1, 3)), (F(1, 3), 0), (0, F(2, 3)), (F(2, 3), 0)
    ]


def test_period_search_limit():
    with pytest.raises(PeriodSearchError):
        period_of(A, RationalPoint(0, F(1, 3)), 3)


@pytest.mark.parametrize("triple", [(3, 2, 4), (2, 3, 1), (5, 4, 6)])
def test_period_divides_matrix_order(triple):
    M = matrix_from_triple(Triple(*triple))
    inv = M.inverse()
    for q in range(1, 31):
        order = matrix_order_mod(M, q)
        for i in range(q):
            for j in range(0, q, max(1, q // 7)):
                pt = RationalPoint(F(i, q), F(j, q))
                k = period_of(M, pt, q * q)
                assert order % k == 0
                assert period_of(inv, pt, q * q) == k


def test_matrix_order_mod():
    assert matrix_order_mod(A, 3) == 4
    assert matrix_order_mod(A, 2) == 1
    assert (A @ A.inverse()).entries == (1, 0, 0, 1)


@st.composite
def lattice_points(draw):
    q = draw(st.integers(1, 40))
    return RationalPoint(F(draw(st.integers(0, q - 1)), q), F(draw(st.integers(0, q - 1)), q))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(brute_force_triples(15)), lattice_points())
def test_orbit_closes_exactly_at_period(triple, pt):
    M = matrix_from_triple(Triple(*triple))
    k = period_of(M, pt, pt.denominator ** 2)
    cur = pt
    for step in range(1, k + 1):
        cur = apply_point(M, cur)
        assert (cur == pt) == (step == k)


@pytest.mark.parametrize("backend", ["numba", "numpy"])
def test_orbit_sample_fixed_and_periodic(backend):
    assert orbit_sample(A, (0.0, 0.0), 1000, backend=backend).occupancy == 1 / 1024
    # (0, 1/8) is exactly representable and has period 4
    assert period_of(A, RationalPoint(0, F(1, 8)), 64) == 4
    stats = orbit_sample(A, (0.0, 0.125), 1000, backend=backend)
    assert stats.visited <= 4
    assert stats.counts.sum() == 1000


def test_orbit_sample_backends_agree_and_deterministic():
    seed = (math.sqrt(2) - 1, math.pi - 3)
    a = orbit_sample(A, seed, 20000, backend="numba")
    b = orbit_sample(A, seed, 20000, backend="numpy")
    assert np.array_equal(a.counts, b.counts) and a.final == b.final
    assert np.array_equal(a.counts, orbit_sample(A, seed, 20000, backend="numba").counts)


def test_orbit_sample_generic_seed_fills_grid():
    seed = (math.sqrt(2) - 1, math.pi - 3)
    stats = orbit_sample(A, seed, 10**6)
    assert stats.occupancy >= 0.99
