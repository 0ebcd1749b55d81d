from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorentz_torus.arith import DomainError
from lorentz_torus.params import (
    Family,
    Inadmissible,
    InvalidTriple,
    Triple,
    family_triple,
    is_admissible_c,
    mnp_from_pair,
    pair_from_triple,
    triple_check,
    triple_from_V,
)

from .oracles import brute_force_triples


def test_triple_check_valid():
    assert triple_check(3, 2, 4) == Triple(3, 2, 4)
    assert triple_check(2, 3, 1) == Triple(2, 3, 1)


@pytest.mark.parametrize("args, criterion", [
    ((3, 2, 5), "equation"),
    ((1, 0, 0), "m_too_small"),
    ((2, 0, 3), "n_not_positive"),
    ((2, 3, -1), "p_not_positive"),
])
def test_triple_check_errors(args, criterion):
    with pytest.raises(InvalidTriple) as info:
        triple_check(*args)
    assert info.value.criterion == criterion


@pytest.mark.parametrize("triple, V, c2", [
    ((3, 2, 4), Fraction(2, 3), Fraction(1, 2)),
    ((2, 3, 1), Fraction(3, 2), Fraction(3)),
    ((2, 1, 3), Fraction(1, 2), Fraction(1, 3)),
])
def test_pair_from_triple(triple, V, c2):
    pair = pair_from_triple(Triple(*triple))
    assert (pair.V, pair.c_squared) == (V, c2)
    assert pair.V ** 2 < pair.c_squared
    c = pair.c
    assert c * c == pair.c_squared


def test_beta_matches_ratio():
    pair = pair_from_triple(Triple(3, 2, 4))
    beta = pair.beta
    assert beta * beta == pair.V**2 / pair.c_squared == Fraction(8, 9)


@pytest.mark.parametrize("V, triple", [
    (Fraction(2, 3), (3, 2, 4)),
    (Fraction(4, 3), (3, 4, 2)),
    (Fraction(1, 2), (2, 1, 3)),
])
def test_triple_from_V(V, triple):
    assert triple_from_V(V) == Triple(*triple)


@pytest.mark.parametrize("V, criterion", [
    (Fraction(5, 3), "n_not_divides"),
    (Fraction(3), "m_too_small"),
])
def test_triple_from_V_rejects(V, criterion):
    with pytest.raises(Inadmissible) as info:
        triple_from_V(V)
    assert info.value.criterion == criterion


def test_triple_from_V_requires_positive():
    with pytest.raises(DomainError):
        triple_from_V(Fraction(-2, 3))


def test_mnp_from_pair():
    assert mnp_from_pair(Fraction(2, 3), Fraction(1, 2)) == Triple(3, 2, 4)
    assert mnp_from_pair(Fraction(1, 2), Fraction(1, 3)) == Triple(2, 1, 3)
    with pytest.raises(Inadmissible):
        mnp_from_pair(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(DomainError):
        mnp_from_pair(Fraction(1), Fraction(1, 2))


def test_mnp_from_pair_non_integral_n():
    # V^2/c^2 = 3/4 gives m = 2, but n = 2/3
    with pytest.raises(Inadmissible) as info:
        mnp_from_pair(Fraction(1, 3), Fraction(4, 27))
    assert info.value.criterion == "n_not_integer"


@pytest.mark.parametrize("c2, expected", [
    (Fraction(1, 2), True), (Fraction(4, 9), False), (Fraction(2), True), (Fraction(9, 4), False),
    (Fraction(8, 2), False),
])
def test_is_admissible_c(c2, expected):
    assert is_admissible_c(c2) is expected


def test_family_triple():
    assert family_triple(2, Family.N_LARGE) == Triple(2, 3, 1)
    assert family_triple(3, "p_large") == Triple(3, 1, 8)
    with pytest.raises(DomainError):
        family_triple(1, Family.N_LARGE)


def test_oracle_equivalence_m_le_100():
    oracle = {Triple(*t) for t in brute_force_triples(100)}
    via_V = {triple_from_V(Fraction(n, m)) for m, n, _ in brute_force_triples(100)}
    assert oracle == via_V


def test_c_is_a_function_of_V():
    seen = {}
    for m, n, p in brute_force_triples(200):
        V = Fraction(n, m)
        assert seen.setdefault(V, Fraction(n, p)) == Fraction(n, p)


@st.composite
def triples(draw, m_max=5000):
    m = draw(st.integers(2, m_max))
    N = m * m - 1
    divisors = [n for n in range(1, m) if N % n == 0]
    n = draw(st.sampled_from(divisors))
    if draw(st.booleans()):
        n = N // n
    return Triple(m, n, N // n)


@given(triples())
def test_pair_invariants(t):
    pair = pair_from_triple(t)
    assert pair.V**2 < pair.c_squared
    assert pair.c_squared * t.p**2 == t.m**2 - 1
    assert mnp_from_pair(pair.V, pair.c_squared) == t == triple_from_V(pair.V)
