from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _strategies import graded_posets
from gradpos.gradings import delta1
from gradpos.polynomials import (
    IntPolynomial,
    RationalProduct,
    binomial_product_n_polynomial,
    chain_product_m_polynomial,
    chain_product_n_polynomial,
    classify_polynomial,
    divide_by_one_minus_t_power,
    gaussian_check,
    ideal_count_formula,
    is_pleasant,
    k_ball_filling_counts,
    km_product,
    km_product_chain,
    m_at_minus_one_formula,
    m_polynomial,
    n_polynomial,
    one_minus_t_power,
    q_integer,
)
from gradpos.poset import GradedPoset, make_chain, make_H, make_K, product
from gradpos.root_system import build_root_system

polys = st.lists(st.integers(-5, 5), max_size=6).map(IntPolynomial)


def test_polynomial_basics():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert str(IntPolynomial((1, 35, 140))) == "1 + 35t + 140t^2"
    assert (q_integer(3) * one_minus_t_power(1)).coeffs == (1, 0, 0, -1)
    assert p(-1) == -1 and p[5] == 0
    assert IntPolynomial((0, 2)).divmod(IntPolynomial((0, 3))) is None


@given(polys, polys)
def test_ring_axioms(a, b):
    assert a * b == b * a
    assert (a + b)(2) == a(2) + b(2)
    assert (a * b)(3) == a(3) * b(3)


@given(polys, st.integers(1, 5))
def test_exact_division_by_one_minus_t_power(p, e):
    assert divide_by_one_minus_t_power(p * one_minus_t_power(e), e) == p
    q = p + IntPolynomial((1,))
    if q.coeffs and q(1) != 0:
        # nonzero value at 1 means (1 - t^e) does not divide
        assert divide_by_one_minus_t_power(q, e) is None


def test_gaussian_binomial_product():
    # [a+b choose a]_t = prod (1-t^(b+k))/(1-t^k)
    P = product(make_chain(2), make_chain(3))
    prod = km_product(P)
    assert prod.polynomial == IntPolynomial((1, 1, 2, 2, 2, 1, 1))
    assert prod.polynomial == m_polynomial(P)
    assert prod.product.value_at_one() == 10


def test_rational_product_reduction():
    r = RationalProduct((2, 3, 3), (1, 3)).reduced()
    assert r == RationalProduct((2, 3), (1,))
    assert RationalProduct((2,), (3,)).quotient() is None
    assert RationalProduct((4,), (2,)).quotient() == IntPolynomial((1, 0, 1))


def test_non_pleasant_zigzag():
    # a < c > b < d: M = 1 + 2t + 2t^2 + 2t^3 + t^4, KM = (1 + t + t^2)^2
    Z = GradedPoset(4, [(0, 2), (1, 2), (1, 3)])
    assert m_polynomial(Z).coeffs == (1, 2, 2, 2, 1)
    assert km_product(Z).polynomial.coeffs == (1, 2, 3, 2, 1)
    assert not is_pleasant(Z)
    assert is_pleasant(make_K(1))


def test_e7_alpha2_values():
    P = delta1(build_root_system("E", 7), 2)
    M = m_polynomial(P)
    assert M(1) == 352 and M(-1) == 0
    assert km_product(P).product.reduced() == RationalProduct((8, 10, 11, 12, 14), (1, 3, 4, 5, 7))
    assert n_polynomial(P).coeffs == (1, 35, 140, 140, 35, 1)


@pytest.mark.parametrize("key,value", [(("E", 8, 1), 1173), (("E", 8, 2), 2431), (("E", 8, 8), 232), (("E", 8, 5), 2772)])
def test_ideal_counts(key, value):
    P = delta1(build_root_system(*key[:2]), key[2])
    assert m_polynomial(P)(1) == value == ideal_count_formula(P.rank)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (3, 4), (2, 6), (4, 4)])
def test_grid_n_polynomial_is_binomial(a, b):
    assert n_polynomial(product(make_chain(a), make_chain(b))) == binomial_product_n_polynomial(a, b)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_ball_filling_against_enumeration(n, m):
    N = n_polynomial(product(make_chain(m), make_K(n)))
    counts = k_ball_filling_counts(n, m)
    assert list(N.coeffs) == counts[: len(N.coeffs)]
    assert not any(counts[len(N.coeffs):])


@pytest.mark.parametrize("P", [make_K(2), make_H(4), product(make_chain(2), make_chain(2)), make_chain(3)],
                         ids=["K2", "H4", "grid2x2", "chain3"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_chain_product_dp_against_explicit_product(P, m):
    Q = product(make_chain(m), P)
    assert chain_product_m_polynomial(P, m) == m_polynomial(Q)
    assert chain_product_n_polynomial(P, m) == n_polynomial(Q)
    km = km_product(Q)
    assert km_product_chain(P, m).product.reduced() == km.product.reduced()


@settings(max_examples=40, deadline=None)
@given(graded_posets(max_elements=7), st.integers(1, 3))
def test_chain_product_dp_random(P, m):
    Q = product(make_chain(m), P)
    assert chain_product_m_polynomial(P, m) == m_polynomial(Q)
    assert chain_product_n_polynomial(P, m) == n_polynomial(Q)


@settings(max_examples=60, deadline=None)
@given(graded_posets())
def test_m_and_n_agree_at_one(P):
    M, N = m_polynomial(P), n_polynomial(P)
    assert M(1) == N(1)
    assert M[0] == N[0] == 1
    # degree of N is the width, found by brute force
    n = P.n_elements
    width = max(k for k in range(n + 1) for S in combinations(range(n), k)
                if all(not P.comparable(a, b) for a, b in combinations(S, 2)))
    assert N.degree == width


def test_gaussian_check_minuscule_and_exception():
    assert all(gaussian_check(make_H(3), 4).results)
    assert not gaussian_check(make_H(3), 4).refuted
    P = delta1(build_root_system("E", 7), 2)
    # [2] x P: 43408 ideals against a KM value of 42471
    assert chain_product_m_polynomial(P, 2)(1) == 43408
    assert km_product_chain(P, 2).product.value_at_one() == 42471
    assert gaussian_check(P, 2).refuted_at == 2


def test_e_f_formula():
    # [2] x [2]: ranks 1, 2, 2, 3; E = {2, 2}, F = {1, 3}
    assert m_at_minus_one_formula([1, 2, 2, 3]) == 2 == m_polynomial(product(make_chain(2), make_chain(2)))(-1)
    assert m_at_minus_one_formula([1, 2, 3]) == 0
    assert ideal_count_formula([1, 2]) == Fraction(3)


def test_classify():
    rep = classify_polynomial(IntPolynomial((1, 56, 133, 42)))
    assert not rep.palindromic and not rep.monic and rep.top_coefficient == 42
    assert classify_polynomial(IntPolynomial((1, 4, 1))).palindromic


def test_binomial_formula_matches_comb():
    assert binomial_product_n_polynomial(3, 5).coeffs == tuple(comb(3, i) * comb(5, i) for i in range(4))
