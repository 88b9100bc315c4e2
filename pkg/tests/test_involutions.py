from __future__ import annotations

import pytest

from gradpos.errors import InvalidInput
from gradpos.gradings import GradingSpec, delta1
from gradpos.involutions import (
    Involution,
    chain_involution,
    check_involution,
    complement_ideal,
    count_self_complementary,
    fixed_points,
    grading_involution,
    is_order_reversing_involution,
    product_involution,
    self_complementary_ideals,
    w0i_involution,
)
from gradpos.polynomials import m_polynomial
from gradpos.poset import enumerate_lower_ideals, make_chain, make_K, order_reversing_involutions, product
from gradpos.root_system import build_root_system
from gradpos.verify import root_systems, standard_instances


@pytest.mark.parametrize("inst", list(standard_instances(6)), ids=lambda t: f"{t[0]}{t[1]}:{t[2]}")
def test_w0i_is_order_reversing_and_complements_are_ideals(inst):
    rs = build_root_system(*inst[:2])
    P = delta1(rs, inst[2])
    c = w0i_involution(rs, inst[2])
    assert is_order_reversing_involution(P, c.perm)
    for I in enumerate_lower_ideals(P):
        J = complement_ideal(P, c, I, check=False)
        assert P.is_lower_ideal(J)
        assert bin(J).count("1") == P.n_elements - bin(I).count("1")
        assert complement_ideal(P, c, J, check=False) == I


@pytest.mark.parametrize("rs", list(root_systems(8)), ids=lambda rs: rs.name)
def test_extra_special_involution(rs):
    spec = GradingSpec(rs, "extra-special")
    P = spec.delta1()
    c = grading_involution(spec, P)
    check_involution(P, c)


def test_e7_fixed_points_and_count():
    rs = build_root_system("E", 7)
    for i in (2, 7):
        P = delta1(rs, i)
        c = w0i_involution(rs, i)
        assert len(fixed_points(P, c)) == 3
        assert count_self_complementary(P, c) == 0 == m_polynomial(P)(-1)


def test_chain_and_product_involutions():
    P = product(make_chain(2), make_chain(3))
    c = product_involution(chain_involution(2), 2, chain_involution(3), 3)
    check_involution(P, c)
    # M(-1) = 2 by the even/odd rank formula
    assert count_self_complementary(P, c) == m_polynomial(P)(-1) == 2
    assert all(complement_ideal(P, c, I) == I for I in self_complementary_ideals(P, c))


@pytest.mark.parametrize("n", range(1, 7))
def test_k_involutions(n):
    K = make_K(n)
    invs = order_reversing_involutions(K)
    assert len(invs) == 2
    assert sorted(len(fixed_points(K, Involution(p))) for p in invs) == [0, 2]


def test_rejects_bad_involutions():
    P = make_chain(3)
    with pytest.raises(InvalidInput):
        check_involution(P, Involution((0, 1, 2)))
    with pytest.raises(InvalidInput):
        complement_ideal(P, chain_involution(3), 0b100)


def test_diamond_product_involution():
    P = product(make_chain(2), make_chain(2))
    c = product_involution(chain_involution(2), 2, chain_involution(2), 2)
    assert fixed_points(P, c) == []
    assert count_self_complementary(P, c) == 2
    assert complement_ideal(P, c, 0) == P.full


def test_odd_chain_has_no_self_complementary_ideal():
    P = make_chain(5)
    c = chain_involution(5)
    assert fixed_points(P, c) == [2]
    assert count_self_complementary(P, c) == 0


def test_type_a_first_node_involution():
    rs = build_root_system("A", 5)
    assert delta1(rs, 1).n_elements == 5
    assert w0i_involution(rs, 1).perm == tuple(range(4, -1, -1))


def test_c_last_node_has_fixed_point():
    rs = build_root_system("C", 5)
    assert fixed_points(delta1(rs, 5), w0i_involution(rs, 5))
