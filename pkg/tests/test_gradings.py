from __future__ import annotations

import pytest

from gradpos.errors import InvalidInput
from gradpos.gradings import (
    GradingSpec,
    delta1,
    delta1_extra_special,
    invariants_report,
    long_simple_roots,
    parse_grading,
)
from gradpos.poset import rank_levels
from gradpos.root_system import build_root_system, highest_root, pairing
from gradpos.verify import root_systems

DELTA1_SIZES = {
    ("E", 6): [16, 20, 20, 18, 20, 16],
    ("E", 7): [32, 35, 30, 24, 30, 32, 27],
    ("E", 8): [64, 56, 42, 30, 40, 48, 54, 56],
    ("F", 4): [8, 6, 12, 14],
    ("G", 2): [2, 4],
}


@pytest.mark.parametrize("key", list(DELTA1_SIZES))
def test_delta1_sizes(key):
    rs = build_root_system(*key)
    assert [delta1(rs, i).n_elements for i in range(1, rs.rank + 1)] == DELTA1_SIZES[key]


@pytest.mark.parametrize("n", range(1, 9))
def test_delta1_sizes_type_a(n):
    rs = build_root_system("A", n)
    assert [delta1(rs, i).n_elements for i in range(1, n + 1)] == [i * (n + 1 - i) for i in range(1, n + 1)]


@pytest.mark.parametrize("rs", list(root_systems(8)), ids=lambda rs: rs.name)
def test_extra_special_size_and_degrees(rs):
    P = delta1_extra_special(rs)
    inv = invariants_report(rs)
    assert P.n_elements == 2 * inv.dual_coxeter_hstar - 4
    theta = highest_root(rs)
    for root in P.labels:
        assert pairing(rs, root, theta) == 1
    # outside type A, Delta(1) has a unique minimum and maximum
    if rs.family != "A" and P.n_elements:
        levels = rank_levels(P)
        assert levels[0] == 1 and levels[-1] == 1


def test_delta1_is_a_root_interval_order():
    rs = build_root_system("E", 7)
    P = delta1(rs, 2)
    for a, b in P.covers:
        diff = [y - x for x, y in zip(P.labels[a], P.labels[b])]
        assert sorted(diff) == [0] * 6 + [1]
    assert P.labels[0] == rs.simple_root(2)
    assert bin(P.maximal(P.full)).count("1") == 1
    assert P.labels[-1] == max((r for r in rs.positive_roots if r[1] == 1), key=sum) == (1, 1, 2, 3, 3, 2, 1)


def test_long_simple_roots():
    assert long_simple_roots(build_root_system("B", 4)) == [1, 2, 3]
    assert long_simple_roots(build_root_system("C", 4)) == [4]
    assert long_simple_roots(build_root_system("F", 4)) == [3, 4]
    assert long_simple_roots(build_root_system("G", 2)) == [2]
    assert len(long_simple_roots(build_root_system("E", 8))) == 8


def test_grading_selectors():
    rs = build_root_system("E", 7)
    spec = parse_grading(rs, "standard:2")
    assert spec.label == "[alpha_2](E7)"
    assert spec.degree_zero_simple() == [1, 3, 4, 5, 6, 7]
    es = parse_grading(rs, "extra-special")
    assert es.degree_zero_simple() == [2, 3, 4, 5, 6, 7]  # theta is attached to alpha_1 in E7
    for bad in ("standard:0", "standard:8", "standard", "weird"):
        with pytest.raises(InvalidInput):
            parse_grading(rs, bad)
    with pytest.raises(InvalidInput):
        GradingSpec(rs, "standard")
