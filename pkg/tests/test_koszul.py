from __future__ import annotations

import pytest

from embverify import koszul
from embverify.grpoly import MonomialOrder, normal_form
from embverify.linalg import QQ, FieldSpec

ONE = (0, 0, 0)


@pytest.fixture(scope="module")
def k1():
    return koszul.build_koszul(1)


@pytest.fixture(scope="module")
def k2():
    return koszul.build_koszul(2)


def test_base_relations(k1, k2):
    r = k1.ring
    z, x, y = r.gen("z"), r.gen("x"), r.gen("y")
    assert k1.relation == z * (z - x + y)
    assert k2.relation == z * (z - x.scale(4) + y.scale(2)) * ((z - x) ** 2 - y ** 2)


def test_delta_differential(k1):
    r = k1.ring
    z, x, y = r.gen("z"), r.gen("x"), r.gen("y")
    got = k1.d_basis((0, 0, 0, 1, ONE))
    want = normal_form((z - x) ** 2 - y ** 2, k1.relation)
    assert got == {(1, 0, 0, 0, m): c for m, c in want.terms.items()}


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_alpha_maps_to_z(ell):
    k = koszul.build_koszul(ell)
    assert k.d_basis((1, 0, 0, 0, ONE)) == {(0, 0, 0, 0, (1, 0, 0)): 1}


def test_tor_total_degree_four(k1):
    assert koszul.tor_ranks(k1, 4) == {0: 1}
    reps = koszul.tor_representative(k1, 4, 0)
    assert [koszul.format_cochain(k1, c) for c in reps] == ["x*y"]


def test_tor_low_degrees_l1(k1):
    assert [koszul.tor_ranks(k1, t) for t in range(5)] == [{0: 1}, {}, {0: 2}, {-1: 1}, {0: 1}]


def test_unit_and_empty_bidegrees(k1):
    assert koszul.tor_representative(k1, 0, 0) == [{(0, 0, 0, 0, ONE): 1}]
    assert koszul.tor_representative(k1, 4, -2) == []


def test_tor_vanishes_in_degree_4l(k2):
    assert koszul.tor_ranks(k2, 8) == {}
    assert koszul.tor_ranks(k2, 0) == {0: 1}
    # the only class one step lower sits in external degree -1
    assert koszul.tor_ranks(k2, 7) == {-1: 1}


def test_tor_l3_rationally_and_mod5():
    for f in (QQ, FieldSpec(5)):
        k = koszul.build_koszul(3, f)
        assert koszul.tor_ranks(k, 12) == {}


def test_tor_l3_mod3_sees_repeated_factor():
    # z - 9x ± 3y collapses onto z mod 3, so the base relation has a repeated factor
    k = koszul.build_koszul(3, FieldSpec(3))
    assert koszul.tor_ranks(k, 12) == {-2: 1}


def test_valid_range_enforced(k1):
    with pytest.raises(ValueError):
        koszul.tor_ranks(k1, 8)


def test_order_independence(k2):
    other = koszul.build_koszul(2, QQ, MonomialOrder("grevlex", (1, 2, 0)))
    for t in range(9):
        assert koszul.tor_ranks(other, t) == koszul.tor_ranks(k2, t)


@pytest.mark.parametrize("q", range(0, 9))
def test_euler_characteristic_per_internal_degree(k1, q):
    c, h = koszul.euler_check(k1, q)
    assert c == h
