from __future__ import annotations

import pytest

from embverify import hilbert
from embverify.grpoly import Ring, quotient_basis
from embverify.hilbert import RationalGF, expand, one_minus_t, poly_mul, series_special


def test_free_algebra_series():
    got = hilbert.series_free_gca((1, 1, 1, 2))
    assert got == RationalGF(poly_mul(poly_mul((1, 1), (1, 1)), (1, 1)), one_minus_t(2))
    assert str(got) == "(1 + 2t + t^2)/(1 - t)"
    assert list(expand(hilbert.series_free_gca(()), 4)) == [1, 0, 0, 0, 0]
    assert list(expand(hilbert.series_free_gca((2,)), 6)) == [1, 0, 1, 0, 1, 0, 1]


def test_blowup_free_model_series():
    got = hilbert.series_free_gca((1, 1, 1, 2))
    assert list(expand(got, 10)) == list(expand(RationalGF((1, 3, 3, 1), one_minus_t(2)), 10))


def test_reduction_normalizes():
    gf = RationalGF(poly_mul((1, 0, 1), (1, 0, -1)), (1, 0, -1))
    assert gf.num == (1, 0, 1) and gf.den == (1,)


def test_quotient_by_degree_four_relation():
    ring = hilbert.series_free_gca((2, 2, 2))
    gf = hilbert.series_quotient_principal(ring, 4)
    assert list(expand(gf, 8))[0::2] == [1, 3, 5, 7, 9]
    r = Ring.make("z:2 x:2 y:2")
    z, x, y = r.gen("z"), r.gen("x"), r.gen("y")
    counts = [len(quotient_basis(r, z * (z - x + y), 2 * k)) for k in range(5)]
    assert counts == [1, 3, 5, 7, 9]


@pytest.mark.parametrize("n,prefix", [(1, [1, 1, 1, 1, 1]), (2, [1, 2, 2, 2, 2]), (3, [1, 2, 3, 3, 3])])
def test_gysin_ring_series(n, prefix):
    gf = hilbert.series_quotient_principal(hilbert.series_free_gca((2, 2)), 2 * n)
    assert list(expand(gf, 8))[0::2] == prefix


def test_unit_relation_gives_zero():
    assert list(expand(hilbert.series_quotient_principal(hilbert.series_free_gca((2,)), 0), 5)) == [0] * 6


def test_tensor_quotient_prefix():
    gf = series_special("tensor_quotient", (2, 3, 4), (2,))
    assert list(expand(gf, 7)) == [1, 0, 0, 1, 1, 1, 2, 3]


def test_divided_and_loop_series_agree():
    assert list(expand(series_special("divided_polynomial", 4), 12)) == [1, 0, 0, 0] * 3 + [1]
    assert expand(series_special("loop_odd_sphere", 5), 12) == expand(series_special("divided_polynomial", 4), 12)
    with pytest.raises(ValueError):
        series_special("loop_odd_sphere", 4)


def test_expansion_examples():
    assert list(expand(RationalGF((1,), one_minus_t(2)), 6)) == [1, 0, 1, 0, 1, 0, 1]
    gf = RationalGF((1, 0, 1), poly_mul(one_minus_t(2), one_minus_t(2)))
    assert list(expand(gf, 8)) == [1, 0, 3, 0, 5, 0, 7, 0, 9]


@pytest.mark.parametrize("m,deg", [(1, 4), (4, 10), (2, 6), (5, 12)])
def test_blowup_decomposition(m, deg):
    lhs = hilbert.series_quotient_principal(hilbert.series_free_gca((2, 2, 2)), deg)
    ok, first = hilbert.decomposition_check(lhs, hilbert.blowup_decomposition(m), 40)
    assert ok and first is None


def test_decomposition_negative_control():
    lhs = hilbert.series_quotient_principal(hilbert.series_free_gca((2, 2, 2)), 4)
    base = RationalGF((1,), poly_mul(one_minus_t(2), one_minus_t(2)))
    ok, first = hilbert.decomposition_check(lhs, [(0, base), (1, base)], 20)
    assert not ok and first == 1


def test_truncated_series_helpers():
    a, b = expand(RationalGF((1,), one_minus_t(1)), 5), expand(RationalGF.one(), 5)
    assert a.dominates(b) and not b.dominates(a)
    assert a.first_difference(b) == 1
    assert str(b) == "1,0,0,0,0,0"
