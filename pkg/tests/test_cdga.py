from __future__ import annotations

import itertools

import pytest

from embverify.catalog import Catalog, emb_family, image_emb_family, image_emb_model
from embverify.cdga import (CdgaSpec, GcaSignature, betti_numbers, class_membership, cohomology,
                            extend_differential, monomial_basis, verify_claimed_basis)
from embverify.hilbert import expand, series_free_gca
from embverify.linalg import FieldSpec
from embverify.parser import parse_expression


@pytest.fixture(scope="module")
def model():
    return image_emb_model(1, 0, 1)


def brute_basis_size(degrees, n):
    """Count exponent vectors directly: odd exponents in {0,1}, even ones bounded by n."""
    ranges = [range(2) if d % 2 else range(n // d + 1) for d in degrees]
    return sum(1 for e in itertools.product(*ranges) if sum(a * d for a, d in zip(e, degrees)) == n)


def test_monomial_basis_degree_four(model):
    sig = model.signature
    got = sorted(str(sig.monomial(m)) for m in monomial_basis(sig, 4))
    assert got == sorted(["a^2", "a*b", "b^2", "h"])
    assert monomial_basis(sig, 1) == []
    assert sorted(str(sig.monomial(m)) for m in monomial_basis(sig, 3)) == ["e", "f", "g"]


@pytest.mark.parametrize("n", range(0, 20))
def test_monomial_basis_matches_enumeration(model, n):
    assert len(monomial_basis(model.signature, n)) == brute_basis_size(model.signature.degrees, n)


def test_signs(model):
    sig = model.signature
    a, b, e, f, g = (sig.gen(n) for n in "abefg")
    assert f * e == -(e * f)
    assert (e * e).is_zero()
    assert a * (b * g) == (a * b) * g
    assert str(a * (b * g)) == "a*b*g"


def test_differential_examples(model):
    sig = model.signature
    a, b, f, g, h = (sig.gen(n) for n in "abfgh")
    d = lambda u: extend_differential(model, u)
    assert d(b * h) == b * b * g
    assert d(a * g).is_zero()
    assert d(f * g) == b * b * g


def test_betti_l1(model):
    assert betti_numbers(model, 9) == [1, 0, 2, 1, 1, 1, 1, 1, 1, 1]


def test_betti_l2():
    spec = image_emb_model(2, 0, 1)
    assert betti_numbers(spec, 8)[3:8] == [0, 1, 0, 0, 1]


def test_memberships(model):
    sig = model.signature
    a, b, e, g, h = (sig.gen(n) for n in "abegh")
    table = cohomology(model, 6)
    m = class_membership(model, table, b * g)
    assert m.kind == "exact" and m.primitive == h
    m = class_membership(model, table, a * a)
    assert m.kind == "exact" and m.primitive == e
    m = class_membership(model, table, a * b)
    assert m.kind == "class" and any(m.coordinates)
    assert class_membership(model, table, h).kind == "not_cocycle"


def test_primitive_scales_with_q():
    spec = image_emb_model(1, 0, 3)
    sig = spec.signature
    table = cohomology(spec, 6)
    m = class_membership(spec, table, sig.gen("b") * sig.gen("g"))
    assert m.primitive == parse_expression("1/3*h", sig)


def test_claimed_basis_full_match(model):
    rep = verify_claimed_basis(model, image_emb_family(model, 24), 24)
    assert rep.ok and rep.first_mismatch is None


def test_claimed_basis_missing_class(model):
    sig = model.signature
    ab = sig.gen("a") * sig.gen("b")
    fam = [u for u in image_emb_family(model, 24) if u != ab]
    rep = verify_claimed_basis(model, fam, 24)
    assert not rep.ok and rep.first_mismatch == 4


def test_wrong_coefficient_is_not_a_cocycle(model):
    sig = model.signature
    b, f, g, h = (sig.gen(n) for n in "bfgh")
    bad = b * h ** 2 - f * g * h  # the correct coefficient is 2
    rep = verify_claimed_basis(model, [bad], 10)
    assert rep.not_cocycles == [str(bad)]


@pytest.mark.parametrize("ell,i,q", [(1, 0, 1), (1, 1, 3), (2, 0, 1), (2, 1, 3)])
def test_emb_model_family(ell, i, q):
    spec = Catalog().get("emb_model", ell, i, q)
    N = 4 * (4 * ell + 2 * i)
    assert verify_claimed_basis(spec, emb_family(spec, N), N).ok


def test_emb_model_betti_prefix():
    assert betti_numbers(Catalog().get("emb_model", 1, 0, 1), 11) == [1, 0, 1, 3, 0, 2, 4, 1, 1, 3, 3, 1]


def test_zero_differential_model_series():
    spec = Catalog().get("symp_model", 1, 0)
    assert betti_numbers(spec, 20) == list(expand(series_free_gca((1, 3, 3, 4)), 20))


def test_spec_validation():
    sig = GcaSignature.make([("a", 2), ("e", 3)])
    with pytest.raises(ValueError, match="degree"):
        CdgaSpec(sig, {"e": sig.gen("a")})
    sig2 = GcaSignature.make([("a", 2), ("b", 3), ("c", 4)])
    with pytest.raises(ValueError, match="d\\^2"):
        # d(c) = a*b but d(a*b) = a*d(b) = a^3 ≠ 0
        CdgaSpec(sig2, {"b": sig2.gen("a") ** 2, "c": sig2.gen("a") * sig2.gen("b")})


def test_mod_p_changes_cohomology():
    # over F_p, d(h^p) = p h^{p-1} b g vanishes, so h^p becomes a cocycle
    q_model = image_emb_model(1, 0, 1)
    p_model = image_emb_model(1, 0, 1, FieldSpec(3))
    assert betti_numbers(q_model, 12) != betti_numbers(p_model, 12)
