from __future__ import annotations

import functools
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from embverify import koszul
from embverify.catalog import emb_model, image_emb_model
from embverify.cdga import GcaElement, extend_differential, monomial_basis
from embverify.grpoly import MonomialOrder, Poly, Ring, divide_exact, divmod_single, normal_form
from embverify.linalg import QQ, FieldSpec, Matrix, nullspace_basis, rank
from embverify.parser import parse_expression

PROPS = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
fields = st.sampled_from([QQ, FieldSpec(2), FieldSpec(3), FieldSpec(7)])


@functools.lru_cache(maxsize=None)
def model(kind: str, ell: int, i: int, q: int):
    return (image_emb_model if kind == "image" else emb_model)(ell, i, q)


models = st.builds(model, st.sampled_from(["image", "emb"]), st.integers(1, 2), st.integers(0, 1),
                   st.sampled_from([1, 2, 3]))


@st.composite
def homogeneous(draw, sig, max_degree=12):
    n = draw(st.integers(0, max_degree))
    basis = monomial_basis(sig, n)
    if not basis:
        return sig.zero(), n
    picks = draw(st.lists(st.tuples(st.sampled_from(basis), coeffs), min_size=1, max_size=4))
    terms: dict = {}
    for m, c in picks:
        terms[m] = terms.get(m, 0) + c
    return GcaElement(sig, terms), n


@given(st.data())
@PROPS
def test_differential_squares_to_zero(data):
    spec = data.draw(models)
    u, _ = data.draw(homogeneous(spec.signature))
    assert extend_differential(spec, extend_differential(spec, u)).is_zero()


@given(st.data())
@PROPS
def test_leibniz_rule(data):
    spec = data.draw(models)
    u, m = data.draw(homogeneous(spec.signature, 8))
    v, _ = data.draw(homogeneous(spec.signature, 8))
    d = functools.partial(extend_differential, spec)
    rhs = d(u) * v + (u * d(v)).scale((-1) ** m)
    assert d(u * v) == rhs


@given(st.data())
@PROPS
def test_graded_commutativity(data):
    spec = data.draw(models)
    u, m = data.draw(homogeneous(spec.signature, 10))
    v, n = data.draw(homogeneous(spec.signature, 10))
    assert u * v == (v * u).scale((-1) ** (m * n))
    if m % 2:
        assert (u * u).is_zero()


R3 = Ring.make("z:2 x:2 y:2")


@st.composite
def ring_elements(draw, ring, homogeneous_degree=None, max_degree=8, nonzero=False):
    n = homogeneous_degree if homogeneous_degree is not None else draw(st.integers(0, max_degree // 2)) * 2
    mons = ring.monomials(n)
    cs = coeffs if ring.field.is_rational else st.integers(0, ring.field.characteristic - 1)
    picks = draw(st.lists(st.tuples(st.sampled_from(mons), cs), min_size=1, max_size=5))
    p = Poly(ring, {m: c for m, c in picks})
    if nonzero and p.is_zero():
        p = Poly(ring, {mons[0]: 1})
    return p


@given(st.data())
@PROPS
def test_division_round_trip(data):
    f = data.draw(ring_elements(R3))
    g = data.draw(ring_elements(R3, nonzero=True))
    q, r = divmod_single(f, g)
    assert q * g + r == f
    lm, _ = g.leading()
    assert not any(all(a >= b for a, b in zip(m, lm)) for m in r.terms)
    assert divide_exact(f * g, g) == f


@given(st.data())
@PROPS
def test_normal_form_is_ideal_invariant(data):
    g = data.draw(ring_elements(R3, nonzero=True))
    f = data.draw(ring_elements(R3))
    h = data.draw(ring_elements(R3))
    assert normal_form(f + h * g, g) == normal_form(f, g)
    nf = normal_form(f, g)
    assert divide_exact(f - nf, g) is not None


@given(st.data())
@PROPS
def test_rank_nullity(data):
    f = data.draw(fields)
    r, c = data.draw(st.integers(0, 6)), data.draw(st.integers(1, 6))
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    m = Matrix.from_rows(rows, f, cols=c)
    null = nullspace_basis(m)
    assert rank(m) + len(null) == c
    for v in null:
        assert all(x == f.zero() for x in m.apply(v))


@functools.lru_cache(maxsize=None)
def koszul_data(ell: int, kind: str, priority: tuple):
    return koszul.build_koszul(ell, QQ, MonomialOrder(kind, priority))


@given(st.integers(1, 2), st.sampled_from(["grlex", "grevlex"]), st.permutations([0, 1, 2]), st.data())
@PROPS
def test_tor_independent_of_order(ell, kind, prio, data):
    t = data.draw(st.integers(0, 4 * ell + 1))
    base = koszul.tor_ranks(koszul_data(ell, "grlex", (0, 1, 2)), t)
    assert koszul.tor_ranks(koszul_data(ell, kind, tuple(prio)), t) == base


@given(st.data())
@PROPS
def test_parser_round_trip_polynomials(data):
    f = data.draw(fields)
    ring = R3.with_field(f)
    p = data.draw(ring_elements(ring, max_degree=6))
    assert parse_expression(str(p), ring) == p


@given(st.data())
@PROPS
def test_parser_round_trip_algebra(data):
    spec = data.draw(models)
    u, _ = data.draw(homogeneous(spec.signature))
    assert parse_expression(str(u), spec.signature) == u


@given(coeffs)
@PROPS
def test_parser_rationals(c):
    assert parse_expression(str(R3.const(c)), R3) == R3.const(Fraction(c))
