from __future__ import annotations

from fractions import Fraction

import pytest

from embverify.cdga import GcaSignature
from embverify.grpoly import Ring
from embverify.linalg import FieldSpec
from embverify.parser import ParseError, parse_expression, tokenize


@pytest.fixture
def R():
    return Ring.make("z:2 x:2 y:2")


@pytest.fixture
def lam():
    return GcaSignature.make([("a", 2), ("b", 2), ("e", 3), ("f", 3), ("g", 3), ("h", 4)])


def test_relation_parses(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    assert parse_expression("z*(z - x + y)", R) == z * (z - x + y)


def test_scalar_times_linear_form(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    got = parse_expression("-1/2 * (z - 4*x + 2*y)", R)
    assert got == (z - x.scale(4) + y.scale(2)).scale(Fraction(-1, 2))


def test_odd_square_rejected(lam):
    with pytest.raises(ParseError, match="odd generator"):
        parse_expression("e^2", lam)


def test_odd_generators_anticommute(lam):
    assert parse_expression("f*e", lam) == -parse_expression("e*f", lam)


def test_parameters_resolve(lam):
    got = parse_expression("q*b*g", lam, {"q": "3"})
    assert got == (lam.gen("b") * lam.gen("g")).scale(3)


@pytest.mark.parametrize("src,pos", [("z +", 3), ("z * * x", 4), ("(z", 2), ("z $ x", 2), ("", 0)])
def test_syntax_errors_carry_positions(R, src, pos):
    with pytest.raises(ParseError) as err:
        parse_expression(src, R)
    assert err.value.position == pos


def test_unknown_identifier(R):
    with pytest.raises(ParseError, match="unknown identifier 'w'"):
        parse_expression("z + w", R)


def test_zero_denominator(R):
    with pytest.raises(ParseError, match="zero denominator"):
        parse_expression("1/0*z", R)


def test_tokens():
    kinds = [t.kind for t in tokenize("2*x^3 - y")]
    assert kinds == ["nat", "op", "ident", "op", "nat", "op", "ident", "end"]


def test_round_trip_over_finite_field():
    r = Ring.make("z:2 x:2 y:2", FieldSpec(3))
    p = parse_expression("2*z^2 - x*y + 1/2*y^2", r)
    assert parse_expression(str(p), r) == p
