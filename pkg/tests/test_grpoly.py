from __future__ import annotations

from fractions import Fraction

import pytest

from embverify.grpoly import (MonomialOrder, Ring, divide_exact, divmod_single, homogeneous_part,
                              normal_form, quotient_basis, substitute)
from embverify.linalg import FieldSpec


@pytest.fixture
def R():
    return Ring.make("z:2 x:2 y:2")


def naive_product(p, q):
    """Convolution of term dictionaries, independent of Poly.__mul__."""
    out = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def test_difference_of_squares(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    assert (z - x + y) * (z - x - y) == z ** 2 - (x * z).scale(2) + x ** 2 - y ** 2
    assert x ** 2 + (-(x ** 2)) == R.zero()


def test_cubic_expansion_matches_convolution(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    p = z * (z - x + y) * (z - x - y)
    assert p == z ** 3 - (x * z ** 2).scale(2) + x ** 2 * z - y ** 2 * z
    assert p.terms == naive_product(z, (z - x + y) * (z - x - y))


def test_homogeneous_parts():
    r = Ring.make("x:2 y:2")
    x = r.gen("x")
    assert homogeneous_part(x + x ** 2, 2) == x
    assert homogeneous_part(r.zero(), 4).is_zero()


def test_relation_is_homogeneous(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    rel = z * (z - x + y)
    assert rel.is_homogeneous() and rel.degree() == 4
    assert homogeneous_part(rel, 4) == rel


def test_exact_division():
    r = Ring.make("x:2 y:2")
    x, y = r.gen("x"), r.gen("y")
    assert divide_exact(x ** 2 - y ** 2, x - y) == x + y
    assert divide_exact(x ** 2 + y ** 2, x + y) is None


def test_blowdown_relation_quotient(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    f = z * ((z - x) ** 2 - y ** 2)
    g = z * (z - x + y)
    q = divide_exact(f, g)
    assert q == z - x - y
    assert q * g == f


def test_normal_forms(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    rel = z * (z - x + y)
    assert normal_form(rel, rel).is_zero()
    assert normal_form(x * y, rel) == x * y
    nf = normal_form(z ** 2, z ** 2 - z * x + z * y)
    assert nf == z * x - z * y
    assert divide_exact(z ** 2 - nf, rel) is not None


def test_normal_form_requires_homogeneous_divisor(R):
    z, x = R.gen("z"), R.gen("x")
    with pytest.raises(ValueError):
        normal_form(z, z + x ** 2)


def test_division_by_zero(R):
    with pytest.raises(ZeroDivisionError):
        divmod_single(R.gen("z"), R.zero())


def test_substitution_examples(R):
    base = Ring.make("T:2 X:4 Y:4")
    T, X, Y = base.gen("T"), base.gen("X"), base.gen("Y")
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    images = {"T": z, "X": x ** 2, "Y": y ** 2 + (x * z).scale(2)}
    assert substitute(T * (T ** 2 + X - Y), images, R) == z * ((z - x) ** 2 - y ** 2)
    assert substitute(T ** 2 + X, base.gens_dict(), base) == T ** 2 + X


def test_substitution_into_torus_ring(R):
    t = Ring.make("x2:2 y2:2")
    x2, y2 = t.gen("x2"), t.gen("y2")
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    assert substitute(z - x - y, {"x": y2, "y": x2 - y2, "z": x2}, t).is_zero()


def test_substitution_rejects_wrong_degree(R):
    with pytest.raises(ValueError):
        substitute(R.gen("z"), {"z": R.gen("x") ** 2, "x": R.gen("x"), "y": R.gen("y")}, R)


def test_quotient_basis_counts(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    rel = z * (z - x + y)
    assert [len(quotient_basis(R, rel, 2 * k)) for k in range(5)] == [1, 3, 5, 7, 9]


def test_orders_and_printing(R):
    z, x, y = R.gen("z"), R.gen("x"), R.gen("y")
    p = z ** 2 - z * x + z * y
    assert str(p) == "z^2 - z*x + z*y"
    assert str((z - x.scale(4) + y.scale(2)).scale(Fraction(-1, 2))) == "-1/2*z + 2*x - y"
    rev = R.with_order(MonomialOrder("grevlex", (1, 2, 0)))
    assert p.leading()[0] == (2, 0, 0)
    assert p.in_ring(rev).leading()[0] == (1, 1, 0)


def test_mod_p_coefficients():
    r = Ring.make("x:2 y:2", FieldSpec(3))
    x, y = r.gen("x"), r.gen("y")
    assert (x + y) ** 3 == x ** 3 + y ** 3
