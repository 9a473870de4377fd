"""Laurent polynomials in x, y and the fixed-point index of a torus action.

The index of the tangent elliptic complex of a toric surface is a sum over
fixed points of σ₁σ₂ / ((1 - w₁)(1 - w₂)) in the isotropy weights.  The sum is
a Laurent polynomial; its negative part is the character of H^{0,1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .grpoly import Poly, Ring, product, substitute

Exp = tuple  # (a, b) for x^a y^b


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "LaurentPoly":
        return cls({(a, b): c})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def geometric(cls, step: Exp, start: Exp, lo: int, hi: int) -> "LaurentPoly":
        """Σ_{j=lo..hi} start · step^j."""
        return cls({(start[0] + j * step[0], start[1] + j * step[1]): 1 for j in range(lo, hi + 1)})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1])
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self.terms.items() if c < 0})

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self.terms.items() if c > 0})

    def evaluate_y1(self) -> "LaurentPoly":
        out: dict = {}
        for (a, _), c in self.terms.items():
            out[(a, 0)] = out.get((a, 0), 0) + c
        return LaurentPoly(out)

    def change_monomials(self, ex: Exp, ey: Exp) -> "LaurentPoly":
        """Substitute x ↦ x^ex[0] y^ex[1] and y ↦ x^ey[0] y^ey[1]."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            e = (a * ex[0] + b * ey[0], a * ex[1] + b * ey[1])
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(s for s in (_pow("x", a), _pow("y", b)) if s)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({self})"


def _pow(v: str, e: int) -> str:
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"


class NonPolynomialSum(ArithmeticError):
    pass


def _weight(e: Exp) -> int:
    # an integer functional that is nonzero on every weight used here
    return 1009 * e[0] + e[1]


def divide_one_minus(p: LaurentPoly, w: Exp) -> LaurentPoly | None:
    """p / (1 - x^w) as a Laurent polynomial, or None if not divisible."""
    if w == (0, 0):
        raise ZeroDivisionError("1 - 1 is zero")
    if _weight(w) == 0:
        raise ValueError(f"weight functional vanishes on {w}")
    if _weight(w) < 0:
        # 1 - w = -w (1 - w⁻¹)
        q = divide_one_minus(p, (-w[0], -w[1]))
        return None if q is None else q * LaurentPoly.monomial(-w[0], -w[1], -1)
    rem = dict(p.terms)
    top = max((_weight(e) for e in rem), default=0)
    quo: dict = {}
    while rem:
        low = min(_weight(e) for e in rem)
        if low > top:
            return None
        layer = {e: c for e, c in rem.items() if _weight(e) == low}
        for e, c in layer.items():
            quo[e] = quo.get(e, 0) + c
            del rem[e]
            shifted = (e[0] + w[0], e[1] + w[1])
            v = rem.get(shifted, 0) + c
            if v:
                rem[shifted] = v
            else:
                rem.pop(shifted, None)
    q = LaurentPoly(quo)
    assert q * (LaurentPoly.const(1) - LaurentPoly.monomial(*w)) == p
    return q


@dataclass(frozen=True)
class LaurentFraction:
    numerator: LaurentPoly
    denominator: tuple  # weights w, each meaning a factor (1 - w)

    def __post_init__(self):
        for w in self.denominator:
            if tuple(w) == (0, 0):
                raise ValueError("denominator factor 1 - 1 is zero")


def localization_sum(fractions: Sequence[LaurentFraction]) -> LaurentPoly:
    """Sum over a common denominator, then exact division by every factor."""
    all_factors = [w for fr in fractions for w in fr.denominator]
    total = LaurentPoly()
    for i, fr in enumerate(fractions):
        others = [w for j, g in enumerate(fractions) if j != i for w in g.denominator]
        num = fr.numerator
        for w in others:
            num = num * (LaurentPoly.const(1) - LaurentPoly.monomial(*w))
        total = total + num
    for w in all_factors:
        q = divide_one_minus(total, w)
        if q is None:
            raise NonPolynomialSum(f"fixed-point sum is not a Laurent polynomial (factor 1 - {w})")
        total = q
    return total


@dataclass(frozen=True)
class FixedPointTable:
    n: int
    k: int
    weights: tuple  # five pairs ((a1, b1), (a2, b2))

    def __post_init__(self):
        if len(self.weights) != 5:
            raise ValueError("a fixed-point table has exactly five points")
        for w1, w2 in self.weights:
            if tuple(w1) == (0, 0) or tuple(w2) == (0, 0):
                raise ValueError("isotropy weights must be nontrivial")


def weight_table(n: int) -> FixedPointTable:
    if n < 1:
        raise ValueError("weight tables exist for n ≥ 1")
    if n % 2 == 0:
        k = n // 2
        pts = (((-1, k), (0, 1)), ((0, -1), (-1, -k)), ((1, k), (0, -1)),
               ((0, 1), (1, -k - 1)), ((-1, k + 1), (1, -k)))
    else:
        k = (n + 1) // 2
        pts = (((k, -k - 1), (1 - k, k)), ((k - 1, -k), (1, -1)), ((-1, 1), (-k, k - 1)),
               ((k, 1 - k), (-1, 1)), ((1, -1), (-k, k + 1)))
    return FixedPointTable(n, k, pts)


def index_term(w1: Exp, w2: Exp) -> LaurentFraction:
    m1, m2 = LaurentPoly.monomial(*w1), LaurentPoly.monomial(*w2)
    return LaurentFraction((m1 + m2) * m1 * m2, (tuple(w1), tuple(w2)))


def atiyah_bott_index(t: FixedPointTable | Iterable[tuple[Exp, Exp]]) -> LaurentPoly:
    pts = t.weights if isinstance(t, FixedPointTable) else list(t)
    return localization_sum([index_term(w1, w2) for w1, w2 in pts])


def character_negative_part(index: LaurentPoly, expected_count: int) -> LaurentPoly:
    char = -index.negative_part()
    count = sum(char.terms.values())
    if count != expected_count:
        raise ValueError(f"character has {count} weights, expected {expected_count}")
    return char


def even_index_closed_form(k: int) -> LaurentPoly:
    """(1/(x y^k))(y^{2k} + … + 1 + x y^{k-1}(2y+1)) - x(y^{k-1} + … + y^{-k})."""
    inner = LaurentPoly.geometric((0, 1), (0, 0), 0, 2 * k) + LaurentPoly({(1, k): 2, (1, k - 1): 1})
    return inner * LaurentPoly.monomial(-1, -k) - LaurentPoly.geometric((0, 1), (1, 0), -k, k - 1)


def odd_index_closed_form(k: int) -> LaurentPoly:
    """2 + y/x + y^{-1}Σ_{j<k}(x/y)^j + x^{-1}Σ_{j<k}(y/x)^j - yΣ_{|j|<k}(x/y)^j."""
    return (LaurentPoly.const(2) + LaurentPoly.monomial(-1, 1)
            + LaurentPoly.geometric((1, -1), (0, -1), 0, k - 1)
            + LaurentPoly.geometric((-1, 1), (-1, 0), 0, k - 1)
            - LaurentPoly.geometric((1, -1), (0, 1), 1 - k, k - 1))


def stated_character(n: int) -> LaurentPoly:
    """Character as written in the statement: x y^j over the listed range of j."""
    if n % 2 == 0:
        k = n // 2
        return LaurentPoly.geometric((0, 1), (1, 0), -k, k - 1)
    k = (n + 1) // 2
    return LaurentPoly.geometric((0, 1), (1, 0), 1 - k, k - 1)


def ratio_character(n: int) -> LaurentPoly:
    """Odd-case character in ratio form y Σ_{|j|<k} (x/y)^j."""
    k = (n + 1) // 2
    return LaurentPoly.geometric((1, -1), (0, 1), 1 - k, k - 1)


# x ↦ y, y ↦ x/y turns the statement's odd character into the ratio form
ODD_MONOMIAL_CHANGE = ((0, 1), (1, -1))


def euler_ring() -> Ring:
    return Ring.make("x:2 y:2")


def euler_class_from_character(char: LaurentPoly) -> Poly:
    """Product of the weights a·x + b·y, sign normalized to a positive leading coefficient."""
    r = euler_ring()
    x, y = r.gen("x"), r.gen("y")
    factors = []
    for (a, b), c in sorted(char.terms.items()):
        if c < 0 or Fraction(c).denominator != 1:
            raise ValueError("character must have non-negative integer multiplicities")
        factors += [x.scale(a) + y.scale(b)] * int(c)
    return normalize_sign(product(factors, r))


def normalize_sign(p: Poly) -> Poly:
    if p.is_zero():
        return p
    _, lc = p.leading()
    return -p if lc < 0 else p


def stated_euler_class(n: int) -> Poly:
    """(x + (k-1)y) ⋯ (x - ky) for n = 2k and (x + (k-1)y) ⋯ (x + (1-k)y) for n = 2k-1."""
    r = euler_ring()
    x, y = r.gen("x"), r.gen("y")
    if n % 2 == 0:
        k = n // 2
        js = range(k - 1, -k - 1, -1)
    else:
        k = (n + 1) // 2
        js = range(k - 1, -k, -1)
    return normalize_sign(product([x + y.scale(j) for j in js], r))


def odd_linear_change(p: Poly) -> Poly:
    """x ↦ y, y ↦ x - y: the effect of ODD_MONOMIAL_CHANGE on weight forms."""
    r = p.ring
    x, y = r.gen("x"), r.gen("y")
    return normalize_sign(substitute(p, {"x": y, "y": x - y}, r))


def equal_up_to_sign(p: Poly, q: Poly) -> bool:
    return p == q or p == -q
