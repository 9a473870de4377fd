"""Hilbert and Poincaré series as rational functions in one variable t.

Polynomials in t are tuples of integers, lowest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

IntPoly = tuple


def _trim(p: Sequence) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def poly_add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def monomial_t(d: int, c: int = 1) -> IntPoly:
    return _trim([0] * d + [c])


def _qdivmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        c = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = c
        for i, v in enumerate(b):
            a[s + i] -= c * v
        a = list(_trim(a))
    return q, a


def _primitive(p: Sequence[Fraction]) -> IntPoly:
    den = lcm(*[Fraction(v).denominator for v in p]) if p else 1
    ints = [int(Fraction(v) * den) for v in p]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return _trim([v // g for v in ints]) if g else ()


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    x = [Fraction(v) for v in _trim(a)]
    y = [Fraction(v) for v in _trim(b)]
    while y:
        _, r = _qdivmod(x, y)
        x, y = y, list(_trim(r))
    return _primitive(x)


def poly_exact_div(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    q, r = _qdivmod([Fraction(v) for v in a], [Fraction(v) for v in b])
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    if any(v.denominator != 1 for v in q):
        raise ArithmeticError("quotient is not integral")
    return _trim([int(v) for v in q])


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n
        return None

    def dominates(self, other: "TruncatedSeries") -> bool:
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    def __str__(self):
        return ",".join(map(str, self.coeffs))


@dataclass(frozen=True)
class RationalGF:
    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        num, den = _trim(self.num), _trim(self.den)
        if not den or den[0] not in (1, -1):
            raise ValueError("denominator must have constant term ±1")
        if num:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num, den = poly_exact_div(num, g), poly_exact_div(den, g)
        if den[0] == -1:
            num = tuple(-v for v in num)
            den = tuple(-v for v in den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def poly(cls, p: Sequence[int]) -> "RationalGF":
        return cls(tuple(p), (1,))

    @classmethod
    def one(cls) -> "RationalGF":
        return cls((1,), (1,))

    @classmethod
    def zero(cls) -> "RationalGF":
        return cls((), (1,))

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
                          poly_mul(self.den, other.den))

    def __neg__(self) -> "RationalGF":
        return RationalGF(tuple(-v for v in self.num), self.den)

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return self + (-other)

    def shift(self, k: int) -> "RationalGF":
        return RationalGF(poly_mul(monomial_t(k), self.num), self.den)

    def expand(self, N: int) -> TruncatedSeries:
        return expand(self, N)

    def __str__(self):
        return f"({_fmt(self.num)})/({_fmt(self.den)})"


def _fmt(p: IntPoly) -> str:
    if not p:
        return "0"
    parts = []
    for d, c in enumerate(p):
        if not c:
            continue
        mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
        coef = str(c) if (abs(c) != 1 or d == 0) else ("-" if c < 0 else "")
        parts.append(coef + mono)
    return " + ".join(parts).replace("+ -", "- ")


def expand(gf: RationalGF, N: int) -> TruncatedSeries:
    """Power-series coefficients c_0..c_N by long division."""
    den = gf.den
    if not den or den[0] not in (1, -1):
        raise ValueError("denominator is not invertible in Z[[t]]")
    s = den[0]
    out = []
    for n in range(N + 1):
        acc = gf.num[n] if n < len(gf.num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        out.append(acc * s)
    return TruncatedSeries(tuple(out))


def one_minus_t(d: int) -> IntPoly:
    return poly_add((1,), monomial_t(d, -1))


def one_plus_t(d: int) -> IntPoly:
    return poly_add((1,), monomial_t(d, 1))


def series_free_gca(degrees: Iterable[int]) -> RationalGF:
    """Poincaré series of a free graded-commutative algebra on generators of these degrees."""
    num, den = (1,), (1,)
    for d in degrees:
        if d <= 0:
            raise ValueError("generator degrees must be positive")
        if d % 2:
            num = poly_mul(num, one_plus_t(d))
        else:
            den = poly_mul(den, one_minus_t(d))
    return RationalGF(num, den)


def series_quotient_principal(ring_series: RationalGF, relation_degree: int) -> RationalGF:
    """Series of R/(f) for a nonzerodivisor f of the given degree."""
    if relation_degree == 0:
        return RationalGF.zero()
    return RationalGF(poly_mul(ring_series.num, one_minus_t(relation_degree)), ring_series.den)


def series_special(kind: str, *args) -> RationalGF:
    """Series of standard graded objects.

    ``divided_polynomial(d)``, ``tensor_algebra(degrees)``,
    ``tensor_quotient(degrees, sub_degrees)``, ``loop_odd_sphere(m)`` for the
    loop space of S^m with m odd, and ``sphere(m)``.
    """
    def positive(*ds):
        if any(d <= 0 for d in ds):
            raise ValueError("degrees must be positive")

    if kind == "divided_polynomial":
        (d,) = args
        positive(d)
        return RationalGF((1,), one_minus_t(d))
    if kind == "tensor_algebra":
        (degs,) = args
        positive(*degs)
        den = (1,)
        for d in degs:
            den = poly_add(den, monomial_t(d, -1))
        return RationalGF((1,), den)
    if kind == "tensor_quotient":
        degs, sub = args
        positive(*degs, *sub)
        num = (1,)
        for d in sub:
            num = poly_add(num, monomial_t(d, -1))
        return RationalGF(num, series_special("tensor_algebra", degs).den)
    if kind == "loop_odd_sphere":
        (m,) = args
        if m < 1 or m % 2 == 0:
            raise ValueError("loop_odd_sphere needs an odd sphere dimension")
        return RationalGF((1,), one_minus_t(m - 1))
    if kind == "sphere":
        (m,) = args
        positive(m)
        return RationalGF(one_plus_t(m), (1,))
    raise ValueError(f"unknown series kind {kind!r}")


def decomposition_check(lhs: RationalGF, summands: Iterable[tuple[int, RationalGF]], N: int):
    """Compare lhs with Σ t^shift · summand up to degree N.

    Returns ``(ok, first_mismatch_degree)``.
    """
    total = RationalGF.zero()
    for shift, gf in summands:
        total = total + gf.shift(shift)
    a, b = expand(lhs, N), expand(total, N)
    first = a.first_difference(b)
    return first is None, first


def blowup_decomposition(m: int) -> list[tuple[int, RationalGF]]:
    """Summands Σ^{2i} of the series 1/(1-t²)², i = 0..m."""
    base = RationalGF((1,), poly_mul(one_minus_t(2), one_minus_t(2)))
    return [(2 * i, base) for i in range(m + 1)]
