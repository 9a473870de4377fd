"""Graded multivariate polynomials with exact coefficients.

Degrees are cohomological: every generator carries an even degree and the
degree of a monomial is the weighted sum of its exponents.  Ideals in this
package are all principal, so a single-divisor division with respect to a
fixed monomial order already gives canonical remainders.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import QQ, FieldSpec

Monomial = tuple  # exponent vector


@dataclass(frozen=True)
class GeneratorDecl:
    name: str
    degree: int

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"bad generator name {self.name!r}")
        if self.degree <= 0 or self.degree % 2:
            raise ValueError(f"generator {self.name} must have positive even degree, got {self.degree}")


@dataclass(frozen=True)
class MonomialOrder:
    """Graded order on exponent vectors.

    ``kind`` is ``"grlex"`` or ``"grevlex"``; ``priority`` lists variable
    indices from most to least significant (declaration order by default).
    """

    kind: str = "grlex"
    priority: tuple | None = None

    def key(self, mon: Monomial, degrees: Sequence[int]):
        deg = sum(e * d for e, d in zip(mon, degrees))
        prio = self.priority if self.priority is not None else range(len(mon))
        if self.kind == "grlex":
            return (deg,) + tuple(mon[i] for i in prio)
        if self.kind == "grevlex":
            return (deg,) + tuple(-mon[i] for i in reversed(tuple(prio)))
        raise ValueError(f"unknown order {self.kind}")


GRLEX = MonomialOrder()


@dataclass(frozen=True)
class Ring:
    """Polynomial ring on named even-degree generators over a field."""

    gens: tuple[GeneratorDecl, ...]
    field: FieldSpec = QQ
    order: MonomialOrder = GRLEX

    def __post_init__(self):
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")

    @classmethod
    def make(cls, spec: str | Iterable, field: FieldSpec = QQ, order: MonomialOrder = GRLEX) -> "Ring":
        """``Ring.make("z:2 x:2 y:2")`` or from (name, degree) pairs."""
        if isinstance(spec, str):
            pairs = [tok.split(":") for tok in spec.split()]
            gens = tuple(GeneratorDecl(n, int(d)) for n, d in pairs)
        else:
            gens = tuple(g if isinstance(g, GeneratorDecl) else GeneratorDecl(*g) for g in spec)
        return cls(gens, field, order)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.gens)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.gens)

    @property
    def nvars(self) -> int:
        return len(self.gens)

    def with_field(self, field: FieldSpec) -> "Ring":
        return Ring(self.gens, field, self.order)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.gens, self.field, order)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def gen(self, name: str) -> "Poly":
        mon = [0] * self.nvars
        mon[self.index(name)] = 1
        return Poly(self, {tuple(mon): self.field.one()})

    def gens_dict(self) -> dict[str, "Poly"]:
        return {n: self.gen(n) for n in self.names}

    def const(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def mon_degree(self, mon: Monomial) -> int:
        return sum(e * d for e, d in zip(mon, self.degrees))

    def sort_key(self, mon: Monomial):
        return self.order.key(mon, self.degrees)

    def monomials(self, n: int) -> list[Monomial]:
        """All monomials of cohomological degree ``n``, largest first."""
        out = []
        degs = self.degrees

        def rec(i, remaining, acc):
            if i == len(degs):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            for e in range(remaining // degs[i] + 1):
                acc.append(e)
                rec(i + 1, remaining - e * degs[i], acc)
                acc.pop()

        if n >= 0:
            rec(0, n, [])
        out.sort(key=self.sort_key, reverse=True)
        return out


class Poly:
    """Immutable polynomial: a map from exponent vectors to nonzero scalars."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object]):
        self.ring = ring
        norm = ring.field.normalize
        self.terms = {m: norm(c) for m, c in terms.items() if c}
        self.terms = {m: c for m, c in self.terms.items() if c}
        self._hash = None

    # construction helpers ----------------------------------------------
    def _new(self, terms) -> "Poly":
        return Poly(self.ring, terms)

    def _check(self, other: "Poly"):
        if other.ring != self.ring:
            raise ValueError("ring mismatch")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return self.ring.const(other)

    # arithmetic --------------------------------------------------------
    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = f.add(out[m], c) if m in out else c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        f = self.ring.field
        return self._new({m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        f = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = f.mul(c1, c2)
                out[m] = f.add(out[m], c) if m in out else c
        return self._new(out)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def scale(self, c) -> "Poly":
        f = self.ring.field
        c = f.coerce(c)
        if not c:
            return self.ring.zero()
        return self._new({m: f.mul(c, v) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out, base = self.ring.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, c) -> "Poly":
        f = self.ring.field
        return self.scale(f.inv(f.coerce(c)))

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda mc: self.ring.sort_key(mc[0]), reverse=True)

    def leading(self) -> tuple[Monomial, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms.items(), key=lambda mc: self.ring.sort_key(mc[0]))

    def degrees(self) -> set[int]:
        return {self.ring.mon_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Cohomological degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of an inhomogeneous or zero polynomial")
        return degs.pop()

    def homogeneous_part(self, n: int) -> "Poly":
        return self._new({m: c for m, c in self.terms.items() if self.ring.mon_degree(m) == n})

    def coefficient(self, mon: Monomial):
        return self.terms.get(tuple(mon), self.ring.field.zero())

    def coordinates(self, basis: Sequence[Monomial]) -> list:
        z = self.ring.field.zero()
        return [self.terms.get(m, z) for m in basis]

    def in_ring(self, ring: Ring) -> "Poly":
        """Re-express in a ring with the same generators (new field or order)."""
        if ring.names != self.ring.names or ring.degrees != self.ring.degrees:
            raise ValueError("incompatible rings")
        f = ring.field
        return Poly(ring, {m: f.coerce(c) for m, c in self.terms.items()})

    # printing ----------------------------------------------------------
    def __str__(self) -> str:
        return format_terms(self.sorted_terms(), self.ring.names, self.ring.field)

    def __repr__(self) -> str:
        return f"Poly({self})"


def format_monomial(mon: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, n in zip(mon, names):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_terms(terms: Sequence[tuple[Monomial, object]], names: Sequence[str], field: FieldSpec) -> str:
    """Render in the package's expression grammar (parseable back)."""
    if not terms:
        return "0"
    out = []
    for i, (mon, c) in enumerate(terms):
        neg = field.is_rational and c < 0
        mag = -c if neg else c
        body = format_monomial(mon, names)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{str(mag)}*{body}"
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


# operations ---------------------------------------------------------------

def arith(op: str, lhs: Poly, rhs) -> Poly:
    """``op`` is one of ``add``, ``mul``, ``scale``."""
    if op == "add":
        return lhs + rhs
    if op == "mul":
        if not isinstance(rhs, Poly):
            raise TypeError("mul needs two polynomials; use scale for scalars")
        return lhs * rhs
    if op == "scale":
        return lhs.scale(rhs)
    raise ValueError(f"unknown operation {op!r}")


def homogeneous_part(p: Poly, n: int) -> Poly:
    return p.homogeneous_part(n)


def divmod_single(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Single-divisor division: ``f = q*g + r`` with no term of ``r``
    divisible by the leading monomial of ``g``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    f._check(g)
    field = f.ring.field
    lm, lc = g.leading()
    lc_inv = field.inv(lc)
    gterms = list(g.terms.items())
    rem = dict(f.terms)
    quo: dict = {}
    key = f.ring.sort_key
    out: dict = {}
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        if all(a >= b for a, b in zip(m, lm)):
            qm = tuple(a - b for a, b in zip(m, lm))
            qc = field.mul(c, lc_inv)
            quo[qm] = field.add(quo[qm], qc) if qm in quo else qc
            for gm, gc in gterms:
                tm = tuple(a + b for a, b in zip(qm, gm))
                v = field.sub(rem.get(tm, field.zero()), field.mul(qc, gc))
                if v:
                    rem[tm] = v
                else:
                    rem.pop(tm, None)
        else:
            out[m] = c
            del rem[m]
    return Poly(f.ring, quo), Poly(f.ring, out)


def divide_exact(f: Poly, g: Poly) -> Poly | None:
    """Quotient ``q`` with ``f == q*g``, or None if ``g`` does not divide ``f``."""
    q, r = divmod_single(f, g)
    if not r.is_zero():
        return None
    assert q * g == f
    return q


def normal_form(f: Poly, g: Poly) -> Poly:
    """Canonical representative of ``f`` modulo the principal ideal ``(g)``."""
    if not g.is_homogeneous():
        raise ValueError("normal form needs a homogeneous divisor")
    return divmod_single(f, g)[1]


def substitute(f: Poly, images: Mapping[str, Poly], target: Ring | None = None) -> Poly:
    """Apply the graded ring map sending each generator to ``images[name]``."""
    src = f.ring
    if target is None:
        if not images:
            raise ValueError("cannot infer target ring")
        target = next(iter(images.values())).ring
    imgs = []
    for g in src.gens:
        if g.name not in images:
            raise KeyError(f"missing image for generator {g.name}")
        img = images[g.name]
        if img.ring != target:
            raise ValueError(f"image of {g.name} lives in a different ring")
        if not img.is_zero() and (not img.is_homogeneous() or img.degree() != g.degree):
            raise ValueError(f"image of {g.name} is not homogeneous of degree {g.degree}")
        imgs.append(img)
    powers: dict = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = imgs[i] ** e
        return powers[(i, e)]

    out = target.zero()
    for mon, c in f.terms.items():
        term = target.const(c)
        for i, e in enumerate(mon):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def quotient_basis(ring: Ring, relation: Poly, n: int) -> list[Monomial]:
    """Standard monomials of degree ``n`` modulo a principal relation."""
    lm, _ = relation.leading()
    return [m for m in ring.monomials(n) if not all(a >= b for a, b in zip(m, lm))]


def product(polys: Iterable[Poly], ring: Ring) -> Poly:
    out = ring.one()
    for p in polys:
        out = out * p
    return out
