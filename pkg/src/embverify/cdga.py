"""Free graded-commutative algebras, differentials and their cohomology.

A monomial is an exponent vector over the declared generators; odd
generators appear with exponent 0 or 1.  The canonical form of a product
lists generators in declaration order, and the sign picked up while sorting
follows the Koszul rule ``uv = (-1)^{|u||v|} vu``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import linalg
from .grpoly import format_terms
from .linalg import QQ, FieldSpec, Matrix

Monomial = tuple


@dataclass(frozen=True)
class GcaSignature:
    names: tuple[str, ...]
    degrees: tuple[int, ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        for n, d in zip(self.names, self.degrees):
            if not n.isidentifier():
                raise ValueError(f"bad generator name {n!r}")
            if d <= 0:
                raise ValueError(f"generator {n} needs a positive degree")

    @classmethod
    def make(cls, pairs: Iterable[tuple[str, int]], field: FieldSpec = QQ) -> "GcaSignature":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(int(p[1]) for p in pairs), field)

    @property
    def ngens(self) -> int:
        return len(self.names)

    def is_odd(self, i: int) -> bool:
        return self.degrees[i] % 2 == 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def mon_degree(self, mon: Monomial) -> int:
        return sum(e * d for e, d in zip(mon, self.degrees))

    def with_field(self, f: FieldSpec) -> "GcaSignature":
        return GcaSignature(self.names, self.degrees, f)

    # elements ----------------------------------------------------------
    def gen(self, name: str) -> "GcaElement":
        mon = [0] * self.ngens
        mon[self.index(name)] = 1
        return GcaElement(self, {tuple(mon): self.field.one()})

    def const(self, c) -> "GcaElement":
        c = self.field.coerce(c)
        return GcaElement(self, {(0,) * self.ngens: c} if c else {})

    def zero(self) -> "GcaElement":
        return GcaElement(self, {})

    def one(self) -> "GcaElement":
        return self.const(1)

    def monomial(self, mon: Monomial) -> "GcaElement":
        return GcaElement(self, {tuple(mon): self.field.one()})

    def mul_monomials(self, m1: Monomial, m2: Monomial) -> tuple[int, Monomial | None]:
        """Product of two canonical monomials as ``(sign, monomial)``."""
        out = []
        crossings = 0
        odd_in_m1_after = 0
        # count, for each odd generator of m2, odd generators of m1 sitting to its right
        for i in range(self.ngens - 1, -1, -1):
            e = m1[i] + m2[i]
            if self.is_odd(i):
                if e > 1:
                    return 0, None
                if m2[i]:
                    crossings += odd_in_m1_after
                if m1[i]:
                    odd_in_m1_after += 1
            out.append(e)
        out.reverse()
        return (-1 if crossings % 2 else 1), tuple(out)


def monomial_basis(sig: GcaSignature, n: int) -> list[Monomial]:
    """All canonical monomials of degree ``n`` in a fixed deterministic order."""
    out: list[Monomial] = []
    degs = sig.degrees

    def rec(i, remaining, acc):
        if i == len(degs):
            if remaining == 0:
                out.append(tuple(acc))
            return
        top = 1 if degs[i] % 2 else remaining // degs[i]
        for e in range(min(top, remaining // degs[i]), -1, -1):
            acc.append(e)
            rec(i + 1, remaining - e * degs[i], acc)
            acc.pop()

    if n >= 0:
        rec(0, n, [])
    return out


class GcaElement:
    __slots__ = ("sig", "terms")

    def __init__(self, sig: GcaSignature, terms: Mapping[Monomial, object]):
        self.sig = sig
        norm = sig.field.normalize
        terms = {m: norm(c) for m, c in terms.items() if c}
        self.terms = {m: c for m, c in terms.items() if c}

    def _check(self, other):
        if not isinstance(other, GcaElement) or other.sig != self.sig:
            raise ValueError("signature mismatch")

    def _lift(self, other) -> "GcaElement":
        if isinstance(other, GcaElement):
            self._check(other)
            return other
        return self.sig.const(other)

    def __add__(self, other):
        other = self._lift(other)
        f = self.sig.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = f.add(out[m], c) if m in out else c
        return GcaElement(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.sig.field
        return GcaElement(self.sig, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "GcaElement":
        f = self.sig.field
        c = f.coerce(c)
        return GcaElement(self.sig, {m: f.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GcaElement):
            return self.scale(other)
        return gca_product(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.sig.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, GcaElement):
            return self.sig == other.sig and self.terms == other.terms
        if isinstance(other, int):
            return self == self.sig.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {self.sig.mon_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree of an inhomogeneous or zero element")
        return degs.pop()

    def coordinates(self, basis: Sequence[Monomial]) -> list:
        z = self.sig.field.zero()
        return [self.terms.get(m, z) for m in basis]

    def sorted_terms(self):
        sig = self.sig
        return sorted(self.terms.items(), key=lambda mc: (sig.mon_degree(mc[0]), mc[0]), reverse=True)

    def __str__(self):
        return format_terms(self.sorted_terms(), self.sig.names, self.sig.field)

    def __repr__(self):
        return f"GcaElement({self})"


def gca_product(u: GcaElement, v: GcaElement) -> GcaElement:
    u._check(v)
    sig = u.sig
    f = sig.field
    out: dict = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            sign, m = sig.mul_monomials(m1, m2)
            if m is None:
                continue
            c = f.mul(c1, c2)
            if sign < 0:
                c = f.neg(c)
            out[m] = f.add(out[m], c) if m in out else c
    return GcaElement(sig, out)


def element_from_vector(sig: GcaSignature, basis: Sequence[Monomial], vec: Sequence) -> GcaElement:
    return GcaElement(sig, {m: c for m, c in zip(basis, vec) if c})


@dataclass
class CdgaSpec:
    """A free graded-commutative algebra with a differential on generators."""

    signature: GcaSignature
    differential_images: dict[str, GcaElement]
    parameters: dict[str, object] = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        sig = self.signature
        for name in sig.names:
            self.differential_images.setdefault(name, sig.zero())
        for name, img in self.differential_images.items():
            i = sig.index(name)
            if img.sig != sig:
                raise ValueError(f"image of {name} has the wrong signature")
            if not img.is_zero() and (not img.is_homogeneous() or img.degree() != sig.degrees[i] + 1):
                raise ValueError(f"d({name}) must be homogeneous of degree {sig.degrees[i] + 1}")
        self._dcache: dict[Monomial, GcaElement] = {}
        for name in sig.names:
            dd = extend_differential(self, self.differential_images[name])
            if not dd.is_zero():
                raise ValueError(f"d^2({name}) = {dd} is not zero")

    @property
    def field(self) -> FieldSpec:
        return self.signature.field

    def d_monomial(self, mon: Monomial) -> GcaElement:
        if mon in self._dcache:
            return self._dcache[mon]
        sig = self.signature
        total = sig.zero()
        prefix_deg = 0
        for i, e in enumerate(mon):
            if not e:
                continue
            prefix = sig.monomial(tuple(mon[:i]) + (0,) * (sig.ngens - i))
            suffix = sig.monomial((0,) * (i + 1) + tuple(mon[i + 1:]))
            dg = self.differential_images[sig.names[i]]
            if not dg.is_zero():
                rest = [0] * sig.ngens
                rest[i] = e - 1
                piece = sig.monomial(tuple(rest)) * dg
                if e > 1:
                    piece = piece.scale(e)
                term = prefix * piece * suffix
                if prefix_deg % 2:
                    term = -term
                total = total + term
            prefix_deg += e * sig.degrees[i]
        self._dcache[mon] = total
        return total


def extend_differential(spec: CdgaSpec, u: GcaElement) -> GcaElement:
    """Differential extended to all of the algebra by the graded Leibniz rule."""
    out = spec.signature.zero()
    for m, c in u.terms.items():
        out = out + spec.d_monomial(m).scale(c)
    return out


def differential_matrix(spec: CdgaSpec, n: int,
                        source: Sequence[Monomial] | None = None,
                        target: Sequence[Monomial] | None = None) -> Matrix:
    """Matrix of d: C^n -> C^{n+1}; columns index the degree-n basis."""
    sig = spec.signature
    source = monomial_basis(sig, n) if source is None else source
    target = monomial_basis(sig, n + 1) if target is None else target
    pos = {m: i for i, m in enumerate(target)}
    f = spec.field
    rows = [[f.zero()] * len(source) for _ in target]
    for j, m in enumerate(source):
        for tm, c in spec.d_monomial(m).terms.items():
            rows[pos[tm]][j] = c
    return Matrix(len(target), len(source), tuple(v for r in rows for v in r), f)


@dataclass
class DegreeData:
    degree: int
    basis: list
    cochain_dim: int
    cocycle_dim: int
    coboundary_dim: int
    betti: int
    representatives: list  # GcaElement cocycles, one per cohomology class
    coboundary_echelon: tuple = field(repr=False, default=((), ()))


@dataclass
class CohomologyTable:
    spec: CdgaSpec
    max_degree: int
    degrees: list[DegreeData]

    def betti(self) -> list[int]:
        return [d.betti for d in self.degrees]

    def __getitem__(self, n: int) -> DegreeData:
        return self.degrees[n]


def cohomology(spec: CdgaSpec, N: int) -> CohomologyTable:
    sig = spec.signature
    f = spec.field
    bases = [monomial_basis(sig, n) for n in range(N + 2)]
    dmats = [differential_matrix(spec, n, bases[n], bases[n + 1]) for n in range(N + 1)]
    ranks = [linalg.rank(m) for m in dmats]
    table = []
    for n in range(N + 1):
        basis = bases[n]
        cocycles = linalg.nullspace_basis(dmats[n]) if basis else []
        if n > 0 and bases[n - 1]:
            bound_gens = dmats[n - 1].transpose().to_rows()
        else:
            bound_gens = []
        b_red, b_piv = linalg.row_echelon(bound_gens, len(basis), f)
        reps = linalg.complement_basis(cocycles, b_red, len(basis), f)
        dim_b = len(b_piv)
        d = DegreeData(
            degree=n, basis=basis, cochain_dim=len(basis), cocycle_dim=len(cocycles),
            coboundary_dim=dim_b, betti=len(cocycles) - dim_b,
            representatives=[element_from_vector(sig, basis, r) for r in reps],
            coboundary_echelon=(b_red, b_piv),
        )
        assert d.betti == len(d.representatives)
        assert d.cochain_dim == d.cocycle_dim + ranks[n]
        table.append(d)
    return CohomologyTable(spec, N, table)


@dataclass
class Membership:
    kind: str  # "not_cocycle" | "exact" | "class"
    primitive: GcaElement | None = None
    coordinates: list | None = None
    differential: GcaElement | None = None


def class_membership(spec: CdgaSpec, table: CohomologyTable, u: GcaElement) -> Membership:
    if u.is_zero():
        return Membership("exact", primitive=spec.signature.zero())
    if not u.is_homogeneous():
        raise ValueError("class membership needs a homogeneous element")
    n = u.degree()
    if n > table.max_degree:
        raise ValueError(f"degree {n} beyond table range {table.max_degree}")
    du = extend_differential(spec, u)
    if not du.is_zero():
        return Membership("not_cocycle", differential=du)
    sig = spec.signature
    basis = table[n].basis
    vec = u.coordinates(basis)
    if n > 0:
        src = monomial_basis(sig, n - 1)
        dm = differential_matrix(spec, n - 1, src, basis)
        sol = linalg.solve(dm, vec)
        if sol is not None:
            return Membership("exact", primitive=element_from_vector(sig, src, sol))
    reps = table[n].representatives
    cols = [r.coordinates(basis) for r in reps]
    b_red = list(table[n].coboundary_echelon[0])
    cols += b_red
    m = Matrix.from_rows([[c[i] for c in cols] for i in range(len(basis))], spec.field, cols=len(cols))
    sol = linalg.solve(m, vec)
    assert sol is not None, "cocycle not in span of representatives and coboundaries"
    return Membership("class", coordinates=sol[:len(reps)])


@dataclass
class BasisReport:
    ok: bool
    per_degree: dict[int, dict]
    not_cocycles: list[str]
    first_mismatch: int | None


def verify_claimed_basis(spec: CdgaSpec, family: Iterable[GcaElement], N: int,
                         table: CohomologyTable | None = None) -> BasisReport:
    """Check that ``family`` is a basis of cohomology in every degree <= N."""
    table = table or cohomology(spec, N)
    f = spec.field
    by_degree: dict[int, list[GcaElement]] = {}
    not_cocycles = []
    for u in family:
        if u.is_zero():
            continue
        n = u.degree()
        if n > N:
            continue
        if not extend_differential(spec, u).is_zero():
            not_cocycles.append(str(u))
            continue
        by_degree.setdefault(n, []).append(u)
    per_degree = {}
    first = None
    for n in range(N + 1):
        dd = table[n]
        fam = by_degree.get(n, [])
        b_red, b_piv = dd.coboundary_echelon
        vecs = [linalg.reduce_against(u.coordinates(dd.basis), b_red, b_piv, f) for u in fam]
        _, piv = linalg.row_echelon(vecs, len(dd.basis), f)
        independent = len(piv) == len(fam)
        spans = len(piv) == dd.betti
        status = "match" if independent and spans else "mismatch"
        per_degree[n] = {"betti": dd.betti, "family": len(fam), "class_rank": len(piv), "status": status}
        if status == "mismatch" and first is None:
            first = n
    ok = first is None and not not_cocycles
    return BasisReport(ok, per_degree, not_cocycles, first)


def betti_numbers(spec: CdgaSpec, N: int) -> list[int]:
    return cohomology(spec, N).betti()
