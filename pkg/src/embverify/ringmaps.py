"""Graded ring presentations, ring maps between them and the torus bookkeeping
that pins down the blow-down relations.

Regimes are named ``"crit"`` (capacity at or above the critical value) and
``"subcrit"`` (below it).  Only ℓ and the regime enter any formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import linalg
from .grpoly import Poly, Ring, divide_exact, normal_form, product, substitute
from .linalg import QQ, FieldSpec, Matrix

REGIMES = ("crit", "subcrit")
PRESENTATION_KEYS = ("split_base", "twisted_base", "split_blowup", "twisted_blowup")


def blowup_ring(field: FieldSpec = QQ) -> Ring:
    return Ring.make("z:2 x:2 y:2", field)


def base_ring(field: FieldSpec = QQ) -> Ring:
    return Ring.make("T:2 X:4 Y:4", field)


def torus_ring(n: int, field: FieldSpec = QQ) -> Ring:
    return Ring.make(f"x{n}:2 y{n}:2", field)


@dataclass(frozen=True)
class RingPresentation:
    ring: Ring
    relation: Poly
    label: str = ""
    factors: tuple = ()

    def __post_init__(self):
        if self.relation.ring != self.ring:
            raise ValueError("relation lives in a different ring")
        if not self.relation.is_zero() and not self.relation.is_homogeneous():
            raise ValueError("relation must be homogeneous")
        if self.factors and product(self.factors, self.ring) != self.relation:
            raise ValueError("factors do not multiply to the relation")

    @property
    def relation_degree(self) -> int:
        return self.relation.degree()

    def factors_pairwise_distinct(self) -> bool:
        """No two listed factors are associates (each divides the other)."""
        fs = list(self.factors)
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if fs[i].degree() == fs[j].degree() and divide_exact(fs[i], fs[j]) is not None:
                    return False
        return True

    def reduce(self, f: Poly) -> Poly:
        return normal_form(f, self.relation)


def _linear(ring: Ring, cz, cx, cy) -> Poly:
    z, x, y = ring.gen("z"), ring.gen("x"), ring.gen("y")
    return z.scale(cz) + x.scale(cx) + y.scale(cy)


def blowup_factors(ell: int, closing: Iterable[int], ring: Ring) -> list[Poly]:
    """z, both z - i²x ± iy for 0 < i < ℓ, then z - ℓ²x + s·ℓy for each closing sign s."""
    out = [ring.gen("z")]
    for i in range(1, ell):
        out += [_linear(ring, 1, -i * i, i), _linear(ring, 1, -i * i, -i)]
    for s in closing:
        out.append(_linear(ring, 1, -ell * ell, s * ell))
    return out


def catalog_presentation(key: str, ell: int, regime: str = "crit", field: FieldSpec = QQ) -> RingPresentation:
    """Rings of the catalog, built by explicit products of their factors.

    ``twisted_blowup`` below the critical value is obtained from the split
    blow-up one stage higher through the twisted/split duality.
    """
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}")
    if ell < 0:
        raise ValueError("ℓ must be non-negative")
    if key == "split_base":
        r = base_ring(field)
        T, X, Y = r.gen("T"), r.gen("X"), r.gen("Y")
        fs = [T] + [T ** 2 + X.scale(i ** 4) - Y.scale(i * i) for i in range(1, ell + 1)]
        return RingPresentation(r, product(fs, r), f"split_base[ℓ={ell}]", tuple(fs))
    if key == "twisted_base":
        r = base_ring(field)
        T, X, Y = r.gen("T"), r.gen("X"), r.gen("Y")
        fs = [((X + Y).scale(Fraction(i * (i + 1), 2)) - Y).scale((2 * i + 1) ** 2)
              - (T ** 2).scale(Fraction(i * i * (i + 1) ** 2, 2)) for i in range(ell + 1)]
        return RingPresentation(r, product(fs, r), f"twisted_base[ℓ={ell}]", tuple(fs))
    r = blowup_ring(field)
    if key == "split_blowup":
        if regime == "crit":
            if ell < 1:
                raise ValueError("the critical regime needs ℓ ≥ 1")
            fs = blowup_factors(ell, (1,), r)
        else:
            fs = blowup_factors(ell, (1, -1), r) if ell else [r.gen("z")]
        return RingPresentation(r, product(fs, r), f"split_blowup[ℓ={ell},{regime}]", tuple(fs))
    if key == "twisted_blowup":
        if regime == "crit":
            fs = blowup_factors(ell, (1, -1), r) if ell else [r.gen("z")]
        else:
            fs = blowup_factors(ell + 1, (1,), r)
        return RingPresentation(r, product(fs, r), f"twisted_blowup[ℓ={ell},{regime}]", tuple(fs))
    raise ValueError(f"unknown presentation key {key!r}")


def strata_count(key: str, ell: int, regime: str) -> int:
    """m with relation degree 2(m+1) for the blow-up presentations."""
    if key == "split_blowup":
        return 2 * ell - 1 if regime == "crit" else 2 * ell
    if key == "twisted_blowup":
        return 2 * ell if regime == "crit" else 2 * ell + 1
    raise ValueError(f"{key} is not a blow-up presentation")


class NotWellDefined(Exception):
    def __init__(self, message: str, image: Poly, remainder: Poly):
        super().__init__(message)
        self.image = image
        self.remainder = remainder


@dataclass
class GradedRingMap:
    source: RingPresentation
    target: RingPresentation
    images: dict[str, Poly]
    label: str = ""
    certificate: Poly | None = field(default=None, compare=False)

    def __post_init__(self):
        for g in self.source.ring.gens:
            if g.name not in self.images:
                raise KeyError(f"missing image for {g.name}")
            img = self.images[g.name]
            if img.ring != self.target.ring:
                raise ValueError(f"image of {g.name} lives in a different ring")
            if not img.is_zero() and (not img.is_homogeneous() or img.degree() != g.degree):
                raise ValueError(f"image of {g.name} must be homogeneous of degree {g.degree}")

    def apply(self, f: Poly) -> Poly:
        return substitute(f, self.images, self.target.ring)


def well_defined_check(m: GradedRingMap) -> Poly:
    """Quotient of the image of the source relation by the target relation.

    Raises NotWellDefined, carrying the nonzero remainder, when the image is
    not a multiple of the target relation.
    """
    image = m.apply(m.source.relation)
    if m.target.relation.is_zero():
        if image.is_zero():
            m.certificate = m.target.ring.zero()
            return m.certificate
        raise NotWellDefined("target relation is zero", image, image)
    cert = divide_exact(image, m.target.relation)
    if cert is None:
        raise NotWellDefined("image of the source relation is not divisible by the target relation",
                             image, normal_form(image, m.target.relation))
    assert cert * m.target.relation == image
    m.certificate = cert
    return cert


def identity_map(p: RingPresentation) -> GradedRingMap:
    return GradedRingMap(p, p, p.ring.gens_dict(), "identity")


def split_blowdown_images(ring: Ring) -> dict[str, Poly]:
    z, x, y = ring.gen("z"), ring.gen("x"), ring.gen("y")
    return {"T": z, "X": x ** 2, "Y": y ** 2 + (x * z).scale(2)}


def twisted_blowdown_images(ring: Ring) -> dict[str, Poly]:
    z, x, y = ring.gen("z"), ring.gen("x"), ring.gen("y")
    half = Fraction(1, 2)
    return {
        "X": y * (y - x) + (z * (y.scale(7) + z.scale(7) - x.scale(3))).scale(half),
        "Y": (z * (y - x + z)).scale(half),
        "T": z.scale(4) + y.scale(2) - x,
    }


def blowdown_map(case: str, ell: int, regime: str = "crit", field: FieldSpec = QQ) -> GradedRingMap:
    src = catalog_presentation(f"{case}_base", ell, field=field)
    tgt = catalog_presentation(f"{case}_blowup", ell, regime, field)
    images = split_blowdown_images(tgt.ring) if case == "split" else twisted_blowdown_images(tgt.ring)
    return GradedRingMap(src, tgt, images, f"{case}_blowdown[ℓ={ell},{regime}]")


def twisted_blowdown_check(ell: int, field: FieldSpec = QQ) -> tuple[object, Poly]:
    """Image of the twisted base relation as scalar · linear factor · blow-up relation."""
    m = blowdown_map("twisted", ell, "crit", field)
    cert = well_defined_check(m)
    r = m.target.ring
    expected_factor = _linear(r, 1, -(ell + 1) ** 2, ell + 1)
    scalar = cert.coefficient((1, 0, 0))
    factor = cert.scale(field.inv(scalar)) if scalar else cert
    expected_scalar = field.coerce(Fraction(-1, 2) ** (ell + 1))
    if scalar != expected_scalar or factor != expected_factor:
        raise AssertionError(f"twisted blow-down certificate {cert} differs from "
                             f"{expected_scalar}*({expected_factor})")
    return scalar, factor


# torus maps ----------------------------------------------------------------

def torus_images(n: int, ring: Ring, field: FieldSpec = QQ) -> dict[str, Poly]:
    t = torus_ring(n, field)
    xn, yn = t.gen(f"x{n}"), t.gen(f"y{n}")
    if n == 0:
        return {"x": yn, "y": -xn, "z": t.zero()}
    if n % 2 == 0:
        k = n // 2
        return {"x": yn, "y": xn - yn.scale(k), "z": xn.scale(k)}
    k = (n + 1) // 2
    return {"x": xn - yn, "y": xn.scale(k) - yn.scale(k + 1), "z": yn.scale(k)}


def torus_map(n: int, field: FieldSpec = QQ) -> GradedRingMap:
    if n < 0:
        raise ValueError("n must be non-negative")
    r = blowup_ring(field)
    src = RingPresentation(r, r.zero(), "Q[x,y,z]")
    t = torus_ring(n, field)
    tgt = RingPresentation(t, t.zero(), f"Q[x{n},y{n}]")
    return GradedRingMap(src, tgt, torus_images(n, r, field), f"torus[{n}]")


def linear_matrix(m: GradedRingMap, degree: int = 2) -> tuple[Matrix, list, list]:
    """Matrix of a ring map on one degree; columns index source monomials."""
    src = m.source.ring.monomials(degree)
    tgt = m.target.ring.monomials(degree)
    f = m.source.ring.field
    cols = [m.apply(Poly(m.source.ring, {mon: f.one()})).coordinates(tgt) for mon in src]
    rows = [[c[i] for c in cols] for i in range(len(tgt))]
    return Matrix.from_rows(rows, f, cols=len(src)), src, tgt


def kernel_degree2(m: GradedRingMap) -> list[Poly]:
    mat, src, _ = linear_matrix(m, 2)
    r = m.source.ring
    out = []
    for v in linalg.nullspace_basis(mat):
        p = Poly(r, {mon: c for mon, c in zip(src, v) if c})
        _, lc = p.leading()
        out.append(p.scale(r.field.inv(lc)))
    return out


def expected_kernel(n: int, field: FieldSpec = QQ) -> Poly:
    r = blowup_ring(field)
    if n == 0:
        return r.gen("z")
    if n % 2 == 0:
        k = n // 2
        return _linear(r, 1, -k * k, -k)
    k = (n + 1) // 2
    return _linear(r, 1, -k * k, k)


def stacked_kernel_rank(k_max: int, field: FieldSpec = QQ) -> int:
    rows = []
    for k in range(1, k_max + 1):
        for p in kernel_degree2(torus_map(2 * k, field)):
            rows.append(p.coordinates(p.ring.monomials(2)))
    return len(linalg.row_echelon(rows, 3, field)[1])


@dataclass
class SuiteItem:
    name: str
    params: dict
    lhs: str
    rhs: str
    ok: bool


@dataclass
class SuiteReport:
    items: list[SuiteItem]

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.items)

    @property
    def failures(self) -> list[SuiteItem]:
        return [i for i in self.items if not i.ok]


def restrict_to_circle(p: Poly, n: int, a: int, b: int) -> Poly:
    """Pull back along the circle θ ↦ (aθ, bθ) of the torus with index n."""
    s = Ring.make("s:2", p.ring.field)
    sv = s.gen("s")
    return substitute(p, {f"x{n}": sv.scale(a), f"y{n}": sv.scale(b)}, s)


def circle_relations(k_max: int) -> list[tuple[str, dict, tuple, tuple]]:
    """Identifications of circles in different tori as ((n, (a, b)), (n', (a', b')))."""
    rels = []
    ks = range(1, k_max + 1)
    for k in ks:
        rels.append(("y2k=kx0+y0", {"k": k}, (2 * k, (0, 1)), (0, (k, 1))))
    for k in ks:
        for kp in ks:
            rels.append(("k'x2k-y2k=kx2k'-y2k'", {"k": k, "k'": kp}, (2 * k, (kp, -1)), (2 * kp, (k, -1))))
    for k in ks:
        rels.append(("kx2k+y2k=(k+1)x2k-1+ky2k-1", {"k": k}, (2 * k, (k, 1)), (2 * k - 1, (k + 1, k))))
    for k in ks:
        for kp in ks:
            rels.append(("(k-1)x2k'-1+ky2k'-1=(k'-1)x2k-1+k'y2k-1", {"k": k, "k'": kp},
                         (2 * kp - 1, (k - 1, k)), (2 * k - 1, (kp - 1, kp))))
    rels.append(("x1=y0-x0", {}, (1, (1, 0)), (0, (-1, 1))))
    return rels


# parameter triples (a0, b0, a2) fixing the generators x, y, z
GENERATOR_TRIPLES = {"x": (0, 1, 0), "y": (-1, 0, 1), "z": (0, 0, 1)}


def recursion_coefficients(n: int, a0: int, b0: int, a2: int) -> tuple[int, int]:
    """(a_n, b_n) from the closed-form recursion in terms of (a0, b0, a2)."""
    if n == 0:
        return a0, b0
    if n % 2 == 0:
        k = n // 2
        return k * a2 + (k - 1) * a0, k * a0 + b0
    k = (n + 1) // 2
    return -k * a0 + b0, k * a2 + (2 * k + 1) * a0 - b0


def torus_relation_suite(k_max: int, field: FieldSpec = QQ) -> SuiteReport:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    maps = {n: torus_map(n, field) for n in range(0, 2 * k_max + 1)}
    r = blowup_ring(field)
    items = []
    for name, params, (n1, (a1, b1)), (n2, (a2, b2)) in circle_relations(k_max):
        for cls in ("x", "y", "z"):
            g = r.gen(cls)
            lhs = restrict_to_circle(maps[n1].apply(g), n1, a1, b1)
            rhs = restrict_to_circle(maps[n2].apply(g), n2, a2, b2)
            items.append(SuiteItem(name, {**params, "class": cls}, str(lhs), str(rhs), lhs == rhs))
    for cls, triple in GENERATOR_TRIPLES.items():
        for n in range(0, 2 * k_max + 1):
            img = maps[n].apply(r.gen(cls))
            got = (img.coefficient((1, 0)), img.coefficient((0, 1)))
            want = tuple(field.coerce(v) for v in recursion_coefficients(n, *triple))
            items.append(SuiteItem("closed-form-coefficients", {"n": n, "class": cls},
                                   str(got), str(want), got == want))
    for n in range(0, 2 * k_max + 1):
        ker = kernel_degree2(maps[n])
        want = expected_kernel(n, field)
        items.append(SuiteItem("kernel", {"n": n}, " ; ".join(map(str, ker)), str(want), ker == [want]))
    return SuiteReport(items)


# commuting squares -------------------------------------------------------------

def group_ring(n: int, field: FieldSpec = QQ) -> Ring:
    return Ring.make(f"A{n}:2 X{n}:4", field)


def psi_group_images(parity: str, k: int, field: FieldSpec = QQ) -> dict[str, Poly]:
    """Images of T, X, Y in the cohomology of the maximal compact subgroup."""
    if parity == "split":
        n = 2 * k
        g = group_ring(n, field)
        A, X = g.gen(f"A{n}"), g.gen(f"X{n}")
        return {"T": A.scale(k), "X": X, "Y": A ** 2 + X.scale(k * k)}
    n = 2 * k - 1
    g = group_ring(n, field)
    A, X = g.gen(f"A{n}"), g.gen(f"X{n}")
    return {"T": A.scale(2 * k - 1),
            "X": (A ** 2).scale(k * (k - 1)) + X.scale(Fraction(2 + k - k * k, 2)),
            "Y": X.scale(Fraction(k * (k - 1), 2))}


def maximal_torus_restriction(parity: str, n: int, field: FieldSpec = QQ) -> dict[str, Poly]:
    t = torus_ring(n, field)
    xn, yn = t.gen(f"x{n}"), t.gen(f"y{n}")
    if parity == "split":
        return {f"A{n}": xn, f"X{n}": yn ** 2}
    return {f"A{n}": xn + yn, f"X{n}": xn * yn}


def commuting_square_check(parity: str, k_max: int, field: FieldSpec = QQ) -> SuiteReport:
    if parity not in ("split", "twisted"):
        raise ValueError(f"unknown parity {parity!r}")
    r = blowup_ring(field)
    base = base_ring(field)
    down = split_blowdown_images(r) if parity == "split" else twisted_blowdown_images(r)
    items = []
    for k in range(1, k_max + 1):
        n = 2 * k if parity == "split" else 2 * k - 1
        tmap = torus_map(n, field)
        group = psi_group_images(parity, k, field)
        res = maximal_torus_restriction(parity, n, field)
        t = torus_ring(n, field)
        for name in base.names:
            lhs = tmap.apply(down[name])
            rhs = substitute(group[name], res, t)
            items.append(SuiteItem(f"{parity}-square", {"k": k, "class": name}, str(lhs), str(rhs), lhs == rhs))
    return SuiteReport(items)
