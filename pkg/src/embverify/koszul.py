"""Koszul-type complex over the quotient ring Q[z,x,y]/(R) and its Tor ranks.

The complex is Λ(α,β,γ) ⊗ Q[δ] ⊗ Q[z,x,y]/(R) with bidegrees
α:(-1,2), β:(-1,4), γ:(-1,4), δ:(-2,4ℓ+2) and

    d α = z,  d β = x²,  d γ = y² + 2xz,  d δ = α · ∏_{i=1..ℓ} ((z - i²x)² - i²y²).

The differential preserves internal degree, so each internal degree is a
finite complex.  δ is treated as an ordinary polynomial generator, which
computes Tor correctly below total degree 8ℓ where δ² first appears.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .grpoly import GRLEX, MonomialOrder, Poly, Ring, format_monomial, normal_form, product, quotient_basis
from .linalg import QQ, FieldSpec, Matrix

# basis key: (a, b, c, n, base_monomial) for α^a β^b γ^c δ^n · m
Key = tuple
EXT_NAMES = ("α", "β", "γ", "δ")


def base_ring(field: FieldSpec = QQ, order: MonomialOrder = GRLEX) -> Ring:
    return Ring.make("z:2 x:2 y:2", field, order)


def split_relation_product(ring: Ring, ell: int) -> Poly:
    """∏_{i=1..ℓ} ((z - i²x)² - i²y²)."""
    z, x, y = ring.gen("z"), ring.gen("x"), ring.gen("y")
    return product([(z - x.scale(i * i)) ** 2 - (y ** 2).scale(i * i) for i in range(1, ell + 1)], ring)


def koszul_base_relation(ring: Ring, ell: int) -> Poly:
    """z (z - ℓ²x + ℓy) ∏_{i<ℓ} ((z - i²x)² - i²y²)."""
    z, x, y = ring.gen("z"), ring.gen("x"), ring.gen("y")
    head = z * (z - x.scale(ell * ell) + y.scale(ell))
    return head * split_relation_product(ring, ell - 1)


@dataclass
class KoszulData:
    ell: int
    ring: Ring
    relation: Poly
    images: dict[str, Poly]  # d α, d β, d γ and the polynomial factor of d δ
    internal: tuple[int, int, int, int] = field(init=False)

    def __post_init__(self):
        self.internal = (2, 4, 4, 4 * self.ell + 2)
        self._basis_cache: dict[int, list] = {}
        self._nf_cache: dict = {}

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def valid_below(self) -> int:
        return 8 * self.ell

    def nf(self, p: Poly) -> Poly:
        return normal_form(p, self.relation)

    def times_base(self, mon, poly_name: str) -> Poly:
        key = (mon, poly_name)
        if key not in self._nf_cache:
            m = Poly(self.ring, {mon: self.field.one()})
            self._nf_cache[key] = self.nf(m * self.images[poly_name])
        return self._nf_cache[key]

    def base_basis(self, q: int) -> list:
        if q not in self._basis_cache:
            self._basis_cache[q] = quotient_basis(self.ring, self.relation, q) if q >= 0 else []
        return self._basis_cache[q]

    def basis(self, p: int, q: int) -> list[Key]:
        """Cochain basis in external degree ``p`` and internal degree ``q``."""
        out = []
        ia, ib, ic, idl = self.internal
        for n in range(0, -p // 2 + 1):
            for a in (0, 1):
                for b in (0, 1):
                    for c in (0, 1):
                        if -(a + b + c) - 2 * n != p:
                            continue
                        rest = q - a * ia - b * ib - c * ic - n * idl
                        for m in self.base_basis(rest):
                            out.append((a, b, c, n, m))
        return out

    def d_basis(self, key: Key) -> dict[Key, object]:
        f = self.field
        a, b, c, n, m = key
        out: dict = {}

        def acc(newkey_ext, poly: Poly, coef):
            for mon, v in poly.terms.items():
                k = newkey_ext + (mon,)
                val = f.mul(coef, v)
                out[k] = f.add(out[k], val) if k in out else val

        if a:
            acc((0, b, c, n), self.times_base(m, "alpha"), f.one())
        if b:
            acc((a, 0, c, n), self.times_base(m, "beta"), f.coerce((-1) ** a))
        if c:
            acc((a, b, 0, n), self.times_base(m, "gamma"), f.coerce((-1) ** (a + b)))
        if n and not a:
            # δ is even; moving the new α to the front cancels the prefix sign
            acc((1, b, c, n - 1), self.times_base(m, "delta"), f.coerce(n))
        return {k: v for k, v in out.items() if v}

    def differential_matrix(self, p: int, q: int) -> tuple[Matrix, list, list]:
        src = self.basis(p, q)
        tgt = self.basis(p + 1, q)
        pos = {k: i for i, k in enumerate(tgt)}
        f = self.field
        rows = [[f.zero()] * len(src) for _ in tgt]
        for j, k in enumerate(src):
            for tk, v in self.d_basis(k).items():
                rows[pos[tk]][j] = v
        return Matrix(len(tgt), len(src), tuple(v for r in rows for v in r), f), src, tgt


def build_koszul(ell: int, field: FieldSpec = QQ, order: MonomialOrder = GRLEX,
                 check_degree: int | None = None) -> KoszulData:
    if ell < 1:
        raise ValueError("ℓ must be at least 1")
    ring = base_ring(field, order)
    z, x, y = ring.gen("z"), ring.gen("x"), ring.gen("y")
    images = {
        "alpha": z,
        "beta": x ** 2,
        "gamma": y ** 2 + (x * z).scale(2),
        "delta": split_relation_product(ring, ell),
    }
    k = KoszulData(ell, ring, koszul_base_relation(ring, ell), images)
    check_square_zero(k, check_degree if check_degree is not None else 4 * ell + 2)
    return k


def check_square_zero(k: KoszulData, max_total: int) -> None:
    """Assert d∘d = 0 on every basis cochain of total degree <= max_total."""
    f = k.field
    for p, q in bidegrees_up_to(max_total):
        for key in k.basis(p, q):
            acc: dict = {}
            for k1, v1 in k.d_basis(key).items():
                for k2, v2 in k.d_basis(k1).items():
                    acc[k2] = f.add(acc.get(k2, f.zero()), f.mul(v1, v2))
            if any(acc.values()):
                raise AssertionError(f"d² ≠ 0 on {format_key(k, key)}")


def bidegrees_up_to(max_total: int):
    for total in range(max_total + 1):
        for p in range(0, -total - 1, -1):
            yield p, total - p


@dataclass
class BidegreeCohomology:
    p: int
    q: int
    cochain_dim: int
    rank: int
    representatives: list = field(default_factory=list)


def cohomology_at(k: KoszulData, p: int, q: int) -> BidegreeCohomology:
    f = k.field
    dout, src, _ = k.differential_matrix(p, q)
    din, _, _ = k.differential_matrix(p - 1, q)
    if not src:
        return BidegreeCohomology(p, q, 0, 0)
    cycles = linalg.nullspace_basis(dout)
    bounds = din.transpose().to_rows() if din.cols else []
    reps = linalg.complement_basis(cycles, bounds, len(src), f)
    cochains = [{key: v for key, v in zip(src, r) if v} for r in reps]
    return BidegreeCohomology(p, q, len(src), len(reps), cochains)


def tor_ranks(k: KoszulData, total_degree: int) -> dict[int, int]:
    """Nonzero ranks of Tor at external degree p with p + q = total_degree."""
    if total_degree >= k.valid_below:
        raise ValueError(f"total degree {total_degree} is outside the valid range < {k.valid_below}")
    out = {}
    for p in range(0, -total_degree - 1, -1):
        r = cohomology_at(k, p, total_degree - p).rank
        if r:
            out[p] = r
    return out


def tor_representative(k: KoszulData, total_degree: int, external_degree: int) -> list[dict]:
    if total_degree >= k.valid_below:
        raise ValueError(f"total degree {total_degree} is outside the valid range < {k.valid_below}")
    return cohomology_at(k, external_degree, total_degree - external_degree).representatives


def euler_check(k: KoszulData, q: int) -> tuple[int, int]:
    """Alternating sums of cochain dimensions and of cohomology ranks at internal degree q."""
    chi_c = chi_h = 0
    for p in range(0, -q - 1, -1):
        h = cohomology_at(k, p, q)
        sign = -1 if p % 2 else 1
        chi_c += sign * h.cochain_dim
        chi_h += sign * h.rank
    return chi_c, chi_h


def format_key(k: KoszulData, key: Key) -> str:
    a, b, c, n, m = key
    parts = [nm for nm, e in zip(EXT_NAMES[:3], (a, b, c)) if e]
    if n:
        parts.append("δ" if n == 1 else f"δ^{n}")
    base = format_monomial(m, k.ring.names)
    if base != "1" or not parts:
        parts.append(base)
    return "*".join(parts)


def format_cochain(k: KoszulData, cochain: dict) -> str:
    f = k.field
    terms = sorted(cochain.items(), key=lambda kv: (kv[0][:4], k.ring.sort_key(kv[0][4])), reverse=True)
    out = []
    for key, v in terms:
        s = format_key(k, key)
        if v == f.one():
            out.append(s)
        else:
            out.append(f"{v}*{s}")
    return " + ".join(out) if out else "0"
