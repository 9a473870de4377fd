"""Read-only catalog of the algebraic objects under verification.

Every entry has a descriptive reference string and a builder.  A Catalog
instance records which entries were requested so the suite can assert that
each one was exercised.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import charindex, hilbert, ringmaps
from .cdga import CdgaSpec, GcaElement, GcaSignature
from .linalg import QQ, FieldSpec
from .parser import parse_expression


def _model(pairs, differential: dict[str, str], params: dict, field: FieldSpec, label: str) -> CdgaSpec:
    sig = GcaSignature.make(pairs, field)
    images = {k: parse_expression(v, sig, params) for k, v in differential.items()}
    return CdgaSpec(sig, images, dict(params), label)


def symp_model(ell: int, i: int, field: FieldSpec = QQ) -> CdgaSpec:
    return _model([("t", 1), ("x", 3), ("y", 3), ("w", 4 * ell + 2 * i)], {}, {}, field,
                  f"symp_model[ℓ={ell},i={i}]")


def blowup_symp_model(ell: int, i: int, field: FieldSpec = QQ) -> CdgaSpec:
    return _model([("tt", 1), ("xt", 1), ("yt", 1), ("wt", 4 * ell + 2 * i - 2)], {}, {}, field,
                  f"blowup_symp_model[ℓ={ell},i={i}]")


def image_emb_model(ell: int, i: int, q=1, field: FieldSpec = QQ) -> CdgaSpec:
    d = 4 * ell + 2 * i
    return _model([("a", 2), ("b", 2), ("e", 3), ("f", 3), ("g", d - 1), ("h", d)],
                  {"e": "a^2", "f": "b^2", "h": "q*b*g"}, {"q": q}, field,
                  f"image_emb_model[ℓ={ell},i={i},q={q}]")


def emb_model(ell: int, i: int, q=1, field: FieldSpec = QQ) -> CdgaSpec:
    d = 4 * ell + 2 * i
    return _model([("d", 2), ("e", 3), ("f1", 3), ("v1", 3), ("g", d - 1), ("h", d)],
                  {"e": "d^2", "h": "-q*d*g"}, {"q": q}, field,
                  f"emb_model[ℓ={ell},i={i},q={q}]")


def image_emb_family(spec: CdgaSpec, N: int) -> list[GcaElement]:
    """a^α times 1, b, g hⁿ and b hⁿ - n q f g hⁿ⁻¹, up to degree N."""
    sig = spec.signature
    a, b, f, g, h = (sig.gen(n) for n in ("a", "b", "f", "g", "h"))
    q = spec.parameters["q"]
    top = N // sig.degrees[sig.index("h")] + 1
    out = []
    for A in (sig.one(), a):
        out += [A, A * b]
        out += [A * g * h ** n for n in range(top)]
        out += [A * (b * h ** n - (f * g * h ** (n - 1)).scale(n * q)) for n in range(1, top)]
    return [u for u in out if u.degree() <= N]


def emb_family(spec: CdgaSpec, N: int) -> list[GcaElement]:
    """f1^α v1^β times 1, d, g hⁿ and hⁿ⁻¹(h d + n q e g), up to degree N."""
    sig = spec.signature
    d, e, f1, v1, g, h = (sig.gen(n) for n in sig.names)
    q = spec.parameters["q"]
    top = N // sig.degrees[sig.index("h")] + 1
    out = []
    for A in (sig.one(), f1, v1, f1 * v1):
        out += [A, A * d]
        out += [A * g * h ** n for n in range(top)]
        out += [A * h ** (n - 1) * (h * d + (e * g).scale(n * q)) for n in range(1, top)]
    return [u for u in out if u.degree() <= N]


def fibration_fiber_series(ell: int, i: int) -> hilbert.RationalGF:
    """S²×S² times S^{d-1} × ΩS^{d+1} with d = 4ℓ+2i."""
    d = 4 * ell + 2 * i
    s2 = hilbert.series_special("sphere", 2)
    return (s2 * s2 * hilbert.series_special("sphere", d - 1)
            * hilbert.series_special("loop_odd_sphere", d + 1))


def mod2_series() -> hilbert.RationalGF:
    """Dimensions of (1+t²)² ⊗ T(w₂,w₃,w₄) ⊗_{T(w₂)} F₂."""
    s2 = hilbert.series_special("sphere", 2)
    return s2 * s2 * hilbert.series_special("tensor_quotient", (2, 3, 4), (2,))


def divided_power_series(ell: int) -> hilbert.RationalGF:
    return hilbert.series_special("divided_polynomial", 4 * ell)


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str
    ref: str
    build: Callable


ENTRIES: tuple[Entry, ...] = (
    Entry("split_base", "presentation", "cohomology of the split symplectomorphism group",
          lambda ell, **kw: ringmaps.catalog_presentation("split_base", ell, **kw)),
    Entry("twisted_base", "presentation", "cohomology of the twisted symplectomorphism group",
          lambda ell, **kw: ringmaps.catalog_presentation("twisted_base", ell, **kw)),
    Entry("split_blowup", "presentation", "cohomology of the split blow-up group",
          lambda ell, regime="crit", **kw: ringmaps.catalog_presentation("split_blowup", ell, regime, **kw)),
    Entry("twisted_blowup", "presentation", "cohomology of the twisted blow-up group",
          lambda ell, regime="crit", **kw: ringmaps.catalog_presentation("twisted_blowup", ell, regime, **kw)),
    Entry("symp_model", "cdga", "minimal model of the symplectomorphism group", symp_model),
    Entry("blowup_symp_model", "cdga", "minimal model of the blow-up symplectomorphism group",
          blowup_symp_model),
    Entry("image_emb_model", "cdga", "minimal model of the space of embedded balls", image_emb_model),
    Entry("emb_model", "cdga", "minimal model of the space of ball embeddings", emb_model),
    Entry("image_emb_family", "family", "claimed cohomology basis of the embedded-ball space",
          image_emb_family),
    Entry("emb_family", "family", "claimed cohomology basis of the embedding space", emb_family),
    Entry("split_blowdown", "map", "blow-down map on cohomology, split case",
          lambda ell, regime="crit", **kw: ringmaps.blowdown_map("split", ell, regime, **kw)),
    Entry("twisted_blowdown", "map", "blow-down map on cohomology, twisted case",
          lambda ell, regime="crit", **kw: ringmaps.blowdown_map("twisted", ell, regime, **kw)),
    Entry("torus_maps", "map", "restrictions to the blown-up toric actions", ringmaps.torus_map),
    Entry("weight_tables", "table", "isotropy weights at the five fixed points", charindex.weight_table),
    Entry("divided_power_series", "series", "divided polynomial algebra of the loop-space factor",
          divided_power_series),
    Entry("mod2_series", "series", "mod 2 dimensions of the embedded-ball space", mod2_series),
    Entry("fibration_fiber_series", "series", "product of base and fiber of the orbit fibration",
          fibration_fiber_series),
)


@dataclass
class Catalog:
    entries: dict[str, Entry] = field(default_factory=lambda: {e.name: e for e in ENTRIES})
    used: set[str] = field(default_factory=set)

    def get(self, name: str, *args, **kwargs):
        if name not in self.entries:
            raise KeyError(f"no catalog entry {name!r}")
        self.used.add(name)
        return self.entries[name].build(*args, **kwargs)

    def ref(self, name: str) -> str:
        return self.entries[name].ref

    def names(self) -> list[str]:
        return list(self.entries)

    def unused(self) -> list[str]:
        return [n for n in self.entries if n not in self.used]
