"""The verification suite: configuration, individual checks and the runner."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import charindex, hilbert, koszul, linalg, ringmaps
from .catalog import Catalog
from .cdga import CohomologyTable, class_membership, cohomology, extend_differential, verify_claimed_basis
from .grpoly import GRLEX, MonomialOrder, Poly, normal_form
from .linalg import QQ, FieldSpec

CASES = ("split", "twisted", "both")
REGIME_CHOICES = ("crit", "subcrit", "both")


@dataclass(frozen=True)
class SuiteConfig:
    case: str = "both"
    ell_range: tuple[int, int] = (1, 3)
    regime: str = "both"
    max_degree: int | None = None
    fields: tuple[FieldSpec, ...] = (QQ, FieldSpec(3))
    checks: tuple[str, ...] | str = "all"
    timings: bool = False
    perturb: str | None = None  # test hook: name of a presentation to corrupt

    def validate(self) -> None:
        if self.case not in CASES:
            raise ValueError(f"case must be one of {CASES}")
        if self.regime not in REGIME_CHOICES:
            raise ValueError(f"regime must be one of {REGIME_CHOICES}")
        lo, hi = self.ell_range
        if lo < 1 or hi < lo:
            raise ValueError("ℓ range must satisfy 1 ≤ A ≤ B")
        if self.max_degree is not None and self.max_degree < 2 * (4 * hi + 2):
            raise ValueError(f"max degree must be at least {2 * (4 * hi + 2)} for ℓ up to {hi}")
        if not self.fields:
            raise ValueError("at least one coefficient field is required")
        if self.checks != "all":
            unknown = [c for c in self.checks if c not in CHECKS]
            if unknown:
                raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if self.perturb is not None and self.perturb not in ("split_blowup", "twisted_blowup"):
            raise ValueError("perturb must name a blow-up presentation")

    @property
    def ells(self) -> range:
        return range(self.ell_range[0], self.ell_range[1] + 1)

    @property
    def cases(self) -> tuple[str, ...]:
        return ("split", "twisted") if self.case == "both" else (self.case,)

    @property
    def regimes(self) -> tuple[str, ...]:
        return ringmaps.REGIMES if self.regime == "both" else (self.regime,)

    def selected(self) -> list[str]:
        return list(CHECKS) if self.checks == "all" else [c for c in CHECKS if c in self.checks]

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "ell_range": list(self.ell_range),
            "regime": self.regime,
            "max_degree": self.max_degree,
            "fields": [str(f) for f in self.fields],
            "checks": "all" if self.checks == "all" else list(self.checks),
            "perturb": self.perturb,
        }


@dataclass
class CheckReport:
    id: str
    paper_ref: str
    status: str  # "pass" | "fail" | "skip"
    witness: dict
    detail: str = ""
    elapsed_ms: int = 0

    def as_dict(self) -> dict:
        return {"id": self.id, "paper_ref": self.paper_ref, "status": self.status,
                "witness": self.witness, "elapsed_ms": self.elapsed_ms}


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _i_of(case: str) -> int:
    return 0 if case == "split" else 1


@dataclass
class Context:
    cfg: SuiteConfig
    catalog: Catalog = field(default_factory=Catalog)
    _tables: dict = field(default_factory=dict)

    def model_table(self, name: str, ell: int, i: int, q, N: int):
        """Cohomology of a catalog model, cached within one check."""
        spec = self.catalog.get(name, ell, i, q)
        key = (name, ell, i, q)
        cached = self._tables.get(key)
        if cached is None or cached.max_degree < N:
            cached = cohomology(spec, N)
            self._tables[key] = cached
        if cached.max_degree == N:
            return spec, cached
        return spec, CohomologyTable(spec, N, cached.degrees[:N + 1])

    def presentation(self, key: str, ell: int, regime: str = "crit") -> ringmaps.RingPresentation:
        p = self.catalog.get(key, ell, regime=regime) if key.endswith("blowup") else self.catalog.get(key, ell)
        if self.cfg.perturb == key:
            r = p.ring
            p = ringmaps.RingPresentation(r, p.relation + r.gen("y") ** (p.relation_degree // 2),
                                          p.label + "+perturbed")
        return p

    def model_degree(self, ell: int, i: int) -> int:
        return self.cfg.max_degree if self.cfg.max_degree is not None else 4 * (4 * ell + 2 * i)


# individual checks -----------------------------------------------------------

def _factors_distinct_mod(ell: int, f: FieldSpec) -> bool:
    """Linear factors z, z - i²x ± iy (i ≤ ℓ) remain pairwise distinct over f."""
    if f.is_rational:
        return True
    seen = set()
    for i in range(0, ell + 1):
        for s in ((1,) if i == 0 else (1, -1)):
            key = (f.coerce(-i * i), f.coerce(s * i))
            if key in seen:
                return False
            seen.add(key)
    return True


def check_koszul_tor(ctx: Context) -> Iterator[CheckReport]:
    ref = "Tor over the base cohomology ring in total degree 4ℓ"
    for ell in ctx.cfg.ells:
        for f in ctx.cfg.fields:
            wit = {"ell": ell, "field": str(f), "total_degree": 4 * ell}
            if not _factors_distinct_mod(ell, f):
                wit["reason"] = "linear factors of the base relation collide in this characteristic"
                yield CheckReport("koszul-tor", ref, "skip", wit, f"ℓ={ell} field={f} skipped ({wit['reason']})")
                continue
            k = koszul.build_koszul(ell, f)
            ranks = koszul.tor_ranks(k, 4 * ell)
            unit = koszul.tor_ranks(k, 0)
            wit["ranks"] = {str(p): r for p, r in ranks.items()}
            wit["unit_ranks"] = {str(p): r for p, r in unit.items()}
            ok = unit == {0: 1} and all(p == 0 for p in ranks)
            if ell == 1:
                reps = [koszul.format_cochain(k, c) for c in koszul.tor_representative(k, 4, 0)]
                wit["representatives"] = reps
                ok = ok and ranks == {0: 1} and reps == ["x*y"]
                detail = f"ℓ={ell} field={f} deg=4 rank={sum(ranks.values())} (class {', '.join(reps) or '-'})"
            else:
                ok = ok and ranks == {}
                detail = f"ℓ={ell} field={f} deg={4 * ell} rank={sum(ranks.values())}"
            yield CheckReport("koszul-tor", ref, _status(ok), wit, detail)


def check_koszul_order(ctx: Context) -> Iterator[CheckReport]:
    ref = "Tor ranks do not depend on the monomial order"
    other = MonomialOrder("grevlex", (1, 2, 0))
    for ell in ctx.cfg.ells:
        a = koszul.build_koszul(ell, QQ, GRLEX)
        b = koszul.build_koszul(ell, QQ, other)
        ta = {t: koszul.tor_ranks(a, t) for t in range(4 * ell + 1)}
        tb = {t: koszul.tor_ranks(b, t) for t in range(4 * ell + 1)}
        ok = ta == tb
        wit = {"ell": ell, "orders": ["grlex(z,x,y)", "grevlex(x,y,z)"],
               "ranks": {str(t): {str(p): r for p, r in v.items()} for t, v in ta.items()}}
        if not ok:
            wit["other_ranks"] = {str(t): {str(p): r for p, r in v.items()} for t, v in tb.items()}
        yield CheckReport("koszul-order", ref, _status(ok), wit, f"ℓ={ell} totals 0..{4 * ell}")


def check_koszul_euler(ctx: Context) -> Iterator[CheckReport]:
    ref = "Euler characteristic of each internal degree of the Koszul complex"
    for ell in ctx.cfg.ells:
        k = koszul.build_koszul(ell, QQ)
        bad = []
        for q in range(0, 4 * ell + 3):
            c, h = koszul.euler_check(k, q)
            if c != h:
                bad.append({"internal_degree": q, "cochains": c, "cohomology": h})
        yield CheckReport("koszul-euler", ref, _status(not bad),
                          {"ell": ell, "max_internal_degree": 4 * ell + 2, "mismatches": bad[:1]},
                          f"ℓ={ell} internal degrees 0..{4 * ell + 2}")


def _basis_report(ctx, model_name, family_name, ell, i, q):
    N = ctx.model_degree(ell, i)
    spec, table = ctx.model_table(model_name, ell, i, q, N)
    fam = ctx.catalog.get(family_name, spec, N)
    rep = verify_claimed_basis(spec, fam, N, table)
    return spec, table, rep, N


def check_model_cohomology(ctx: Context) -> Iterator[CheckReport]:
    ref = "cohomology of the embedded-ball model against its claimed basis"
    for case in ctx.cfg.cases:
        i = _i_of(case)
        for ell in ctx.cfg.ells:
            for q in (1, 3):
                spec, table, rep, N = _basis_report(ctx, "image_emb_model", "image_emb_family", ell, i, q)
                wit = {"ell": ell, "i": i, "q": q, "max_degree": N, "betti": table.betti(),
                       "first_mismatch": rep.first_mismatch, "not_cocycles": rep.not_cocycles}
                yield CheckReport("model-cohomology", ref, _status(rep.ok), wit,
                                  f"{case} ℓ={ell} q={q} N={N} betti={''.join(map(str, table.betti()[:12]))}…")


def check_model_relations(ctx: Context) -> Iterator[CheckReport]:
    ref = "a², b² and bg vanish in cohomology with explicit primitives"
    for case in ctx.cfg.cases:
        i = _i_of(case)
        for ell in ctx.cfg.ells:
            for q in (1, 3):
                spec = ctx.catalog.get("image_emb_model", ell, i, q)
                sig = spec.signature
                a, b, g = sig.gen("a"), sig.gen("b"), sig.gen("g")
                N = sig.degrees[sig.index("g")] + 2
                table = cohomology(spec, N)
                want = {"a^2": a * a, "b^2": b * b, "b*g": b * g}
                wit = {"ell": ell, "i": i, "q": q, "primitives": {}}
                ok = True
                for name, u in want.items():
                    m = class_membership(spec, table, u)
                    got = str(m.primitive) if m.kind == "exact" else m.kind
                    wit["primitives"][name] = got
                    ok = ok and m.kind == "exact" and extend_differential(spec, m.primitive) == u
                ab = class_membership(spec, table, a * b)
                wit["ab"] = ab.kind
                ok = ok and ab.kind == "class"
                yield CheckReport("model-relations", ref, _status(ok), wit,
                                  f"{case} ℓ={ell} q={q} " + ", ".join(f"{k}=d({v})" for k, v in wit["primitives"].items()))


def check_model_q_invariance(ctx: Context) -> Iterator[CheckReport]:
    ref = "Betti numbers of the embedded-ball model do not depend on q"
    for case in ctx.cfg.cases:
        i = _i_of(case)
        for ell in ctx.cfg.ells:
            N = ctx.model_degree(ell, i)
            b1 = ctx.model_table("image_emb_model", ell, i, 1, N)[1].betti()
            b3 = ctx.model_table("image_emb_model", ell, i, 3, N)[1].betti()
            yield CheckReport("model-q-invariance", ref, _status(b1 == b3),
                              {"ell": ell, "i": i, "max_degree": N, "betti_q1": b1, "betti_q3": b3},
                              f"{case} ℓ={ell} N={N}")


def check_emb_cohomology(ctx: Context) -> Iterator[CheckReport]:
    ref = "cohomology of the embedding-space model against its claimed basis"
    for case in ctx.cfg.cases:
        i = _i_of(case)
        for ell in ctx.cfg.ells:
            for q in (1, 3):
                spec, table, rep, N = _basis_report(ctx, "emb_model", "emb_family", ell, i, q)
                wit = {"ell": ell, "i": i, "q": q, "max_degree": N, "betti": table.betti(),
                       "first_mismatch": rep.first_mismatch, "not_cocycles": rep.not_cocycles}
                yield CheckReport("emb-cohomology", ref, _status(rep.ok), wit,
                                  f"{case} ℓ={ell} q={q} N={N}")


def check_symp_models(ctx: Context) -> Iterator[CheckReport]:
    ref = "Betti series of the free models with zero differential"
    for case in ctx.cfg.cases:
        i = _i_of(case)
        for ell in ctx.cfg.ells:
            for name in ("symp_model", "blowup_symp_model"):
                spec = ctx.catalog.get(name, ell, i)
                N = ctx.model_degree(ell, i)
                betti = cohomology(spec, N).betti()
                series = hilbert.series_free_gca(spec.signature.degrees)
                want = list(hilbert.expand(series, N))
                yield CheckReport("symp-models", ref, _status(betti == want),
                                  {"model": name, "ell": ell, "i": i, "series": str(series),
                                   "betti": betti, "expected": want},
                                  f"{case} {name} ℓ={ell} series {series}")


def quotient_dims_bruteforce(p: ringmaps.RingPresentation, N: int) -> list[int]:
    """Dimension in each degree ≤ N as the rank of normal forms of all monomials."""
    r = p.ring
    out = []
    for n in range(N + 1):
        mons = r.monomials(n)
        rows = [normal_form(Poly(r, {m: r.field.one()}), p.relation).coordinates(mons) for m in mons]
        out.append(len(linalg.row_echelon(rows, len(mons), r.field)[1]))
    return out


def check_blowup_series(ctx: Context) -> Iterator[CheckReport]:
    ref = "Hilbert series of the blow-up presentations and their module decomposition"
    N_series = max(40, ctx.cfg.max_degree or 0)
    N_brute = 24
    ring_series = hilbert.series_free_gca((2, 2, 2))
    for case in ctx.cfg.cases:
        key = f"{case}_blowup"
        for ell in ctx.cfg.ells:
            for regime in ctx.cfg.regimes:
                p = ctx.presentation(key, ell, regime)
                m = ringmaps.strata_count(key, ell, regime)
                gf = hilbert.series_quotient_principal(ring_series, p.relation_degree)
                ok_dec, first = hilbert.decomposition_check(gf, hilbert.blowup_decomposition(m), N_series)
                brute = quotient_dims_bruteforce(p, N_brute)
                exp = list(hilbert.expand(gf, N_brute))
                ok = ok_dec and brute == exp and p.relation_degree == 2 * (m + 1) and p.factors_pairwise_distinct()
                wit = {"case": case, "ell": ell, "regime": regime, "m": m,
                       "relation_degree": p.relation_degree, "series": str(gf),
                       "prefix": exp[:13], "decomposition_first_mismatch": first}
                if brute != exp:
                    wit["bruteforce_first_mismatch"] = next(n for n, (u, v) in enumerate(zip(brute, exp)) if u != v)
                yield CheckReport("blowup-series", ref, _status(ok), wit,
                                  f"{case} ℓ={ell} {regime} m={m} series {gf}")


def check_gysin_series(ctx: Context) -> Iterator[CheckReport]:
    ref = "quotient of the torus cohomology by the Euler class"
    N = 24
    for n in range(1, 2 * ctx.cfg.ell_range[1] + 1):
        table = ctx.catalog.get("weight_tables", n)
        char = charindex.character_negative_part(charindex.atiyah_bott_index(table), n)
        e = charindex.euler_class_from_character(char)
        r = e.ring
        p = ringmaps.RingPresentation(r, e, f"gysin[{n}]")
        gf = hilbert.series_quotient_principal(hilbert.series_free_gca((2, 2)), 2 * n)
        exp = list(hilbert.expand(gf, N))
        brute = quotient_dims_bruteforce(p, N)
        ok = brute == exp and e.degree() == 2 * n
        yield CheckReport("gysin-series", ref, _status(ok),
                          {"n": n, "euler_class": str(e), "series": str(gf), "prefix": exp[:13]},
                          f"n={n} series {gf}")


def check_split_blowdown(ctx: Context) -> Iterator[CheckReport]:
    ref = "the split blow-down map respects the relations"
    if "split" not in ctx.cfg.cases:
        return
    for ell in ctx.cfg.ells:
        for regime in ctx.cfg.regimes:
            src = ctx.presentation("split_base", ell)
            tgt = ctx.presentation("split_blowup", ell, regime)
            m = ringmaps.GradedRingMap(src, tgt, ringmaps.split_blowdown_images(tgt.ring),
                                       ctx.catalog.get("split_blowdown", ell, regime).label)
            wit = {"ell": ell, "regime": regime}
            try:
                cert = ringmaps.well_defined_check(m)
            except ringmaps.NotWellDefined as exc:
                wit["remainder"] = str(exc.remainder)
                yield CheckReport("split-blowdown", ref, "fail", wit, f"ℓ={ell} {regime} not divisible")
                continue
            if regime == "crit":
                want = ringmaps.expected_kernel(2 * ell)
                last_kernel = ringmaps.kernel_degree2(ctx.catalog.get("torus_maps", 2 * ell))
                ok = cert == want and last_kernel == [want]
            else:
                want = tgt.ring.one()
                ok = cert == want
            wit.update(certificate=str(cert), expected=str(want))
            yield CheckReport("split-blowdown", ref, _status(ok), wit, f"ℓ={ell} {regime} certificate {cert}")


def check_twisted_blowdown(ctx: Context) -> Iterator[CheckReport]:
    ref = "the twisted blow-down map sends the relation to a multiple of the relation"
    if "twisted" not in ctx.cfg.cases:
        return
    lo, hi = ctx.cfg.ell_range
    for ell in range(lo - 1, hi + 1):
        for regime in ctx.cfg.regimes:
            src = ctx.presentation("twisted_base", ell)
            tgt = ctx.presentation("twisted_blowup", ell, regime)
            m = ringmaps.GradedRingMap(src, tgt, ringmaps.twisted_blowdown_images(tgt.ring),
                                       ctx.catalog.get("twisted_blowdown", ell, regime).label)
            wit = {"ell": ell, "regime": regime}
            try:
                cert = ringmaps.well_defined_check(m)
            except ringmaps.NotWellDefined as exc:
                wit["remainder"] = str(exc.remainder)
                yield CheckReport("twisted-blowdown", ref, "fail", wit, f"ℓ={ell} {regime} not divisible")
                continue
            scalar = Fraction(-1, 2) ** (ell + 1)
            r = tgt.ring
            if regime == "crit":
                factor = ringmaps.expected_kernel(2 * ell + 1)
                want = factor.scale(scalar)
            else:
                want = r.const(scalar)
            ok = cert == want
            wit.update(certificate=str(cert), scalar=str(scalar), expected=str(want))
            yield CheckReport("twisted-blowdown", ref, _status(ok), wit,
                              f"ℓ={ell} {regime} scalar {scalar} certificate {cert}")


def check_torus_relations(ctx: Context) -> Iterator[CheckReport]:
    ref = "circle identifications, recursion closed forms and kernels of the torus maps"
    k_max = max(4, ctx.cfg.ell_range[1] + 1)
    ctx.catalog.get("torus_maps", 0)
    rep = ringmaps.torus_relation_suite(k_max)
    fails = rep.failures
    wit = {"k_max": k_max, "items": len(rep.items),
           "first_failure": None if not fails else {"name": fails[0].name, "params": fails[0].params,
                                                   "lhs": fails[0].lhs, "rhs": fails[0].rhs}}
    yield CheckReport("torus-relations", ref, _status(rep.ok), wit, f"k≤{k_max} {len(rep.items)} identities")


def check_kernel_intersection(ctx: Context) -> Iterator[CheckReport]:
    ref = "the kernels of the even torus maps have trivial intersection"
    k_max = max(4, ctx.cfg.ell_range[1])
    rank = ringmaps.stacked_kernel_rank(k_max)
    yield CheckReport("kernel-intersection", ref, _status(rank == 3), {"k_max": k_max, "rank": rank},
                      f"k≤{k_max} stacked rank {rank}")


def check_commuting_squares(ctx: Context) -> Iterator[CheckReport]:
    ref = "blow-down images agree with the maximal-torus restrictions"
    k_max = max(4, ctx.cfg.ell_range[1] + 1)
    for case in ctx.cfg.cases:
        rep = ringmaps.commuting_square_check(case, k_max)
        fails = rep.failures
        wit = {"parity": case, "k_max": k_max, "items": len(rep.items),
               "first_failure": None if not fails else {"params": fails[0].params,
                                                       "lhs": fails[0].lhs, "rhs": fails[0].rhs}}
        yield CheckReport("commuting-squares", ref, _status(rep.ok), wit, f"{case} k≤{k_max}")


def check_localization(ctx: Context) -> Iterator[CheckReport]:
    ref = "fixed-point index, isotropy character and Euler class"
    n_max = max(8, 2 * ctx.cfg.ell_range[1] + 2)
    for n in range(1, n_max + 1):
        t = ctx.catalog.get("weight_tables", n)
        wit = {"n": n, "k": t.k}
        try:
            index = charindex.atiyah_bott_index(t)
        except charindex.NonPolynomialSum as exc:
            wit["error"] = str(exc)
            yield CheckReport("localization", ref, "fail", wit, f"n={n} index is not a Laurent polynomial")
            continue
        closed = charindex.even_index_closed_form(t.k) if n % 2 == 0 else charindex.odd_index_closed_form(t.k)
        char = -index.negative_part()
        count_ok = sum(char.terms.values()) == n and all(c == 1 for c in char.terms.values())
        euler = charindex.euler_class_from_character(char)
        stated = charindex.stated_euler_class(n)
        if n % 2 == 0:
            char_ok = char == charindex.stated_character(n)
            euler_ok = charindex.equal_up_to_sign(euler, stated)
        else:
            char_ok = (char == charindex.ratio_character(n) and
                       charindex.stated_character(n).change_monomials(*charindex.ODD_MONOMIAL_CHANGE) == char)
            euler_ok = charindex.equal_up_to_sign(euler, charindex.odd_linear_change(stated))
        ok = index == closed and count_ok and char_ok and euler_ok
        wit.update(index=str(index), character=str(char), euler_class=str(euler),
                   closed_form=index == closed, character_matches=char_ok, euler_matches=euler_ok)
        yield CheckReport("localization", ref, _status(ok), wit, f"n={n} character {char}")


def check_fibration_series(ctx: Context) -> Iterator[CheckReport]:
    ref = "Betti series equals the base times fiber product series"
    for case in ctx.cfg.cases:
        i = _i_of(case)
        for ell in ctx.cfg.ells:
            N = max(24, ctx.model_degree(ell, i))
            betti = ctx.model_table("image_emb_model", ell, i, 1, N)[1].betti()
            prod = ctx.catalog.get("fibration_fiber_series", ell, i)
            want = list(hilbert.expand(prod, N))
            first = next((n for n, (u, v) in enumerate(zip(betti, want)) if u != v), None)
            d = 4 * ell + 2 * i
            defect = hilbert.RationalGF(hilbert.poly_mul(hilbert.one_plus_t(2),
                                                         hilbert.poly_add(hilbert.monomial_t(d), hilbert.monomial_t(d + 1))),
                                        hilbert.one_minus_t(d))
            diff_ok = [u - v for u, v in zip(want, betti)] == list(hilbert.expand(defect, N))
            wit = {"ell": ell, "i": i, "max_degree": N, "betti": betti, "product": want,
                   "first_mismatch": first, "difference_series": str(defect), "difference_matches": diff_ok}
            detail = f"{case} ℓ={ell} N={N}"
            if first is not None:
                detail += f" first mismatch at degree {first}: betti {betti[first]} vs product {want[first]}"
            yield CheckReport("fibration-series", ref, _status(first is None), wit, detail)
            yield CheckReport("fibration-defect", "product series minus Betti series",
                              _status(diff_ok), {"ell": ell, "i": i, "series": str(defect)},
                              f"{case} ℓ={ell} difference {defect}")


def word_counts(weights: tuple[int, ...], forbidden_last: tuple[int, ...], N: int) -> list[int]:
    """Number of words of each total weight whose last letter is not forbidden."""
    allw = [0] * (N + 1)
    allw[0] = 1
    for n in range(1, N + 1):
        allw[n] = sum(allw[n - w] for w in weights if w <= n)
    good = [0] * (N + 1)
    good[0] = 1
    for n in range(1, N + 1):
        good[n] = sum(allw[n - w] for w in weights if w <= n and w not in forbidden_last)
    return good


def check_tensor_words(ctx: Context) -> Iterator[CheckReport]:
    ref = "tensor-algebra quotient series against word counts"
    N = 16
    gf = hilbert.series_special("tensor_quotient", (2, 3, 4), (2,))
    ctx.catalog.get("mod2_series")
    series = list(hilbert.expand(gf, N))
    words = word_counts((2, 3, 4), (2,), N)
    yield CheckReport("tensor-quotient-words", ref, _status(series == words),
                      {"series": str(gf), "coefficients": series, "words": words}, f"N={N} series {gf}")


def check_mod2_dominance(ctx: Context) -> Iterator[CheckReport]:
    ref = "mod 2 dimensions bound the rational Betti numbers"
    N = 16
    z2 = list(hilbert.expand(ctx.catalog.get("mod2_series"), N))
    betti = ctx.model_table("image_emb_model", 1, 0, 1, N)[1].betti()
    ok = all(a >= b for a, b in zip(z2, betti))
    yield CheckReport("mod2-dominance", ref, _status(ok), {"mod2": z2, "betti": betti}, f"N={N}")


def check_divided_power(ctx: Context) -> Iterator[CheckReport]:
    ref = "divided polynomial algebra and the loop space of the odd sphere"
    N = 40
    for ell in ctx.cfg.ells:
        a = list(hilbert.expand(ctx.catalog.get("divided_power_series", ell), N))
        b = list(hilbert.expand(hilbert.series_special("loop_odd_sphere", 4 * ell + 1), N))
        yield CheckReport("divided-power", ref, _status(a == b), {"ell": ell, "prefix": a[:13]}, f"ℓ={ell}")


CHECKS: dict[str, Callable[[Context], Iterator[CheckReport]]] = {
    "koszul-tor": check_koszul_tor,
    "koszul-order": check_koszul_order,
    "koszul-euler": check_koszul_euler,
    "model-cohomology": check_model_cohomology,
    "model-relations": check_model_relations,
    "model-q-invariance": check_model_q_invariance,
    "emb-cohomology": check_emb_cohomology,
    "symp-models": check_symp_models,
    "blowup-series": check_blowup_series,
    "gysin-series": check_gysin_series,
    "split-blowdown": check_split_blowdown,
    "twisted-blowdown": check_twisted_blowdown,
    "torus-relations": check_torus_relations,
    "kernel-intersection": check_kernel_intersection,
    "commuting-squares": check_commuting_squares,
    "localization": check_localization,
    "fibration-series": check_fibration_series,
    "tensor-quotient-words": check_tensor_words,
    "mod2-dominance": check_mod2_dominance,
    "divided-power": check_divided_power,
}


def run_suite(cfg: SuiteConfig) -> list[CheckReport]:
    cfg.validate()
    ctx = Context(cfg)
    out: list[CheckReport] = []
    selected = cfg.selected()
    for name in selected:
        ctx._tables.clear()  # keep checks independent of each other
        start = time.perf_counter()
        reports = list(CHECKS[name](ctx))
        elapsed = int((time.perf_counter() - start) * 1000)
        for r in reports:
            r.elapsed_ms = elapsed // max(len(reports), 1) if cfg.timings else 0
        out += reports
    if cfg.checks == "all" and selected:
        unused = ctx.catalog.unused()
        out.append(CheckReport("catalog-coverage", "every catalog entry is exercised",
                               _status(not unused), {"entries": len(ctx.catalog.names()), "unused": unused},
                               f"{len(ctx.catalog.names()) - len(unused)}/{len(ctx.catalog.names())} entries used"))
    return out


def exit_status(reports: list[CheckReport]) -> int:
    return 1 if any(r.status == "fail" for r in reports) else 0
