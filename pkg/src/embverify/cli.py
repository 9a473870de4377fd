"""Command-line entry point: ``verify``."""
from __future__ import annotations

import argparse
import json
import sys

from .cdga import CdgaSpec, GcaSignature, cohomology
from .linalg import QQ, FieldSpec
from .parser import ParseError, parse_expression
from .report import emit_report
from .suite import CHECKS, SuiteConfig, exit_status, run_suite


def parse_ell(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    return a, b


def parse_checks(text: str) -> tuple[str, ...] | str:
    if text == "all":
        return "all"
    return tuple(c.strip() for c in text.split(",") if c.strip())


def load_descriptor(path: str, field: FieldSpec = QQ) -> tuple[CdgaSpec, int]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ValueError("descriptor needs a non-empty generator list")
    pairs = []
    for g in gens:
        deg = g.get("degree")
        if not isinstance(deg, int) or isinstance(deg, bool) or deg <= 0:
            raise ValueError(f"generator {g.get('name')!r} needs a positive integer degree")
        pairs.append((str(g["name"]), deg))
    sig = GcaSignature.make(pairs, field)
    params = {k: str(v) for k, v in doc.get("parameters", {}).items()}
    images = {k: parse_expression(v, sig, params) for k, v in doc.get("differential", {}).items()}
    N = doc.get("max_degree", 24)
    if not isinstance(N, int) or N < 0:
        raise ValueError("max_degree must be a non-negative integer")
    return CdgaSpec(sig, images, params, path), N


def betti_table(spec: CdgaSpec, N: int) -> str:
    table = cohomology(spec, N)
    lines = ["degree  cochains  betti"]
    for d in table.degrees:
        lines.append(f"{d.degree:>6}  {d.cochain_dim:>8}  {d.betti:>5}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Exact verification of cohomology computations.")
    p.add_argument("--case", choices=("split", "twisted", "both"), default="both")
    p.add_argument("--ell", type=parse_ell, default=(1, 3), metavar="A..B")
    p.add_argument("--regime", choices=("crit", "subcrit", "both"), default="both")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--field", action="append", default=None, metavar="q|fp:P",
                   help="coefficient field; repeatable (default: q and fp:3)")
    p.add_argument("--checks", type=parse_checks, default="all",
                   help="comma-separated check ids or 'all': " + ", ".join(CHECKS))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--descriptor", default=None, metavar="FILE",
                   help="print the Betti table of a CDGA given as JSON instead of running the suite")
    p.add_argument("--timings", action="store_true", help="record elapsed milliseconds")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        fields = tuple(FieldSpec.parse(f) for f in args.field) if args.field else (QQ, FieldSpec(3))
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    if args.descriptor:
        try:
            spec, N = load_descriptor(args.descriptor, fields[0])
        except (OSError, ValueError, KeyError, ParseError) as exc:
            print(f"verify: {exc}", file=sys.stderr)
            return 2
        if args.max_degree is not None:
            N = args.max_degree
        out = betti_table(spec, N)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        return 0
    cfg = SuiteConfig(case=args.case, ell_range=args.ell, regime=args.regime, max_degree=args.max_degree,
                      fields=fields, checks=args.checks, timings=args.timings)
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    reports = run_suite(cfg)
    emit_report(reports, args.format, args.out, cfg)
    return exit_status(reports)


if __name__ == "__main__":
    sys.exit(main())
