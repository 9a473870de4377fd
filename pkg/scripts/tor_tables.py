"""Print Tor ranks of the Koszul complex by total and external degree."""
from __future__ import annotations

import argparse

from embverify import koszul
from embverify.linalg import FieldSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ell", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--field", default="q", help="q or fp:P")
    args = ap.parse_args()
    f = FieldSpec.parse(args.field)
    for ell in args.ell:
        k = koszul.build_koszul(ell, f)
        print(f"ℓ={ell} over {f}")
        for t in range(k.valid_below):
            ranks = koszul.tor_ranks(k, t)
            cells = ", ".join(f"p={p}: {r}" for p, r in sorted(ranks.items(), reverse=True)) or "-"
            print(f"  total {t:>2}: {cells}")


if __name__ == "__main__":
    main()
