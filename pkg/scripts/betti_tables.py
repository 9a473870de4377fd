"""Print Betti numbers of the catalog models for a range of ℓ, i and q."""
from __future__ import annotations

import argparse

from embverify.catalog import Catalog
from embverify.cdga import cohomology


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", choices=("image_emb_model", "emb_model"), default="image_emb_model")
    ap.add_argument("--ell", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--i", type=int, nargs="+", default=[0, 1])
    ap.add_argument("--q", type=int, nargs="+", default=[1, 3])
    ap.add_argument("--max-degree", type=int, default=None)
    args = ap.parse_args()
    cat = Catalog()
    for ell in args.ell:
        for i in args.i:
            N = args.max_degree or 4 * (4 * ell + 2 * i)
            for q in args.q:
                betti = cohomology(cat.get(args.model, ell, i, q), N).betti()
                print(f"{args.model} ℓ={ell} i={i} q={q}: " + " ".join(map(str, betti)))


if __name__ == "__main__":
    main()
