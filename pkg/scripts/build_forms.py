"""Regenerate src/ratnewforms/data/forms.json by exact Hecke eigenvector search.

Each boldface cell of table2.json names how many rational newforms live in
S^new_k(N)^eps.  The search diagonalizes T_p on the signed ring-model basis,
keeps rational eigenvectors that pass the newform tests, and stores each as
a polynomial in the level's generators times its cusp generator.

    python3 scripts/build_forms.py            # write forms.json
    python3 scripts/build_forms.py --check    # also confirm empty gray cells
"""

import argparse
import sys
import time

from ratnewforms import catalog
from ratnewforms.dims import parse_signs
from ratnewforms.rings import found_expression, make_label, rational_newforms


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="search non-bold cells too")
    ap.add_argument("--out", default=str(catalog.data_path("forms.json")))
    args = ap.parse_args(argv)

    t2 = catalog.load_document("table2.json")["rows"]
    rows = []
    t0 = time.time()
    for r in sorted(t2, key=lambda r: (r["N"], [-s for s in parse_signs(r["eps"])])):
        signs = parse_signs(r["eps"])
        weights = sorted(int(k) for k in r["dims"]) if args.check else sorted(int(k) for k in r["rational"])
        for k in weights:
            want = r["rational"].get(str(k), 0)
            found = rational_newforms(r["N"], k, signs)
            if len(found) != want:
                print(f"N={r['N']} k={k} eps={r['eps']}: found {len(found)}, table says {want}")
                return 1
            for i, f in enumerate(found):
                suffix = "ab"[i] if len(found) > 1 else ""
                rows.append(
                    {
                        "N": r["N"],
                        "k": k,
                        "signs": list(signs),
                        "label": make_label(k, r["N"], signs, suffix),
                        "expression": found_expression(f),
                    }
                )
    rows.sort(key=lambda x: (x["N"], x["k"], [-s for s in x["signs"]], x["label"]))
    doc = {
        "schema": "forms/v1: rows of {N, k, signs, label, expression}; expression is a nested-array polynomial over generator names (see ratnewforms.expr)",
        "rows": rows,
    }
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(catalog.dumps_document(doc))
    print(f"{len(rows)} newforms written to {args.out} in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
