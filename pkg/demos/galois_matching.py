"""Match newforms to the polynomials cutting out their projective mod-ell
Galois representations, and watch the level 8 weight 8 twist pair pick
different polynomials at p = 3.

    python3 demos/galois_matching.py
"""

from ratnewforms.galrep import (
    CORRESPONDENCE,
    classify_degenerate,
    governance,
    match_form_to_poly,
    polys_by_label,
    sp_reduce,
)
from ratnewforms.rings import forms_by_label, newform_expansion

forms, polys = forms_by_label(), polys_by_label()

for label in ("Delta_8_8_plus", "Delta_8_8_minus"):
    a3 = int(newform_expansion(label, 4)[3])
    print(f"{label}: a_3 = {a3}, s_3 = {sp_reduce(a3, 3, 8, 7)} in F_7")

for label in ("F_8c", "F_8d"):
    lam = polys[label].field_lambda_p(3)
    print(f"{label}: factor degrees mod 3 = {lam}")
print("allowed for s = 6:", sorted(CORRESPONDENCE[7][6]), " s = 0:", sorted(CORRESPONDENCE[7][0]))

for f in ("Delta_8_8_plus", "Delta_8_8_minus"):
    for p in ("F_8c", "F_8d"):
        v = match_form_to_poly(forms[f], polys[p])
        note = "consistent" if v.consistent else f"conflict at p={v.failed_at}"
        print(f"  {f:<16} vs {p}: {note}")

print()
print("Forms matching no polynomial are reducible mod ell:")
for label in ("Delta_14_2_minus", "Delta_10_2_minus"):
    i, j = classify_degenerate(forms[label], 7)
    print(f"  {label}: a_p = p^{i} + p^{j} mod 7")

print()
for ell in (3, 5, 7):
    g = governance(ell)
    counts = ", ".join(f"{k}:{len(v)}" for k, v in g.governed.items())
    print(f"ell={ell}: {counts}; degenerate {len(g.degenerate)}; unresolved {g.unresolved}")
