"""Walk through q-expansions: Eisenstein series, eta products, and the
level 3 pair of weight 22 newforms with their mod 4572 congruence.

    python3 demos/expansions.py
"""

from ratnewforms import expr as E
from ratnewforms.cli import pretty
from ratnewforms.galrep import congruent_series, sturm_bound
from ratnewforms.qseries import eisenstein, eta_product, multiplicative_extend
from ratnewforms.arith import primes_upto
from ratnewforms.rings import forms_by_label, newform_expansion, verify_identity

P = 200

Q, R = eisenstein("Q", P), eisenstein("R", P)
delta = (Q**3 - R**2) * E.constant_value(["frac", 1, 1728])
print("Delta from Eisenstein series:", pretty(delta.truncate(7)))
print("and from eta^24           :", pretty(eta_product({1: 24}, 7)))
assert delta == eta_product({1: 24}, P)

# Euler product: the whole series is pinned down by a_p
ap = {p: int(delta[p]) for p in primes_upto(P - 1)}
rebuilt = multiplicative_extend(ap, [], 12, P)
print("a_6 rebuilt from a_2, a_3:", rebuilt[6])

print()
for label in ("Delta_8_2_plus", "Delta_6_3_minus", "Delta_5_4"):
    r = verify_identity(label, P)
    print(f"identity {label:<18} holds to q^{P}: {r.passed}")

print()
forms = forms_by_label()
a, b = newform_expansion("Delta_22_3_plus_a", P), newform_expansion("Delta_22_3_plus_b", P)
print("Delta_22_3^+ a:", pretty(a.truncate(5)))
print("Delta_22_3^+ b:", pretty(b.truncate(5)))
print("stored as     :", E.to_text(forms["Delta_22_3_plus_a"].expression))
bound = max(sturm_bound(22, 3), 11)
print(f"a = b mod 4572 through q^{bound}:", congruent_series(a, b, 4572, bound))
print("a_2 - b_2 =", a[2] - b[2], "=", (a[2] - b[2]) / 4572, "* 4572")
