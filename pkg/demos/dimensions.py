"""Signed new-subspace dimensions against the mass line m (k - 1)/12, and
where the rational newforms sit among them.

    python3 demos/dimensions.py
"""

from fractions import Fraction

from ratnewforms.catalog import load_catalog
from ratnewforms.dims import dim_new_signed_exact, format_signs, mass, sign_strings

for N in (2, 3, 6, 8):
    for eps in sign_strings(N):
        m = mass(N, eps)
        row = [dim_new_signed_exact(N, k, eps) for k in range(2, 51, 2)]
        drift = max(abs(d - m * Fraction(k - 1, 12)) for k, d in zip(range(2, 51, 2), row))
        print(f"N={N} eps={format_signs(eps):<2} m={str(m):<4} dims {row[:12]}...  max drift {float(drift):.2f}")

print()
cat = load_catalog()
for row in cat.table2:
    cells = ", ".join(f"k={k}:{n}" for k, n in sorted(row.rational.items()))
    print(f"N={row.N} {row.eps or '.':<2} rational newforms at {cells}")
