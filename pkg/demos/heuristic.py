"""How likely is a Hecke polynomial to factor?  Count monic quadratics with
roots in [-2w, 2w], compare with the volume, then evaluate the split
probabilities at a few weights.

    python3 demos/heuristic.py
"""

from ratnewforms.heuristic import count_quadratics, pr_of_weight, prob_split, prob_split_printed, volume

w = 2**2.5
total, split = count_quadratics(w)
print(f"w = 2^(5/2): {total} quadratics ({volume(2, w):.1f} by area), {split} split")
print(f"split fraction {split / total:.4f}, model 3/(4w) = {prob_split(1, 1, w):.4f}")

print()
for m in (7, 11, 15):
    w = 2 ** (m / 2)
    total, split = count_quadratics(w)
    print(f"w = 2^({m}/2): count / area = {total / volume(2, w):.4f}")

print()
for k in (6, 16, 22):
    print(f"Pr_1,1({k}) = {100 * pr_of_weight(1, 1, k):.3f}%")
print(f"Pr_1,2(6)  = {100 * pr_of_weight(1, 2, 6):.2f}%")
print(f"Pr_1,12(10) = {pr_of_weight(1, 12, 10):.2e}")
print(f"Pr_1,83(4)  = {pr_of_weight(1, 83, 4):.2e}")

print()
print("the exponent j - 1 throughout is only right for r = s = 1:")
for r, s in ((1, 1), (1, 2), (2, 2)):
    print(f"  r={r} s={s}: ratio {prob_split(r, s, 8.0):.4e}   j-1 form {prob_split_printed(r, s, 8.0):.4e}")
