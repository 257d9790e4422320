"""Slow, independent reference computations used to freeze expected values.

Nothing here imports the package's series arithmetic: products are done with
sympy polynomials truncated by hand, divisor sums and symbols come from sympy.
"""

from itertools import product

import sympy
try:
    from sympy.functions.combinatorial.numbers import divisor_sigma, jacobi_symbol
except ImportError:  # older sympy
    from sympy.ntheory import divisor_sigma, jacobi_symbol

q = sympy.Symbol("q")


def series_product(factors, prec):
    """Coefficient list of a product of sympy polynomials in q, mod q^prec."""
    acc = sympy.Poly(1, q)
    for f in factors:
        acc = sympy.Poly(sympy.rem((acc * sympy.Poly(f, q)).as_expr(), q**prec), q)
    return [int(acc.coeff_monomial(q**n)) for n in range(prec)]


def eta_oracle(exps, prec):
    """prod_t eta(q^t)^e_t with integer leading exponent, brute force."""
    lead = sum(t * e for t, e in exps.items())
    assert lead % 24 == 0
    v = lead // 24
    inner = prec - v
    factors = []
    for t, e in exps.items():
        base = 1
        for n in range(1, inner // t + 1):
            base *= (1 - q ** (t * n))
        factors.extend([base] * e if e > 0 else [])
        if e < 0:
            raise NotImplementedError
    body = series_product(factors, inner)
    return [0] * v + body


def sigma(j, n):
    return int(divisor_sigma(n, j))


def kronecker_oracle(D, n):
    """Kronecker symbol (D/n) for n >= 1 from Jacobi symbols and the 2-rule."""
    if n == 1:
        return 1
    out = 1
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        out *= 1 if D % 8 in (1, 7) else -1
    if n == 1:
        return out
    if sympy.gcd(D, n) != 1:
        return 0
    return out * int(jacobi_symbol(D % n, n))


def fundamental_oracle(D):
    """Field discriminant test via sympy: D is the discriminant of Q(sqrt D)."""
    if D == 1:
        return True
    if D == 0 or sympy.sqrt(abs(D)).is_integer and D > 0:
        return False
    m = 1 if D > 0 else -1
    for p, e in sympy.factorint(abs(D)).items():
        if e % 2:
            m *= p
    disc = m if m % 4 == 1 else 4 * m
    return disc == D


def t_oracle(N):
    """Number of fundamental D with D^2 | N."""
    out = 0
    for D in range(-N, N + 1):
        if D and N % (D * D) == 0 and fundamental_oracle(D):
            out += 1
    return out


def factor_pattern_oracle(coeffs, p):
    """Degrees of the irreducible factors of f mod p, or None if not squarefree."""
    x = sympy.Symbol("x")
    f = sympy.Poly(list(reversed(coeffs)), x, modulus=p)
    _, facs = f.factor_list()
    if any(e > 1 for _, e in facs):
        return None
    return tuple(sorted((g.degree() for g, _ in facs), reverse=True))


def lattice_points_oracle(w):
    """Brute-force count of monic quadratics with both roots real in [-2w, 2w]."""
    import math

    total = split = 0
    B = int(4 * w) + 1
    for b, c in product(range(-B, B + 1), range(-4 * B * B, B * B + 1)):
        disc = b * b - 4 * c
        if disc < 0:
            continue
        r = math.sqrt(disc)
        lo, hi = (-b - r) / 2, (-b + r) / 2
        if lo >= -2 * w - 1e-12 and hi <= 2 * w + 1e-12:
            total += 1
            split += math.isqrt(disc) ** 2 == disc
    return total, split
