"""Number-theoretic helpers: primes, quadratic characters, fundamental
discriminants, twist multiplicities, and factor-degree patterns of integer
polynomials reduced modulo a prime.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterable, Optional, Sequence

Partition = tuple  # parts sorted in descending order, e.g. (2, 2, 1, 1)


# ---------------------------------------------------------------------------
# primes and factorization
# ---------------------------------------------------------------------------

def primes_upto(n: int) -> list[int]:
    """All primes p <= n (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division, as {p: e}."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def ord_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("ord_p(0) is infinite")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(n).values())


# ---------------------------------------------------------------------------
# quadratic characters and discriminants
# ---------------------------------------------------------------------------

def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for arbitrary integers D, n.

    Uses the usual extension of the Jacobi symbol: (D/2) depends on D mod 8,
    (D/-1) on the sign of D, and (D/0) is 1 exactly when D = +-1.

    >>> kronecker(-3, 7), kronecker(-3, 5), kronecker(-4, 7)
    (1, -1, -1)
    """
    if n == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 and D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/n) for odd n > 0
    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_fundamental(D: int) -> bool:
    """True when D = t*d with d squarefree, d = 1 mod 4, t in {1, -4, 8, -8}."""
    if D == 0:
        return False
    for t in (1, -4, 8, -8):
        if D % t == 0:
            d = D // t
            if d % 4 == 1 and is_squarefree(d):
                return True
    return False


def fundamental_discriminants(X: int) -> list[int]:
    """All fundamental discriminants with |D| <= X, in increasing order."""
    return [D for D in range(-X, X + 1) if is_fundamental(D)]


def t_multiplicity(N: int) -> int:
    """Number t(N) of minimal twists of a minimal form of level N.

    Multiplicative, with t(2^e) = 1, 2, 4 for e <= 3, e in {4, 5}, e >= 6 and
    t(p^e) = 1, 2 for e <= 1, e >= 2 at odd p.
    """
    if N < 1:
        raise ValueError("N must be positive")
    t = 1
    for p, e in factorint(N).items() if N > 1 else ():
        if p == 2:
            t *= 1 if e <= 3 else 2 if e <= 5 else 4
        else:
            t *= 1 if e <= 1 else 2
    return t


def is_quadfree(N: int) -> bool:
    """ord_2(N) <= 3 and the odd part of N is squarefree."""
    if N < 1:
        raise ValueError("N must be positive")
    e = ord_p(N, 2)
    odd = N >> e
    return e <= 3 and (odd == 1 or is_squarefree(odd))


# ---------------------------------------------------------------------------
# polynomials over F_p (coefficient lists low-to-high, trimmed)
# ---------------------------------------------------------------------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: Sequence[int], p: int) -> list[int]:
    return _trim([c % p for c in f])


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return _trim(q), a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_divmod(_trim(prod), m, p)[1]


def _poly_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_divmod(base, m, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def factor_degrees_mod_p(f: Sequence[int], p: int) -> Optional[Partition]:
    """Degrees of the irreducible factors of f modulo p.

    ``f`` holds integer coefficients from low to high degree.  Returns the
    partition of deg f as a descending tuple, or ``None`` when f mod p is not
    squarefree (gcd(f, f') nonconstant), in which case no partition is read
    off.  Raises ValueError if p divides the leading coefficient.
    """
    f = list(f)
    _trim(f)
    if not f:
        raise ValueError("zero polynomial")
    if f[-1] % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    g = _pmod(f, p)
    n = len(g) - 1
    if n == 0:
        return ()
    deriv = _trim([(i * c) % p for i, c in enumerate(g)][1:])
    if len(_poly_gcd(g, deriv, p)) > 1:
        return None
    inv = pow(g[-1], -1, p)
    g = [c * inv % p for c in g]
    parts: list[int] = []
    x = [0, 1]
    h = x[:]  # x^(p^d) mod g
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _poly_powmod(h, p, g, p)
        common = _poly_gcd(g, _poly_sub(h, x, p), p)
        deg = len(common) - 1
        if deg > 0:
            parts.extend([d] * (deg // d))
            g = _poly_divmod(g, common, p)[0]
            h = _poly_divmod(h, g, p)[1] if len(g) > 1 else []
    if len(g) > 1:
        parts.append(len(g) - 1)
    return tuple(sorted(parts, reverse=True))


def partition_str(parts: Iterable[int]) -> str:
    """Compact notation, e.g. (2, 2, 2, 1, 1) -> '22211'."""
    return "".join(str(x) for x in parts)
