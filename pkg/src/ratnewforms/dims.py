"""Dimension formulas, local masses, and exact signed new-space dimensions
for the levels with explicit ring models (N in {1, 2, 3, 4, 6, 8}).

Sign strings are tuples of +1/-1 indexed by the prime powers exactly dividing
N in increasing order of the prime (for N = 6: (eps_2, eps_3)).  The helpers
:func:`parse_signs` and :func:`format_signs` convert to and from ``"+-"``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence, Union

from .arith import factorint

SUPPORTED_LEVELS = (1, 2, 3, 4, 6, 8)

Signs = tuple  # of +1 / -1

_DELTA = {2: 13, 4: 3, 6: 5, 8: 7, 10: 9, 0: -1}  # keyed by k mod 12


def parse_signs(eps: Union[str, Sequence[int]]) -> Signs:
    if isinstance(eps, str):
        out = []
        for ch in eps:
            if ch == "+":
                out.append(1)
            elif ch == "-":
                out.append(-1)
            else:
                raise ValueError(f"bad sign character {ch!r}")
        return tuple(out)
    return tuple(int(e) for e in eps)


def format_signs(eps: Sequence[int]) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


def prime_powers(N: int) -> list[tuple[int, int]]:
    """[(p, e)] for p^e || N, sorted by p."""
    return sorted(factorint(N).items()) if N > 1 else []


def sign_strings(N: int) -> list[Signs]:
    return list(product((1, -1), repeat=len(prime_powers(N))))


def dim_cusp_level1(k: int) -> int:
    """dim S_k(1) = (k - 1 - delta_k)/12, clamped at 0 for k = 2."""
    if k % 2 or k < 0:
        raise ValueError("weight must be even and non-negative")
    if k == 0:
        return 0
    return max(0, (k - 1 - _DELTA[k % 12]) // 12)


def dim_full_approx(k: int, N: int) -> Fraction:
    """Leading term (k-1)/12 * prod p^(e-1)(p+1) of dim S_k(N)."""
    out = Fraction(k - 1, 12)
    for p, e in prime_powers(N):
        out *= p ** (e - 1) * (p + 1)
    return out


def local_mass(p: int, e: int, sign: int = 0) -> Fraction:
    """m(p, e) for sign 0, otherwise the signed local mass m^(+-)(p, e)."""
    if e < 1:
        raise ValueError("exponent must be positive")
    if e == 1:
        full = Fraction(p - 1)
    elif e == 2:
        full = Fraction(p * p - p - 1)
    else:
        full = Fraction((p - 1) ** 2 * (p + 1) * p ** (e - 3))
    if sign == 0:
        return full
    if e == 2:
        return Fraction(p * p - p - 1 - sign, 2)
    return full / 2


def dim_new_approx(k: int, N: int) -> Fraction:
    out = Fraction(k - 1, 12)
    for p, e in prime_powers(N):
        out *= local_mass(p, e)
    return out


def mass(N: int, eps: Union[str, Sequence[int]]) -> Fraction:
    """prod over p^e || N of m^(eps_q)(p, e)."""
    eps = parse_signs(eps)
    pp = prime_powers(N)
    if len(eps) != len(pp):
        raise ValueError(f"level {N} needs {len(pp)} signs, got {len(eps)}")
    out = Fraction(1)
    for (p, e), s in zip(pp, eps):
        out *= local_mass(p, e, s)
    return out


# ---------------------------------------------------------------------------
# exact signed new dimensions via the ring models
# ---------------------------------------------------------------------------

def _count_level1(k: int) -> int:
    """#{(a, b) : 4a + 6b = k} = dim M_k(1)."""
    if k < 0 or k % 2:
        return 0
    return sum(1 for b in range(k // 6 + 1) if (k - 6 * b) % 4 == 0)


def _count_level2(k: int, sign: int) -> int:
    # A^a B^b, weights 2 and 4, both odd under w_2
    if k < 0 or k % 2:
        return 0
    return sum(
        1 for b in range(k // 4 + 1) if (-1) ** ((k - 4 * b) // 2 + b) == sign
    )


def _count_level3(k: int, sign: int) -> int:
    # Theta^a Phi^b, weights 1 and 3, w_3 multiplies each by i
    if k < 0 or k % 2:
        return 0
    n = 0
    for b in range(k // 3 + 1):
        a = k - 3 * b
        if (a + b) % 2 == 0 and (-1) ** ((a + b) // 2) == sign:
            n += 1
    return n


def _count_level6(k: int, eps: Signs) -> int:
    # s^a p^b d^c with c in {0, 1}; s: (+,-), p: (-,+), d: (-,-)
    if k < 0 or k % 2:
        return 0
    deg = k // 2
    n = 0
    for c in (0, 1):
        for b in range(deg - c + 1):
            a = deg - c - b
            if ((-1) ** (b + c), (-1) ** (a + c)) == eps:
                n += 1
    return n


def dim_new_signed_exact(N: int, k: int, eps: Union[str, Sequence[int]] = ()) -> int:
    """Dimension of S_k^new(N)^eps for N in {1, 2, 3, 4, 6, 8}.

    Counts monomials of the ring model that multiply the cusp generator into
    the signed cusp space, then removes old forms.  Level 1 forms give one old
    form in every sign space of levels 2, 3, 6; a level 2 (resp. 3) newform
    with sign e gives one old form in each level 6 space with matching eps_2
    (resp. eps_3).  Levels 4 and 8 use the clean new-space isolations
    S^new_k(4)^- = M_{k-6}(1)_2 Delta_{6,4} and
    S^new_k(8)^eps = M(2)_2^eps Delta_{8,4}.
    """
    eps = parse_signs(eps)
    if N not in SUPPORTED_LEVELS:
        raise ValueError(f"unsupported level {N}")
    if len(eps) != len(prime_powers(N)):
        raise ValueError(f"level {N} needs {len(prime_powers(N))} signs")
    if k % 2 or k < 2:
        raise ValueError("weight must be even and >= 2")
    if N == 1:
        return dim_cusp_level1(k)
    if N == 2:
        # S_k(2)^e = M_{k-8}(2)^e * Delta_{8,2}^+
        return _count_level2(k - 8, eps[0]) - dim_cusp_level1(k)
    if N == 3:
        # cusp generator Delta_{6,3} is odd under w_3
        return _count_level3(k - 6, -eps[0]) - dim_cusp_level1(k)
    if N == 4:
        return _count_level1(k - 6) if eps[0] == -1 else 0
    if N == 8:
        return _count_level2(k - 4, eps[0])
    # N == 6, cusp generator Delta_{4,6} is ++
    e2, e3 = eps
    old = (
        dim_cusp_level1(k)
        + dim_new_signed_exact(2, k, (e2,))
        + dim_new_signed_exact(3, k, (e3,))
    )
    return _count_level6(k - 4, eps) - old


def dim_cusp_signed(N: int, k: int, eps: Union[str, Sequence[int]] = ()) -> int:
    """Dimension of the full signed cusp space S_k(N)^eps (levels 1, 2, 3, 6)."""
    eps = parse_signs(eps)
    if N == 1:
        return dim_cusp_level1(k)
    if N == 2:
        return _count_level2(k - 8, eps[0])
    if N == 3:
        return _count_level3(k - 6, -eps[0])
    if N == 6:
        return _count_level6(k - 4, eps)
    raise ValueError(f"full signed cusp dimension not modelled at level {N}")
