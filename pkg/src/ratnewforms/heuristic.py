"""Random-polynomial model for factorization of Hecke polynomials.

A degree-d monic integer polynomial whose roots all lie in [-2w, 2w] is
modelled as a lattice point in the root-constrained coefficient region.
Its volume V_d(w) approximates the number of such polynomials, and the
chance of a split into factors of degrees r + s = d is V_r V_s / (2^delta V_d),
with delta = 1 when r = s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class EnsembleParams:
    p: int
    k: int
    r: int
    s: int

    def __post_init__(self):
        if self.r > self.s or self.r < 1:
            raise ValueError("need 1 <= r <= s")

    @property
    def d(self) -> int:
        return self.r + self.s

    @property
    def w(self) -> float:
        return self.p ** ((self.k - 1) / 2)

    def probability(self) -> float:
        return prob_split(self.r, self.s, self.w)


def log_volume(d: int, w: float) -> float:
    if d < 1 or w <= 0:
        raise ValueError("need d >= 1 and w > 0")
    out = d * math.log(2) - math.lgamma(d + 1)
    for j in range(1, d + 1):
        out += (d + 1 - j) * math.log(2 * j / (2 * j - 1))
    return out + d * (d + 1) / 2 * math.log(w)


def volume(d: int, w: float) -> float:
    """V_d(w) = [2^d/d! prod (2j/(2j-1))^(d+1-j)] w^(d(d+1)/2)."""
    return math.exp(log_volume(d, w))


def _delta(r: int, s: int) -> int:
    return 1 if r == s else 0


def log_prob_split(r: int, s: int, w: float) -> float:
    """Natural log of Prob_{r,s}(w) from the volume ratio."""
    if r > s:
        r, s = s, r
    return (
        log_volume(r, w) + log_volume(s, w) - _delta(r, s) * math.log(2) - log_volume(r + s, w)
    )


def prob_split(r: int, s: int, w: float) -> float:
    """Prob_{r,s}(w) in closed form.

    d!/(2^delta r! s!) * prod_{j=1}^{d} ((2j-1)/(2j))^min(j-1, r, d+1-j) / w^(rs),
    which equals V_r V_s / (2^delta V_d).  For r = s = 1 this is 3/(4w).
    """
    if r > s:
        r, s = s, r
    d = r + s
    lg = math.lgamma(d + 1) - math.lgamma(r + 1) - math.lgamma(s + 1) - _delta(r, s) * math.log(2)
    for j in range(1, d + 1):
        lg += min(j - 1, r, d + 1 - j) * math.log((2 * j - 1) / (2 * j))
    return math.exp(lg - r * s * math.log(w))


def prob_split_printed(r: int, s: int, w: float) -> float:
    """The closed form with exponent j - 1 throughout; agrees only at r = s = 1."""
    if r > s:
        r, s = s, r
    d = r + s
    lg = math.lgamma(d + 1) - math.lgamma(r + 1) - math.lgamma(s + 1) - _delta(r, s) * math.log(2)
    for j in range(1, d + 1):
        lg += (j - 1) * math.log((2 * j - 1) / (2 * j))
    return math.exp(lg - r * s * math.log(w))


def pr_of_weight(r: int, s: int, k: int, p: int = 2) -> float:
    """Pr_{r,s}(k) = Prob_{r,s}(p^((k-1)/2)), with p = 2 by default."""
    return math.exp(log_prob_split(r, s, p ** ((k - 1) / 2)))


# ---------------------------------------------------------------------------
# exact enumeration of quadratics
# ---------------------------------------------------------------------------


class QuadraticPoint(NamedTuple):
    b: int
    c: int
    split: bool


def _in_region(b: int, c: int, w: float) -> bool:
    # both roots real and inside [-2w, 2w]
    return abs(b) <= 4 * w and 4 * c <= b * b and c >= 2 * w * abs(b) - 4 * w * w


def quadratic_points(w: float) -> list[QuadraticPoint]:
    """Lattice points (b, c) with x^2 + bx + c having both roots in [-2w, 2w]."""
    if w <= 0:
        raise ValueError("w must be positive")
    B = math.floor(4 * w)
    out = []
    for b in range(-B, B + 1):
        lo = math.ceil(2 * w * abs(b) - 4 * w * w)
        hi = (b * b) // 4
        for c in range(lo, hi + 1):
            if not _in_region(b, c, w):
                continue
            disc = b * b - 4 * c
            root = math.isqrt(disc)
            out.append(QuadraticPoint(b, c, root * root == disc))
    return out


def count_quadratics(w: float) -> tuple[int, int]:
    """(total, split): lattice points in the region, and those factoring over Z.

    A point splits when its discriminant is a perfect square, i.e. it is
    (x - a1)(x - a2) with integers |a_i| <= 2w.  Counts column by column
    rather than listing points, so large w stays cheap.
    """
    if w <= 0:
        raise ValueError("w must be positive")
    B = math.floor(4 * w)
    total = 0
    for b in range(-B, B + 1):
        lo = math.ceil(2 * w * abs(b) - 4 * w * w)
        hi = (b * b) // 4
        while lo <= hi and not _in_region(b, lo, w):
            lo += 1
        total += max(0, hi - lo + 1)
    n = 2 * math.floor(2 * w) + 1
    return total, n * (n + 1) // 2
