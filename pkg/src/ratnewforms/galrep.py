"""Mod-ell projective Galois data of cataloged newforms.

For a newform of weight k, the normalized square s_p = a_p^2 / p^(k-1) in F_ell
constrains the factorization pattern lambda_p of a degree ell+1 polynomial
cutting out the projective mod-ell representation.  This module stores the
sixteen defining polynomials, checks the s_p <-> lambda_p correspondence,
certifies cyclic (degenerate) cases through a_p = p^i + p^j mod ell, and
verifies the stated congruences between forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, NamedTuple, Optional, Sequence

import sympy

from .arith import factor_degrees_mod_p, kronecker, partition_str, primes_upto
from .catalog import load_document, validate
from .dims import prime_powers
from .qseries import QSeries
from .rings import NewformRecord, forms_by_label, load_forms, newform_expansion

DEFAULT_PMAX = 200


def _parts(*words: str) -> frozenset:
    out = set()
    for w in words:
        if w.startswith("1^"):
            out.add((1,) * int(w[2:]))
        else:
            out.add(tuple(int(ch) for ch in w))
    return frozenset(out)


# s in F_ell -> partitions lambda_p of ell + 1 compatible with it.  Both
# printed rows are kept: 1^(ell+1) is the identity class and 211, 2211,
# 22211 are involutions with fixed points, all unramified.
CORRESPONDENCE: dict[int, dict[int, frozenset]] = {
    2: {0: _parts("21", "111"), 1: _parts("3")},
    3: {0: _parts("22", "211"), 1: _parts("31", "1111"), 2: _parts("4")},
    5: {
        0: _parts("222", "2211"),
        1: _parts("33"),
        2: _parts("411"),
        3: _parts("6"),
        4: _parts("51", "1^6"),
    },
    7: {
        0: _parts("2222", "22211"),
        1: _parts("3311"),
        2: _parts("44"),
        3: _parts("611"),
        4: _parts("71", "1^8"),
        5: _parts("8"),
        6: _parts("8"),
    },
}

FIRST_ROW: dict[int, dict[int, tuple]] = {
    2: {0: (2, 1), 1: (3,)},
    3: {0: (2, 2), 1: (3, 1), 2: (4,)},
    5: {0: (2, 2, 2), 1: (3, 3), 2: (4, 1, 1), 3: (6,), 4: (5, 1)},
    7: {0: (2, 2, 2, 2), 1: (3, 3, 1, 1), 2: (4, 4), 3: (6, 1, 1), 4: (7, 1), 5: (8,), 6: (8,)},
}


def compatible_s(ell: int, lam: tuple) -> set[int]:
    """All s in F_ell whose correspondence set contains lam."""
    return {s for s, parts in CORRESPONDENCE[ell].items() if lam in parts}


# ---------------------------------------------------------------------------
# polynomial records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjPolyRecord:
    label: str
    ell: int
    level: int
    coeffs: tuple[int, ...]  # low to high
    disc: tuple  # ((p, e), ...), sign
    governs: int
    note: str = ""
    aux: dict = field(default_factory=dict, compare=False)  # p -> element of the stem field

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def disc_sign(self) -> int:
        return self.disc[1]

    @property
    def disc_factors(self) -> dict[int, int]:
        return dict(self.disc[0])

    def disc_value(self) -> int:
        v = self.disc_sign
        for p, e in self.disc[0]:
            v *= p**e
        return v

    def lambda_p(self, p: int) -> Optional[tuple]:
        """Degrees of f mod p, or None when f mod p is not squarefree."""
        return factor_degrees_mod_p(self.coeffs, p)

    def field_lambda_p(self, p: int) -> Optional[tuple]:
        """Splitting type of p in the stem field, for p unramified there.

        When p divides only the index of Z[alpha], the stored auxiliary
        element beta (whose order has index prime to p) is factored instead,
        by Dedekind's criterion.  None if p is ramified or no element is stored.
        """
        if p in self.disc_factors:
            return None
        lam = self.lambda_p(p)
        if lam is None and p in self.aux:
            lam = factor_degrees_mod_p(element_minpoly(self.coeffs, self.aux[p]), p)
        return lam

    def index_square(self) -> Optional[int]:
        """disc(f) / D when that is a nonzero perfect square, else None."""
        x = sympy.Symbol("x")
        d = int(sympy.discriminant(sympy.Poly(list(reversed(self.coeffs)), x)))
        q, r = divmod(d, self.disc_value())
        if d == 0 or r or q < 0 or isqrt(q) ** 2 != q:
            return None
        return isqrt(q)

    def irreducible_squarefree(self) -> bool:
        """Irreducible over Q (hence squarefree modulo almost every p)."""
        x = sympy.Symbol("x")
        return sympy.Poly(list(reversed(self.coeffs)), x).is_irreducible

    def disc_primes_ok(self) -> bool:
        """Every prime of the discriminant divides N * ell."""
        return all((self.level * self.ell) % p == 0 for p in self.disc_factors)

    def disc_square_class_ok(self) -> bool:
        """For odd ell, disc is a square times chi_{-4}(ell) * ell."""
        if self.ell == 2:
            return True
        target = kronecker(-4, self.ell) * self.ell
        if (self.disc_sign > 0) != (target > 0):
            return False
        return all((e % 2 == 1) == (p == self.ell) for p, e in self.disc_factors.items())


@lru_cache(maxsize=None)
def element_minpoly(coeffs: tuple, element: tuple) -> tuple[int, ...]:
    """Minimal polynomial (low to high) of sum c_i alpha^i, f(alpha) = 0.

    Must be monic with integer coefficients, i.e. the element is integral.
    """
    x, y = sympy.symbols("x y")
    den = 1
    for c in element:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    g = sum(int(Fraction(c) * den) * y**i for i, c in enumerate(element))
    f = sum(c * y**i for i, c in enumerate(coeffs))
    h = sympy.Poly(sympy.resultant(f, den * x - g, y), x)
    lead = h.LC()
    out = [Fraction(int(c), int(lead)) for c in reversed(h.all_coeffs())]
    if any(c.denominator != 1 for c in out):
        raise ValueError("element is not integral")
    return tuple(int(c) for c in out)


@lru_cache(maxsize=1)
def load_polys() -> tuple[ProjPolyRecord, ...]:
    doc = load_document("polys.json")
    validate("polys.json", doc)
    out = []
    for r in doc["rows"]:
        *pe, sign = r["disc"]
        out.append(
            ProjPolyRecord(
                r["label"], r["ell"], r["level"], tuple(r["coeffs"]),
                (tuple((p, e) for p, e in pe), sign), r["governs"], r.get("note", ""),
                {int(q): tuple(Fraction(c) for c in el) for q, el in r.get("aux", {}).items()},
            )
        )
    return tuple(out)


def polys_by_label() -> dict[str, ProjPolyRecord]:
    return {p.label: p for p in load_polys()}


def weight_from_disc(poly: ProjPolyRecord) -> Optional[int]:
    """Minimal weight forced by ramification at ell: ord_ell(D) + 2 - ell when ord >= ell + 2."""
    o = poly.disc_factors.get(poly.ell, 0)
    if o >= poly.ell + 2:
        return o + 2 - poly.ell
    return None


# ---------------------------------------------------------------------------
# s_p and matching
# ---------------------------------------------------------------------------


def sp_reduce(a_p: int, p: int, k: int, ell: int) -> int:
    """a_p^2 / p^(k-1) reduced into F_ell."""
    if p % ell == 0:
        raise ValueError("p must differ from ell")
    inv = pow(p, (ell - 2) * (k - 1), ell)  # Fermat inverse of p^(k-1)
    return a_p * a_p * inv % ell


def _ap_table(form: NewformRecord, pmax: int) -> dict[int, int]:
    g = newform_expansion(form.label, pmax + 1)
    return {p: int(g[p]) for p in primes_upto(pmax)}


class MatchVerdict(NamedTuple):
    form: str
    poly: str
    ell: int
    consistent: bool
    failed_at: Optional[int]
    checked: tuple
    skipped: tuple

    def as_dict(self) -> dict:
        return self._asdict() | {"checked": list(self.checked), "skipped": list(self.skipped)}


def match_form_to_poly(
    form: NewformRecord, poly: ProjPolyRecord, pmax: int = DEFAULT_PMAX
) -> MatchVerdict:
    """Check lambda_p(poly) lies in the correspondence set of s_p(form) for p <= pmax.

    Primes dividing N * ell are skipped, as are primes dividing the index of
    Z[alpha] for which no auxiliary element is stored.
    """
    ell = poly.ell
    ap = _ap_table(form, pmax)
    checked, skipped = [], []
    for p in primes_upto(pmax):
        if (form.level * ell) % p == 0:
            skipped.append(p)
            continue
        lam = poly.field_lambda_p(p)
        if lam is None:
            skipped.append(p)
            continue
        checked.append(p)
        s = sp_reduce(ap[p], p, form.weight, ell)
        if lam not in CORRESPONDENCE[ell][s]:
            return MatchVerdict(form.label, poly.label, ell, False, p, tuple(checked), tuple(skipped))
    # a polynomial that is never squarefree mod p certifies nothing
    return MatchVerdict(form.label, poly.label, ell, bool(checked), None, tuple(checked), tuple(skipped))


def classify_degenerate(
    form: NewformRecord, ell: int, pmax: int = DEFAULT_PMAX
) -> Optional[tuple[int, int]]:
    """Smallest (i, j), 0 <= i <= j < ell - 1, with a_p = p^i + p^j mod ell for all p.

    Only primes not dividing N * ell are used.  For ell = 2 the only pair is
    (0, 0), i.e. a_p even.
    """
    ap = _ap_table(form, pmax)
    primes = [p for p in primes_upto(pmax) if (form.level * ell) % p]
    m = max(ell - 1, 1)
    for i in range(m):
        for j in range(i, m):
            if all((ap[p] - pow(p, i, ell) - pow(p, j, ell)) % ell == 0 for p in primes):
                return (i, j)
    return None


def surjectivity_witness(poly: ProjPolyRecord, pmax: int = 500) -> dict[int, Optional[int]]:
    """For each s in F_ell, the first prime whose lambda_p is the first-row partition for s."""
    wanted = FIRST_ROW[poly.ell]
    found: dict[int, Optional[int]] = {s: None for s in wanted}
    for p in primes_upto(pmax):
        if (poly.level * poly.ell) % p == 0:
            continue
        lam = poly.field_lambda_p(p)
        if lam is None:
            continue
        for s, part in wanted.items():
            if found[s] is None and lam == part:
                found[s] = p
    return found


# ---------------------------------------------------------------------------
# governance
# ---------------------------------------------------------------------------


class Governance(NamedTuple):
    ell: int
    governed: dict  # poly label -> list of form labels
    degenerate: dict  # form label -> (i, j)
    unresolved: list  # forms neither matched nor degenerate
    ambiguous: list  # forms consistent with more than one polynomial


def governance(ell: int, pmax: int = DEFAULT_PMAX, forms: Optional[Iterable[NewformRecord]] = None) -> Governance:
    """Assign each form to the polynomials of its level it matches, else certify degeneracy."""
    forms = list(forms) if forms is not None else list(load_forms())
    polys = [p for p in load_polys() if p.ell == ell]
    governed: dict = {p.label: [] for p in polys}
    degenerate: dict = {}
    unresolved, ambiguous = [], []
    for f in forms:
        hits = [p for p in polys if p.level == f.level and match_form_to_poly(f, p, pmax).consistent]
        if len(hits) > 1:
            ambiguous.append(f.label)
        for p in hits:
            governed[p.label].append(f.label)
        if not hits:
            pair = classify_degenerate(f, ell, pmax)
            if pair is None:
                unresolved.append(f.label)
            else:
                degenerate[f.label] = pair
    return Governance(ell, governed, degenerate, unresolved, ambiguous)


# ---------------------------------------------------------------------------
# congruences
# ---------------------------------------------------------------------------


def sturm_bound(k: int, N: int) -> int:
    """floor(k N prod_{p | N} (1 + 1/p) / 12) + 1."""
    index = Fraction(N)
    for p, _ in prime_powers(N):
        index *= Fraction(p + 1, p)
    return int(k * index / 12) + 1


def congruent_series(g1: QSeries, g2: QSeries, m: int, bound: int) -> bool:
    """a_n(g1) = a_n(g2) mod m for 0 <= n <= bound (integral coefficients)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if min(g1.precision, g2.precision) <= bound:
        raise ValueError("precision below the requested bound")
    for n in range(bound + 1):
        d = g1[n] - g2[n]
        if d.denominator != 1 or d.numerator % m:
            return False
    return True


def reduce_mod(g: QSeries, m: int, upto: int) -> list[int]:
    return [int(g[n]) % m for n in range(upto + 1)]


MOD7_CHAINS = (
    (("Delta_8_2_plus", "Delta_14_2_plus", "Delta_20_2_plus", "Delta_26_2_plus"), [0, 1, 6, 5, 1, 0, 2, 1, 6]),
    (("Delta_10_2_minus", "Delta_22_2_minus", "Delta_28_2_minus", "Delta_40_2_minus"), [0, 1, 2, 5, 4, 2, 3, 0, 1]),
)


class ChainResult(NamedTuple):
    labels: tuple
    congruent: bool
    residual: list
    matches_printed: bool


def chain_check(labels: Sequence[str], printed: Optional[Sequence[int]], ell: int = 7, prec: int = 200) -> ChainResult:
    gs = [newform_expansion(lab, prec) for lab in labels]
    ok = all(congruent_series(gs[0], g, ell, prec - 1) for g in gs[1:])
    upto = len(printed) - 1 if printed else 8
    residual = reduce_mod(gs[0], ell, upto)
    return ChainResult(tuple(labels), ok, residual, printed is None or residual == list(printed))


def mod7_chain_check(prec: int = 200) -> list[ChainResult]:
    """Both weight chains at level 2 reduce to one series mod 7, matching the printed residues."""
    return [chain_check(labels, printed, 7, prec) for labels, printed in MOD7_CHAINS]


# (a_5, ..., a_29) printed for Delta_8_8^{+/-}: (value, printed with +-)
DELTA_8_8_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29)
DELTA_8_8_TUPLE = ((1, True), (0, False), (1, True), (1, False), (2, True), (2, False), (1, True), (0, True))


class TwistTupleResult(NamedTuple):
    ap_plus: tuple
    ap_minus: tuple
    flips_match_chi: bool
    residues_match_mod3: bool
    residues_mod3: tuple
    residues_mod7: tuple


def delta_8_8_tuple_check() -> TwistTupleResult:
    """Compare the a_p of Delta_8_8^{+-} with the printed tuple.

    The +- entries sit exactly at the primes with chi_{-3}(p) = -1, and the
    values are residues mod 3: a_p(+) = v and a_p(-) = -v there, a_p(+-) = v
    elsewhere.  Residues mod 7 are reported for comparison only.
    """
    gp = newform_expansion("Delta_8_8_plus", 30)
    gm = newform_expansion("Delta_8_8_minus", 30)
    plus = tuple(int(gp[p]) for p in DELTA_8_8_PRIMES)
    minus = tuple(int(gm[p]) for p in DELTA_8_8_PRIMES)
    flips = all(pm == (kronecker(-3, p) == -1) for p, (_, pm) in zip(DELTA_8_8_PRIMES, DELTA_8_8_TUPLE))
    mod3 = all(
        (a - v) % 3 == 0 and (b - (-v if pm else v)) % 3 == 0
        for a, b, (v, pm) in zip(plus, minus, DELTA_8_8_TUPLE)
    )
    return TwistTupleResult(
        plus, minus, flips, mod3, tuple(a % 3 for a in plus), tuple(a % 7 for a in plus)
    )


def same_projective_class(f1: NewformRecord, f2: NewformRecord, ell: int, pmax: int = DEFAULT_PMAX) -> bool:
    """s_p agree for all p not dividing N ell."""
    a1, a2 = _ap_table(f1, pmax), _ap_table(f2, pmax)
    N = f1.level * f2.level * ell
    return all(
        sp_reduce(a1[p], p, f1.weight, ell) == sp_reduce(a2[p], p, f2.weight, ell)
        for p in primes_upto(pmax) if N % p
    )
