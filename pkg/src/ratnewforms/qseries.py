"""Exact truncated q-expansions.

A :class:`QSeries` holds the coefficients of q^0 .. q^(P-1) of a power series
with rational coefficients.  Internally the coefficients are integer
numerators over one common positive denominator, so products of integral
series never touch :class:`fractions.Fraction` and the Cauchy product can be
done by Kronecker substitution into a single big-integer multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union

from .arith import factorint, is_fundamental, is_prime, kronecker, primes_upto

DEFAULT_PREC = 200

Number = Union[int, Fraction]

# below this length the schoolbook product is faster than packing big ints
_KRONECKER_CUTOFF = 24


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
    return out


def _pack(xs: Sequence[int], bits: int) -> int:
    # xs non-negative, each < 2**bits
    width = bits // 8
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in xs), "little")


def _unpack(z: int, bits: int, n: int) -> list[int]:
    width = bits // 8
    raw = z.to_bytes(max(width * n, (z.bit_length() + 7) // 8), "little")
    return [int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(n)]


def _kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Truncated integer convolution via one-big-integer multiplication.

    Signed inputs are split into positive and negative parts; three
    non-negative products (Karatsuba style) recover the signed result.
    """
    a = list(a[:n])
    b = list(b[:n])
    ap = [x if x > 0 else 0 for x in a]
    an = [-x if x < 0 else 0 for x in a]
    bp = [x if x > 0 else 0 for x in b]
    bn = [-x if x < 0 else 0 for x in b]
    ma = max(max(ap), max(an), 1)
    mb = max(max(bp), max(bn), 1)
    terms = min(len(a), len(b))
    # slot must hold a sum of `terms` products of (2ma)*(2mb)
    bits = (2 * ma).bit_length() + (2 * mb).bit_length() + terms.bit_length() + 1
    bits = (bits + 7) // 8 * 8
    la = [x + y for x, y in zip(ap, an)]
    lb = [x + y for x, y in zip(bp, bn)]
    pp = _pack(ap, bits) * _pack(bp, bits)
    nn = _pack(an, bits) * _pack(bn, bits)
    ss = _pack(la, bits) * _pack(lb, bits)
    m = len(a) + len(b) - 1
    upp = _unpack(pp, bits, m)
    unn = _unpack(nn, bits, m)
    uss = _unpack(ss, bits, m)
    # (ap-an)(bp-bn) = ap bp + an bn - cross, cross = ss - pp - nn
    out = [2 * x + 2 * y - z for x, y, z in zip(upp, unn, uss)]
    out = out[:n]
    return out + [0] * (n - len(out))


def convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First n coefficients of the product of two integer sequences."""
    if not a or not b or n <= 0:
        return [0] * max(n, 0)
    if min(len(a), len(b), n) < _KRONECKER_CUTOFF:
        return _schoolbook(a, b, n)
    return _kronecker(a, b, n)


class QSeries:
    """Truncated power series sum_{n < P} c_n q^n with exact rational c_n.

    Instances are immutable.  ``g[n]`` returns c_n as a Fraction (0 beyond the
    stored terms is never returned: indexing at or past the precision raises
    IndexError).
    """

    __slots__ = ("_num", "_den", "_prec")

    def __init__(self, coeffs: Iterable[Number], prec: Optional[int] = None):
        cs = [Fraction(c) for c in coeffs]
        if prec is None:
            prec = len(cs)
        if prec < 1:
            raise ValueError("precision must be positive")
        cs = cs[:prec] + [Fraction(0)] * (prec - len(cs))
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        self._num = tuple(int(c * den) for c in cs)
        self._den = den
        self._prec = prec

    @classmethod
    def _raw(cls, num: Sequence[int], den: int, prec: int) -> "QSeries":
        num = list(num[:prec]) + [0] * (prec - len(num))
        if den < 0:
            num, den = [-x for x in num], -den
        g = den
        for x in num:
            if g == 1:
                break
            g = gcd(g, x)
        obj = object.__new__(cls)
        obj._num = tuple(x // g for x in num) if g > 1 else tuple(num)
        obj._den = den // g
        obj._prec = prec
        return obj

    @classmethod
    def from_ints(cls, coeffs: Sequence[int], prec: Optional[int] = None) -> "QSeries":
        return cls._raw(list(coeffs), 1, len(coeffs) if prec is None else prec)

    @classmethod
    def one(cls, prec: int = DEFAULT_PREC) -> "QSeries":
        return cls._raw([1], 1, prec)

    @classmethod
    def zero(cls, prec: int = DEFAULT_PREC) -> "QSeries":
        return cls._raw([], 1, prec)

    @classmethod
    def monomial(cls, n: int, prec: int = DEFAULT_PREC, c: Number = 1) -> "QSeries":
        return cls([0] * n + [c], prec) if n < prec else cls.zero(prec)

    # -- access -------------------------------------------------------------

    @property
    def precision(self) -> int:
        return self._prec

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def denominator(self) -> int:
        """Least common denominator of the coefficients."""
        return self._den

    def is_integral(self) -> bool:
        return self._den == 1

    def int_coeffs(self) -> list[int]:
        if self._den != 1:
            raise ValueError("series has non-integral coefficients")
        return list(self._num)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n < self._prec:
            raise IndexError(f"coefficient {n} outside precision {self._prec}")
        return Fraction(self._num[n], self._den)

    def __len__(self) -> int:
        return self._prec

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, x in enumerate(self._num):
            if x:
                return i
        return None

    def truncate(self, prec: int) -> "QSeries":
        if prec > self._prec:
            raise ValueError("cannot raise precision by truncation")
        return QSeries._raw(self._num[:prec], self._den, prec)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries([other], self._prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self._prec, other._prec)
        den = self._den * other._den // gcd(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        num = [x * fa + y * fb for x, y in zip(self._num[:prec], other._num[:prec])]
        return QSeries._raw(num, den, prec)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw([-x for x in self._num], self._den, self._prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QSeries._raw([x * c.numerator for x in self._num], self._den * c.denominator, self._prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self._prec, other._prec)
        return QSeries._raw(convolve(self._num, other._num, prec), self._den * other._den, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int) -> "QSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = QSeries.one(self._prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """Exact inverse of a unit series (nonzero constant term)."""
        c0 = self[0]
        if c0 == 0:
            raise ZeroDivisionError("series is not a unit")
        a = self._num
        a0 = a[0]
        prec = self._prec
        if a0 in (1, -1):
            # Newton iteration b <- b (2 - a b) stays integral
            b = [a0]
            n = 1
            while n < prec:
                n = min(2 * n, prec)
                ab = convolve(a, b, n)
                corr = [-x for x in ab]
                corr[0] += 2
                b = convolve(b, corr, n)
            return QSeries._raw([x * self._den for x in b], 1, prec)
        out: list[Fraction] = [Fraction(1, a0)]
        for n in range(1, prec):
            s = sum(a[i] * out[n - i] for i in range(1, n + 1) if a[i])
            out.append(-s / a0)
        return QSeries([x * self._den for x in out], prec)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._prec == other._prec and self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        return hash((self._num, self._den, self._prec))

    def agrees_with(self, other: "QSeries", upto: Optional[int] = None) -> bool:
        """Coefficientwise equality on the shared (or given) range."""
        n = min(self._prec, other._prec) if upto is None else upto
        return all(self[i] == other[i] for i in range(n))

    def first_difference(self, other: "QSeries") -> Optional[int]:
        for i in range(min(self._prec, other._prec)):
            if self[i] != other[i]:
                return i
        return None

    def shift(self, v: int) -> "QSeries":
        """Multiply by q^v (v >= 0); precision is kept."""
        if v < 0:
            raise ValueError("negative shift")
        return QSeries._raw([0] * v + list(self._num[: self._prec - v]), self._den, self._prec)

    def divide_exact(self, other: "QSeries") -> "QSeries":
        """self / other when other = q^v * unit and q^v divides self.

        The result has precision min(P1, P2) - v.
        """
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by the zero series")
        sv = self.valuation()
        if sv is not None and sv < v:
            raise ValueError("divisor's leading power does not divide the series")
        prec = min(self._prec, other._prec) - v
        a = QSeries._raw(self._num[v:], self._den, prec)
        b = QSeries._raw(other._num[v:], other._den, prec)
        return a * b.inverse()

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self._prec > 8 else ""
        return f"QSeries([{shown}{more}], prec={self._prec})"

    def __str__(self) -> str:
        return to_sparse_text(self)


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------

def to_sparse_text(g: QSeries) -> str:
    """``q^0*c0 + q^1*c1 + ...`` listing only nonzero terms, plus O(q^P)."""
    terms = [f"q^{i}*{c}" for i, c in enumerate(g.coeffs) if c]
    terms.append(f"O(q^{g.precision})")
    return " + ".join(terms)


def to_dense_list(g: QSeries) -> list[str]:
    """Coefficients as decimal strings (``p/q`` for non-integers)."""
    return [str(c) for c in g.coeffs]


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def series_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def sigma_sum(j: int, n: int) -> int:
    """sigma_j(n) = sum of d^j over positive divisors d of n."""
    if n <= 0:
        raise ValueError("n must be positive")
    total = 1
    for p, e in factorint(n).items() if n > 1 else ():
        total *= sum(p ** (j * i) for i in range(e + 1))
    return total


def _sigma_table(j: int, n: int) -> list[int]:
    tab = [0] * n
    for d in range(1, n):
        dj = d**j
        for m in range(d, n, d):
            tab[m] += dj
    return tab


def eisenstein(kind: str, prec: int = DEFAULT_PREC) -> QSeries:
    """Q = E_4 = 1 + 240 sum sigma_3(n) q^n, or R = E_6 = 1 - 504 sum sigma_5(n) q^n."""
    if kind == "Q":
        scale, j = 240, 3
    elif kind == "R":
        scale, j = -504, 5
    else:
        raise ValueError(f"unknown Eisenstein series {kind!r}")
    tab = _sigma_table(j, prec)
    return QSeries.from_ints([1] + [scale * tab[n] for n in range(1, prec)], prec)


@dataclass(frozen=True)
class EtaSpec:
    """Exponents e_t of an eta product prod_t eta(q^t)^(e_t)."""

    exponents: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, exps: Mapping[int, int]) -> "EtaSpec":
        for t in exps:
            if t < 1:
                raise ValueError("eta scales must be positive")
        return cls(tuple(sorted((t, e) for t, e in exps.items() if e)))

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(e for _, e in self.exponents), 2)

    @property
    def leading_exponent(self) -> Fraction:
        return Fraction(sum(t * e for t, e in self.exponents), 24)


def _euler_function(prec: int) -> list[int]:
    # prod (1 - q^n) by the pentagonal number theorem
    out = [0] * prec
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= prec:
            break
        out[g1] = sign
        if k and g2 < prec:
            out[g2] = sign
        k += 1
    return out


def eta_product(spec: Union[EtaSpec, Mapping[int, int]], prec: int = DEFAULT_PREC) -> QSeries:
    """q-expansion of prod_t (q^(t/24) prod_n (1 - q^(tn)))^(e_t)."""
    if not isinstance(spec, EtaSpec):
        spec = EtaSpec.of(spec)
    lead = spec.leading_exponent
    if lead.denominator != 1 or lead < 0:
        raise ValueError(f"leading exponent {lead} is not a non-negative integer")
    v = int(lead)
    if v >= prec:
        return QSeries.zero(prec)
    inner = prec - v
    euler = QSeries.from_ints(_euler_function(inner), inner)
    result = QSeries.one(inner)
    for t, e in spec.exponents:
        result = result * (push_up(euler, t) ** e)
    return QSeries._raw([0] * v + list(result._num), result._den, prec)


def theta_hex(prec: int = DEFAULT_PREC) -> QSeries:
    """Theta = sum over (x, y) in Z^2 of q^(x^2 + xy + y^2)."""
    bound = 2 * isqrt(prec) + 2
    out = [0] * prec
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            n = x * x + x * y + y * y
            if n < prec:
                out[n] += 1
    return QSeries.from_ints(out, prec)


def theta_sq(prec: int = DEFAULT_PREC) -> QSeries:
    """theta = sum over x in Z of q^(x^2)."""
    out = [0] * prec
    x = 0
    while x * x < prec:
        out[x * x] += 1 if x == 0 else 2
        x += 1
    return QSeries.from_ints(out, prec)


def push_up(g: QSeries, t: int) -> QSeries:
    """sum a_n q^(tn); the precision of g is kept."""
    if t < 1:
        raise ValueError("t must be positive")
    if t == 1:
        return g
    prec = g.precision
    num = [0] * prec
    for n in range(0, (prec - 1) // t + 1):
        num[t * n] = g._num[n]
    return QSeries._raw(num, g._den, prec)


def hecke_Tp(g: QSeries, p: int, k: int) -> QSeries:
    """T_p g with coefficients a_{pn} + p^(k-1) a_{n/p}, to precision floor(P/p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    prec = g.precision // p
    if prec < 1:
        raise ValueError("input precision too small for T_p")
    pk = p ** (k - 1)
    a = g._num
    num = [a[p * n] + (pk * a[n // p] if n % p == 0 else 0) for n in range(prec)]
    return QSeries._raw(num, g._den, prec)


def _smallest_prime_factors(n: int) -> list[int]:
    spf = list(range(n))
    for i in range(2, isqrt(max(n - 1, 1)) + 1):
        if spf[i] == i:
            for m in range(i * i, n, i):
                if spf[m] == m:
                    spf[m] = i
    return spf


def multiplicative_extend(
    ap_values: Mapping[int, int],
    bad_primes: Iterable[int],
    k: int,
    prec: int = DEFAULT_PREC,
) -> QSeries:
    """Rebuild sum a_n q^n (a_0 = 0, a_1 = 1) from the a_p via the Euler product.

    Good primes follow a_{p^(r+1)} = a_p a_{p^r} - p^(k-1) a_{p^(r-1)}; bad
    primes p | N follow a_{p^r} = a_p^r; coprime indices multiply.
    """
    bad = set(bad_primes)
    for p in primes_upto(prec - 1):
        if p not in ap_values:
            raise KeyError(f"a_p missing for p = {p}")
    a = [0] * prec
    if prec > 1:
        a[1] = 1
    spf = _smallest_prime_factors(prec)
    for n in range(2, prec):
        p = spf[n]
        m, r = n, 0
        while m % p == 0:
            m //= p
            r += 1
        if m > 1:
            a[n] = a[m] * a[n // m]
            continue
        # n = p^r
        ap = ap_values[p]
        if r == 1:
            a[n] = ap
        elif p in bad:
            a[n] = ap * a[n // p]
        else:
            a[n] = ap * a[n // p] - p ** (k - 1) * a[n // (p * p)]
    return QSeries.from_ints(a, prec)


def al_sign_from_ap(a_p: int, p: int, e: int, k: int) -> Optional[int]:
    """Atkin-Lehner eigenvalue at p^e || N read off from a_p.

    For e = 1 the relation a_p = -eps * p^(k/2 - 1) gives eps; for e > 1 the
    coefficient must vanish and no sign is determined (None).
    """
    if e > 1:
        if a_p != 0:
            raise ValueError(f"a_{p} must vanish when p^{e} divides the level")
        return None
    if k % 2:
        raise ValueError("weight must be even")
    unit = p ** (k // 2 - 1)
    if a_p == -unit:
        return 1
    if a_p == unit:
        return -1
    raise ValueError(f"|a_{p}| = {abs(a_p)} is not {p}^{k // 2 - 1}")


class TwistResult(NamedTuple):
    series: QSeries
    level_bound: int
    exact_primes: dict  # p -> True when ord_p of the twisted level is forced


def naive_twist(g: QSeries, D: int, N: int) -> TwistResult:
    """Twist a_n -> chi_D(n) a_n, with the LCM-rule level bound.

    The bound is prod p^max(ord_p(D^2), ord_p(N)); at primes where the two
    exponents differ the twisted level attains it (flag True).
    """
    if not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    num = [kronecker(D, n) * x if n else 0 for n, x in enumerate(g._num)]
    tw = QSeries._raw(num, g._den, g.precision) if D != 1 else g
    fd = factorint(D * D) if abs(D) > 1 else {}
    fn = factorint(N) if N > 1 else {}
    bound = 1
    exact = {}
    for p in sorted(set(fd) | set(fn)):
        a, b = fd.get(p, 0), fn.get(p, 0)
        bound *= p ** max(a, b)
        exact[p] = a != b
    return TwistResult(tw, bound, exact)


def verify_eigenform(g: QSeries, k: int, N: int, pmax: int = 50) -> Optional[int]:
    """Check T_p g = a_p g for primes p <= pmax not dividing N.

    Returns None on success or the first failing prime.  Primes whose T_p
    image would have fewer than two coefficients are skipped.
    """
    for p in primes_upto(pmax):
        if N % p == 0 or g.precision // p < 2:
            continue
        tp = hecke_Tp(g, p, k)
        ap = g[p]
        if not tp.agrees_with(g * ap, tp.precision):
            return p
    return None
