"""Ring models M(N) for N in {1, 2, 3, 4, 6, 8}, built from theta series and
eta products, together with the identity database, the newform catalog, and
an exact Hecke eigenvector search used to (re)derive the catalog.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import Callable, Iterable, Mapping, NamedTuple, Optional, Sequence

from . import expr as E
from .arith import primes_upto
from .dims import format_signs, parse_signs, prime_powers
from .qseries import (
    DEFAULT_PREC,
    QSeries,
    eisenstein,
    eta_product,
    hecke_Tp,
    multiplicative_extend,
    push_up,
    theta_hex,
    theta_sq,
    al_sign_from_ap,
)

# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """A named form with its weight and Atkin-Lehner action.

    ``al`` holds, per prime power exactly dividing the level, the eigenvalue
    of the (possibly higher order) automorphism as a fraction of a full turn:
    0 is +1, 1/2 is -1, 1/4 is multiplication by i, 1/8 by an eighth root of
    unity.  ``None`` means the action is not recorded for this generator.
    """

    name: str
    weight: Fraction
    al: Optional[tuple[Fraction, ...]]
    definition: object  # expression over other generators, or a primitive tag
    description: str = ""


def _hx(*terms):
    return ["+", *terms]


def _m(c, *factors):
    return ["*", c, *factors]


def _p(name, e):
    return ["^", name, e]


H = Fraction(1, 2)
I4 = Fraction(1, 4)
R8 = Fraction(1, 8)
Z = Fraction(0)

_PRIMITIVES: dict[str, Callable[[int], QSeries]] = {
    "theta": theta_sq,
    "theta1": theta_sq,
    "theta2": lambda P: push_up(theta_sq(P), 2),
    "Theta": theta_hex,
    "Theta1": theta_hex,
    "Theta2": lambda P: push_up(theta_hex(P), 2),
    "Q": lambda P: eisenstein("Q", P),
    "R": lambda P: eisenstein("R", P),
    "Q2": lambda P: push_up(eisenstein("Q", P), 2),
    "R2": lambda P: push_up(eisenstein("R", P), 2),
    "Delta": lambda P: eta_product({1: 24}, P),
    "Delta_8_2": lambda P: eta_product({1: 8, 2: 8}, P),
    "Delta_6_3": lambda P: eta_product({1: 6, 3: 6}, P),
    "Delta_5_4": lambda P: eta_product({1: 4, 2: 2, 4: 4}, P),
    "Delta_6_4": lambda P: eta_product({2: 12}, P),
    "Delta_4_6": lambda P: eta_product({1: 2, 2: 2, 3: 2, 6: 2}, P),
    "Delta_8_4": lambda P: eta_product({2: 4, 4: 4}, P),
    "A2": lambda P: push_up(generator_series("A", P), 2),
    "B2": lambda P: push_up(generator_series("B", P), 2),
}

_A_DEF = _hx(_p("theta1", 4), _m(4, _p("theta1", 2), _p("theta2", 2)), _m(-4, _p("theta2", 4)))
_B_DEF = _hx(
    _p("theta1", 8),
    _m(-24, _p("theta1", 6), _p("theta2", 2)),
    _m(40, _p("theta1", 4), _p("theta2", 4)),
    _m(-32, _p("theta1", 2), _p("theta2", 6)),
    _m(16, _p("theta2", 8)),
)
_PHI_DEF = _hx(_m(4, _p("Theta2", 3)), _m(-3, _p("Theta1", 2), "Theta2"))
_D_DEF = _hx(_p("theta1", 4), _m(-8, _p("theta1", 2), _p("theta2", 2)), _m(8, _p("theta2", 4)))

GENERATORS: dict[str, Generator] = {
    g.name: g
    for g in [
        Generator("Q", Fraction(4), (), "primitive", "E_4 = 1 + 240 sum sigma_3(n) q^n"),
        Generator("R", Fraction(6), (), "primitive", "E_6 = 1 - 504 sum sigma_5(n) q^n"),
        Generator("Delta", Fraction(12), (), "primitive", "eta^24"),
        Generator("theta1", H, None, "primitive", "sum q^(x^2)"),
        Generator("theta2", H, None, "primitive", "theta1(q^2)"),
        Generator("A", Fraction(2), (H,), _A_DEF, "level 2, weight 2"),
        Generator("B", Fraction(4), (H,), _B_DEF, "level 2, weight 4"),
        Generator("Delta_8_2", Fraction(8), (Z,), "primitive", "eta_1^8 eta_2^8"),
        Generator("Theta1", Fraction(1), None, "primitive", "sum q^(x^2+xy+y^2)"),
        Generator("Theta2", Fraction(1), None, "primitive", "Theta1(q^2)"),
        Generator("Theta", Fraction(1), (I4,), "primitive", "sum q^(x^2+xy+y^2)"),
        Generator("Phi", Fraction(3), (I4,), _PHI_DEF, "4 Theta_2^3 - 3 Theta_1^2 Theta_2"),
        Generator("Delta_6_3", Fraction(6), (H,), "primitive", "eta_1^6 eta_3^6"),
        Generator("theta", H, (R8,), "primitive", "sum q^(x^2)"),
        Generator("C", Fraction(2), (H,), _p("theta", 4), "theta^4"),
        Generator("D", Fraction(2), (Z,), _D_DEF, "theta_1^4 - 8 theta_1^2 theta_2^2 + 8 theta_2^4"),
        Generator("Q2", Fraction(4), (Z,), "primitive", "Q(q^2)"),
        Generator("R2", Fraction(6), (Z,), "primitive", "R(q^2)"),
        Generator("Delta_5_4", Fraction(5), (I4,), "primitive", "eta_1^4 eta_2^2 eta_4^4"),
        Generator("Delta_6_4", Fraction(6), (H,), "primitive", "eta_2^12"),
        Generator("s", Fraction(2), (Z, H), _hx(_p("Theta1", 2), _m(2, _p("Theta2", 2))), "sum"),
        Generator("p", Fraction(2), (H, Z), ["*", "Theta1", "Theta2"], "product"),
        Generator("d", Fraction(2), (H, H), _hx(_p("Theta1", 2), _m(-2, _p("Theta2", 2))), "difference"),
        Generator("Delta_4_6", Fraction(4), (Z, Z), "primitive", "eta_1^2 eta_2^2 eta_3^2 eta_6^2"),
        Generator("A2", Fraction(2), (H,), "primitive", "A(q^2)"),
        Generator("B2", Fraction(4), (H,), "primitive", "B(q^2)"),
        Generator("Delta_8_4", Fraction(4), (Z,), "primitive", "eta_2^4 eta_4^4"),
    ]
}


@lru_cache(maxsize=None)
def generator_series(name: str, prec: int = DEFAULT_PREC) -> QSeries:
    """q-expansion of a generator, built from theta series and eta products."""
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}")
    g = GENERATORS[name]
    if g.definition == "primitive":
        return _PRIMITIVES[name](prec)
    return E.evaluate(g.definition, lambda n: generator_series(n, prec), prec)


# ---------------------------------------------------------------------------
# ring models
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingModel:
    level: int
    generators: tuple[str, ...]
    cusp_generator: str
    relations: tuple = ()
    max_exponents: Mapping[str, int] = field(default_factory=dict)

    def signs_of(self, exps: Mapping[str, int]) -> Optional[tuple[int, ...]]:
        """Atkin-Lehner sign vector of a monomial, None if not +-1 valued."""
        n = len(prime_powers(self.level))
        turns = [Fraction(0)] * n
        for name, e in exps.items():
            al = GENERATORS[name].al
            if al is None:
                raise ValueError(f"no Atkin-Lehner data for {name}")
            for i in range(n):
                turns[i] += e * al[i]
        out = []
        for t in turns:
            t %= 1
            if t == 0:
                out.append(1)
            elif t == Fraction(1, 2):
                out.append(-1)
            else:
                return None
        return tuple(out)

    def weight_of(self, exps: Mapping[str, int]) -> Fraction:
        return sum((GENERATORS[n].weight * e for n, e in exps.items()), Fraction(0))


# relation s^2 - d^2 - 8 p^2 = 0 (the printed d^2 - s^2 = 8 p^2 has the sign flipped)
_LEVEL6_RELATION = _hx(_p("s", 2), _m(-1, _p("d", 2)), _m(-8, _p("p", 2)))

RING_MODELS: dict[int, RingModel] = {
    1: RingModel(1, ("Q", "R"), "Delta"),
    2: RingModel(2, ("A", "B"), "Delta_8_2"),
    3: RingModel(3, ("Theta", "Phi"), "Delta_6_3"),
    4: RingModel(4, ("C", "D"), "Delta_6_4"),
    6: RingModel(6, ("s", "p", "d"), "Delta_4_6", (_LEVEL6_RELATION,), {"d": 1}),
    # level 8: the new space is isolated by M(2)_2 = C[A2, B2] times Delta_8_4
    8: RingModel(8, ("A2", "B2"), "Delta_8_4"),
}


def ring_model(N: int) -> RingModel:
    if N not in RING_MODELS:
        raise ValueError(f"no ring model at level {N}")
    return RING_MODELS[N]


def generator_expansion(N: int, name: str, prec: int = DEFAULT_PREC) -> QSeries:
    """Expansion of a generator that belongs to the level-N model."""
    model = ring_model(N)
    extra = {
        1: (),
        2: ("theta1", "theta2"),
        3: ("Theta1", "Theta2"),
        4: ("theta", "theta1", "theta2", "Q2", "R2", "Delta_5_4"),
        6: ("Theta1", "Theta2"),
        8: ("theta1", "theta2", "A", "B"),
    }[N]
    if name not in model.generators and name != model.cusp_generator and name not in extra:
        raise KeyError(f"{name!r} is not a generator of the level {N} model")
    return generator_series(name, prec)


def _exponent_vectors(weights: Sequence[Fraction], target: Fraction, caps: Sequence[Optional[int]]):
    if not weights:
        if target == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    top = int(target / w)
    if caps[0] is not None:
        top = min(top, caps[0])
    for e in range(top, -1, -1):
        for tail in _exponent_vectors(rest, target - e * w, caps[1:]):
            yield (e, *tail)


def _monomials(gens: Sequence[str], k, caps=None) -> list[dict[str, int]]:
    caps = caps or {}
    weights = [GENERATORS[g].weight for g in gens]
    out = []
    for ev in _exponent_vectors(weights, Fraction(k), [caps.get(g) for g in gens]):
        out.append(dict(zip(gens, ev)))
    return out


def monomial_basis(N: int, k: int, eps=()) -> list[dict[str, int]]:
    """Generator monomials of weight k with Atkin-Lehner sign vector eps.

    At N = 6 only the canonical monomials s^a p^b and d s^a p^b are listed;
    at N = 8 the monomials are those of M(2)_2 = C[A2, B2], which multiply
    the cusp generator onto the new subspace.
    """
    model = ring_model(N)
    if k < 0 or k % 2:
        raise ValueError("weight must be even and non-negative")
    eps = parse_signs(eps)
    if N == 3:
        # Theta^a Phi^b lies in M(3) only when a + b is even
        mons = [m for m in _monomials(model.generators, k) if (m["Theta"] + m["Phi"]) % 2 == 0]
    else:
        mons = _monomials(model.generators, k, model.max_exponents)
    if N == 1:
        return mons
    return [m for m in mons if model.signs_of(m) == eps]


def signed_new_search_space(N: int, k: int, eps=()) -> tuple[list[dict[str, int]], str]:
    """(monomials, cusp generator) spanning a space that contains S^new_k(N)^eps.

    For N in {1, 2, 3, 6} this is all of S_k(N)^eps; for N in {4, 8} it is
    exactly the new subspace.
    """
    eps = parse_signs(eps)
    model = ring_model(N)
    if k < GENERATORS[model.cusp_generator].weight:
        return [], model.cusp_generator
    if N == 1:
        return _monomials(("Q", "R"), k - 12), "Delta"
    if N == 4:
        if eps != (-1,):
            return [], model.cusp_generator
        return _monomials(("Q2", "R2"), k - 6), model.cusp_generator
    cusp_sign = model.signs_of({model.cusp_generator: 1})
    inner = tuple(e * c for e, c in zip(eps, cusp_sign))
    cw = GENERATORS[model.cusp_generator].weight
    return monomial_basis(N, int(k - cw), inner), model.cusp_generator


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------


class IdentityResult(NamedTuple):
    label: str
    passed: bool
    first_failure: Optional[int]  # coefficient index, None on pass
    detail: str = ""


def _data_path(name: str):
    return resources.files("ratnewforms") / "data" / name


@lru_cache(maxsize=1)
def load_identities() -> tuple[dict, ...]:
    with _data_path("identities.json").open(encoding="utf-8") as fh:
        rows = json.load(fh)["rows"]
    return tuple(rows)


def identity_labels() -> list[str]:
    return [r["label"] for r in load_identities()]


def _lookup(prec: int) -> Callable[[str], QSeries]:
    def look(name: str) -> QSeries:
        if name in GENERATORS:
            return generator_series(name, prec)
        return newform_expansion(name, prec)

    return look


def evaluate_expression(e, prec: int = DEFAULT_PREC) -> QSeries:
    """Evaluate an expression over generators and catalog labels."""
    return E.evaluate(e, _lookup(prec), prec)


def verify_identity(label: str, prec: int = DEFAULT_PREC) -> IdentityResult:
    """Check a stored identity: lhs - rhs vanishes, and printed leading terms match."""
    rows = {r["label"]: r for r in load_identities()}
    if label not in rows:
        raise KeyError(f"unknown identity {label!r}")
    row = rows[label]
    if "rhs" in row:
        lhs = evaluate_expression(row["lhs"], prec)
        rhs = evaluate_expression(row["rhs"], prec)
        diff = lhs.first_difference(rhs)
        if diff is not None:
            return IdentityResult(label, False, diff, "lhs != rhs")
        target = lhs
    else:
        target = evaluate_expression(row["lhs"], prec)
        z = target.valuation()
        if "prefix" not in row and z is not None:
            return IdentityResult(label, False, z, "relation is not zero")
    if "prefix" in row:
        for i, c in enumerate(row["prefix"]):
            if target[i] != Fraction(c):
                return IdentityResult(label, False, i, "printed leading terms differ")
    return IdentityResult(label, True, None)


def printed_variant_fails(label: str, prec: int = DEFAULT_PREC) -> Optional[bool]:
    """For identities stored with an erratum, confirm the uncorrected form is false.

    Returns None when the identity carries no printed variant.
    """
    row = {r["label"]: r for r in load_identities()}[label]
    if "printed" not in row:
        return None
    printed = evaluate_expression(row["printed"], prec)
    if "rhs" in row:
        return evaluate_expression(row["lhs"], prec).first_difference(printed) is not None
    return printed.valuation() is not None


def verify_all_identities(prec: int = DEFAULT_PREC) -> list[IdentityResult]:
    return [verify_identity(lab, prec) for lab in identity_labels()]


# ---------------------------------------------------------------------------
# newform catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NewformRecord:
    level: int
    weight: int
    signs: tuple[int, ...]
    label: str
    expression: object = field(compare=False)

    def expansion(self, prec: int = DEFAULT_PREC) -> QSeries:
        return newform_expansion(self.label, prec)

    @property
    def sign_text(self) -> str:
        return format_signs(self.signs)

    def bad_primes(self) -> list[int]:
        return [p for p, _ in prime_powers(self.level)]


def sign_word(signs: Sequence[int]) -> str:
    return "_".join("plus" if s > 0 else "minus" for s in signs)


def make_label(k: int, N: int, signs: Sequence[int], suffix: str = "") -> str:
    parts = [f"Delta_{k}_{N}"]
    if signs:
        parts.append(sign_word(signs))
    if suffix:
        parts.append(suffix)
    return "_".join(parts)


@lru_cache(maxsize=1)
def load_forms() -> tuple[NewformRecord, ...]:
    with _data_path("forms.json").open(encoding="utf-8") as fh:
        rows = json.load(fh)["rows"]
    return tuple(
        NewformRecord(r["N"], r["k"], tuple(r["signs"]), r["label"], r["expression"]) for r in rows
    )


def forms_by_label() -> dict[str, NewformRecord]:
    return {f.label: f for f in load_forms()}


@lru_cache(maxsize=512)
def newform_expansion(label: str, prec: int = DEFAULT_PREC) -> QSeries:
    """Exact expansion of a cataloged newform from its stored expression."""
    forms = forms_by_label()
    if label not in forms:
        raise KeyError(f"unknown newform {label!r}")
    return E.evaluate(forms[label].expression, lambda n: generator_series(n, prec), prec)


def polynomial_part(rec: NewformRecord):
    """The factor multiplying the cusp generator in a stored expression."""
    e = rec.expression
    cusp = ring_model(rec.level).cusp_generator
    if e == cusp:
        return 1
    if isinstance(e, list) and e[0] == "*" and e[-1] == cusp:
        rest = e[1:-1]
        return rest[0] if len(rest) == 1 else ["*", *rest]
    raise ValueError(f"{rec.label}: expression is not (polynomial) * {cusp}")


# ---------------------------------------------------------------------------
# exact Hecke eigenvector search
# ---------------------------------------------------------------------------


def _sturm(k: int, N: int) -> int:
    index = N
    for p, _ in prime_powers(N):
        index = index * (p + 1) // p
    return k * index // 12 + 1


def smallest_good_prime(N: int) -> int:
    return next(p for p in primes_upto(100) if N % p)


class FoundNewform(NamedTuple):
    signs: tuple[int, ...]
    eigenvalue: int
    coefficients: list  # Fractions, aligned with monomials
    monomials: list
    cusp_generator: str
    expansion: QSeries


def _is_new(g: QSeries, k: int, N: int, eps: Sequence[int]) -> bool:
    if g[1] != 1:
        return False
    P = g.precision
    if not g.is_integral():
        return False
    ap = {p: int(g[p]) for p in primes_upto(P - 1)}
    bad = [p for p, _ in prime_powers(N)]
    if multiplicative_extend(ap, bad, k, P) != g:
        return False
    for (p, e), s in zip(prime_powers(N), eps):
        try:
            got = al_sign_from_ap(ap[p], p, e, k)
        except ValueError:
            return False
        if e == 1 and got != s:
            return False
    return True


def rational_newforms(N: int, k: int, eps=(), extra: int = 4) -> list[FoundNewform]:
    """All newforms with rational coefficients in S^new_k(N)^eps.

    The Hecke operator T_p (p the smallest prime not dividing N) is computed
    exactly on the monomial basis of the signed search space; each rational
    root of its characteristic polynomial gives a candidate eigenvector,
    which is kept when it is normalized, integral, and passes the Euler
    product and Atkin-Lehner tests of a newform.
    """
    import sympy

    eps = parse_signs(eps)
    mons, cusp = signed_new_search_space(N, k, eps)
    if not mons:
        return []
    p = smallest_good_prime(N)
    M = _sturm(k, N) + extra
    P = p * (M + 1)
    look = lambda n: generator_series(n, P)
    cusp_series = generator_series(cusp, P)
    basis = [E.evaluate(E.monomial(m), look, P) * cusp_series for m in mons]
    d = len(basis)
    rows = sympy.Matrix([[b[n] for n in range(1, M + 1)] for b in basis])
    images = sympy.Matrix(
        [[t[n] for n in range(1, M + 1)] for t in (hecke_Tp(b, p, k) for b in basis)]
    )
    _, pivots = rows.rref()
    if len(pivots) != d:
        raise ArithmeticError("basis is not independent on the first coefficients")
    cols = list(pivots)
    T = images[:, cols] * rows[:, cols].inv()  # row i: T_p(b_i) in the basis
    x = sympy.Symbol("x")
    charpoly = T.charpoly(x).as_expr()
    found: list[FoundNewform] = []
    for fac, _mult in sympy.factor_list(charpoly, x)[1]:
        if sympy.degree(fac, x) != 1:
            continue
        lam = sympy.solve(fac, x)[0]
        null = (T.T - lam * sympy.eye(d)).nullspace()
        if len(null) != 1:
            raise ArithmeticError(f"eigenvalue {lam} has multiplicity {len(null)}")
        vec = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in null[0]]
        g = sum((b * c for b, c in zip(basis, vec)), QSeries.zero(P))
        a1 = g[1]
        if a1 == 0:
            continue
        vec = [c / a1 for c in vec]
        g = g * (1 / a1)
        if _is_new(g.truncate(M + 1), k, N, eps):
            found.append(FoundNewform(eps, int(lam), vec, mons, cusp, g))
    found.sort(key=lambda f: -f.eigenvalue)
    return found


def found_expression(f: FoundNewform):
    """Stored expression (sum c_i m_i) * cusp for a search result."""
    poly = E.linear_combination([(c, E.monomial(m)) for c, m in zip(f.coefficients, f.monomials)])
    if poly == 1:
        return f.cusp_generator
    return ["*", poly, f.cusp_generator]
