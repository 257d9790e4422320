"""Verification suites shared by the command line and the test-suite.

Each suite returns a list of :class:`Check` records; nothing here raises on
a failed check.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

from . import expr as E
from .arith import primes_upto
from .catalog import DATA_FILES, load_catalog, roundtrip_ok
from .dims import dim_new_signed_exact, mass, parse_signs
from .galrep import (
    congruent_series,
    delta_8_8_tuple_check,
    governance,
    match_form_to_poly,
    load_polys,
    mod7_chain_check,
    polys_by_label,
    sp_reduce,
    sturm_bound,
    surjectivity_witness,
    weight_from_disc,
)
from .heuristic import count_quadratics, pr_of_weight, volume
from .qseries import DEFAULT_PREC, multiplicative_extend, verify_eigenform
from .rings import (
    forms_by_label,
    generator_series,
    load_forms,
    newform_expansion,
    polynomial_part,
    printed_variant_fails,
    ring_model,
    verify_all_identities,
)


class Check(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str = ""


SUITES = ("rings", "dims", "heuristic", "galrep")


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------


def identity_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for r in verify_all_identities(prec):
        detail = "" if r.passed else f"{r.detail} at q^{r.first_failure}"
        out.append(Check("rings", f"identity {r.label}", r.passed, detail))
    return out


def erratum_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    from .rings import identity_labels

    out = []
    for lab in identity_labels():
        fails = printed_variant_fails(lab, prec)
        if fails is not None:
            out.append(Check("rings", f"printed variant of {lab} is false", fails))
    return out


def eigenform_checks(pmax: int = 50, prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for f in load_forms():
        g = f.expansion(prec)
        bad = verify_eigenform(g, f.weight, f.level, pmax)
        out.append(Check("rings", f"eigenform {f.label}", bad is None, "" if bad is None else f"T_{bad}"))
    return out


def multiplicativity_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for f in load_forms():
        g = f.expansion(prec)
        ap = {p: int(g[p]) for p in primes_upto(prec - 1)}
        h = multiplicative_extend(ap, f.bad_primes(), f.weight, prec)
        diff = g.first_difference(h)
        out.append(
            Check("rings", f"euler product {f.label}", diff is None, "" if diff is None else f"a_{diff}")
        )
    return out


def al_sign_checks() -> list[Check]:
    from .dims import prime_powers
    from .qseries import al_sign_from_ap

    out = []
    for f in load_forms():
        g = f.expansion(20)
        ok = True
        for (p, e), s in zip(prime_powers(f.level), f.signs):
            try:
                got = al_sign_from_ap(int(g[p]), p, e, f.weight)
            except ValueError:
                ok = False
                continue
            if e == 1 and got != s:
                ok = False
        out.append(Check("rings", f"atkin-lehner {f.label}", ok))
    return out


def principality_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for f in load_forms():
        cusp = ring_model(f.level).cusp_generator
        g = f.expansion(prec)
        quo = g.divide_exact(generator_series(cusp, prec))
        poly = E.evaluate(polynomial_part(f), lambda n: generator_series(n, prec), prec)
        ok = quo.first_difference(poly.truncate(quo.precision)) is None
        out.append(Check("rings", f"cusp generator divides {f.label}", ok))
    return out


_LEVEL4_SUB = {"Q": "Q2", "R": "R2", "Delta": "Delta_6_4"}


def level4_shift_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    """The six level 4 forms are the level 1 forms under Q, R, Delta -> Q2, R2, Delta_6_4."""
    forms = {(f.level, f.weight): f for f in load_forms()}
    out = []
    for (N, k), f in sorted(forms.items()):
        if N != 1:
            continue
        target = forms.get((4, k - 6))
        if target is None:
            out.append(Check("rings", f"level 4 shift of {f.label}", False, "no level 4 partner"))
            continue
        shifted = E.evaluate(E.substitute(f.expression, _LEVEL4_SUB), lambda n: generator_series(n, prec), prec)
        ok = shifted == target.expansion(prec)
        out.append(Check("rings", f"level 4 shift {f.label} -> {target.label}", ok))
    return out


def level8_isolation_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for f in load_forms():
        if f.level != 8:
            continue
        syms = E.symbols(f.expression)
        ok = syms <= {"A2", "B2", "Delta_8_4"} and "Delta_8_4" in syms
        out.append(Check("rings", f"level 8 isolation {f.label}", ok))
    return out


def relation_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for N in (1, 2, 3, 4, 6, 8):
        m = ring_model(N)
        for rel in m.relations:
            z = E.evaluate(rel, lambda n: generator_series(n, prec), prec)
            out.append(Check("rings", f"relation at level {N}: {E.to_text(rel)}", z.valuation() is None))
        c = generator_series(m.cusp_generator, prec)
        out.append(Check("rings", f"cusp generator {m.cusp_generator} = q + O(q^2)", c[0] == 0 and c[1] == 1))
    return out


def rings_suite(prec: int = DEFAULT_PREC, pmax: int = 50) -> list[Check]:
    return (
        identity_checks(prec)
        + erratum_checks(prec)
        + relation_checks(prec)
        + eigenform_checks(min(pmax, 50), prec)
        + multiplicativity_checks(prec)
        + al_sign_checks()
        + principality_checks(prec)
        + level4_shift_checks(prec)
        + level8_isolation_checks(prec)
    )


# ---------------------------------------------------------------------------
# dims
# ---------------------------------------------------------------------------


def table2_checks() -> list[Check]:
    out = []
    for row in load_catalog().table2:
        bad = [
            k for k in range(2, 52, 2)
            if dim_new_signed_exact(row.N, k, row.eps) != row.dim(k)
        ]
        out.append(Check("dims", f"table 2 row N={row.N} eps={row.eps or '.'}", not bad,
                         "" if not bad else f"weights {bad}"))
        m = mass(row.N, row.eps)
        out.append(Check("dims", f"mass N={row.N} eps={row.eps or '.'}", m == row.mass, f"{m} vs {row.mass}"))
    return out


def dims_suite(**_) -> list[Check]:
    out = table2_checks()
    forms = load_forms()
    cat = load_catalog()
    for row in cat.table2:
        for k, n in row.rational.items():
            have = sum(1 for f in forms if f.level == row.N and f.weight == k and f.signs == parse_signs(row.eps))
            out.append(Check("dims", f"rational count N={row.N} k={k} eps={row.eps or '.'}", have == n))
    for name in DATA_FILES:
        out.append(Check("dims", f"round trip {name}", roundtrip_ok(name)))
    return out


# ---------------------------------------------------------------------------
# heuristic
# ---------------------------------------------------------------------------


def _sig(x: float, figures: int) -> float:
    return float(f"{x:.{figures - 1}e}")


def heuristic_suite(**_) -> list[Check]:
    w = 2 ** 2.5
    out = [
        Check("heuristic", "V_2(2^(5/2)) = 1930.9", abs(volume(2, w) - 1930.9) <= 0.05, f"{volume(2, w):.4f}"),
        Check("heuristic", "quadratics at w = 2^(5/2)", count_quadratics(w) == (1951, 276), str(count_quadratics(w))),
    ]
    for k, printed in ((6, "13.3"), (16, "0.4"), (22, "0.05")):
        pct = 100 * pr_of_weight(1, 1, k)
        decimals = len(printed.split(".")[1])
        out.append(Check("heuristic", f"Pr_1,1({k}) = {printed}%", f"{pct:.{decimals}f}" == printed, f"{pct:.5f}%"))
    v = pr_of_weight(1, 2, 6)
    out.append(Check("heuristic", "Pr_2,1(6) = 5.8% (printed truncated)", math.floor(1000 * v) == 58, f"{v:.4e}"))
    for r, s, k, printed in ((4, 1, 6, 2.4e-3), (1, 12, 10, 2.2e-16), (1, 83, 4, 3.4e-37)):
        v = pr_of_weight(min(r, s), max(r, s), k)
        out.append(Check("heuristic", f"Pr_{r},{s}({k}) = {printed:.1e}", _sig(v, 2) == printed, f"{v:.4e}"))
    return out


# ---------------------------------------------------------------------------
# galrep
# ---------------------------------------------------------------------------


def congruence_checks(prec: int = DEFAULT_PREC) -> list[Check]:
    out = []
    for a, b, m, k, N in (
        ("Delta_22_3_plus_a", "Delta_22_3_plus_b", 4572, 22, 3),
        ("Delta_16_8_minus_a", "Delta_16_8_minus_b", 6144, 16, 8),
    ):
        bound = max(sturm_bound(k, N), 11)
        ok = congruent_series(newform_expansion(a, prec), newform_expansion(b, prec), m, bound)
        out.append(Check("galrep", f"{a} = {b} mod {m} through q^{bound}", ok))
    for res in mod7_chain_check(prec):
        out.append(Check("galrep", f"mod 7 chain {res.labels[0]}..{res.labels[-1]}",
                         res.congruent and res.matches_printed, f"residual {res.residual}"))
    t = delta_8_8_tuple_check()
    out.append(Check("galrep", "Delta_8_8 tuple: residues mod 3 and chi_-3 sign flips",
                     t.residues_match_mod3 and t.flips_match_chi, f"a_p mod 3 {t.residues_mod3}"))
    return out


def poly_invariant_checks() -> list[Check]:
    out = []
    for p in load_polys():
        out.append(Check("galrep", f"{p.label}: discriminant primes divide N*ell", p.disc_primes_ok()))
        out.append(Check("galrep", f"{p.label}: discriminant square class", p.disc_square_class_ok()))
        out.append(Check("galrep", f"{p.label}: disc(f) is D times a nonzero square", p.index_square() is not None))
    return out


def governance_checks(pmax: int = 200) -> list[Check]:
    out = []
    polys = polys_by_label()
    for ell in (2, 3, 5, 7):
        g = governance(ell, pmax)
        for label, forms in g.governed.items():
            poly = polys[label]
            out.append(Check("galrep", f"ell={ell}: {label} governs {poly.governs} forms",
                             len(forms) == poly.governs and poly.irreducible_squarefree(),
                             f"found {len(forms)}"))
            forced = weight_from_disc(poly)
            if forced is not None and forms:
                low = min(int(f.split("_")[1]) for f in forms)
                out.append(Check("galrep", f"ell={ell}: {label} lowest weight {forced}", low == forced,
                                 f"lowest governed weight {low}"))
        out.append(Check("galrep", f"ell={ell}: every other form degenerate",
                         not g.unresolved, f"unresolved {g.unresolved}"))
        out.append(Check("galrep", f"ell={ell}: no form matches two polynomials", not g.ambiguous,
                         f"ambiguous {g.ambiguous}"))
    return out


def disambiguation_checks() -> list[Check]:
    polys = polys_by_label()
    forms = forms_by_label()
    gp = newform_expansion("Delta_8_8_plus", 10)
    gm = newform_expansion("Delta_8_8_minus", 10)
    s_plus, s_minus = sp_reduce(int(gp[3]), 3, 8, 7), sp_reduce(int(gm[3]), 3, 8, 7)
    lc, ld = polys["F_8c"].field_lambda_p(3), polys["F_8d"].field_lambda_p(3)
    cross = match_form_to_poly(forms["Delta_8_8_plus"], polys["F_8d"])
    return [
        Check("galrep", "s_3 of Delta_8_8^+ and Delta_8_8^- in F_7 are 6 and 0", (s_plus, s_minus) == (6, 0)),
        Check("galrep", "lambda_3 of F_8c is [8]", lc == (8,), str(lc)),
        Check("galrep", "lambda_3 of F_8d is [2,2,2,1,1]", ld == (2, 2, 2, 1, 1), str(ld)),
        Check("galrep", "Delta_8_8^+ against F_8d fails at p = 3", cross.failed_at == 3, str(cross.failed_at)),
    ]


def galrep_suite(prec: int = DEFAULT_PREC, pmax: int = 200) -> list[Check]:
    out = congruence_checks(prec) + poly_invariant_checks() + governance_checks(pmax) + disambiguation_checks()
    for p in load_polys():
        if not p.irreducible_squarefree():
            continue
        w = surjectivity_witness(p)
        out.append(Check("galrep", f"{p.label}: every s in F_{p.ell} witnessed below 500",
                         all(v is not None for v in w.values()), str(w)))
    return out


SUITE_FUNCS: dict[str, Callable[..., list[Check]]] = {
    "rings": rings_suite,
    "dims": dims_suite,
    "heuristic": heuristic_suite,
    "galrep": galrep_suite,
}


def run_suites(names, prec: int = DEFAULT_PREC, pmax: int = 200) -> list[Check]:
    if names == "all" or names == ["all"]:
        names = SUITES
    out: list[Check] = []
    for n in names:
        out.extend(SUITE_FUNCS[n](prec=prec, pmax=pmax))
    return out
