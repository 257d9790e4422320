"""Command line front end: ``ratnewforms <subcommand> [options]``.

Exit status is 0 when everything requested passed, 1 when a verification
failed and 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import expr as E
from .catalog import SchemaError, load_catalog
from .dims import dim_new_signed_exact, format_signs, mass, parse_signs, sign_strings
from .galrep import governance, match_form_to_poly, polys_by_label
from .heuristic import count_quadratics, pr_of_weight, quadratic_points, volume
from .qseries import QSeries, to_dense_list
from .rings import evaluate_expression, forms_by_label, newform_expansion
from .suites import SUITE_FUNCS, SUITES, Check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def pretty(g: QSeries) -> str:
    """Human form: q - 24q^2 + 252q^3 + O(q^4)."""
    out = []
    for n, c in enumerate(g.coeffs):
        if not c:
            continue
        mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
        mag = abs(c)
        body = str(mag) if (mag != 1 or not mono) else ""
        sign = "-" if c < 0 else "+"
        out.append((sign, body + mono))
    text = " ".join(f"{s} {t}" for s, t in out)
    if text.startswith("+ "):
        text = text[2:]
    elif text.startswith("- "):
        text = "-" + text[2:]
    tail = f"O(q^{g.precision})"
    return f"{text} + {tail}" if text else tail


def _emit(args, plain: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(plain)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_expand(args) -> int:
    if args.label:
        forms = forms_by_label()
        if args.label not in forms:
            raise UsageError(f"unknown label {args.label!r}; try `catalog --forms`")
        g = newform_expansion(args.label, args.prec)
        source = args.label
    else:
        try:
            e = json.loads(args.expr)
            g = evaluate_expression(e, args.prec)
        except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"bad expression: {exc}") from exc
        source = args.expr
    _emit(args, pretty(g), {"source": source, "prec": g.precision, "coeffs": to_dense_list(g)})
    return EXIT_OK


def _run_suite(name: str, prec: int, pmax: int) -> list[Check]:
    return SUITE_FUNCS[name](prec=prec, pmax=pmax)


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_suite, names, [args.prec] * len(names), [args.pmax] * len(names)))
    else:
        results = [_run_suite(n, args.prec, args.pmax) for n in names]
    checks = sorted((c for r in results for c in r), key=lambda c: (SUITES.index(c.suite), c.name))
    failed = [c for c in checks if not c.passed]
    summary = {
        n: {"passed": sum(c.passed for c in checks if c.suite == n),
            "failed": sum(not c.passed for c in checks if c.suite == n)}
        for n in names
    }
    if args.format == "json":
        print(json.dumps({"summary": summary, "checks": [c._asdict() for c in checks]}, indent=2))
    else:
        for c in checks:
            if args.verbose or not c.passed:
                tag = "PASS" if c.passed else "FAIL"
                extra = f"  ({c.detail})" if c.detail and not c.passed else ""
                print(f"{tag} [{c.suite}] {c.name}{extra}")
        for n, s in summary.items():
            print(f"{n}: {s['passed']} passed, {s['failed']} failed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_dims(args) -> int:
    levels = [args.level] if args.level else [1, 2, 3, 4, 6, 8]
    weights = [args.weight] if args.weight else list(range(2, args.kmax + 1, 2))
    rows = []
    for N in levels:
        epss = [parse_signs(args.eps)] if args.eps is not None else sign_strings(N)
        for eps in epss:
            try:
                dims = {k: dim_new_signed_exact(N, k, eps) for k in weights}
                m = mass(N, eps)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            rows.append({"N": N, "eps": format_signs(eps), "mass": str(m), "dims": dims})
    lines = []
    for r in rows:
        cells = " ".join(f"{r['dims'][k]:>3}" if r["dims"][k] else "  ." for k in weights)
        lines.append(f"N={r['N']:<2} {r['eps'] or '.':<3} m={r['mass']:<4} {cells}")
    header = "weights        " + " ".join(f"{k:>3}" for k in weights)
    _emit(args, "\n".join([header, *lines]), rows)
    return EXIT_OK


def cmd_heuristic(args) -> int:
    if args.figure2:
        w = 2 ** 2.5
        total, split = count_quadratics(w)
        pts = quadratic_points(w)
        plain = [f"w = 2^(5/2): {total} quadratics, {split} split, area {volume(2, w):.4f}"]
        if args.points:
            plain += [f"{p.b} {p.c} {'split' if p.split else 'irreducible'}" for p in pts]
        _emit(args, "\n".join(plain),
              {"w": w, "total": total, "split": split, "area": volume(2, w),
               "points": [p._asdict() for p in pts]})
        return EXIT_OK
    r, s = sorted((args.r, args.s))
    if r < 1:
        raise UsageError("r and s must be positive")
    v = pr_of_weight(r, s, args.k, args.p)
    _emit(args, f"Pr_{r},{s}({args.k}) at p={args.p}: {v:.6e}", {"r": r, "s": s, "k": args.k, "p": args.p, "prob": v})
    return EXIT_OK


def cmd_galrep(args) -> int:
    polys = polys_by_label()
    if args.label or args.poly:
        if not (args.label and args.poly):
            raise UsageError("--label and --poly go together")
        forms = forms_by_label()
        if args.label not in forms or args.poly not in polys:
            raise UsageError("unknown form or polynomial label")
        v = match_form_to_poly(forms[args.label], polys[args.poly], args.pmax)
        where = "" if v.consistent else f" (first conflict at p={v.failed_at})"
        _emit(args, f"{v.form} vs {v.poly} at ell={v.ell}: "
                    f"{'consistent' if v.consistent else 'inconsistent'}{where}", v.as_dict())
        return EXIT_OK if v.consistent else EXIT_FAIL
    ells = [args.ell] if args.ell else [2, 3, 5, 7]
    bad = False
    payload = []
    lines = []
    for ell in ells:
        g = governance(ell, args.pmax)
        payload.append(g._asdict())
        lines.append(f"ell = {ell}")
        for lab, fl in g.governed.items():
            want = polys[lab].governs
            mark = "" if len(fl) == want else f"  [expected {want}]"
            lines.append(f"  {lab}: {len(fl)} forms{mark}")
            bad |= len(fl) != want
        lines.append(f"  degenerate: {len(g.degenerate)}")
        if g.unresolved:
            lines.append(f"  unresolved: {', '.join(g.unresolved)}")
        bad |= bool(g.unresolved or g.ambiguous)
    _emit(args, "\n".join(lines), payload)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_catalog(args) -> int:
    cat = load_catalog()
    if args.summatory is not None:
        k, x = args.summatory
        try:
            v = cat.summatory(k, x)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(args, str(v), {"k": k, "x": x, "value": v})
        return EXIT_OK
    if args.forms:
        fs = [f for f in forms_by_label().values()
              if (args.level is None or f.level == args.level) and (args.weight is None or f.weight == args.weight)]
        _emit(args, "\n".join(f"{f.label:<24} {E.to_text(f.expression)}" for f in fs),
              [{"label": f.label, "N": f.level, "k": f.weight, "signs": list(f.signs),
                "expression": f.expression} for f in fs])
        return EXIT_OK
    es = cat.query(args.level, args.weight)
    _emit(args, "\n".join(f"N={e.N:<3} k={e.k:<3} count={e.count} unforced={e.unforced}"
                          + (f"  {' '.join(e.labels)}" if e.labels else "") for e in es) or "(no entries)",
          [{"N": e.N, "k": e.k, "count": e.count, "unforced": e.unforced, "labels": list(e.labels)} for e in es])
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=_positive, default=200, help="series precision (default 200)")
    common.add_argument("--pmax", type=_positive, default=200, help="largest prime checked (default 200)")
    common.add_argument("--format", choices=("plain", "json"), default="plain")

    ap = argparse.ArgumentParser(prog="ratnewforms", description="Rational newforms of small level.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="q-expansion of a newform or expression")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--label", help="catalog label, e.g. Delta_22_3_plus_a")
    g.add_argument("--expr", help='JSON expression, e.g. \'["*", "Q", "Delta"]\'')
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--jobs", type=_positive, default=1, help="run suites in parallel processes")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", parents=[common], help="signed new-subspace dimensions")
    p.add_argument("--level", type=int)
    p.add_argument("--weight", type=int)
    p.add_argument("--eps", help="sign string such as +- (level 6)")
    p.add_argument("--kmax", type=int, default=50)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("heuristic", parents=[common], help="factorization heuristic")
    p.add_argument("--figure2", action="store_true", help="count quadratics at w = 2^(5/2)")
    p.add_argument("--points", action="store_true", help="with --figure2, list every point")
    p.add_argument("-r", type=int, default=1)
    p.add_argument("-s", type=int, default=1)
    p.add_argument("-k", type=int, default=6)
    p.add_argument("-p", type=int, default=2)
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("galrep", parents=[common], help="mod-ell projective Galois matching")
    p.add_argument("--ell", type=int, choices=(2, 3, 5, 7))
    p.add_argument("--label", help="form label (with --poly)")
    p.add_argument("--poly", help="polynomial label (with --label)")
    p.set_defaults(func=cmd_galrep)

    p = sub.add_parser("catalog", parents=[common], help="query stored tables")
    p.add_argument("--level", type=int)
    p.add_argument("--weight", type=int)
    p.add_argument("--forms", action="store_true", help="list cataloged newforms")
    p.add_argument("--summatory", type=int, nargs=2, metavar=("K", "X"))
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ratnewforms {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SchemaError, OSError) as exc:
        print(f"ratnewforms: data error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
