"""Polynomial expressions over named generators, stored as nested JSON arrays.

Grammar::

    expr := int                      integer constant
          | ["frac", num, den]       rational constant
          | "Name"                   generator or catalog symbol
          | ["+", expr, ...]         sum
          | ["*", expr, ...]         product
          | ["^", expr, int]         power (int may be negative for constants)

Evaluation order is fixed left to right.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Mapping, Union

from .qseries import QSeries

Expr = Any


def frac(x: Union[int, Fraction]) -> Expr:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else ["frac", x.numerator, x.denominator]


def symbols(e: Expr) -> set[str]:
    if isinstance(e, str):
        return {e}
    if isinstance(e, int) or (isinstance(e, list) and e and e[0] == "frac"):
        return set()
    if isinstance(e, list) and e[0] in ("+", "*"):
        out: set[str] = set()
        for x in e[1:]:
            out |= symbols(x)
        return out
    if isinstance(e, list) and e[0] == "^":
        return symbols(e[1])
    raise ValueError(f"malformed expression node {e!r}")


def constant_value(e: Expr) -> Fraction | None:
    """Value of a symbol-free expression, else None."""
    if isinstance(e, bool):
        raise ValueError("booleans are not expressions")
    if isinstance(e, int):
        return Fraction(e)
    if isinstance(e, list) and e and e[0] == "frac":
        return Fraction(e[1], e[2])
    if isinstance(e, str):
        return None
    op, args = e[0], e[1:]
    if op == "^":
        base = constant_value(args[0])
        return None if base is None else base ** args[1]
    if op not in ("+", "*"):
        raise ValueError(f"unknown operator {op!r}")
    vals = [constant_value(a) for a in args]
    if any(v is None for v in vals):
        return None
    acc = Fraction(0 if op == "+" else 1)
    for v in vals:
        acc = acc + v if op == "+" else acc * v
    return acc


def evaluate(e: Expr, lookup: Callable[[str], QSeries], prec: int) -> QSeries:
    """Evaluate to a QSeries of precision ``prec``."""
    c = constant_value(e)
    if c is not None:
        return QSeries([c], prec)
    if isinstance(e, str):
        g = lookup(e)
        return g if g.precision == prec else g.truncate(prec)
    op, args = e[0], e[1:]
    if op == "^":
        n = args[1]
        if not isinstance(n, int) or n < 0:
            raise ValueError("symbolic powers need a non-negative integer exponent")
        return evaluate(args[0], lookup, prec) ** n
    if op == "*":
        scalar = Fraction(1)
        acc = None
        for a in args:
            v = constant_value(a)
            if v is not None:
                scalar *= v
                continue
            s = evaluate(a, lookup, prec)
            acc = s if acc is None else acc * s
        return acc * scalar
    if op == "+":
        acc = QSeries.zero(prec)
        for a in args:
            acc = acc + evaluate(a, lookup, prec)
        return acc
    raise ValueError(f"unknown operator {op!r}")


def weight(e: Expr, weights: Mapping[str, Fraction]) -> Fraction | None:
    """Homogeneous weight of an expression, or None if inhomogeneous."""
    if constant_value(e) is not None:
        return Fraction(0)
    if isinstance(e, str):
        return Fraction(weights[e])
    op, args = e[0], e[1:]
    if op == "^":
        w = weight(args[0], weights)
        return None if w is None else w * args[1]
    ws = [weight(a, weights) for a in args]
    if any(w is None for w in ws):
        return None
    if op == "*":
        return sum(ws, Fraction(0))
    nonconst = [w for a, w in zip(args, ws) if constant_value(a) is None or constant_value(a) != 0]
    return nonconst[0] if all(w == nonconst[0] for w in nonconst) else None


def monomial(exps: Mapping[str, int]) -> Expr:
    """["*", ["^", g, e], ...] for the nonzero exponents (1 for the empty monomial)."""
    parts = [name if e == 1 else ["^", name, e] for name, e in exps.items() if e]
    if not parts:
        return 1
    return parts[0] if len(parts) == 1 else ["*", *parts]


def linear_combination(terms: list[tuple[Fraction, Expr]]) -> Expr:
    out = []
    for c, m in terms:
        if c == 0:
            continue
        if m == 1:
            out.append(frac(c))
        elif c == 1:
            out.append(m)
        else:
            out.append(["*", frac(c), m])
    if not out:
        return 0
    return out[0] if len(out) == 1 else ["+", *out]


def to_text(e: Expr) -> str:
    """Human-readable rendering, e.g. ``2^-8*(A^4 - B^2)``."""
    c = constant_value(e) if not isinstance(e, str) else None
    if c is not None:
        return str(c)
    if isinstance(e, str):
        return e
    op, args = e[0], e[1:]
    if op == "^":
        inner = to_text(args[0])
        if not isinstance(args[0], (str, int)):
            inner = f"({inner})"
        return f"{inner}^{args[1]}"
    if op == "*":
        lead = constant_value(args[0]) if len(args) > 1 and not isinstance(args[0], str) else None
        if lead in (1, -1):
            rest = to_text(["*", *args[1:]] if len(args) > 2 else args[1])
            if len(args) == 2 and isinstance(args[1], list) and args[1][0] == "+":
                rest = f"({rest})"
            return rest if lead == 1 else f"-{rest}"
        parts = []
        for a in args:
            t = to_text(a)
            if isinstance(a, list) and a[0] == "+":
                t = f"({t})"
            parts.append(t)
        return "*".join(parts)
    text = " + ".join(to_text(a) for a in args)
    return text.replace("+ -", "- ")


def substitute(e: Expr, mapping: Mapping[str, Expr]) -> Expr:
    """Replace symbols by expressions."""
    if isinstance(e, str):
        return mapping.get(e, e)
    if isinstance(e, int) or (isinstance(e, list) and e[0] == "frac"):
        return e
    if e[0] == "^":
        return ["^", substitute(e[1], mapping), e[2]]
    return [e[0], *[substitute(a, mapping) for a in e[1:]]]
