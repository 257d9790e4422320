"""Catalog data model: the shipped JSON assets, Table 1 twist-class counts,
Table 2 signed dimensions, and summatory functions.

Every data file is a JSON object whose list-valued members are written one
element per line, so the files diff cleanly and round-trip byte for byte
through :func:`load_document` / :func:`dumps_document`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Optional, Union

from .arith import is_quadfree, t_multiplicity

DATA_FILES = ("table1.json", "table2.json", "forms.json", "polys.json", "identities.json")


class SchemaError(ValueError):
    """A data file does not match its documented schema."""


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _line(x: Any) -> str:
    return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))


def dumps_document(doc: dict) -> str:
    """Deterministic text form: top-level lists one element per line."""
    parts = []
    for key, value in doc.items():
        head = f"  {_line(key)}: "
        if isinstance(value, list):
            if not value:
                parts.append(head + "[]")
            else:
                body = ",\n".join("    " + _line(v) for v in value)
                parts.append(head + "[\n" + body + "\n  ]")
        else:
            parts.append(head + _line(value))
    return "{\n" + ",\n".join(parts) + "\n}\n"


def data_path(name: str):
    return resources.files("ratnewforms") / "data" / name


def read_text(name_or_path: Union[str, Path]) -> str:
    p = Path(name_or_path)
    if p.exists():
        return p.read_text(encoding="utf-8")
    return data_path(str(name_or_path)).read_text(encoding="utf-8")


def load_document(name_or_path: Union[str, Path]) -> dict:
    text = read_text(name_or_path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{name_or_path}: line {exc.lineno}: {exc.msg}") from exc


# ---------------------------------------------------------------------------
# schema checks
# ---------------------------------------------------------------------------

_ROW_FIELDS = {
    "table1.json": {"N": int, "k": int, "count": int, "unforced": int},
    "table2.json": {"N": int, "eps": str, "m": str, "dims": dict, "rational": dict},
    "forms.json": {"N": int, "k": int, "signs": list, "label": str, "expression": (list, str, int)},
    "polys.json": {
        "label": str, "ell": int, "level": int, "coeffs": list, "disc": list, "governs": int,
    },
    "identities.json": {"label": str, "lhs": (list, str, int)},
}


def validate(name: str, doc: dict) -> None:
    """Raise SchemaError naming the first offending row and field."""
    if "rows" not in doc or not isinstance(doc["rows"], list):
        raise SchemaError(f"{name}: missing 'rows' list")
    fields = _ROW_FIELDS.get(Path(name).name, {})
    for i, row in enumerate(doc["rows"]):
        # rows start on line 3 or later; report the 1-based row index
        for key, typ in fields.items():
            if key not in row:
                raise SchemaError(f"{name}: row {i + 1}: missing field {key!r}")
            if not isinstance(row[key], typ) or isinstance(row[key], bool):
                raise SchemaError(f"{name}: row {i + 1}: field {key!r} has wrong type")
        if Path(name).name == "table1.json":
            if row["count"] < 0 or not 0 <= row["unforced"] <= min(2, row["count"]):
                raise SchemaError(f"{name}: row {i + 1}: bad count/unforced")


# ---------------------------------------------------------------------------
# catalog model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    N: int
    k: int
    count: int
    unforced: int
    labels: tuple[str, ...] = ()


@dataclass(frozen=True)
class TwistClass:
    representative: str
    level: int

    @property
    def multiplicity(self) -> int:
        return t_multiplicity(self.level)

    @property
    def quadfree(self) -> bool:
        return is_quadfree(self.level)


@dataclass(frozen=True)
class Table2Row:
    N: int
    eps: str
    mass: Fraction
    dims: dict  # k -> dimension, blanks omitted
    rational: dict  # k -> number of rational newforms (boldface cells)

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    bottom: dict
    table2: tuple[Table2Row, ...]
    max_level: int = 30

    def query(self, N: Optional[int] = None, k: Optional[int] = None, eps: Optional[str] = None):
        """Table 1 entries filtered on N and k; with eps, Table 2 rows instead."""
        if eps is not None:
            return [
                r for r in self.table2 if (N is None or r.N == N) and r.eps == eps
            ]
        return [e for e in self.entries if (N is None or e.N == N) and (k is None or e.k == k)]

    def count(self, N: int, k: int) -> int:
        return sum(e.count for e in self.query(N, k))

    def summatory(self, k: int, x: int) -> int:
        """#_k(x) = sum of |Q_k(N)| over N <= x."""
        if x > self.max_level:
            raise ValueError(f"stored data only covers N <= {self.max_level}")
        return sum(e.count for e in self.entries if e.k == k and e.N <= x)

    def twist_classes(self) -> list[TwistClass]:
        out = []
        for e in self.entries:
            names = e.labels or tuple(f"N{e.N}k{e.k}#{i + 1}" for i in range(e.count))
            out.extend(TwistClass(n, e.N) for n in names)
        return out


def _labels_by_cell() -> dict:
    from .rings import load_forms

    cells: dict = {}
    for f in load_forms():
        cells.setdefault((f.level, f.weight), []).append(f.label)
    return cells


@lru_cache(maxsize=4)
def load_catalog(table1: str = "table1.json", table2: str = "table2.json") -> Catalog:
    d1, d2 = load_document(table1), load_document(table2)
    validate(table1, d1)
    validate(table2, d2)
    cells = _labels_by_cell()
    entries = tuple(
        CatalogEntry(r["N"], r["k"], r["count"], r["unforced"], tuple(cells.get((r["N"], r["k"]), ())))
        for r in d1["rows"]
    )
    rows = tuple(
        Table2Row(
            r["N"],
            r["eps"],
            Fraction(r["m"]),
            {int(k): v for k, v in r["dims"].items()},
            {int(k): v for k, v in r["rational"].items()},
        )
        for r in d2["rows"]
    )
    return Catalog(entries, d1.get("bottom", {}), rows)


def query(N: Optional[int] = None, k: Optional[int] = None, eps: Optional[str] = None):
    return load_catalog().query(N, k, eps)


def summatory(k: int, x: int) -> int:
    return load_catalog().summatory(k, x)


def roundtrip_ok(name: str) -> bool:
    text = read_text(name)
    return dumps_document(json.loads(text)) == text
