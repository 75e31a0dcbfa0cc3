"""JSON and CSV encodings of fields, elements, polynomials, bases, tables and reports.

Coefficients are always listed lowest degree first.  A prime-field element is
an integer in ``[0, p)``; an extension element is the list of its base-field
encodings.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .basis import MultTable, OrderedBasis
from .field import ExtensionField, Field, FieldElement, PrimeField
from .linalg import Matrix
from .onb1 import TheoremReport
from .poly import Polynomial
from .sweep import RunReport


class SerializationError(ValueError):
    """Malformed input, with a 1-based position when one is known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


def field_to_json(F: Field) -> dict:
    if isinstance(F, PrimeField):
        return {"p": F.p}
    return {"base": field_to_json(F.base), "modulus": [F.base.to_nested(c) for c in F.modulus]}


def field_from_json(data: Any) -> Field:
    if not isinstance(data, dict):
        raise SerializationError(f"field descriptor must be an object, got {data!r}")
    try:
        if set(data) == {"p"}:
            return PrimeField(data["p"])
        if set(data) == {"base", "modulus"}:
            base = field_from_json(data["base"])
            return ExtensionField(base, [base(c) for c in data["modulus"]])
    except (TypeError, ValueError) as exc:
        raise SerializationError(f"bad field descriptor: {exc}") from exc
    raise SerializationError(f"unrecognised field descriptor keys {sorted(data)}")


def element_to_json(e: FieldElement) -> Any:
    return e.to_nested()


def element_from_json(F: Field, data: Any) -> FieldElement:
    try:
        return FieldElement(F, F.raw_from_nested(data))
    except (TypeError, ValueError) as exc:
        raise SerializationError(f"bad element for {F}: {exc}") from exc


def report_to_json(r: RunReport, stable: bool = False) -> dict:
    out = {
        "q": {"p": r.p, "m": r.m},
        "n": r.n,
        "c_primal": r.c_primal,
        "c_dual": r.c_dual,
        "expected_dual": r.expected_dual,
        "structured_match": r.structured_match,
        "pass": r.passed,
    }
    if not stable:
        out["meta"] = {"elapsed_ms": r.elapsed_ms}
    return out


def report_from_json(data: dict) -> RunReport:
    try:
        return RunReport(
            p=data["q"]["p"], m=data["q"]["m"], n=data["n"],
            c_primal=data["c_primal"], c_dual=data["c_dual"],
            expected_dual=data["expected_dual"],
            structured_match=data["structured_match"], passed=data["pass"],
            elapsed_ms=data.get("meta", {}).get("elapsed_ms", 0.0),
        )
    except (KeyError, TypeError) as exc:
        raise SerializationError(f"bad run report: missing or malformed {exc}") from exc


def to_json(obj) -> dict:
    """Self-describing JSON value (with a ``type`` tag) for a supported object."""
    if isinstance(obj, FieldElement):
        return {"type": "element", "field": field_to_json(obj.field), "value": obj.to_nested()}
    if isinstance(obj, Polynomial):
        return {"type": "polynomial", "field": field_to_json(obj.field), "coeffs": obj.to_nested()}
    if isinstance(obj, Matrix):
        return {"type": "matrix", "field": field_to_json(obj.field), "rows": obj.to_nested()}
    if isinstance(obj, OrderedBasis):
        return {"type": "basis", "field": field_to_json(obj.field), "kind": obj.kind,
                "elements": [e.to_nested() for e in obj.elements]}
    if isinstance(obj, MultTable):
        return {"type": "table", "field": field_to_json(obj.generator.field),
                "generator": obj.generator.to_nested(), "table": obj.entries.to_nested(),
                "complexity": obj.complexity()}
    if isinstance(obj, TheoremReport):
        return {"type": "theorem", "c_primal": obj.c_primal, "c_dual": obj.c_dual,
                "expected_dual": obj.expected_dual, "structured_match": obj.structured_match,
                "pass": obj.passed}
    if isinstance(obj, RunReport):
        return {"type": "report", **report_to_json(obj)}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def from_json(data: Any):
    if not isinstance(data, dict) or "type" not in data:
        raise SerializationError("expected an object with a 'type' tag")
    kind = data["type"]
    try:
        if kind == "report":
            return report_from_json(data)
        if kind == "theorem":
            return TheoremReport(data["c_primal"], data["c_dual"], data["expected_dual"],
                                 data["structured_match"], data["pass"])
        F = field_from_json(data["field"])
        if kind == "element":
            return element_from_json(F, data["value"])
        if kind == "polynomial":
            return Polynomial(F, [element_from_json(F, c) for c in data["coeffs"]])
        if kind == "matrix":
            return Matrix(F, [[element_from_json(F, x) for x in row] for row in data["rows"]])
        if kind == "basis":
            return OrderedBasis(F, [element_from_json(F, e) for e in data["elements"]], data["kind"])
        if kind == "table":
            gen = element_from_json(F, data["generator"])
            entries = Matrix(F.base, [[element_from_json(F.base, x) for x in row]
                                      for row in data["table"]])
            table = MultTable(gen, entries)
            if "complexity" in data and data["complexity"] != table.complexity():
                raise SerializationError("declared complexity does not match the table entries")
            return table
    except SerializationError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise SerializationError(f"malformed {kind!r} document: {exc!r}") from exc
    raise SerializationError(f"unknown document type {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), separators=(",", ":"))


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SerializationError(exc.msg, exc.lineno, exc.colno) from exc


def loads(text: str):
    return from_json(parse_json(text))


def matrix_to_csv(M: Matrix) -> str:
    """One CSV row per matrix row; extension entries are JSON arrays in a cell."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in M.entries:
        w.writerow([json.dumps(x.to_nested(), separators=(",", ":")) for x in row])
    return buf.getvalue()


def matrix_from_csv(text: str, F: Field) -> Matrix:
    rows = []
    for lineno, cells in enumerate(csv.reader(io.StringIO(text)), start=1):
        row = []
        for col, cell in enumerate(cells, start=1):
            try:
                row.append(element_from_json(F, json.loads(cell)))
            except (json.JSONDecodeError, SerializationError) as exc:
                raise SerializationError(f"bad matrix entry {cell!r}", lineno, col) from exc
        rows.append(row)
    if not rows:
        raise SerializationError("empty CSV matrix", 1, 1)
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise SerializationError("ragged CSV matrix", len(rows), 1)
    return Matrix(F, rows)
