"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 3 empty sweep, 64 usage error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .basis import multiplication_table
from .field import GF, prime_power
from .linalg import Matrix
from .onb1 import (
    InvalidParameters,
    Type1Field,
    build_type1,
    closed_form_dual,
    dual_generator,
    dual_min_poly,
    structured_dual_matrix,
    structured_primal_matrix,
    validate_params,
)
from .serialize import matrix_to_csv, report_to_json
from .sweep import run_sweep, valid_pairs

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_EMPTY = 3
EXIT_USAGE = 64

_Q_PATTERN = re.compile(r"^\s*(\d+)\s*(?:(?:\^|\*\*)\s*(\d+)\s*)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_q(text: str) -> int:
    """Parse ``"8"`` or ``"2^3"``; raises UsageError when unparseable."""
    match = _Q_PATTERN.match(text)
    if not match:
        raise UsageError(f"malformed q {text!r}; expected an integer or p^m")
    base, exp = int(match.group(1)), int(match.group(2) or 1)
    if exp < 1:
        raise UsageError(f"malformed q {text!r}; exponent must be positive")
    return base ** exp


def _type1(q: int, n: int) -> Type1Field:
    p, m = prime_power(q)
    return build_type1(validate_params(GF(p, m), n))


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _header(tf: Type1Field) -> dict:
    p, m = prime_power(tf.params.q)
    return {"q": {"p": p, "m": m}, "n": tf.n}


def cmd_check(q: int, n: int) -> tuple[int, str]:
    try:
        p, m = prime_power(q)
        validate_params(GF(p, m), n)
    except InvalidParameters as exc:
        return EXIT_INVALID, str(exc)
    except ValueError as exc:
        return EXIT_INVALID, str(exc)
    return EXIT_OK, "valid"


def dual_document(tf: Type1Field) -> dict:
    M = closed_form_dual(tf)
    return {
        **_header(tf),
        "basis": [e.to_nested() for e in tf.basis()],
        "dual_basis": [e.to_nested() for e in M],
        "generator": dual_generator(tf).to_nested(),
        "min_poly": dual_min_poly(tf).to_nested(),
    }


def table_document(tf: Type1Field, which: str) -> dict:
    if which == "primal":
        T = multiplication_table(tf.alpha)
        S = structured_primal_matrix(tf)
    else:
        T = multiplication_table((tf.alpha - 1) / tf.field.lift(tf.n_plus_1()))
        S = structured_dual_matrix(tf)
    return {
        **_header(tf),
        "which": which,
        "table": T.entries.to_nested(),
        "structured_table": S.to_nested(),
        "complexity": T.complexity(),
        "structured_match": S == T.entries,
    }


def _format_pretty_dual(doc: dict) -> str:
    lines = [f"q = {doc['q']['p']}^{doc['q']['m']}, n = {doc['n']}",
             "dual basis (coordinates in 1, alpha, ..., alpha^(n-1)), index-aligned with alpha^(q^j):"]
    for j, (b, d) in enumerate(zip(doc["basis"], doc["dual_basis"])):
        lines.append(f"  j={j}: {_dump(b)} -> {_dump(d)}")
    lines.append(f"generator: {_dump(doc['generator'])}")
    lines.append(f"minimal polynomial (low to high): {_dump(doc['min_poly'])}")
    return "\n".join(lines) + "\n"


def _format_pretty_table(doc: dict) -> str:
    lines = [f"q = {doc['q']['p']}^{doc['q']['m']}, n = {doc['n']}, {doc['which']} table:"]
    for row in doc["table"]:
        lines.append("  " + " ".join(_dump(x) for x in row))
    lines.append(f"complexity: {doc['complexity']}")
    lines.append(f"structured match: {str(doc['structured_match']).lower()}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="onbdual", description="Type I optimal normal bases and their duals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, with_format=True, formats=("json", "csv", "pretty")):
        p.add_argument("--q", required=True, help="field order, as an integer or p^m")
        p.add_argument("--n", required=True, type=int, help="extension degree")
        if with_format:
            p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--stable", action="store_true", help="omit timing metadata")

    common(sub.add_parser("check", help="validate (q, n)"), with_format=False)
    common(sub.add_parser("dual", help="dual basis, its generator and minimal polynomial"))
    table = sub.add_parser("table", help="multiplication table and complexity")
    common(table)
    table.add_argument("--which", choices=("primal", "dual"), default="primal")

    verify = sub.add_parser("verify", help="sweep the complexity counts over (q, n)")
    verify.add_argument("--q", required=True, action="append",
                        help="field order(s); repeat or separate with commas")
    verify.add_argument("--n-max", required=True, type=int)
    verify.add_argument("--format", choices=("json", "pretty"), default="json")
    verify.add_argument("--stable", action="store_true", help="omit timing metadata")
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            qs = [parse_q(part) for item in args.q for part in item.split(",") if part.strip()]
        else:
            qs = [parse_q(args.q)]
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"onbdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "check":
        code, message = cmd_check(qs[0], args.n)
        print(message, file=sys.stdout if code == EXIT_OK else sys.stderr)
        return code

    if args.command == "verify":
        return _verify(qs, args)

    q, n = qs[0], args.n
    code, message = cmd_check(q, n)
    if code != EXIT_OK:
        print(f"onbdual: invalid parameters: {message}", file=sys.stderr)
        return code
    tf = _type1(q, n)

    if args.command == "dual":
        doc = dual_document(tf)
        if args.format == "json":
            _emit(_dump(doc) + "\n")
        elif args.format == "csv":
            _emit(matrix_to_csv(closed_form_dual_matrix(tf)))
        else:
            _emit(_format_pretty_dual(doc))
        return EXIT_OK

    doc = table_document(tf, args.which)
    if args.format == "json":
        _emit(_dump(doc) + "\n")
    elif args.format == "csv":
        _emit(matrix_to_csv(Matrix(tf.base, [[tf.base(x) for x in row] for row in doc["table"]])))
    else:
        _emit(_format_pretty_table(doc))
    return EXIT_OK


def closed_form_dual_matrix(tf: Type1Field):
    """Coordinate rows of the dual basis, for CSV output."""
    return Matrix(tf.base, [tf.field.coordinates(e) for e in closed_form_dual(tf)])


def _verify(qs: list[int], args) -> int:
    if args.n_max < 2:
        print("onbdual: error: --n-max must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    bad = []
    for q in qs:
        try:
            prime_power(q)
        except ValueError as exc:
            bad.append(str(exc))
    if bad:
        print(f"onbdual: invalid parameters: {'; '.join(bad)}", file=sys.stderr)
        return EXIT_INVALID
    pairs = valid_pairs(qs, args.n_max)
    if not pairs:
        print("onbdual: no valid parameters in range", file=sys.stderr)
        return EXIT_EMPTY
    all_pass = True
    for report in run_sweep(pairs, jobs=args.jobs):
        all_pass &= report.passed
        if args.format == "json":
            _emit(_dump(report_to_json(report, stable=args.stable)) + "\n")
        else:
            timing = "" if args.stable else f"  ({report.elapsed_ms:.1f} ms)"
            _emit(f"q={report.q} n={report.n}: C_N={report.c_primal} C_M={report.c_dual} "
                  f"expected={report.expected_dual} structured={str(report.structured_match).lower()} "
                  f"{'PASS' if report.passed else 'FAIL'}{timing}\n")
    print(f"onbdual: {len(pairs)} parameter pairs, {'all pass' if all_pass else 'FAILURES'}",
          file=sys.stderr)
    return EXIT_OK if all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
