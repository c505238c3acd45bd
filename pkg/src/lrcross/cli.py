"""Command-line front end: ``lrcross {check,build,assoc,table,mul,demo} INPUT``.

INPUT is a document path or ``demo:NAME`` for a builtin instance.  Exit codes:
0 success, 1 mathematical failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Algebra, multiply, validate_algebra
from .constructions import INSTANCE_NAMES, builtin_instance, builtin_source, to_datum
from .crossed import AxiomFailure, AxiomReport, CrossedDatum, build_crossed_product, check_all, crossed_multiply
from .io import Document, DocumentError, parse_document, serialize_document
from .scalars import QQ, FieldSpec
from .tensor import Tensor

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- input ---------------------------------------------------------------------


def _builtin(name: str, field: FieldSpec | None, source: bool = True):
    if name not in INSTANCE_NAMES:
        raise UsageError(f"unknown instance {name!r}; choose from {', '.join(INSTANCE_NAMES)}")
    try:
        return (builtin_source if source else builtin_instance)(name, field or QQ)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{name} over {field}: {exc}") from None


def load_input(source: str, field: FieldSpec | None = None) -> Document:
    if source.startswith("demo:"):
        obj = _builtin(source[5:], field)
        return parse_document(serialize_document(obj))
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror or exc}") from None
    return parse_document(text, field)


def _datum(doc: Document, command: str) -> CrossedDatum:
    if doc.kind == "algebra":
        raise UsageError(f"{command} needs a crossed datum, got an algebra document")
    try:
        return to_datum(doc.obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _algebra(doc: Document, require_axioms: bool) -> Algebra:
    if doc.kind == "algebra":
        return doc.obj
    return build_crossed_product(_datum(doc, "build"), require_axioms=require_axioms)


def _coords(text: str, field: FieldSpec, n: int) -> Tensor:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != n:
        raise UsageError(f"expected {n} comma-separated coordinates, got {len(parts)}")
    try:
        return Tensor(field, [field.parse(p) for p in parts])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coordinate list {text!r}: {exc}") from None


# -- formatting ----------------------------------------------------------------


def format_element(labels, v: Tensor) -> str:
    """Render coordinates as a signed sum over basis labels, e.g. ``x⊗1 - 2*x⊗g``."""
    f = v.field
    terms = []
    for (i,), c in v.nonzero():
        if c == f.one:
            terms.append(labels[i])
        elif c == f.neg(f.one):
            terms.append(f"-{labels[i]}")
        else:
            terms.append(f"{f.format(c)}*{labels[i]}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _space_label(d: CrossedDatum, space: str, i: int) -> str:
    return d.U.label(i) if space == "U" else d.H.label(i)


def _witness_labels(d: CrossedDatum, w) -> list[str]:
    return [_space_label(d, s, i) for s, i in zip(w.input_spaces, w.inputs)]


def report_json(d: CrossedDatum, report: AxiomReport) -> dict:
    rows = []
    for r in report.results:
        rows.append({
            "id": r.axiom_id,
            "label": r.label,
            "holds": r.holds,
            "tuples_checked": r.tuples_checked,
            "witnesses": [
                {
                    "part": w.part,
                    "inputs": list(w.inputs),
                    "input_labels": _witness_labels(d, w),
                    "first_diff_index": None if w.first_diff_index is None else list(w.first_diff_index),
                    "lhs": [[*i, d.field.format(c)] for i, c in w.lhs.nonzero()],
                    "rhs": [[*i, d.field.format(c)] for i, c in w.rhs.nonzero()],
                }
                for w in r.witnesses
            ],
        })
    return {"field": str(d.field), "dims": {"U": d.U.dim, "H": d.H.dim}, "all_hold": report.all_hold, "axioms": rows}


def report_text(d: CrossedDatum, report: AxiomReport) -> str:
    lines = [f"field {d.field}, dim U = {d.U.dim}, dim H = {d.H.dim}"]
    for r in report.results:
        if r.holds:
            lines.append(f"{r.label:<6} holds  ({r.tuples_checked} tuples)")
            continue
        for k, w in enumerate(r.witnesses):
            head = f"{r.label:<6} FAILS " if k == 0 else " " * 13
            lines.append(f"{head} at ({', '.join(_witness_labels(d, w))}), sides differ at {w.first_diff_index}")
    held = sum(r.holds for r in report.results)
    lines.append(f"{held}/{len(report.results)} axioms hold")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


# -- commands ------------------------------------------------------------------


def cmd_check(args) -> int:
    d = _datum(load_input(args.input, args.field), "check")
    report = check_all(d, max_witnesses=args.max_counterexamples)
    _emit(_dump(report_json(d, report)) if args.json_report else report_text(d, report), args.output)
    return EXIT_OK if report.all_hold else EXIT_MATH


def cmd_build(args) -> int:
    A = _algebra(load_input(args.input, args.field), require_axioms=not args.no_require_axioms)
    _emit(serialize_document(A), args.output)
    return EXIT_OK


def cmd_assoc(args) -> int:
    A = _algebra(load_input(args.input, args.field), require_axioms=False)
    rep = validate_algebra(A, all_witnesses=args.max_counterexamples > 1)
    # at most one witness per law by default, otherwise the first N overall
    fails = rep.failures if args.max_counterexamples == 1 else rep.failures[: args.max_counterexamples]
    if args.json_report:
        out = {
            "field": str(A.field),
            "dim": A.dim,
            "triples_checked": rep.triples_checked,
            "ok": rep.ok,
            "failures": [
                {"law": f.law, "basis": list(f.witness), "labels": [A.label(i) for i in f.witness]}
                for f in fails
            ],
        }
        _emit(_dump(out), args.output)
    else:
        lines = [f"{A.dim}-dimensional product over {A.field}"]
        if rep.ok:
            lines.append(f"associativity verified over {rep.triples_checked} triples; unit is two-sided")
        for f in fails:
            lines.append(f"{f.law} fails at ({', '.join(A.label(i) for i in f.witness)})")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if rep.ok else EXIT_MATH


def _labels(A: Algebra) -> list[str]:
    return [A.label(i) for i in range(A.dim)]


def multiplication_table(A: Algebra) -> list[tuple[str, str, str]]:
    labels = _labels(A)
    rows = []
    for i in range(A.dim):
        for j in range(A.dim):
            rows.append((A.label(i), A.label(j), format_element(labels, multiply(A, A.basis(i), A.basis(j)))))
    return rows


def cmd_table(args) -> int:
    A = _algebra(load_input(args.input, args.field), require_axioms=not args.no_require_axioms)
    rows = multiplication_table(A)
    if args.json_report:
        _emit(_dump([{"left": a, "right": b, "product": p} for a, b, p in rows]), args.output)
    else:
        width = max(len(a) for a, _, _ in rows)
        _emit("".join(f"{a:>{width}} * {b:<{width}} = {p}\n" for a, b, p in rows), args.output)
    return EXIT_OK


def cmd_mul(args) -> int:
    doc = load_input(args.input, args.field)
    if doc.kind == "algebra":
        A = doc.obj
        x, y = _coords(args.x, A.field, A.dim), _coords(args.y, A.field, A.dim)
        z, labels = multiply(A, x, y), _labels(A)
    else:
        d = _datum(doc, "mul")
        n = d.U.dim * d.H.dim
        x, y = _coords(args.x, d.field, n), _coords(args.y, d.field, n)
        z = crossed_multiply(d, x, y)
        labels = [f"{d.U.label(u)}⊗{d.H.label(h)}" for u in range(d.U.dim) for h in range(d.H.dim)]
    coords = [z.field.format(c) for c in z.data.tolist()]
    if args.json_report:
        _emit(_dump({"coordinates": coords, "element": format_element(labels, z)}), args.output)
    else:
        _emit(f"[{', '.join(coords)}]\n{format_element(labels, z)}\n", args.output)
    return EXIT_OK


def cmd_demo(args) -> int:
    name = args.input[5:] if args.input.startswith("demo:") else args.input
    obj = _builtin(name, args.field, source=args.source)
    _emit(serialize_document(obj), args.output)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, help="field override: Q or a prime such as F7")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--json-report", action="store_true", help="machine-readable output")
    common.add_argument("--max-counterexamples", type=_positive, default=1, metavar="N")

    parser = argparse.ArgumentParser(prog="lrcross", description="Check and build L-R-crossed products U ⊗ H.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, helptext, input_help="document path or demo:NAME"):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input", help=input_help)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "evaluate every axiom on all basis tuples")
    add("build", cmd_build, "write the product algebra document").add_argument(
        "--no-require-axioms", action="store_true", help="build even when axioms fail")
    add("assoc", cmd_assoc, "validate associativity and unit of the built product")
    add("table", cmd_table, "print the multiplication table on basis labels").add_argument(
        "--no-require-axioms", action="store_true", help="tabulate even when axioms fail")
    mul = add("mul", cmd_mul, "multiply two coordinate vectors")
    mul.add_argument("x", help="comma-separated scalars, e.g. 0,1,0,0")
    mul.add_argument("y", help="comma-separated scalars")
    add("demo", cmd_demo, "write a builtin instance document", f"one of {', '.join(INSTANCE_NAMES)}").add_argument(
        "--source", action="store_true", help="write the specialization data instead of the crossed datum")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AxiomFailure as exc:
        print(f"error: {exc}; pass --no-require-axioms to proceed anyway", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
