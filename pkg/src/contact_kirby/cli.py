"""Command line surface and the stable JSON interchange format.

Commands: ``expand``, ``convert``, ``analyze``, ``classify``, ``table``.
JSON output is canonical (sorted keys, two-space indent, no floating
point anywhere), so identical invocations are byte-identical and any
emitted document re-emits losslessly.  Exit codes: 0 on success, 2 on
invalid input or gate rejection, 3 when exact arithmetic cannot deliver
an answer (singular linking matrix, non-integral invariant).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .errors import (
    InvalidInputError,
    NonIntegralInvariantError,
    SingularMatrixError,
)
from .exact import det
from .kirby import CandidateReport, classify, emit_table, gate
from .legendrian import ExternalKnot, LegendrianUnknot, validate_unknot
from .presentation import (
    Presentation,
    convert,
    enumerate_presentations,
    evaluate_cf,
    expand_negative,
    linking_matrix,
)
from .transform import bennequin, invariants_after_surgery

SCHEMA_VERSION = 1

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

# argparse only accepts leading-dash tokens as positionals/values when its
# negative-number matcher recognizes them; widen it to cover -p/q.
_NEGATIVE_TOKEN = re.compile(r"^-\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse 'p', '+p', '-p' or 'p/q' exactly; anything else is rejected."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise InvalidInputError(
            f"coefficients must be integers or p/q strings, got {text!r}"
        )
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise InvalidInputError(f"zero denominator in {text!r}") from exc


def parse_signs(text: str) -> tuple:
    if not re.fullmatch(r"[+-]*", text):
        raise InvalidInputError(
            f"signs must be a string over '+' and '-', got {text!r}"
        )
    return tuple(1 if ch == "+" else -1 for ch in text)


def canonical_json(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# document builders


def _knot_doc(knot: LegendrianUnknot) -> dict:
    return {"type": "unknot", "tb": knot.tb, "rot": knot.rot}


def _component_doc(comp) -> dict:
    return {
        "index": comp.index,
        "tb": comp.knot.tb,
        "rot": comp.knot.rot,
        "contact_coeff": comp.contact_sign,
        "topological_coeff": comp.topological_coefficient,
        "parent": comp.parent,
        "stabilizations": {"plus": comp.stabs_pos, "minus": comp.stabs_neg},
    }


def _presentation_doc(pres: Presentation) -> dict:
    matrix = linking_matrix(pres)
    return {
        "signs": pres.signs_string,
        "components": [_component_doc(c) for c in pres.components],
        "linking_matrix": [list(row) for row in matrix.entries],
        "determinant": det(matrix),
    }


def _bennequin_doc(check) -> dict:
    return {"satisfied": check.satisfied, "slack": check.slack}


def _verdict_doc(verdict) -> dict:
    return {
        "signs": verdict.signs_string,
        "tb_new": verdict.tb_new,
        "rot_new": verdict.rot_new,
        "bennequin": None
        if verdict.bennequin is None
        else _bennequin_doc(verdict.bennequin),
        "status": verdict.status,
        "reason": verdict.reason,
    }


def _report_doc(report: CandidateReport) -> dict:
    return {
        "diagram": {
            "m": report.diagram.m,
            "n": report.diagram.n,
            "rot": report.diagram.rot,
        },
        "collection": report.collection,
        "verdicts": [_verdict_doc(v) for v in report.verdicts],
        "survives": report.survives,
        "summary": report.summary,
    }


def _verdict_label(verdict) -> str:
    if verdict.reason is not None:
        return f"0-surgery: {verdict.status}"
    label = verdict.signs_string or "(none)"
    status = (
        "tight (asserted)"
        if verdict.status == "consistent-with-standard-tight"
        else verdict.status
    )
    return f"{label}: {status}"


# ---------------------------------------------------------------------------
# input handling


def _diagram_from_args(args):
    """Resolve the (knot, coefficient, signs, echo) quadruple for convert/analyze."""
    flag_inputs = [args.tb, args.rot, args.coeff, args.signs]
    if args.input is not None:
        if any(v is not None for v in flag_inputs):
            raise InvalidInputError(
                "--input cannot be combined with --tb/--rot/--coeff/--signs"
            )
        try:
            with open(args.input, encoding="utf-8") as handle:
                raw = json.load(handle)
        except OSError as exc:
            raise InvalidInputError(f"cannot read {args.input}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"invalid JSON in {args.input}: {exc}") from exc
        if not isinstance(raw, dict):
            raise InvalidInputError("diagram document must be a JSON object")
        knot_doc = raw.get("knot")
        if not isinstance(knot_doc, dict) or knot_doc.get("type") != "unknot":
            raise InvalidInputError('diagram document needs knot {"type": "unknot", ...}')
        tb, rot = knot_doc.get("tb"), knot_doc.get("rot")
        if not isinstance(tb, int) or not isinstance(rot, int):
            raise InvalidInputError("knot tb and rot must be integers")
        coefficient = parse_rational(raw.get("coefficient"))
        signs_text = raw.get("signs")
        if signs_text is not None and not isinstance(signs_text, str):
            raise InvalidInputError("signs must be a string over '+' and '-'")
    else:
        if args.tb is None or args.rot is None or args.coeff is None:
            raise InvalidInputError(
                "either --input or all of --tb/--rot/--coeff are required"
            )
        tb, rot = args.tb, args.rot
        coefficient = parse_rational(args.coeff)
        signs_text = args.signs

    knot = validate_unknot(tb, rot)
    signs = None if signs_text is None else parse_signs(signs_text)
    echo = {
        "knot": _knot_doc(knot),
        "coefficient": str(coefficient),
        "signs": signs_text,
    }
    return knot, coefficient, signs, echo


def _presentations(knot, coefficient, signs):
    if signs is None:
        return enumerate_presentations(knot, coefficient)
    return [convert(knot, coefficient, signs)]


# ---------------------------------------------------------------------------
# commands


def _cmd_expand(args) -> int:
    value = parse_rational(args.coefficient)
    if value >= 0:
        raise InvalidInputError(
            f"only negative coefficients expand (got {value})"
        )
    expansion = expand_negative(value)
    coeffs = list(expansion.coeffs)
    round_trip = evaluate_cf([coeffs[0] + 1] + coeffs[1:])
    if args.format == "json":
        print(
            canonical_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "expand",
                    "coefficient": str(value),
                    "coefficients": coeffs,
                    "round_trip": str(round_trip),
                }
            )
        )
    else:
        print(str(coeffs))
        print(f"round-trip: {round_trip}")
    return 0


def _cmd_convert(args) -> int:
    knot, coefficient, signs, echo = _diagram_from_args(args)
    presentations = _presentations(knot, coefficient, signs)
    if args.format == "json":
        print(
            canonical_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "convert",
                    "input": echo,
                    "presentations": [
                        _presentation_doc(p) for p in presentations
                    ],
                }
            )
        )
    else:
        for idx, pres in enumerate(presentations):
            _print_presentation_text(idx, len(presentations), pres)
    return 0


def _cmd_analyze(args) -> int:
    knot, coefficient, signs, echo = _diagram_from_args(args)
    ext = ExternalKnot(validate_unknot(args.ext_tb, args.ext_rot), args.lk)
    echo["external"] = {
        "tb": ext.knot.tb,
        "rot": ext.knot.rot,
        "lk": ext.lk_with_original,
    }
    presentations = _presentations(knot, coefficient, signs)
    results = []
    for pres in presentations:
        invariants = invariants_after_surgery(pres, ext)
        check = bennequin(invariants.tb_new, invariants.rot_new)
        doc = _presentation_doc(pres)
        doc["invariants"] = {
            "tb_new": invariants.tb_new,
            "rot_new": invariants.rot_new,
            "bennequin": _bennequin_doc(check),
        }
        results.append((pres, invariants, check, doc))
    if args.format == "json":
        print(
            canonical_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "analyze",
                    "input": echo,
                    "presentations": [doc for _, _, _, doc in results],
                }
            )
        )
    else:
        for idx, (pres, invariants, check, _) in enumerate(results):
            _print_presentation_text(idx, len(results), pres)
            verdict = "satisfied" if check.satisfied else "violated"
            print(
                f"  tb_new={invariants.tb_new} rot_new={invariants.rot_new} "
                f"bennequin {verdict} (slack {check.slack})"
            )
    return 0


def _cmd_classify(args) -> int:
    report = classify(gate(args.m, args.n, args.rot))
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "classify"}
        doc.update(_report_doc(report))
        print(canonical_json(doc))
    else:
        _print_report_text(report)
    return 0


def _cmd_table(args) -> int:
    if args.m_max < 0:
        raise InvalidInputError(f"--m-max must be non-negative (got {args.m_max})")
    reports = emit_table(args.m_max)
    if args.format == "json":
        print(
            canonical_json(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "table",
                    "m_max": args.m_max,
                    "reports": [_report_doc(r) for r in reports],
                }
            )
        )
    else:
        rows = [
            (
                str(r.diagram.m),
                str(r.diagram.n),
                r.collection,
                "; ".join(_verdict_label(v) for v in r.verdicts),
                "yes" if r.survives else "no",
            )
            for r in reports
        ]
        _print_aligned([("m", "n", "collection", "branches", "survivor")] + rows)
    return 0


def _print_presentation_text(idx, total, pres) -> None:
    signs = pres.signs_string or "(none)"
    print(f"presentation {idx + 1} of {total} (signs: {signs})")
    for comp in pres.components:
        parent = "-" if comp.parent is None else str(comp.parent)
        print(
            f"  component {comp.index}: tb={comp.knot.tb} rot={comp.knot.rot} "
            f"contact={comp.contact_sign:+d} topological={comp.topological_coefficient:+d} "
            f"parent={parent} stabs=+{comp.stabs_pos}/-{comp.stabs_neg}"
        )
    matrix = linking_matrix(pres)
    print("  linking matrix:")
    width = max(len(str(x)) for row in matrix.entries for x in row)
    for row in matrix.entries:
        print("    [ " + "  ".join(str(x).rjust(width) for x in row) + " ]")
    print(f"  determinant: {det(matrix)}")


def _print_report_text(report: CandidateReport) -> None:
    d = report.diagram
    print(f"diagram: m={d.m} n={d.n} rot={d.rot} (collection {report.collection})")
    for verdict in report.verdicts:
        if verdict.reason is not None:
            print(f"  {verdict.reason} -> {verdict.status}")
            continue
        check = verdict.bennequin
        state = "satisfied" if check.satisfied else "violated"
        label = verdict.signs_string or "(none)"
        shown = (
            "tight (asserted)"
            if verdict.status == "consistent-with-standard-tight"
            else verdict.status
        )
        print(
            f"  branch {label}: tb_new={verdict.tb_new} rot_new={verdict.rot_new} "
            f"bennequin {state} (slack {check.slack}) -> {shown}"
        )
    print(f"summary: {report.summary}")


def _print_aligned(rows) -> None:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


# ---------------------------------------------------------------------------
# parser


def _add_format(parser, default) -> None:
    parser.add_argument(
        "--format", choices=("json", "table"), default=default,
        help=f"output format (default: {default})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contact-kirby",
        description=(
            "Convert rational contact surgeries on Legendrian unknots into "
            "(+/-1)-surgery presentations and screen candidate diagrams for "
            "a contact Kirby move of type 1."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    expand = subparsers.add_parser(
        "expand", help="negative continued fraction expansion of a coefficient"
    )
    expand.add_argument("coefficient", help="negative rational, e.g. -3/2")
    _add_format(expand, "table")
    expand.set_defaults(func=_cmd_expand)

    def add_diagram_options(sub):
        sub.add_argument("--tb", type=int, help="tb of the surgery unknot")
        sub.add_argument("--rot", type=int, help="rot of the surgery unknot")
        sub.add_argument("--coeff", help="contact surgery coefficient, integer or p/q")
        sub.add_argument(
            "--signs",
            help="stabilization signs as a string over + and - (default: all branches)",
        )
        sub.add_argument("--input", help="read a diagram document (JSON) instead of flags")

    conv = subparsers.add_parser(
        "convert", help="convert a contact surgery into (+/-1)-presentations"
    )
    add_diagram_options(conv)
    _add_format(conv, "json")
    conv.set_defaults(func=_cmd_convert)

    analyze = subparsers.add_parser(
        "analyze", help="post-surgery invariants of an external unknot"
    )
    add_diagram_options(analyze)
    analyze.add_argument(
        "--lk", type=int, required=True,
        help="linking number of the external unknot with the surgery knot",
    )
    analyze.add_argument(
        "--ext-tb", type=int, default=-1, help="tb of the external unknot (default -1)"
    )
    analyze.add_argument(
        "--ext-rot", type=int, default=0, help="rot of the external unknot (default 0)"
    )
    _add_format(analyze, "json")
    analyze.set_defaults(func=_cmd_analyze)

    cls = subparsers.add_parser(
        "classify", help="screen one candidate diagram (m, n)"
    )
    cls.add_argument("--m", type=int, required=True, help="tb of the unknot is -m")
    cls.add_argument("--n", type=int, required=True, help="contact framing")
    cls.add_argument(
        "--rot", type=int, default=None,
        help="rot of the unknot (default -(m-1))",
    )
    _add_format(cls, "json")
    cls.set_defaults(func=_cmd_classify)

    table = subparsers.add_parser(
        "table", help="screen every candidate with m up to --m-max"
    )
    table.add_argument("--m-max", type=int, required=True)
    _add_format(table, "table")
    table.set_defaults(func=_cmd_table)

    for sub in (parser, expand, conv, analyze, cls, table):
        sub._negative_number_matcher = _NEGATIVE_TOKEN

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SingularMatrixError, NonIntegralInvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
