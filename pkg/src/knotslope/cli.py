"""Command-line front end.

Exit codes: 0 success, 1 a verdict fails (or, with ``--strict``, an entry
errors), 2 PD parse error, 3 non-planar or multi-component input, 4 unreadable
table file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .diagram import build_diagram, parse_pd
from .errors import GEOMETRY_ERRORS, KnotError
from .oracles import bracket_oracle, signature_oracle
from .randomgen import random_diagrams
from .signature import knot_signature
from .state_sum import DEFAULT_MAX_CROSSINGS, kauffman_bracket
from .table import bundled_table_path, load_table
from .verify import CHECKS, KnotReport, knot_report, run_corpus, summarize

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GEOMETRY, EXIT_IO = 0, 1, 2, 3, 4
DEFAULT_SEED = 20240229

CSV_COLUMNS = (
    "name", "crossings", "cr_plus", "cr_minus", "writhe", "alternating", "reduced",
    "s_plus", "s_minus", "adequate_plus", "adequate_minus", "jones",
    "jones_min_deg", "jones_max_deg", "bound_upper", "bound_lower",
    "slope_max", "slope_min", "sigma_g", "mu", "sigma", "determinant",
) + CHECKS + ("error",)


def _exit_for(exc: KnotError) -> int:
    return EXIT_GEOMETRY if isinstance(exc, GEOMETRY_ERRORS) else EXIT_PARSE


def _csv_row(r: KnotReport) -> list[str]:
    data = r.to_json()
    row = []
    for col in CSV_COLUMNS:
        if col in CHECKS:
            v = data["checks"][col]
        elif col == "jones":
            v = "" if r.jones is None else str(r.jones).replace(" ", "")
        else:
            v = data[col]
        row.append("" if v is None else str(v).lower() if isinstance(v, bool) else str(v))
    return row


def render_csv(reports: Sequence[KnotReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(_csv_row(r))
    return buf.getvalue()


def render_text(r: KnotReport) -> str:
    if r.error:
        return f"{r.name or '(unnamed)'}: error: {r.error}"
    lines = [
        f"name:         {r.name or '(unnamed)'}",
        f"pd:           {r.pd or '(empty)'}",
        f"crossings:    {r.crossings} (cr+ {r.cr_plus}, cr- {r.cr_minus}, writhe {r.writhe})",
        f"alternating:  {r.alternating}   reduced: {r.reduced}",
        f"states:       |S+| = {r.s_plus} (adequate {r.adequate_plus}), "
        f"|S-| = {r.s_minus} (adequate {r.adequate_minus})",
        f"jones:        {r.jones}",
        f"degrees:      [{r.jones_min_deg}, {r.jones_max_deg}] within bounds [{r.bound_lower}, {r.bound_upper}]",
        f"slopes:       max {r.slope_max}, min {r.slope_min} (layered {r.layered_max}, {r.layered_min})",
        f"signature:    sigma(G) {r.sigma_g} - mu {r.mu} = {r.sigma}",
        f"determinant:  {r.determinant}",
        "checks:       " + ", ".join(f"{k}={v.value}" for k, v in r.checks.items()),
    ]
    return "\n".join(lines)


def cmd_invariants(args: argparse.Namespace) -> int:
    text = args.pd if args.pd is not None else sys.stdin.read()
    try:
        code = parse_pd(text)
        d = build_diagram(code, args.outer_face)
    except KnotError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_for(exc)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = knot_report(d, args.max_crossings)
    if args.json:
        print(json.dumps(report.to_json(args.timing), indent=2))
    elif args.csv:
        sys.stdout.write(render_csv([report]))
    else:
        print(render_text(report))
    return EXIT_FAIL if report.error else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    path = args.table or bundled_table_path()
    try:
        entries = load_table(path)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    except KnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    reports = run_corpus(entries, args.max_crossings, args.outer_face)
    summary = summarize(reports)
    if args.json:
        out = {"reports": [r.to_json(args.timing) for r in reports],
               "summary": {"knots": summary.knots, "holds": summary.holds, "fails": summary.fails,
                           "not_applicable": summary.not_applicable, "errors": summary.errors}}
        print(json.dumps(out, indent=2))
    elif args.csv:
        sys.stdout.write(render_csv(reports))
    else:
        for r in reports:
            if r.error:
                print(f"{r.name}: error: {r.error}")
                continue
            mark = "FAIL" if r.name in summary.failing else "ok"
            slope_check = "/".join(v.value for v in r.verdicts(("thm31_max", "thm31_min")))
            print(f"{r.name}: {mark}  slope=2deg+sigma {slope_check}  slopes ({r.slope_max}, {r.slope_min})  "
                  f"deg ({r.jones_max_deg}, {r.jones_min_deg})  sigma {r.sigma}")
        print(summary.line())
    if not summary.ok:
        return EXIT_FAIL
    if args.strict and summary.errors:
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracles(args: argparse.Namespace) -> int:
    diagrams = random_diagrams(args.seed, args.count, args.max_crossings)
    bad = 0
    for i, d in enumerate(diagrams):
        b_ok = bracket_oracle(d) == kauffman_bracket(d)
        s_ok = signature_oracle(d) == knot_signature(d).sigma_k
        if not (b_ok and s_ok):
            bad += 1
            print(f"mismatch #{i}: {d.code} bracket={'ok' if b_ok else 'differs'} "
                  f"signature={'ok' if s_ok else 'differs'}")
    print(f"{len(diagrams)} random diagrams (seed {args.seed}), {bad} oracle mismatches")
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotslope", description="Jones polynomial, signature and checkerboard slopes of knot diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output")
        fmt.add_argument("--csv", action="store_true", help="CSV output")
        p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS, metavar="N")
        p.add_argument("--outer-face", type=int, default=None, metavar="K", help="face index used as the unbounded region")
        p.add_argument("--timing", action="store_true", help="include per-knot timing in JSON")

    p = sub.add_parser("invariants", help="report on one PD code (argument or stdin)")
    p.add_argument("pd", nargs="?", default=None)
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="verify the theorem and identities over a knot table")
    p.add_argument("table", nargs="?", default=None, help="table file (default: bundled table)")
    p.add_argument("--strict", action="store_true", help="entries with errors make the run fail")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracles", help="compare both oracles with the main computations on random diagrams")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-crossings", type=int, default=8, metavar="N")
    p.set_defaults(func=cmd_oracles)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
