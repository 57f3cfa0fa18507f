"""``root`` command: solve ``x**m = r`` and print the iterates.

Exit codes: 0 converged, 2 invalid input, 3 no convergence (the partial
trace is still printed).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .convergence import EXACT, FIXED_PRECISION, StoppingRule, analyze
from .errors import BabylonianError, NonConvergence
from .iteration import RootProblem, iterate
from .rational import decimal_string, parse_rational
from .sexagesimal import parse_sexagesimal, to_sexagesimal

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NONCONVERGENCE = 3

SEX_PREFIX = "sex:"
CSV_COLUMNS = ("n", "exact", "decimal", "residual", "sexagesimal")


def parse_number(text: str):
    """Integer, fraction, decimal or ``sex:``-prefixed base-60 numeral."""
    if text.startswith(SEX_PREFIX):
        return parse_sexagesimal(text[len(SEX_PREFIX):])
    return parse_rational(text)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="root",
        description="Extract the m-th root of RADICAND with exact rational iterates.",
    )
    parser.add_argument("radicand", help="17, 33/8, 4.125 or sex:4;7,30")
    parser.add_argument("--degree", type=int, default=2, metavar="M")
    parser.add_argument("--x0", default=None, metavar="X", help="initial guess")
    parser.add_argument("--tol", default="1e-30", metavar="T", help="relative residual bound")
    parser.add_argument("--max-iter", type=int, default=500, metavar="N")
    parser.add_argument(
        "--precision", type=int, default=50, metavar="P",
        help="decimal digits shown; also the rounding grid in fixed-precision mode",
    )
    parser.add_argument("--mode", choices=(EXACT, FIXED_PRECISION), default=EXACT)
    parser.add_argument("--output", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--sexagesimal", type=int, default=None, metavar="PLACES")
    return parser


def make_record(trace, report, args) -> dict:
    problem = trace.problem
    steps = []
    for it in trace.iterates:
        sex = None
        if args.sexagesimal is not None:
            sex = str(to_sexagesimal(it.value, args.sexagesimal))
        steps.append({
            "n": it.index,
            "exact": str(it.value),
            "decimal": decimal_string(it.value, args.precision),
            "residual": decimal_string(it.residual, args.precision),
            "sexagesimal": sex,
        })
    return {
        "problem": {
            "radicand": str(problem.radicand),
            "degree": problem.degree,
            "x0": str(problem.initial_guess),
        },
        "steps": steps,
        "report": {
            "converged": report.converged,
            "iterations": report.iterations_used,
            "observed_order": report.order_text,
        },
    }


def render_json(record: dict) -> str:
    return json.dumps(record, indent=2) + "\n"


def render_csv(record: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for step in record["steps"]:
        writer.writerow([
            step["n"], step["exact"], step["decimal"], step["residual"],
            step["sexagesimal"] or "",
        ])
    return buf.getvalue()


def render_table(record: dict) -> str:
    # exact fractions grow fast, so they go last
    columns = ["n", "decimal", "residual"]
    if record["steps"] and record["steps"][0]["sexagesimal"] is not None:
        columns.append("sexagesimal")
    columns.append("exact")
    rows = [columns] + [[str(step[c]) for c in columns] for step in record["steps"]]
    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]

    p, rep = record["problem"], record["report"]
    lines.insert(0, f"root of degree {p['degree']} of {p['radicand']} from x0 = {p['x0']}")
    lines.append("")
    lines.append(f"converged: {'yes' if rep['converged'] else 'no'}")
    lines.append(f"iterations: {rep['iterations']}")
    lines.append(f"observed order: {rep['observed_order']}")
    return "\n".join(lines) + "\n"


RENDERERS = {"table": render_table, "json": render_json, "csv": render_csv}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"root: error: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code == 0 else EXIT_INPUT

    try:
        if args.precision < 0 or (args.sexagesimal is not None and args.sexagesimal < 0):
            raise ValueError("precision and sexagesimal places must be non-negative")
        rule = StoppingRule(
            tolerance=parse_rational(args.tol),
            max_iter=args.max_iter,
            mode=args.mode,
            precision=args.precision if args.mode == FIXED_PRECISION else None,
        )
        x0 = None if args.x0 is None else parse_number(args.x0)
        problem = RootProblem(parse_number(args.radicand), args.degree, x0, rule)
    except (BabylonianError, ValueError) as exc:
        print(f"root: error: {exc}", file=stderr)
        return EXIT_INPUT

    code = EXIT_OK
    try:
        trace = iterate(problem)
    except NonConvergence as exc:
        trace = exc.trace
        code = EXIT_NONCONVERGENCE
        print(f"root: {exc}", file=stderr)

    report = analyze(trace)
    stdout.write(RENDERERS[args.output](make_record(trace, report, args)))
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
