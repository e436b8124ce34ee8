"""Command-line front end.

Subcommands: eval (one point), scan (grid to CSV), verify (invariant
suites), golden (compare or re-emit golden vectors).  Exit codes: 0 ok,
1 verification failure, 2 domain error, 3 usage error.  All numeric
output uses 17 significant digits so doubles round-trip losslessly.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .evaluate import EvalPoint, Li_eval, as_order, li_eval
from .exceptions import ConvergenceError, DomainError
from .golden import compare_goldens, load_goldens, refreshed, save_goldens
from .verify import SUITES, run_suite

DEFAULT_GOLDENS = Path("data") / "goldens.json"
SIDES = ("above", "below", "principal")


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _grid_arg(text: str):
    items = [piece for piece in text.split(",") if piece.strip()]
    return [_complex_arg(piece) for piece in items]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract reserves 2 for domain
    # errors, so route usage problems to 3 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("POLYLOG_THREADS", "1")))
    except ValueError:
        return 1


def cmd_eval(args) -> int:
    s = args.s
    if args.t is not None:
        result = Li_eval(s, args.t, args.side)
        x = math.log(args.t)
    else:
        result = li_eval(s, EvalPoint(args.x, args.side))
        x = args.x
    v = result.value
    print(
        "{"
        f'"s_re": {_fmt(s.real)}, "s_im": {_fmt(s.imag)}, '
        f'"x": {_fmt(x)}, "side": "{args.side}", '
        f'"value_re": {_fmt(v.real)}, "value_im": {_fmt(v.imag)}, '
        f'"regime": "{result.regime}", "est_error": {_fmt(result.est_error)}'
        "}"
    )
    return 0


def _scan_row(task):
    s, x, side = task
    base = [_fmt(s.real), _fmt(s.imag), _fmt(x), side]
    try:
        result = li_eval(s, EvalPoint(x, side))
    except (DomainError, ConvergenceError):
        return base + ["nan", "nan", "error", "nan"]
    v = result.value
    return base + [_fmt(v.real), _fmt(v.imag), result.regime, _fmt(result.est_error)]


def cmd_scan(args) -> int:
    if not args.s_grid or not args.x_grid:
        print("scan: error: grids must be non-empty", file=sys.stderr)
        return 3
    tasks = [
        (s, float(x.real), args.side) for s in args.s_grid for x in args.x_grid
    ]
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_row, tasks))
    else:
        rows = [_scan_row(task) for task in tasks]
    sink = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(sink)
        writer.writerow(
            ["s_re", "s_im", "x", "side", "value_re", "value_im", "regime", "err"]
        )
        writer.writerows(rows)
    finally:
        if args.out:
            sink.close()
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for r in results:
        failures += not r.passed
        detail = f', "detail": "{r.detail}"' if r.detail else ""
        print(
            "{"
            f'"name": "{r.name}", "passed": {str(r.passed).lower()}, '
            f'"residual": {_fmt(r.residual)}, "tol": {_fmt(r.tol)}{detail}'
            "}"
        )
    print(
        "{"
        f'"suite": "{args.suite}", "checks": {len(results)}, "failures": {failures}'
        "}"
    )
    return 0 if failures == 0 else 1


def cmd_golden(args) -> int:
    path = Path(args.path)
    if not path.is_file():
        print(f"golden: error: no such file: {path}", file=sys.stderr)
        return 3
    records = load_goldens(path)
    if args.mode == "emit":
        out = Path(args.out) if args.out else path
        save_goldens(refreshed(records), out)
        print(f'{{"emitted": {len(records)}, "path": "{out}"}}')
        return 0
    report = compare_goldens(records)
    failures = 0
    for row in report:
        if row["ok"]:
            continue
        failures += 1
        print(
            "{"
            f'"index": {row["index"]}, "op": "{row["op"]}", '
            f'"err": {_fmt(row["err"])}, "abs_tol": {_fmt(row["abs_tol"])}, '
            f'"got_re": {_fmt(row["got_re"])}, "got_im": {_fmt(row["got_im"])}'
            "}"
        )
    print(f'{{"records": {len(report)}, "failures": {failures}}}')
    return 0 if failures == 0 else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="polylog", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate li_s (or Li_s) at one point")
    p_eval.add_argument("--s", type=_complex_arg, required=True,
                        help="order, e.g. 2 or 1.5+0.7j")
    where = p_eval.add_mutually_exclusive_group(required=True)
    where.add_argument("--x", type=float, help="argument on the real line")
    where.add_argument("--t", type=float, help="argument on the positive axis")
    p_eval.add_argument("--positive-axis", action="store_true",
                        help="explicit marker for --t mode")
    p_eval.add_argument("--side", choices=SIDES, default="principal")
    p_eval.set_defaults(func=cmd_eval)

    p_scan = sub.add_parser("scan", help="evaluate a grid, emit CSV")
    p_scan.add_argument("--s-grid", type=_grid_arg, required=True,
                        help="comma-separated orders")
    p_scan.add_argument("--x-grid", type=_grid_arg, required=True,
                        help="comma-separated arguments")
    p_scan.add_argument("--side", choices=SIDES, default="principal")
    p_scan.add_argument("--out", help="CSV path (default stdout)")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="run an invariant suite")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_verify.set_defaults(func=cmd_verify)

    p_golden = sub.add_parser("golden", help="compare or re-emit golden vectors")
    p_golden.add_argument("mode", choices=("compare", "emit"))
    p_golden.add_argument("--path", default=str(DEFAULT_GOLDENS))
    p_golden.add_argument("--out", help="emit target (default: --path)")
    p_golden.set_defaults(func=cmd_golden)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "positive_axis", False) and args.t is None:
        parser.error("--positive-axis requires --t")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
