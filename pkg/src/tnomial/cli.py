"""Command line interface.

Four subcommands: ``coeff`` evaluates a single coefficient by a chosen
route, ``table`` prints triangle rows, ``verify`` sweeps an identity
suite and ``oracle`` cross-checks against the brute-force counters.
Output comes in ``plain``, ``json`` or ``csv`` form; every number in
structured output is rendered as a decimal string so that parsing and
re-serializing is byte-identical.

Exit status: 0 when everything computed or verified cleanly, 1 when a
verify or oracle sweep found a counterexample, 2 for unusable arguments
(including routes undefined at the requested parameters).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .coefficients import ROUTE_NAMES, coeff_recurrence, coeff_route, coeff_symbolic
from .errors import (
    DegenerateParametersError,
    DivisibilityError,
    ParameterMismatchError,
)
from .report import IdentityReport
from .sequences import SeqParams
from .suites import (
    IDENTITY_SUITES,
    ORACLE_SUITES,
    fibonomial_reports,
    pq_grid,
    run_oracle,
    run_verify,
    sample_grid,
)

FORMATS = ("plain", "json", "csv")

TABLE_COLUMNS = ("n", "k", "p", "q", "value")

REPORT_COLUMNS = ("identity", "params", "n_max", "k_max", "status", "counterexample", "notes")


class UsageError(Exception):
    """Argument combinations that argparse alone cannot reject."""


def _dump_json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _dump_csv(header: tuple[str, ...], rows: list[tuple]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(text: str, out) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _params_from(args: argparse.Namespace) -> SeqParams:
    if args.p is None or args.q is None:
        raise UsageError("--p and --q are required here")
    return SeqParams(args.p, args.q, getattr(args, "scale", 1) or 1)


def _cmd_coeff(args: argparse.Namespace, out) -> int:
    if args.symbolic:
        if args.route != "recurrence":
            raise UsageError("--symbolic only makes sense with the default route")
        value = str(coeff_symbolic(args.n, args.k))
        if args.format == "json":
            payload = {"k": str(args.k), "n": str(args.n), "route": "symbolic", "value": value}
            _emit(_dump_json(payload), out)
        elif args.format == "csv":
            row = (args.n, args.k, "", "", value)
            _emit(_dump_csv(TABLE_COLUMNS, [row]), out)
        else:
            _emit(value, out)
        return 0

    params = _params_from(args)
    value = coeff_route(params, args.n, args.k, args.route)
    if args.format == "json":
        payload = {
            "k": str(args.k),
            "n": str(args.n),
            "p": str(params.p),
            "q": str(params.q),
            "route": args.route,
            "scale": str(params.scale),
            "value": str(value),
        }
        _emit(_dump_json(payload), out)
    elif args.format == "csv":
        _emit(_dump_csv(TABLE_COLUMNS, [(args.n, args.k, params.p, params.q, value)]), out)
    else:
        _emit(str(value), out)
    return 0


def _cmd_table(args: argparse.Namespace, out) -> int:
    params = _params_from(args)
    if args.max < 0:
        raise UsageError("--max must be nonnegative")
    rows = [
        [coeff_recurrence(params, n, k) for k in range(n + 1)] for n in range(args.max + 1)
    ]
    if args.format == "json":
        payload = {
            "p": str(params.p),
            "q": str(params.q),
            "rows": [[str(value) for value in row] for row in rows],
            "scale": str(params.scale),
        }
        _emit(_dump_json(payload), out)
    elif args.format == "csv":
        flat = [
            (n, k, params.p, params.q, rows[n][k])
            for n in range(args.max + 1)
            for k in range(n + 1)
        ]
        _emit(_dump_csv(TABLE_COLUMNS, flat), out)
    else:
        width = max(len(str(value)) for row in rows for value in row)
        for n, row in enumerate(rows):
            cells = " ".join(str(value).rjust(width) for value in row)
            _emit(f"n={n:<2d} {cells}", out)
    return 0


def _report_lines(report: IdentityReport) -> list[str]:
    head = (
        f"[{report.identity_id}] {report.status.upper()}  "
        f"({report.params}; n_max={report.bounds[0]}, k_max={report.bounds[1]})"
    )
    lines = [head]
    if report.first_counterexample is not None:
        pairs = ", ".join(f"{key}={value}" for key, value in report.first_counterexample.items())
        lines.append(f"  counterexample: {pairs}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return lines


def _emit_reports(reports: list[IdentityReport], fmt: str, out) -> int:
    if fmt == "json":
        _emit(_dump_json([report.to_dict() for report in reports]), out)
    elif fmt == "csv":
        rows = []
        for report in reports:
            d = report.to_dict()
            ce = "" if d["counterexample"] is None else _dump_json(d["counterexample"])
            rows.append(
                (
                    d["identity"],
                    d["params"],
                    d["n_max"],
                    d["k_max"],
                    d["status"],
                    ce,
                    "; ".join(d["notes"]),
                )
            )
        _emit(_dump_csv(REPORT_COLUMNS, rows), out)
    else:
        for report in reports:
            for line in _report_lines(report):
                _emit(line, out)
    return 0 if all(report.holds for report in reports) else 1


def _verify_grid(args: argparse.Namespace) -> list[tuple[int, int]] | None:
    if (args.p is None) != (args.q is None):
        raise UsageError("--p and --q must be given together")
    if args.p is not None:
        return [(args.p, args.q)]
    if args.sample is not None:
        if args.sample < 1:
            raise UsageError("--sample must be positive")
        return sample_grid(pq_grid(), args.sample, args.seed)
    return None


def _cmd_verify(args: argparse.Namespace, out) -> int:
    grid = _verify_grid(args)
    if args.alpha is not None:
        if args.identity != "fibonomial":
            raise UsageError("--alpha only applies to the fibonomial suite")
        reports = fibonomial_reports((args.alpha,), args.max or 10)
    else:
        reports = run_verify(args.identity, grid, args.max, args.order)
    return _emit_reports(reports, args.format, out)


def _cmd_oracle(args: argparse.Namespace, out) -> int:
    reports = run_oracle(args.which, args.max)
    return _emit_reports(reports, args.format, out)


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="plain", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tnomial",
        description="Exact tileable-sequence coefficients and their identity checks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    coeff = commands.add_parser("coeff", help="evaluate one coefficient")
    coeff.add_argument("--p", type=int, help="first parameter")
    coeff.add_argument("--q", type=int, help="second parameter")
    coeff.add_argument("--scale", type=int, default=1, help="sequence scale (default 1)")
    coeff.add_argument("--n", type=int, required=True, help="row index")
    coeff.add_argument("--k", type=int, required=True, help="column index")
    coeff.add_argument(
        "--route", choices=ROUTE_NAMES, default="recurrence", help="computation route"
    )
    coeff.add_argument(
        "--symbolic",
        action="store_true",
        help="print the entry as a polynomial in p and q instead of evaluating",
    )
    _add_format(coeff)
    coeff.set_defaults(handler=_cmd_coeff)

    table = commands.add_parser("table", help="print triangle rows 0..max")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--q", type=int, required=True)
    table.add_argument("--scale", type=int, default=1)
    table.add_argument("--max", type=int, required=True, help="largest row index")
    _add_format(table)
    table.set_defaults(handler=_cmd_table)

    verify = commands.add_parser("verify", help="sweep an identity suite")
    verify.add_argument(
        "--identity",
        choices=IDENTITY_SUITES + ("all",),
        default="all",
        help="which suite to run (default all)",
    )
    verify.add_argument("--p", type=int, help="restrict the sweep to one parameter pair")
    verify.add_argument("--q", type=int)
    verify.add_argument("--max", type=int, help="override the index bound")
    verify.add_argument("--order", type=int, help="series truncation order where applicable")
    verify.add_argument("--alpha", type=int, help="fibonomial recurrence multiplier")
    verify.add_argument("--sample", type=int, help="randomly subsample the parameter grid")
    verify.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    _add_format(verify)
    verify.set_defaults(handler=_cmd_verify)

    oracle = commands.add_parser("oracle", help="cross-check against brute-force counts")
    oracle.add_argument(
        "--which",
        choices=ORACLE_SUITES + ("all",),
        default="all",
        help="which oracle to run (default all)",
    )
    oracle.add_argument("--max", type=int, help="override the index bound")
    _add_format(oracle)
    oracle.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except (
        UsageError,
        DegenerateParametersError,
        DivisibilityError,
        ParameterMismatchError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
