"""Batch front door: count, recover coefficients, sweep determinants, verify.

Exit codes: 0 success; 1 verification/consistency failure; 2 usage error
(argparse's own convention); 3 a vanished determinant — kept distinct from
failure because a zero cell would be a finding about the non-vanishing
conjecture, not a bug.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Optional, Sequence

from . import __version__
from .barnes import PartitionSpec
from .detsolver import ZeroDeterminantError, cramer_solve, det_record
from .partition import dp_count
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_ZERO_DET = 3


def _parse_parts(text: str, parser: argparse.ArgumentParser) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        parser.error(f"--a expects comma-separated integers, got {text!r}")
    if not parts or any(p < 1 for p in parts):
        parser.error(f"--a expects positive integers, got {text!r}")
    return parts


def _make_spec(args, parser: argparse.ArgumentParser) -> PartitionSpec:
    parts = _parse_parts(args.a, parser)
    try:
        return PartitionSpec.of(*parts, D=args.D)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args, parser) -> int:
    spec = _make_spec(args, parser)
    if args.method == "dp":
        value = dp_count(spec, args.n)[args.n]
    else:
        try:
            q = cramer_solve(spec)
        except ZeroDeterminantError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_ZERO_DET
        exact = q.eval(args.n)
        if exact.denominator != 1:
            print(
                f"internal error: non-integer count {exact} for {spec} at n={args.n}",
                file=sys.stderr,
            )
            return EXIT_FAILURE
        value = int(exact)
    print(value)
    return EXIT_OK


def cmd_coeffs(args, parser) -> int:
    spec = _make_spec(args, parser)
    try:
        q = cramer_solve(spec)
    except ZeroDeterminantError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ZERO_DET
    if args.format == "json":
        document = {"schema": 1, **q.to_json_dict()}
        _emit(json.dumps(document, indent=2, sort_keys=True) + "\n", args.out)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["m", "v", "value"])
        doc = q.to_json_dict()
        for m in range(spec.r):
            for v in range(1, spec.D + 1):
                writer.writerow([m, v, doc["d"][str(m)][str(v)]])
        _emit(buffer.getvalue(), args.out)
    return EXIT_OK


def cmd_det(args, parser) -> int:
    record = det_record(args.r, args.D)
    _emit(json.dumps({"schema": 1, **record}, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK if record["nonzero"] else EXIT_ZERO_DET


def _sweep_cell(cell: tuple[int, int]) -> dict:
    r, D = cell
    start = time.perf_counter()
    record = det_record(r, D)
    record["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    return record


def cmd_sweep(args, parser) -> int:
    if args.r_max < 1 or args.d_max < 1:
        parser.error("sweep bounds must be >= 1")
    cells = [(r, D) for r in range(1, args.r_max + 1) for D in range(1, args.d_max + 1)]
    workers = args.parallel if args.parallel > 0 else (os.cpu_count() or 1)
    if workers == 1:
        results = [_sweep_cell(cell) for cell in cells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_cell, cells))
    results.sort(key=lambda rec: (rec["r"], rec["D"]))
    if args.format == "json":
        report = {
            "schema": 1,
            "tool": f"denumerant {__version__}",
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "r_max": args.r_max,
            "d_max": args.d_max,
            "cells": results,
        }
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["r", "D", "delta", "nonzero", "elapsed_ms"])
        for rec in results:
            writer.writerow(
                [rec["r"], rec["D"], rec["delta"], str(rec["nonzero"]).lower(), rec["elapsed_ms"]]
            )
        _emit(buffer.getvalue(), args.out)
    if any(not rec["nonzero"] for rec in results):
        return EXIT_ZERO_DET
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    records = run_suite(args.suite)
    for record in records:
        print(record.line())
    passed = sum(1 for record in records if record.passed)
    print(f"{passed}/{len(records)} checks passed")
    return EXIT_OK if passed == len(records) else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="denumerant",
        description="Exact restricted-partition engine over Bernoulli determinant systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="count representations of n by the given parts")
    p.add_argument("--a", required=True, help="comma-separated positive parts, e.g. 2,3,5")
    p.add_argument("--n", required=True, type=int, help="target value, n >= 0")
    p.add_argument("--D", type=int, default=None, help="period override (common multiple of parts)")
    p.add_argument("--method", choices=["det", "dp"], default="det")

    p = sub.add_parser("coeffs", help="emit the full quasi-polynomial coefficient table")
    p.add_argument("--a", required=True)
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("det", help="one determinant cell as a JSON record")
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--D", required=True, type=int)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sweep", help="exact determinant sweep over a (r, D) grid")
    p.add_argument("--r-max", required=True, type=int)
    p.add_argument("--d-max", required=True, type=int)
    p.add_argument("--parallel", type=int, default=0, help="worker count; 0 = available cores")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute" and args.n < 0:
        parser.error("--n must be >= 0")
    handlers = {
        "compute": cmd_compute,
        "coeffs": cmd_coeffs,
        "det": cmd_det,
        "sweep": cmd_sweep,
        "verify": cmd_verify,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
