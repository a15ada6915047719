"""Command-line front end: ``sicigamma list | run | constants``.

Exit codes: 0 all good, 1 some identity or constant failed, 2 usage error
(bad flag, unknown id, bad parameter), 3 could not write a report file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .numcore import CONSTANTS, verify_constants
from .registry import Report, UnknownIdentityError, list_identities, run_suite
from .registry.model import CATEGORIES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

RESULT_FIELDS = ("id", "eq", "params", "lhs", "lhs_err", "rhs", "rhs_err", "abs_err", "tol",
                 "pass", "questionable", "ms", "error")


class UsageError(Exception):
    pass


def _float_token(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    text = format(x, ".17g")
    # keep floats recognisable as floats after parsing
    return text if any(c in text for c in ".en") else text + ".0"


def to_json(obj, indent=2, _level=0) -> str:
    """JSON text with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _float_token(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + to_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    # numpy scalars and the like
    if hasattr(obj, "item"):
        return to_json(obj.item(), indent, _level)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def report_to_json(report: Report) -> str:
    return to_json(report.as_dict()) + "\n"


def report_from_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def report_to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RESULT_FIELDS)
    for r in report.results:
        d = r.as_dict()
        row = []
        for k in RESULT_FIELDS:
            v = d[k]
            if k == "params":
                v = to_json(v, indent=0).replace("\n", "")
            elif isinstance(v, float):
                v = _float_token(v)
            row.append(v)
        w.writerow(row)
    return buf.getvalue()


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror or exc}", file=sys.stderr)
        return False
    return True


def _params_text(params: dict) -> str:
    return ",".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in params.items())


def _status(r) -> str:
    if r.passed:
        return "PASS"
    return "QFAIL" if r.questionable else "FAIL"


def cmd_list(args) -> int:
    recs = list_identities(args.category)
    print(f"{'id':<5} {'eq':<15} {'category':<19} {'tol':<7} {'method':<24} title")
    for r in recs:
        print(f"{r.id:<5} {r.eq:<15} {r.category:<19} {r.tol_class:<7} {r.method:<24} {r.title}")
        if args.verbose:
            for p in r.params:
                print(f"      {p.name} = {p.default!r}  range {p.describe_range()}  sweep {list(p.sweep)}")
    print(f"{len(recs)} identities")
    return EXIT_OK


def cmd_run(args) -> int:
    ids = None
    if args.ids:
        ids = [s.strip() for s in args.ids.split(",") if s.strip()]
        if not ids:
            raise UsageError("--ids needs at least one identity id")
    try:
        report = run_suite(filter=args.category, tol_scale=args.tol_scale, parallelism=args.max_parallel, ids=ids)
    except UnknownIdentityError as exc:
        raise UsageError(exc.args[0]) from None
    for r in report.results:
        line = f"{r.id:<5} {r.eq:<15} abs_err={r.abs_err:.3e} tol={r.tol:.1e} {_status(r)}"
        if args.verbose:
            line += (f"  [{_params_text(r.params)}] lhs={r.lhs.value:.17g}±{r.lhs.err:.1e}"
                     f" rhs={r.rhs.value:.17g}±{r.rhs.err:.1e} {r.ms:.1f}ms")
        if r.error:
            line += f"  ({r.error})"
        print(line)
    c = report.counts
    print(f"total {c['total']}  pass {c['pass']}  fail {c['fail']}  "
          f"questionable_fail {c['questionable_fail']}  skip {c['skip']}")
    if args.json and not _write(args.json, report_to_json(report)):
        return EXIT_IO
    if args.csv and not _write(args.csv, report_to_csv(report)):
        return EXIT_IO
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_constants(args) -> int:
    checks = dict(verify_constants())
    for name, entry in CONSTANTS.items():
        ok = checks.get(name, False)
        print(f"{name:<18} {entry.value:>22.17g}  digits={entry.digits:<3} {'ok' if ok else 'MISMATCH'}")
    rel = checks.get("zeta_prime_neg1_relation", False)
    print(f"{'zeta_prime_neg1_relation':<18} {'ok' if rel else 'MISMATCH'}")
    bad = [k for k, v in checks.items() if not v]
    print(f"{len(checks) - len(bad)}/{len(checks)} checks passed")
    return EXIT_OK if not bad else EXIT_FAIL


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be a positive number: {text!r}")
    return v


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return v


def _category(text):
    if text in CATEGORIES or text in CATEGORIES.values():
        return text
    known = ", ".join(f"{k} ({v})" for k, v in CATEGORIES.items())
    raise argparse.ArgumentTypeError(f"unknown category {text!r}; choose from {known}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sicigamma", description="Check the identity catalog numerically.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the catalog")
    p_list.add_argument("--category", type=_category, help="category letter A-F or its name")
    p_list.add_argument("-v", "--verbose", action="store_true", help="show parameters and sweeps")
    p_list.set_defaults(func=cmd_list)

    p_run = sub.add_parser("run", help="evaluate identities")
    sel = p_run.add_mutually_exclusive_group()
    sel.add_argument("--ids", help="comma separated identity ids")
    sel.add_argument("--category", type=_category, help="category letter A-F or its name")
    p_run.add_argument("--tol-scale", type=_positive_float, default=1.0, help="multiply every tolerance")
    p_run.add_argument("--json", metavar="PATH", help="write the report as JSON")
    p_run.add_argument("--csv", metavar="PATH", help="write one CSV row per result")
    p_run.add_argument("--max-parallel", type=_positive_int, default=1, help="worker threads")
    p_run.add_argument("-v", "--verbose", action="store_true", help="print values, bounds and timings")
    p_run.set_defaults(func=cmd_run)

    p_const = sub.add_parser("constants", help="recompute the constant table")
    p_const.set_defaults(func=cmd_constants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 after --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sicigamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
