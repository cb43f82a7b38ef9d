"""Command-line interface.

    combspec finite --n 4 --k 2 --format json
    combspec tail --n 20 --k 2
    combspec table --format csv
    combspec verify --n-max 12 --k-max 8
    combspec arccos 3 4

Exit codes: 0 success, 2 invalid arguments, 3 formula/oracle mismatch,
4 precision-guard trip.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import finite_spectrum as fs
from . import tail_spectrum as ts
from .arith import classify_arccos
from .errors import InternalConsistencyError, InvalidArgument, PrecisionError
from .verify import CHECKS, flip_entry, run_verify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_PRECISION = 4
SIG_DIGITS = 12


def round_sig(obj):
    """Round every float in a JSON-able structure to 12 significant digits."""
    if isinstance(obj, float):
        return float(f"{obj:.{SIG_DIGITS}g}")
    if isinstance(obj, dict):
        return {k: round_sig(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_sig(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(round_sig(obj), sort_keys=True)


def fmt(x: float) -> str:
    return f"{x:.{SIG_DIGITS}g}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def render_finite(report: fs.SpectrumReport, fmt_name: str) -> str:
    if fmt_name == "json":
        return dumps(report.to_dict())
    if fmt_name == "csv":
        rows = [["m", "j", "eigenvalue"]]
        for m, group in enumerate(report.groups, 1):
            rows += [[m, j, fmt(x)] for j, x in enumerate(group, 1)]
        return _csv(rows)
    lines = [f"Gamma_{{{report.n},{report.k}}}: {report.n * report.k} eigenvalues, "
             f"{report.p} above 2"]
    if report.lambda1_k is not None:
        lines.append(f"lambda1(k) = {fmt(report.lambda1_k)}  (bound 5/2)")
    for m, group in enumerate(report.groups, 1):
        lines.append(f"  L_{m}: " + " ".join(fmt(x) for x in group))
    return "\n".join(lines)


def render_tail(report: ts.TailSpectrumReport, fmt_name: str) -> str:
    if fmt_name == "json":
        return dumps(report.to_dict())
    if fmt_name == "csv":
        rows = [["j", "eigenvalue"]]
        rows += [[j, fmt(x)] for j, x in enumerate(report.positive_eigenvalues, 1)]
        return _csv(rows)
    lines = [
        f"H_{{{report.n},{report.k}}}: essential spectrum [-2, 2]",
        f"positive discrete eigenvalues: {report.count}"
        f" = floor(omega_k (n+1)/pi) {report.p} + heaviside {report.heaviside_term}",
        f"omega_k = {fmt(report.omega_k)}, a_nk = {fmt(report.a_nk)}",
    ]
    lines += [f"  nu_{j} = {fmt(x)}" for j, x in enumerate(report.positive_eigenvalues, 1)]
    lines.append("negative part is the mirror image; multiplicity <= 2, at most 4 doubles")
    lines.append("eigenvalues of the finite component inside [-2, 2] are not computed")
    return "\n".join(lines)


def count_table(n_min: int, n_max: int, k_min: int, k_max: int) -> list[list[int]]:
    return [[ts.count_formula(n, k) for n in range(n_min, n_max + 1)]
            for k in range(k_min, k_max + 1)]


def render_table(args, table: list[list[int]]) -> str:
    ns = list(range(args.n_min, args.n_max + 1))
    ks = list(range(args.k_min, args.k_max + 1))
    if args.format == "json":
        return dumps({"n": ns, "k": ks, "counts": table})
    rows = [["k\\n"] + ns] + [[k] + row for k, row in zip(ks, table)]
    if args.format == "csv":
        return _csv(rows)
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows)


def cmd_finite(args) -> int:
    _require(args.n >= 1 and args.k >= 1, "n and k must be >= 1")
    print(render_finite(fs.eigenvalues(args.n, args.k, args.tol), args.format))
    return EXIT_OK


def cmd_tail(args) -> int:
    _require(args.n >= 2 and args.k >= 2, "n and k must be >= 2")
    print(render_tail(ts.discrete_spectrum(args.n, args.k, args.tol), args.format))
    return EXIT_OK


def cmd_table(args) -> int:
    _require(args.n_min >= 2 and args.k_min >= 2, "grid bounds must be >= 2")
    _require(args.n_min <= args.n_max and args.k_min <= args.k_max, "empty grid")
    table = count_table(args.n_min, args.n_max, args.k_min, args.k_max)
    print(render_table(args, table))
    return EXIT_OK


def cmd_verify(args) -> int:
    _require(args.n_max >= 2 and args.k_max >= 2, "grid bounds must be >= 2")
    _require(args.L >= 50, "L must be >= 50")
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    unknown = set(checks) - set(CHECKS)
    _require(not unknown, f"unknown checks: {sorted(unknown)}")
    hook = flip_entry(*args.inject_flip) if args.inject_flip else None
    results = run_verify(args.n_max, args.k_max, args.L, args.tol, checks, adjacency_hook=hook)
    ok = all(r.passed for r in results.values())
    if args.format == "json":
        print(dumps({"passed": ok, "checks": {k: r.to_dict() for k, r in results.items()}}))
    else:
        for name, r in results.items():
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {name}: {r.cells} cells, {len(r.failures)} failures")
            for f in r.failures[:20]:
                print(f"    {dumps(f)}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_arccos(args) -> int:
    verdict = classify_arccos(args.p, args.q)
    if args.format == "json":
        print(dumps(verdict.to_dict()))
    elif verdict.rational:
        print(f"arccos({verdict.value}) = {verdict.angle} pi: rational multiple of pi")
    else:
        print(f"arccos({verdict.value}) / pi is irrational "
              f"(reduced denominator of 2c is {verdict.certificate})")
    return EXIT_OK


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidArgument(msg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="combspec", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="text"):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default)

    p = sub.add_parser("finite", help="spectrum of the finite comb P_n > P_k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=fs.DEFAULT_TOL)
    add_format(p)
    p.set_defaults(func=cmd_finite)

    p = sub.add_parser("tail", help="discrete spectrum of the comb with an infinite tail")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tol", type=float, default=fs.DEFAULT_TOL)
    add_format(p)
    p.set_defaults(func=cmd_tail)

    p = sub.add_parser("table", help="count of positive discrete eigenvalues over a grid")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=6)
    add_format(p, default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check formulas against the eigensolver oracle")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--L", type=int, default=300, help="tail truncation length")
    p.add_argument("--tol", type=float, default=1e-6, help="truncation match tolerance")
    p.add_argument("--checks", default=",".join(CHECKS))
    p.add_argument("--inject-flip", type=int, nargs=2, metavar=("I", "J"),
                   help="negative control: toggle adjacency entry (I, J) before the oracle runs")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("arccos", help="is arccos(p/q)/pi rational?")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_format(p)
    p.set_defaults(func=cmd_arccos)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as exc:
        print(f"precision guard: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except InternalConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
