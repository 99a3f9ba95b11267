"""Command-line entry point: ``snakedimers <command> ...``.

JSON goes to stdout (curves are CSV).  Exact rationals print as
``"num/den"`` unless ``--float`` is given.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .bracket import MODES, bordered_bracket, bordered_grid, bracket
from . import enumeration as en
from . import gcf
from . import genfun as gf
from .linalg import lambda_product
from .snake import ContinuedFraction, all_cfs, build_snake, cf_value, dual_cf, dual_snake, fence_poset_of


@dataclass
class CommandResult:
    status: int
    payload: object
    diagnostics: dict = field(default_factory=dict)
    csv: bool = False

    def render(self) -> str:
        if self.csv:
            return self.payload
        return json.dumps(self.payload, indent=None, separators=(", ", ": ")) + "\n"


def _cf(text: str) -> ContinuedFraction:
    try:
        return ContinuedFraction.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad continued fraction {text!r}: {exc}") from None


def _m(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"m must be an integer, got {text!r}") from None
    if m < 0:
        raise argparse.ArgumentTypeError("m must be >= 0")
    return m


def _positive_m(text: str) -> int:
    m = _m(text)
    if m < 1:
        raise argparse.ArgumentTypeError("m must be >= 1")
    return m


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _rat(v, as_float: bool):
    return float(v) if as_float else gcf.format_rational(v)


def cmd_snake(args) -> CommandResult:
    snake = build_snake(args.cf)
    out = snake.to_dict()
    out["dual_cf"] = str(dual_cf(args.cf))
    out["value"] = _rat(cf_value(args.cf), args.float)
    return CommandResult(0, out)


def cmd_count(args) -> CommandResult:
    snake = build_snake(args.cf)
    if args.paths:
        items = en.enumerate_m_lattice_paths(snake, args.m)
    elif args.list:
        items = en.enumerate_m_dimers(snake, args.m)
    else:
        return CommandResult(0, {"count": str(en.count_m_dimers(snake, args.m))})
    out = {"count": str(len(items))}
    if args.list:
        out["items"] = [ms.to_json() for ms in items]
    return CommandResult(0, out)


def cmd_bracket(args) -> CommandResult:
    if args.i is None and args.j is None:
        return CommandResult(0, {"bracket": str(bracket(args.cf, args.m, args.mode))})
    i = args.m if args.i is None else args.i
    j = args.m if args.j is None else args.j
    value = bordered_bracket(i, args.cf, j, args.m, args.mode)
    return CommandResult(0, {"bordered_bracket": str(value), "i": i, "j": j})


def cmd_matrix(args) -> CommandResult:
    return CommandResult(0, lambda_product(args.cf, args.m).to_json())


def cmd_gcf_vector(args) -> CommandResult:
    vec = gcf.cf_vector_matrix(args.cf, args.m)
    return CommandResult(0, [_rat(v, args.float) for v in vec.entries])


def cmd_gcf_limit(args) -> CommandResult:
    word = gcf.Word.parse(args.prefix, args.period)
    i = args.m if args.i is None else args.i
    enc = gcf.r_limit(word, i, args.m, args.tol, args.max_factors)
    out = enc.to_json(args.float)
    if enc.upper is not None:
        out["value"] = f"{float(enc.midpoint):.15g}"
    return CommandResult(0 if enc.converged else 3, out, {"widths": list(enc.widths)})


def cmd_gcf_cubic(args) -> CommandResult:
    return CommandResult(0, gcf.periodic_cubic(args.period).to_json(args.float))


def cmd_gcf_curve(args) -> CommandResult:
    samples = gcf.sample_r_curve(args.m, args.start, args.stop, args.step, args.i)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "r"])
    for x, r in samples:
        w.writerow([f"{float(x):.15g}", f"{float(r):.15g}"])
    report = gcf.monotonicity_report(samples)
    diag = {"samples": report.samples, "monotone": report.increasing, "violations": len(report.violations)}
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
        return CommandResult(0, diag)
    return CommandResult(0, buf.getvalue(), diag, csv=True)


def cmd_gcf_invert(args) -> CommandResult:
    found = gcf.invert_r_m(args.target, args.m, args.max_len, args.max_part)
    if found is None:
        return CommandResult(0, {"cf": None, "value": None})
    return CommandResult(0, {"cf": str(found), "value": _rat(cf_value(found), args.float)})


def cmd_genfun(args) -> CommandResult:
    kind = args.kind
    if kind == "qbinom":
        return CommandResult(0, gf.q_binomial(args.n, args.k).to_json())
    if kind == "fib":
        return CommandResult(0, gf.q_fibonacci(args.k).to_json())
    if args.cf is None:
        raise ValueError(f"genfun {kind}: --cf is required")
    snake = build_snake(args.cf)
    poset = fence_poset_of(dual_snake(snake))
    if kind == "rank":
        return CommandResult(0, en.rank_generating_function(snake, args.m).to_json())
    if kind == "stanley":
        return CommandResult(0, gf.stanley_U(poset, args.m).to_json())
    if kind == "F":
        return CommandResult(0, gf.stanley_F(poset).to_json())
    if kind == "series":
        return CommandResult(0, [c.to_json() for c in gf.series_in_x(gf.stanley_F(poset), args.order)])
    if kind == "quasi":
        poly = gf.quasi_sym_poly(dual_snake(snake), args.m)
        return CommandResult(0, [[gf.format_monomial(k), str(c)] for k, c in poly.items()])
    if kind == "unimodal":
        u = gf.stanley_U(poset, args.m)
        return CommandResult(0, {"poly": u.to_json(), "unimodal": gf.unimodality_report(u)})
    raise ValueError(f"unknown genfun kind {kind!r}")


def _verify_one(cf_parts: tuple[int, ...], max_m: int) -> list[str]:
    """Cross-check every evaluation route on one continued fraction."""
    problems = []
    cf = ContinuedFraction(cf_parts)
    snake = build_snake(cf)
    dual = dual_snake(snake)
    poset = fence_poset_of(dual)
    for m in range(1, max_m + 1):
        counts = {
            "dimers": en.count_m_dimers(snake, m),
            "matrix": lambda_product(cf, m)[0, 0],
            "bracket_enum": bracket(cf, m, "enum"),
            "bracket_recur": bracket(cf, m, "recur"),
            "dual_paths": len(en.enumerate_m_lattice_paths(dual, m)),
        }
        if len(set(counts.values())) != 1:
            problems.append(f"{cf} m={m}: counts disagree {counts}")
        if bordered_grid(cf, m, "recur") != bordered_grid(cf, m, "matrix"):
            problems.append(f"{cf} m={m}: bordered grid disagrees with the matrix product")
        if en.rank_generating_function(snake, m) != gf.stanley_U(poset, m):
            problems.append(f"{cf} m={m}: rank polynomial disagrees with stanley_U")
        if gcf.cf_vector_recursive(cf, m) != gcf.cf_vector_matrix(cf, m):
            problems.append(f"{cf} m={m}: CF vector routes disagree")
    return problems


def cmd_verify(args) -> CommandResult:
    cfs = [cf.parts for cf in all_cfs(args.max_total)]
    start = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_one, cfs, [args.max_m] * len(cfs)))
    else:
        results = [_verify_one(c, args.max_m) for c in cfs]
    problems = [p for r in results for p in r]
    out = {"checked": len(cfs), "max_m": args.max_m, "mismatches": problems}
    return CommandResult(1 if problems else 0, out, {"seconds": time.perf_counter() - start})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snakedimers", description="Snake graphs, m-dimer covers and generalised continued fractions.")
    parser.add_argument("--float", action="store_true", help="render rationals as floats")
    parser.add_argument("-v", "--verbose", action="store_true", help="print diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snake", help="snake graph of a continued fraction")
    p.add_argument("--cf", type=_cf, required=True)
    p.set_defaults(func=cmd_snake)

    p = sub.add_parser("count", help="count m-dimer covers")
    p.add_argument("--cf", type=_cf, required=True)
    p.add_argument("--m", type=_m, required=True)
    p.add_argument("--list", action="store_true", help="also list the covers")
    p.add_argument("--paths", action="store_true", help="count m-lattice paths of the snake instead")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bracket", help="weighted bracket, optionally bordered")
    p.add_argument("--cf", type=_cf, required=True)
    p.add_argument("--m", type=_m, required=True)
    p.add_argument("--mode", choices=MODES, default="matrix")
    p.add_argument("--i", type=int, help="left border multiplicity")
    p.add_argument("--j", type=int, help="right border multiplicity")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("matrix", help="Lambda-matrix product")
    p.add_argument("--cf", type=_cf, required=True)
    p.add_argument("--m", type=_m, required=True)
    p.set_defaults(func=cmd_matrix)

    g = sub.add_parser("gcf", help="generalised continued fractions").add_subparsers(dest="gcf_command", required=True)

    p = g.add_parser("vector", help="the vector (r_m, ..., r_1, 1)")
    p.add_argument("--cf", type=_cf, required=True)
    p.add_argument("--m", type=_positive_m, required=True)
    p.set_defaults(func=cmd_gcf_vector)

    p = g.add_parser("limit", help="certified limit of r_{i,m} along an eventually periodic word")
    p.add_argument("--prefix", default=None)
    p.add_argument("--period", default=None)
    p.add_argument("--m", type=_positive_m, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--tol", type=_rational, default=Fraction(1, 10**12))
    p.add_argument("--max-factors", type=int, default=gcf.DEFAULT_MAX_FACTORS)
    p.set_defaults(func=cmd_gcf_limit)

    p = g.add_parser("cubic", help="characteristic cubic of a period (m = 2)")
    p.add_argument("--period", type=_cf, required=True)
    p.set_defaults(func=cmd_gcf_cubic)

    p = g.add_parser("curve", help="sample x -> r_m(x) as CSV")
    p.add_argument("--m", type=_positive_m, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--from", dest="start", type=_rational, required=True)
    p.add_argument("--to", dest="stop", type=_rational, required=True)
    p.add_argument("--step", type=_rational, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gcf_curve)

    p = g.add_parser("invert", help="shortest word with r_m equal to a target")
    p.add_argument("--m", type=_positive_m, required=True)
    p.add_argument("--target", type=_rational, required=True)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-part", type=int, default=12)
    p.set_defaults(func=cmd_gcf_invert)

    p = sub.add_parser("genfun", help="generating functions")
    p.add_argument("kind", choices=["rank", "stanley", "F", "series", "quasi", "unimodal", "qbinom", "fib"])
    p.add_argument("--cf", type=_cf)
    p.add_argument("--m", type=_m, default=1)
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", help="cross-check all evaluation routes; exit 1 on mismatch")
    p.add_argument("--max-total", type=int, default=6)
    p.add_argument("--max-m", type=_positive_m, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        parser.error(str(exc))


def main(argv: list[str] | None = None) -> int:
    parser_args = sys.argv[1:] if argv is None else argv
    result = run(parser_args)
    sys.stdout.write(result.render())
    if result.diagnostics and ("-v" in parser_args or "--verbose" in parser_args):
        sys.stderr.write(json.dumps(result.diagnostics) + "\n")
    return result.status


if __name__ == "__main__":
    sys.exit(main())
