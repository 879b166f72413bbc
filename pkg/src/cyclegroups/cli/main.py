"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .. import affine, bounds, numtheory
from ..group import (
    MAX_GROUP_ORDER,
    NORMAL_SUBGROUP_LIMIT,
    GuardExceeded,
    automorphism_group,
    is_semisimple,
    socle,
    solvable_radical,
)
from .expr import ExprError, build_group, format_group_expr, parse_group_expr
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

QUANTITIES = ("order", "meo", "mao", "exponent", "lambda", "lambda-aff", "radical-index", "socle-order")


def _jsonable(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return v
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _text(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_text(x)}" for k, x in v.items())
    return str(v)


def emit(report: dict, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps(_jsonable(report)) + "\n")
        return
    for key, value in report.items():
        if key == "items":
            for item in value:
                mark = "PASS" if item["passed"] else "FAIL"
                stream.write(f"  {mark}  {item['name']}: expected {_text(item['expected'])}, got {_text(item['observed'])}\n")
        elif key == "rows":
            for row in value:
                stream.write("  " + "  ".join(f"{k}={_text(v)}" for k, v in row.items()) + "\n")
        else:
            stream.write(f"{key}: {_text(value)}\n")


def compute_quantity(G, quantity: str, max_affine_sweep: int) -> dict:
    out: dict = {}
    if quantity == "order":
        out["order"] = G.order
    elif quantity == "meo":
        out["meo"] = G.meo
    elif quantity == "exponent":
        out["exponent"] = G.exponent
    elif quantity == "mao":
        out["mao"] = automorphism_group(G).meo
    elif quantity == "lambda":
        lam = affine.lambda_auto(G)
        out["Lambda"] = lam
        out["lambda"] = Fraction(lam, G.order)
    elif quantity == "lambda-aff":
        if is_semisimple(G):
            w = affine.lambda_aff_semisimple(G)
            out["method"] = "semisimple order formula"
        else:
            w = affine.lambda_aff_exact(G, max_sweep=max_affine_sweep)
            out["method"] = "exhaustive cycle decomposition"
        out["Lambda_aff"] = w.value
        out["lambda_aff"] = Fraction(w.value, G.order)
        wit = {"alpha": w.alpha, "x": w.x}
        if w.start is not None:
            wit["start"] = w.start
        out["witness"] = wit
    elif quantity == "radical-index":
        if is_semisimple(G):
            rad = 1
        else:
            rad = solvable_radical(G, NORMAL_SUBGROUP_LIMIT).order
        out["radical_order"] = rad
        out["radical_index"] = G.order // rad
    elif quantity == "socle-order":
        out["socle_order"] = socle(G).order
    else:
        raise ValueError(quantity)
    return out


def cmd_compute(args) -> int:
    expr = parse_group_expr(args.expr)
    start = time.perf_counter()
    G = build_group(expr, args.max_group_order)
    report = {
        "command": f"compute {args.quantity}",
        "group": format_group_expr(expr),
        "order": G.order,
    }
    report.update(compute_quantity(G, args.quantity, args.max_affine_sweep))
    report["wall_time_s"] = round(time.perf_counter() - start, 3)
    emit(report, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    items = run_suite(args.suite, args)
    passed = sum(i.passed for i in items)
    report = {
        "command": f"verify {args.suite}",
        "passed": f"{passed}/{len(items)}",
        "items": [vars(i) for i in items],
        "wall_time_s": round(time.perf_counter() - start, 3),
    }
    emit(report, args.json)
    return EXIT_OK if passed == len(items) else EXIT_FAIL


def cmd_landau_table(args) -> int:
    rows = numtheory.landau_table(args.n_max)
    for r in rows:
        for k in ("psi", "massias_margin", "rosser_schoenfeld_margin", "exp3_margin"):
            r[k] = round(r[k], 6)
    emit({"command": "landau-table", "rows": rows}, args.json)
    return EXIT_OK


def cmd_bounds_grid(args) -> int:
    rows = bounds.bounds_grid(args.q_max, args.d_max, args.m_max, args.n_max)
    out = []
    for r in rows:
        if args.failures_only and not r.failures:
            continue
        out.append(
            {
                "group": r.label,
                "route": r.route,
                "holds": r.holds,
                "failing_n": r.failures,
                "fallback": r.fallback,
            }
        )
    ok = all(r.holds for r in rows)
    report = {
        "command": "bounds-grid",
        "cases": len(rows),
        "all_hold": ok,
        "rows": out,
    }
    emit(report, args.json)
    return EXIT_OK if ok else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--max-group-order", type=_positive, default=MAX_GROUP_ORDER)
    common.add_argument("--max-affine-sweep", type=_positive, default=affine.MAX_AFFINE_SWEEP)

    p = _Parser(prog="cyclegroups", description="Cycle lengths of automorphisms and affine maps of finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", parents=[common], help="compute a quantity of a group")
    c.add_argument("quantity", choices=QUANTITIES)
    c.add_argument("expr", help='group expression, e.g. "PSL2:5 ^ 2" or "Hol(Alt:5)"')
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--q-max", type=_positive)
    v.add_argument("--d-max", type=_positive)
    v.add_argument("--m-max", type=_positive)
    v.add_argument("--n-max", type=_positive)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("landau-table", parents=[common], help="Landau and Chebyshev function table")
    t.add_argument("--n-max", type=_positive, default=30)
    t.set_defaults(func=cmd_landau_table)

    b = sub.add_parser("bounds-grid", parents=[common], help="exact case inequalities over a parameter grid")
    b.add_argument("--q-max", type=_positive, default=64)
    b.add_argument("--d-max", type=_positive, default=8)
    b.add_argument("--m-max", type=_positive, default=6)
    b.add_argument("--n-max", type=_positive, default=12)
    b.add_argument("--failures-only", action="store_true", help="only list groups where the first route fails")
    b.set_defaults(func=cmd_bounds_grid)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExprError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except GuardExceeded as e:
        if getattr(args, "json", False):
            sys.stdout.write(json.dumps({"error": "guard exceeded", "guard": e.guard, "limit": str(e.limit), "reached": None if e.reached is None else str(e.reached)}) + "\n")
        sys.stderr.write(f"guard exceeded: {e}\n")
        return EXIT_GUARD
