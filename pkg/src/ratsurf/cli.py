"""Command-line front end: analyze, series, oracle, selftest.

Each subcommand builds one report dict; the human printer and the JSON
printer both render that dict, so the two output modes always carry the same
numeric content. JSON output is versioned ("schema": "1") and renders every
mathematical quantity (dimensions, coefficients, multiplicities, sums) as a
decimal string, since those can exceed 64 bits for large inputs; structural
counts (vertices, children) stay plain numbers.

Exit codes are a function of the status alone:
    ok 0, failed 1, invalid-input 2, not-rational 3, not-applicable 4,
    budget-exceeded 5.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, formulas, series
from .harrison import (
    BudgetError,
    REGULAR,
    TRIVIAL,
    harrison_dim,
    hochschild_dim,
    make_fat_point,
)
from .resgraph import GraphError, arithmetic_genus, parse_graph

EXIT_CODES = {
    "ok": 0,
    "failed": 1,
    "invalid-input": 2,
    "not-rational": 3,
    "not-applicable": 4,
    "budget-exceeded": 5,
}


def _num(x) -> str:
    # decimal-string rendering for quantities that may exceed 64 bits
    return str(int(x))


def _tree_dict(node) -> dict:
    return {
        "mult": _num(node.mult),
        "cycle": {vid: _num(a) for vid, a in node.cycle.coefficients.items()},
        "reduced": node.reduced,
        "dropped_rdps": node.dropped_rdp_count,
        "children": [_tree_dict(child) for child in node.children],
    }


def _tree_lines(node, depth: int, out: list) -> None:
    flags = "reduced" if node.reduced else "non-reduced"
    extra = ", %d RDP(s) dropped" % node.dropped_rdp_count if node.dropped_rdp_count else ""
    out.append("%s- mult %d (%s%s)" % ("  " * depth, node.mult, flags, extra))
    for child in node.children:
        _tree_lines(child, depth + 1, out)


def _cycle_text(cycle) -> str:
    return " ".join("%s:%d" % (vid, cycle.coefficients[vid]) for vid in cycle.graph.ids)


def cmd_analyze(args) -> tuple:
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        return "invalid-input", {"error": str(e)}, ["cannot read %s: %s" % (args.path, e)]
    try:
        graph = parse_graph(text)
    except GraphError as e:
        return "invalid-input", {"error": str(e), "error_code": e.code}, [str(e)]
    if args.max_i < 3:
        return "invalid-input", {"error": "--max-i must be at least 3"}, ["--max-i must be at least 3"]
    report = formulas.analyze(graph, imax=args.max_i)

    data = {
        "vertices": graph.n,
        "edges": len(graph.edges),
        "rational": report.rational,
        "fundamental_cycle": {vid: _num(a) for vid, a in report.cycle.coefficients.items()},
    }
    lines = [
        "vertices: %d, edges: %d" % (graph.n, len(graph.edges)),
        "fundamental cycle: %s" % _cycle_text(report.cycle),
    ]
    if report.status == "not-rational":
        pa = arithmetic_genus(graph, report.cycle)
        data["p_a"] = _num(pa)
        lines.append("rational: no (p_a(Z) = %d)" % pa)
        return "not-rational", data, lines
    data["multiplicity"] = _num(report.mult)
    data["reduced"] = report.reduced
    lines.append("rational: yes")
    lines.append("multiplicity: %d" % report.mult)
    lines.append("fundamental cycle reduced: %s" % ("yes" if report.reduced else "no"))
    if report.status == "not-applicable":
        lines.append("rational double point: the dimension formulas need multiplicity >= 3")
        return "not-applicable", data, lines
    data["reduced_everywhere"] = report.reduced_everywhere
    data["tree"] = _tree_dict(report.tree)
    data["tdims"] = {str(i): _num(v) for i, v in report.tdims.items()}
    data["t2"] = {"value": _num(report.t2.value), "exact": report.t2.exact}
    data["codim_ac"] = {"value": _num(report.codim_ac.value), "exact": report.codim_ac.exact}
    data["gmd"] = {
        "sum_d_minus_1": _num(report.sum_d_minus_1),
        "sum_b_minus_1": _num(report.sum_b_minus_1),
        "obstructed": report.gmd_obstructed,
    }
    lines.append("multiplicity tree:")
    _tree_lines(report.tree, 1, lines)
    for i in sorted(report.tdims):
        lines.append("T^%d = %d" % (i, report.tdims[i]))
    suffix = "exact" if report.t2.exact else "lower bound (correction term unknown)"
    lines.append("T^2 = %d (%s)" % (report.t2.value, suffix))
    suffix = "exact" if report.codim_ac.exact else "lower bound (correction term unknown)"
    lines.append("cod_AC = %d (%s)" % (report.codim_ac.value, suffix))
    lines.append("sum(d(P)-1) = %d" % report.sum_d_minus_1)
    lines.append("sum(b_i-1) = %d" % report.sum_b_minus_1)
    lines.append("gmd obstructed: %s" % ("yes" if report.gmd_obstructed else "no"))
    return "ok", data, lines


def cmd_series(args) -> tuple:
    if args.d < 3:
        return "invalid-input", {"error": "--d must be at least 3"}, ["--d must be at least 3"]
    if args.order < 1:
        return "invalid-input", {"error": "--order must be at least 1"}, ["--order must be at least 1"]
    shuffle_row = [series.shuffle_dim(args.d - 1, k) for k in range(1, args.order + 1)]
    q = series.shuffle_dim_series(args.d, args.order)
    p = series.poincare_series(args.d, args.order)
    q_row = [int(q.coeff(k)) for k in range(1, args.order + 1)]
    p_row = [int(p.coeff(k)) for k in range(1, args.order + 1)]
    data = {
        "d": _num(args.d),
        "order": args.order,
        "shuffle_dims": [_num(x) for x in shuffle_row],
        "q_coefficients": [_num(x) for x in q_row],
        "p_coefficients": [_num(x) for x in p_row],
    }
    lines = [
        "d = %d" % args.d,
        "shuffle dims of the (d-1)-dim fat point, k = 1..%d: %s"
        % (args.order, " ".join(str(x) for x in shuffle_row)),
        "Q coefficients t^1..t^%d: %s" % (args.order, " ".join(str(x) for x in q_row)),
        "P coefficients t^1..t^%d (cotangent dims of the cone): %s"
        % (args.order, " ".join(str(x) for x in p_row)),
    ]
    return "ok", data, lines


def cmd_oracle(args) -> tuple:
    if args.m < 1 or args.k < 1:
        return "invalid-input", {"error": "need --m >= 1 and --k >= 1"}, ["need --m >= 1 and --k >= 1"]
    module = TRIVIAL if args.coeffs == "trivial" else REGULAR
    algebra = make_fat_point(args.m)
    try:
        if args.hochschild:
            dim = hochschild_dim(algebra, module, args.k, budget=args.budget)
            kind = "hochschild"
        else:
            dim = harrison_dim(algebra, module, args.k, budget=args.budget)
            kind = "harrison"
    except BudgetError as e:
        return "budget-exceeded", {"error": str(e)}, [str(e)]
    data = {
        "m": _num(args.m),
        "k": _num(args.k),
        "coefficients": args.coeffs,
        "cohomology": kind,
        "brute_force": _num(dim),
    }
    lines = [
        "fat point m=%d, degree k=%d, %s coefficients" % (args.m, args.k, args.coeffs),
        "brute-force %s dimension: %d" % (kind, dim),
    ]
    if args.coeffs == "trivial" and not args.hochschild:
        formula = series.shuffle_dim(args.m, args.k)
        verdict = "MATCH" if dim == formula else "MISMATCH"
        data["formula"] = _num(formula)
        data["verdict"] = verdict
        lines.append("closed-formula value: %d" % formula)
        lines.append("verdict: %s" % verdict)
        if verdict == "MISMATCH":
            return "failed", data, lines
    return "ok", data, lines


def cmd_selftest(args) -> tuple:
    results = acceptance.run_all()
    data = {
        "criteria": [
            {"name": r.name, "passed": r.passed, "detail": r.detail, "seconds": round(r.elapsed, 3)}
            for r in results
        ],
        "passed": sum(1 for r in results if r.passed),
        "failed": sum(1 for r in results if not r.passed),
    }
    lines = []
    for r in results:
        lines.append("%s %s (%s)" % ("PASS" if r.passed else "FAIL", r.name, r.detail))
    lines.append("%d passed, %d failed" % (data["passed"], data["failed"]))
    status = "ok" if data["failed"] == 0 else "failed"
    return status, data, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratsurf",
        description="Cotangent cohomology dimensions of rational surface singularities, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full dimension report for a resolution graph file")
    p.add_argument("path", help="JSON graph file")
    p.add_argument("--max-i", type=int, default=6, help="largest T^i to report (default 6)")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("series", help="shuffle-dimension and cotangent series for the degree-d cone")
    p.add_argument("--d", type=int, required=True, help="cone degree, at least 3")
    p.add_argument("--order", type=int, default=6, help="truncation order (default 6)")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oracle", help="brute-force cohomology of a fat point")
    p.add_argument("--m", type=int, required=True, help="embedding dimension of the fat point")
    p.add_argument("--k", type=int, required=True, help="cochain degree")
    p.add_argument("--coeffs", choices=("trivial", "regular"), default="trivial")
    p.add_argument("--hochschild", action="store_true", help="full complex instead of the shuffle-invariant one")
    p.add_argument("--budget", type=int, default=None, help="cap on the word-space size n^k (default 1500)")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status, data, lines = args.func(args)
    if getattr(args, "json", False):
        envelope = {"schema": "1", "command": args.command, "status": status}
        envelope.update(data)
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        if status != "ok":
            print("status: %s" % status)
    return EXIT_CODES[status]


if __name__ == "__main__":
    sys.exit(main())
