"""Command-line surface.  Thin adapters only: every command parses flags,
calls the library, and serializes the result.

Exit codes: 0 success, 1 domain error (bad data), 2 usage error.
"""

import argparse
import json
import sys

import numpy as np

from . import confspace, harness, phi as phi_mod
from .consistency import (
    IndicatorKind,
    indicator_value,
    is_consistent,
    koczkodaj_index,
    max_triad_deviation,
    smooth_index,
)
from .core import format_matrix, matrix_to_json_dict, parse_matrix
from .errors import PcrankError
from .projection import consistencize, locus_change_report
from .ranking import (
    admissible_permutation,
    characteristic_matrix,
    enumerate_loci,
    is_admissible_locus,
    ranking_from_matrix,
    satisfies_r_condition,
)


def _add_matrix_args(p):
    p.add_argument("--input", default="-", help="matrix file path, or - for stdin")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--reciprocity-tol", type=float, default=1e-9,
                   help="tolerance on |a_ij * a_ji - 1| when validating input")


def _add_common_args(p):
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.add_argument("--tol", type=float, default=1e-9, help="consistency tolerance")
    p.add_argument("--tie-tol", type=float, default=0.0,
                   help="tie tolerance on |ln a_ij| for the ranking condition")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pcrank",
        description="Strict ranking from pairwise-comparisons matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="consistency and ranking-condition diagnostics")
    _add_matrix_args(p)
    _add_common_args(p)
    p.add_argument("--indicator", choices=["koczkodaj", "smooth"], default=None,
                   help="report only this indicator instead of both")

    p = sub.add_parser("rank", help="strict ranking of an admissible-locus matrix")
    _add_matrix_args(p)
    _add_common_args(p)

    p = sub.add_parser("consistencize", help="orthogonal-projection consistencization")
    _add_matrix_args(p)
    _add_common_args(p)
    p.add_argument("--report", action="store_true",
                   help="also emit the before/after locus report")

    p = sub.add_parser("minimize", help="gradient-descent consistencization")
    _add_matrix_args(p)
    _add_common_args(p)
    p.add_argument("--indicator", choices=["koczkodaj", "smooth"], default="smooth")
    p.add_argument("--max-iters", type=int, default=10000)
    p.add_argument("--phi-tol", type=float, default=None)
    p.add_argument("--grad-tol", type=float, default=0.0)
    p.add_argument("--trace", default=None,
                   help="write the trajectory as JSON lines to this path")

    p = sub.add_parser("loci", help="count ranking loci and admissible loci")
    _add_common_args(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("simulate", help="Monte-Carlo instability experiment")
    _add_common_args(p)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--spread", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("confspace-demo",
                       help="truncated collision-path lengths in configuration space")
    _add_common_args(p)
    p.add_argument("--epsilon", type=float, action="append", default=None,
                   help="truncation distance to the collision (repeatable)")
    p.add_argument("--samples", type=int, default=100000)
    return parser


def _read_matrix(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return parse_matrix(text, args.format, args.reciprocity_tol)


def _emit(args, obj, text_lines=None):
    if args.output == "json":
        print(json.dumps(obj))
    else:
        for line in text_lines if text_lines is not None else [json.dumps(obj)]:
            print(line)


def _char_to_list(c):
    return [[int(s) for s in row] for row in c.signs]


def _cmd_check(args):
    a = _read_matrix(args)
    result = {
        "consistent": bool(is_consistent(a, args.tol)),
        "max_triad_deviation": float(max_triad_deviation(a)),
        "r_condition": bool(satisfies_r_condition(a, args.tie_tol)),
        "admissible": bool(is_admissible_locus(a, args.tie_tol)),
    }
    if args.indicator is None:
        result["koczkodaj_index"] = float(koczkodaj_index(a))
        result["smooth_index"] = float(smooth_index(a))
    else:
        kind = IndicatorKind(args.indicator)
        result[f"{args.indicator}_index"] = float(indicator_value(a, kind))
    _emit(args, result, [f"{k}: {v}" for k, v in result.items()])
    return 0


def _cmd_rank(args):
    a = _read_matrix(args)
    c = characteristic_matrix(a, args.tie_tol)
    result = {
        "order": None,
        "weights": None,
        "admissible": bool(is_admissible_locus(a, args.tie_tol)),
        "characteristic": _char_to_list(c),
    }
    if result["admissible"]:
        ranking = ranking_from_matrix(a, args.tie_tol, args.tol)
        result["order"] = list(ranking.sigma)
        if ranking.weights is not None:
            result["weights"] = [float(w) for w in ranking.weights]
    _emit(args, result, [
        f"admissible: {result['admissible']}",
        f"order (worst to best): {result['order']}",
        f"weights: {result['weights']}",
    ])
    return 0


def _report_to_dict(report):
    return {
        "r_before": report.r_before,
        "r_after": report.r_after,
        "admissible_before": report.admissible_before,
        "admissible_after": report.admissible_after,
        "locus_changed": report.locus_changed,
        "before_characteristic": _char_to_list(report.before_char),
        "after_characteristic": _char_to_list(report.after_char),
    }


def _cmd_consistencize(args):
    a = _read_matrix(args)
    b = consistencize(a)
    if args.report:
        report = _report_to_dict(locus_change_report(a, args.tie_tol))
        obj = {"matrix": matrix_to_json_dict(b), "report": report}
        lines = [format_matrix(b, args.format).rstrip()] + [
            f"{k}: {v}" for k, v in report.items() if not k.endswith("characteristic")
        ]
        _emit(args, obj, lines)
    else:
        if args.output == "json":
            print(json.dumps(matrix_to_json_dict(b)))
        else:
            print(format_matrix(b, args.format).rstrip())
    return 0


def _cmd_minimize(args):
    a = _read_matrix(args)
    cfg = phi_mod.PhiConfig(
        indicator=IndicatorKind(args.indicator),
        max_iters=args.max_iters,
        phi_tol=args.phi_tol,
        grad_tol=args.grad_tol,
    )
    traj = phi_mod.minimize_phi(a, cfg)
    if args.trace:
        with open(args.trace, "w") as fh:
            for it, (v, p, g) in enumerate(traj.iterates):
                fh.write(json.dumps({
                    "iter": it,
                    "phi": p,
                    "grad_norm": g,
                    "upper": [float(x) for x in v.coords],
                }) + "\n")
    last = traj.iterates[-1]
    summary = {
        "converged": traj.converged,
        "termination": traj.termination.value,
        "iterations": traj.iterations,
        "phi_final": last[1],
        "grad_norm_final": last[2],
    }
    obj = {"matrix": matrix_to_json_dict(traj.final), "summary": summary}
    lines = [format_matrix(traj.final, args.format).rstrip()] + [
        f"{k}: {v}" for k, v in summary.items()
    ]
    _emit(args, obj, lines)
    return 0


def _cmd_loci(args):
    stats = enumerate_loci(args.n)
    obj = {"n": stats.n, "total": stats.total, "admissible": stats.admissible}
    _emit(args, obj, [f"total: {stats.total}", f"admissible: {stats.admissible}"])
    return 0


def _cmd_simulate(args):
    stats = harness.instability_experiment(args.n, args.trials, args.spread, args.seed)
    print(stats.to_json())
    return 0


def _cmd_confspace_demo(args):
    eps = args.epsilon if args.epsilon else [1e-2, 1e-3, 1e-4]
    table = confspace.collision_length_table(eps, args.samples)
    obj = {"path": "two-point collision, initial separation 0.5", "entries": table}
    _emit(args, obj, [
        f"eps={row['epsilon']:g} length={row['length']:.6g} "
        f"closed_form={row['closed_form']:.6g}" for row in table
    ])
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "rank": _cmd_rank,
    "consistencize": _cmd_consistencize,
    "minimize": _cmd_minimize,
    "loci": _cmd_loci,
    "simulate": _cmd_simulate,
    "confspace-demo": _cmd_confspace_demo,
}


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except PcrankError as exc:
        if getattr(args, "output", "text") == "json":
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
                  file=sys.stderr)
        else:
            print(f"pcrank: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
