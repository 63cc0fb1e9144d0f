"""
Command-line interface.

Subcommands: generate, minsum, tree-dp, solve-lp, lift, oscillation,
convergence, sweep. All numbers are printed exactly ("p/q", "-inf").
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from config.settings import settings
from factor_graph.extended import format_extended
from factor_graph.graph import build_factor_graph
from harness.convergence import check_convergence
from harness.oscillation import check_weak_oscillation
from harness.sweep import SweepConfig, sweep
from instances.generators import FAMILIES, GeneratorParams, generate
from instances.model import Sense
from instances.rational import format_rational, parse_rational
from instances.serialization import load_instance, save_instance
from lifts.girth_amplification import amplify_girth
from lifts.lift import build_lift, validate_covering_map
from lp_exact.analysis import LpClass, classify, compute_c, variable_range
from lp_exact.solver import solve_lp
from minsum.covering_direct import run_minsum_covering_direct
from minsum.engine import run_minsum
from minsum.trace import TraceWriter
from tree_dp.solver import opt_dp_root_set, tree_optima
from tree_dp.tree import build_tree
from utils.errors import MalformedPermutationError, PackCoverError, ParameterRangeError, UndefinedMarginError
from utils.logging_setup import setup_logging


logger = logging.getLogger(__name__)


def print_section(title: str) -> None:
    print("\n" + "=" * 70)
    print(f"  {title}")
    print("=" * 70)


def _vector(values) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


# ----- generate -----

def cmd_generate(args: argparse.Namespace) -> int:
    weights = None
    if args.weights:
        weights = tuple(parse_rational(w) for w in args.weights.split(","))
    params = GeneratorParams(
        n=args.n, m=args.m, max_bound=args.max_bound, max_b=args.max_b,
        max_row_size=args.max_row_size, max_weight=args.max_weight, weights=weights,
        sense=Sense(args.sense),
    )
    inst = generate(args.family, params, args.seed)
    path = save_instance(inst, args.out)
    print(f"Wrote {args.family} instance (n={inst.n}, m={inst.m}, seed={args.seed}) to {path}")
    return 0


# ----- minsum -----

def cmd_minsum(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    if args.direct:
        decision = run_minsum_covering_direct(inst, args.iterations)
    elif args.trace:
        with TraceWriter(args.trace) as writer:
            decision = run_minsum(inst, args.iterations, on_iteration=writer)
    else:
        decision = run_minsum(inst, args.iterations)

    print_section(f"MIN-SUM ({inst.sense.value}, t={decision.t}, {decision.parity})")
    print(f"x_hat: {list(decision.x_hat)}")
    for i in range(inst.n):
        table = ", ".join(format_extended(v) for v in decision.mu_v[i])
        print(f"  v{i}: delta={sorted(decision.delta[i])}  mu=[{table}]")
    print(f"Unambiguous: {decision.is_unambiguous}")
    return 0


# ----- tree-dp -----

def cmd_tree_dp(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    tree = build_tree(build_factor_graph(inst), args.root, 2 * args.iterations)
    optima = tree_optima(tree)

    print_section(f"PATH-PREFIX TREE (root v{args.root}, h={tree.h}, {len(tree)} nodes)")
    for beta, value in enumerate(optima):
        print(f"  beta={beta}: {format_extended(value)}")
    print(f"Root set: {sorted(opt_dp_root_set(tree, args.iterations))}")
    return 0


# ----- solve-lp -----

def cmd_solve_lp(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    lp = solve_lp(inst)
    rng = variable_range(inst, lp)
    lp_class = classify(inst, lp)

    print_section(f"LP RELAXATION ({inst.sense.value})")
    print(f"Optimum: {format_rational(lp.opt_value)}")
    print(f"Vertices: {len(lp.vertices)} ({len(lp.opt_vertices)} optimal)")
    for vertex in lp.opt_vertices:
        print(f"  {_vector(vertex)}")
    print("Variable ranges over the optimal face:")
    for r in range(inst.n):
        print(f"  x{r}: [{format_rational(rng.x_min[r])}, {format_rational(rng.x_max[r])}]")
    print(f"Classification: {lp_class.value}")
    if lp_class != LpClass.MULTIPLE:
        try:
            print(f"c(P, w): {format_rational(compute_c(inst, lp))}")
        except UndefinedMarginError as e:
            print(f"c(P, w): undefined ({e})")
    return 0


# ----- lift -----

def parse_perms(source: str, edge_count: int, M: int) -> list[tuple[int, ...]]:
    """Permutations from "all-swap", "random:<seed>" or a file with one index sequence per line."""
    if source == "all-swap":
        # the swap for M = 2, a cyclic shift in general
        return [tuple((a + 1) % M for a in range(M))] * edge_count
    if source.startswith("random:"):
        rng = np.random.default_rng(int(source.split(":", 1)[1]))
        return [tuple(int(x) for x in rng.permutation(M)) for _ in range(edge_count)]

    path = Path(source)
    if not path.exists():
        raise MalformedPermutationError(f"permutation file {source} not found")
    perms = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            perms.append(tuple(int(x) for x in line.replace(",", " ").split()))
    return perms


def cmd_lift(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    fg = build_factor_graph(inst)
    if args.action == "amplify":
        if args.target is None:
            raise ParameterRangeError("lift amplify needs --target")
        lift = amplify_girth(fg, args.target)
    else:
        perms = parse_perms(args.perms, len(fg.edges), args.fold)
        lift = build_lift(fg, args.fold, perms)

    print_section(f"{lift.fold}-LIFT")
    print(f"Vertices: {lift.graph.number_of_nodes()}, edges: {lift.graph.number_of_edges()}")
    print(f"Girth: {lift.girth()}")
    print(f"Covering map valid: {validate_covering_map(lift)}")
    if args.out:
        save_instance(lift.instance, args.out)
        print(f"Lifted instance written to {args.out}")
    return 0


# ----- oscillation / convergence / sweep -----

def cmd_oscillation(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    report = check_weak_oscillation(inst, args.t_max, instance_id=Path(args.instance).stem)

    print_section(f"WEAK OSCILLATION (t_max={args.t_max}, LP {report.lp_class.value})")
    print(report.to_dataframe().to_string(index=False))
    print(f"\nViolations: {len(report.violations)}, rounding: {len(report.rounding_violations)}, "
          f"cross-parity: {len(report.intersection_violations)}")
    for finding in report.intersection_violations:
        print(f"  {finding}")
    if args.csv:
        report.to_csv(args.csv)
    return 0 if report.passed else 2


def cmd_convergence(args: argparse.Namespace) -> int:
    inst = load_instance(args.instance)
    report = check_convergence(inst, args.slack)

    print_section(f"CONVERGENCE: {report.status.upper()}")
    if report.reason:
        print(f"Reason: {report.reason}")
    if report.t_star is not None:
        print(f"c = {format_rational(report.c)}, w_max = {format_rational(report.w_max)}, t* = {report.t_star}")
        print(f"x* = {list(report.x_star)}")
        for check in report.checks:
            mark = "✓" if check.matches else "✗"
            print(f"  {mark} t={check.t}: x_hat={list(check.x_hat)}")
    return 1 if report.status == "fail" else 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig.load(args.config)
    result = sweep(config, args.out)

    print_section(f"SWEEP {config.family} seeds [{config.seed_start}, {config.seed_stop})")
    print(f"Instances: {len(result.outcomes)} ({len(result.skipped)} skipped)")
    print(f"Rows: {len(result.rows)}, oscillation violations: {len(result.violations)}")
    print(f"Cross-parity violations: {len(result.intersection_violations)}")
    if config.convergence:
        print(f"Convergence: {result.convergence_counts()}")
    failed = result.violations or result.intersection_violations or result.convergence_counts()["fail"]
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="packcover", description="Exact min-sum for packing and covering programs")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    parser.add_argument("--log-file", default=None, help="Also log to this file under LOG_DIR")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="Write a generated instance file")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--max-bound", type=int, default=1)
    p.add_argument("--max-b", type=int, default=2)
    p.add_argument("--max-row-size", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=9)
    p.add_argument("--weights", default=None, help="Comma-separated rationals")
    p.add_argument("--sense", default="packing", choices=[s.value for s in Sense])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("minsum", help="Run min-sum for t iterations")
    p.add_argument("--instance", required=True)
    p.add_argument("--iterations", type=int, required=True)
    p.add_argument("--trace", default=None, help="JSON-lines message trace")
    p.add_argument("--direct", action="store_true", help="Covering only: minimise directly instead of complementing")
    p.set_defaults(func=cmd_minsum)

    p = sub.add_parser("tree-dp", help="Solve the computation tree of a variable")
    p.add_argument("--instance", required=True)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--iterations", type=int, required=True)
    p.set_defaults(func=cmd_tree_dp)

    p = sub.add_parser("solve-lp", help="Solve the LP relaxation exactly")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=cmd_solve_lp)

    p = sub.add_parser("lift", help="Build a lift or amplify girth")
    p.add_argument("action", nargs="?", default="build", choices=["build", "amplify"])
    p.add_argument("--instance", required=True)
    p.add_argument("--fold", type=int, default=2)
    p.add_argument("--perms", default="all-swap", help='File, "all-swap" or "random:<seed>"')
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--out", default=None, help="Write the lifted instance")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("oscillation", help="Check weak oscillation up to t_max")
    p.add_argument("--instance", required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_oscillation)

    p = sub.add_parser("convergence", help="Check convergence past the iteration bound")
    p.add_argument("--instance", required=True)
    p.add_argument("--slack", type=int, default=None)
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("sweep", help="Run a configured sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="CSV output path")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level or settings.log_level, args.log_file)

    try:
        return args.func(args)
    except PackCoverError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
