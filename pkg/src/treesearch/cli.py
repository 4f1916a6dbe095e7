"""Command-line interface.

Subcommands: validate, solve, exact, eval, rank, kmod, gen, bench,
export-dot, trace.  Exit codes: 0 on success, 1 on invalid input, 2 when
a solver resource limit is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .approx import create_decision_tree
from .bench import BenchConfig, report_to_csv, report_to_json, run_bench
from .core import evaluate_cost, query_sequence, validate_decision_tree
from .errors import StateLimitExceeded, TreeSearchError
from .exact import SolveLimits, opt_exact
from .generators import COST_MODELS, SHAPES, generate_instance
from .modularity import is_up_monotonic, k_up_modularity
from .ranking import ranking_based_dt, vertex_ranking
from .serialize import (
    export_dot,
    load_instance,
    parse_decision_tree,
    serialize_decision_tree,
    serialize_instance,
)


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_tree(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_decision_tree(handle.read())


def _emit_json(args, doc) -> None:
    _write(args, json.dumps(doc, indent=2) + "\n")


def _cmd_validate(args) -> int:
    inst = load_instance(args.input)
    _emit_json(args, {"ok": True, "n": inst.n, "max_cost": str(inst.max_cost)})
    return 0


def _cmd_solve(args) -> int:
    inst = load_instance(args.input)
    dtree, stats = create_decision_tree(inst, limits=SolveLimits(args.state_limit))
    cost = evaluate_cost(inst, dtree)
    if args.format == "dot":
        _write(args, export_dot(inst=inst, strategy=dtree))
    else:
        _emit_json(
            args,
            {
                "cost": str(cost),
                "depth_d": stats.depth_d,
                "max_aux_size": stats.max_aux_size,
                "tree": json.loads(serialize_decision_tree(dtree)),
            },
        )
    return 0


def _cmd_exact(args) -> int:
    inst = load_instance(args.input)
    opt, witness = opt_exact(inst, limits=SolveLimits(args.state_limit))
    if args.format == "dot":
        _write(args, export_dot(inst=inst, strategy=witness))
    else:
        _emit_json(args, {"opt": str(opt), "tree": json.loads(serialize_decision_tree(witness))})
    return 0


def _cmd_eval(args) -> int:
    inst = load_instance(args.input)
    dtree = _load_tree(args.tree)
    cost = evaluate_cost(inst, dtree)
    _emit_json(args, {"cost": str(cost)})
    return 0


def _cmd_rank(args) -> int:
    inst = load_instance(args.input)
    ranking = vertex_ranking(inst)
    dtree = ranking_based_dt(inst)
    cost = evaluate_cost(inst, dtree)
    _emit_json(
        args,
        {
            "labels": {str(v): ranking.labels[v] for v in sorted(ranking.labels)},
            "max_label": ranking.max_label,
            "cost": str(cost),
            "tree": json.loads(serialize_decision_tree(dtree)),
        },
    )
    return 0


def _cmd_kmod(args) -> int:
    inst = load_instance(args.input)
    k, witness = k_up_modularity(inst)
    _emit_json(
        args,
        {"k": k, "witness_threshold": str(witness), "up_monotonic": is_up_monotonic(inst)},
    )
    return 0


def _cmd_gen(args) -> int:
    eps = Fraction(args.eps) if args.eps is not None else None
    inst = generate_instance(args.shape, args.cost_model, args.n, args.seed, k=args.k, eps=eps)
    _write(args, serialize_instance(inst))
    return 0


def _cmd_bench(args) -> int:
    config = BenchConfig(
        count=args.count,
        n_range=(args.n_min, args.n_max),
        shapes=tuple(args.shapes.split(",")) if args.shapes else SHAPES,
        cost_models=tuple(args.cost_models.split(",")) if args.cost_models else COST_MODELS,
        seed=args.seed,
        exact_cap=args.exact_cap,
        state_limit=args.state_limit,
    )
    report = run_bench(config)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write(report_to_csv(report))
    _write(args, report_to_json(report))
    return 0


def _cmd_export_dot(args) -> int:
    inst = load_instance(args.input)
    strategy = _load_tree(args.tree) if args.tree else None
    if strategy is not None:
        validate_decision_tree(inst, strategy)
    _write(args, export_dot(inst=inst, strategy=strategy))
    return 0


def _cmd_trace(args) -> int:
    inst = load_instance(args.input)
    dtree = _load_tree(args.tree)
    validate_decision_tree(inst, dtree)
    seq = query_sequence(inst, dtree, args.target)
    _emit_json(args, {"queries": list(seq.vertices), "cost": str(seq.total_cost)})
    return 0


def _add_io(sub, output=True):
    sub.add_argument("--input", required=True, help="instance JSON file")
    if output:
        sub.add_argument("--output", help="write result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treesearch",
        description="Search strategies for trees with non-uniform query costs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="check an instance file")
    _add_io(p)
    p.set_defaults(func=_cmd_validate)

    p = subs.add_parser("solve", help="build the level-recursion strategy")
    _add_io(p)
    p.add_argument("--state-limit", type=int, default=5_000_000)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_solve)

    p = subs.add_parser("exact", help="solve a small instance exactly")
    _add_io(p)
    p.add_argument("--state-limit", type=int, default=5_000_000)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_exact)

    p = subs.add_parser("eval", help="worst-case cost of a strategy file")
    _add_io(p)
    p.add_argument("--tree", required=True, help="strategy JSON file")
    p.set_defaults(func=_cmd_eval)

    p = subs.add_parser("rank", help="vertex ranking and its strategy")
    _add_io(p)
    p.set_defaults(func=_cmd_rank)

    p = subs.add_parser("kmod", help="modularity parameter of the cost function")
    _add_io(p)
    p.set_defaults(func=_cmd_kmod)

    p = subs.add_parser("gen", help="generate a random instance")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--cost-model", choices=COST_MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, help="number of planted expensive groups")
    p.add_argument("--eps", help="gap for the alternating model, e.g. 1/8")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("bench", help="run the benchmark harness")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=14)
    p.add_argument("--shapes", help="comma-separated subset of shapes")
    p.add_argument("--cost-models", help="comma-separated subset of cost models")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact-cap", type=int, default=14)
    p.add_argument("--state-limit", type=int, default=5_000_000)
    p.add_argument("--output")
    p.add_argument("--csv", help="also write a CSV report here")
    p.set_defaults(func=_cmd_bench)

    p = subs.add_parser("export-dot", help="Graphviz text for instance or strategy")
    _add_io(p)
    p.add_argument("--tree", help="strategy JSON file (emit the strategy instead)")
    p.set_defaults(func=_cmd_export_dot)

    p = subs.add_parser("trace", help="query sequence for one target")
    _add_io(p)
    p.add_argument("--tree", required=True, help="strategy JSON file")
    p.add_argument("--target", type=int, required=True)
    p.set_defaults(func=_cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StateLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TreeSearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
