"""Benchmark harness: empirical quality of the level-recursion strategy.

Each row runs the full construction on one generated instance, validates
and prices the result, and (for instances small enough to solve exactly)
records the exact optimum and the resulting approximation ratio.  All
cost figures stay exact rationals; a row violates the quality bound when
its ratio exceeds ``4 * depth_d + 2``, and the aggregate counter of such
rows must be zero.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .approx import create_decision_tree
from .core import evaluate_cost
from .errors import StateLimitExceeded
from .exact import SolveLimits, opt_exact
from .generators import COST_MODELS, SHAPES, generate_instance
from .modularity import k_up_modularity


@dataclass(frozen=True)
class BenchConfig:
    count: int
    n_range: tuple[int, int] = (2, 14)
    shapes: tuple[str, ...] = SHAPES
    cost_models: tuple[str, ...] = COST_MODELS
    seed: int = 0
    exact_cap: int = 14
    state_limit: int = 5_000_000


@dataclass(frozen=True)
class BenchRow:
    seed: int
    n: int
    shape: str
    cost_model: str
    k: int
    opt: Fraction | None
    approx_cost: Fraction | None
    ratio: Fraction | None
    depth_d: int
    max_aux_size: int
    runtime_ms: float
    status: str  # "ok", "no-oracle", or "state-limit"

    @property
    def violates_bound(self) -> bool:
        if self.ratio is None:
            return False
        return self.ratio > 4 * self.depth_d + 2


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]

    @property
    def max_ratio(self) -> Fraction:
        ratios = [r.ratio for r in self.rows if r.ratio is not None]
        return max(ratios, default=Fraction(0))

    @property
    def mean_ratio(self) -> Fraction:
        ratios = [r.ratio for r in self.rows if r.ratio is not None]
        if not ratios:
            return Fraction(0)
        return sum(ratios, Fraction(0)) / len(ratios)

    @property
    def bound_violations(self) -> int:
        return sum(1 for r in self.rows if r.violates_bound)


def _pick_params(rng: random.Random, cost_model: str, n: int):
    if cost_model == "planted-k":
        return rng.randint(1, max(1, min(4, n // 2))), None
    if cost_model == "alternating":
        return None, Fraction(1, 2 ** rng.randint(1, 4))
    return None, None


def plan_instances(config: BenchConfig):
    """Deterministic instance stream for a config: (seed, shape, model, n, k, eps)."""
    rng = random.Random(config.seed)
    lo, hi = config.n_range
    plans = []
    for _ in range(config.count):
        shape = rng.choice(list(config.shapes))
        cost_model = rng.choice(list(config.cost_models))
        if cost_model == "alternating" and shape != "path":
            shape = "path"  # alternating costs are a path family
        n = rng.randint(lo, hi)
        inst_seed = rng.getrandbits(32)
        k, eps = _pick_params(rng, cost_model, n)
        plans.append((inst_seed, shape, cost_model, n, k, eps))
    return plans


def run_bench(config: BenchConfig) -> BenchReport:
    """Run the harness; per-row solver budget overruns are recorded, not fatal."""
    limits = SolveLimits(config.state_limit)
    rows = []
    for inst_seed, shape, cost_model, n, k, eps in plan_instances(config):
        inst = generate_instance(shape, cost_model, n, inst_seed, k=k, eps=eps)
        k_value, _ = k_up_modularity(inst)
        started = time.perf_counter()
        try:
            dtree, stats = create_decision_tree(inst, limits=limits)
        except StateLimitExceeded:
            rows.append(
                BenchRow(inst_seed, n, shape, cost_model, k_value, None, None, None,
                         0, 0, (time.perf_counter() - started) * 1000.0, "state-limit")
            )
            continue
        approx_cost = evaluate_cost(inst, dtree)
        opt = ratio = None
        status = "no-oracle"
        if n <= config.exact_cap:
            try:
                opt, _witness = opt_exact(inst, limits=limits)
                ratio = approx_cost / opt
                status = "ok"
            except StateLimitExceeded:
                status = "state-limit"
        runtime_ms = (time.perf_counter() - started) * 1000.0
        rows.append(
            BenchRow(inst_seed, n, shape, cost_model, k_value, opt, approx_cost,
                     ratio, stats.depth_d, stats.max_aux_size, runtime_ms, status)
        )
    return BenchReport(tuple(rows))


def _fmt(value) -> str:
    return "" if value is None else str(value)


def report_to_json(report: BenchReport) -> str:
    doc = {
        "rows": [
            {
                "seed": r.seed,
                "n": r.n,
                "shape": r.shape,
                "cost_model": r.cost_model,
                "k": r.k,
                "opt": _fmt(r.opt),
                "approx_cost": _fmt(r.approx_cost),
                "ratio": _fmt(r.ratio),
                "depth_d": r.depth_d,
                "max_aux_size": r.max_aux_size,
                "runtime_ms": round(r.runtime_ms, 3),
                "status": r.status,
            }
            for r in report.rows
        ],
        "aggregates": {
            "count": len(report.rows),
            "max_ratio": str(report.max_ratio),
            "mean_ratio": str(report.mean_ratio),
            "bound_violations": report.bound_violations,
        },
    }
    return json.dumps(doc, indent=2) + "\n"


_CSV_FIELDS = ("seed", "n", "shape", "cost_model", "k", "opt", "approx_cost",
               "ratio", "depth_d", "max_aux_size", "runtime_ms", "status")


def report_to_csv(report: BenchReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(_CSV_FIELDS)
    for r in report.rows:
        writer.writerow(
            [r.seed, r.n, r.shape, r.cost_model, r.k, _fmt(r.opt), _fmt(r.approx_cost),
             _fmt(r.ratio), r.depth_d, r.max_aux_size, round(r.runtime_ms, 3), r.status]
        )
    writer.writerow([])
    writer.writerow(["max_ratio", str(report.max_ratio)])
    writer.writerow(["mean_ratio", str(report.mean_ratio)])
    writer.writerow(["bound_violations", report.bound_violations])
    return buffer.getvalue()
