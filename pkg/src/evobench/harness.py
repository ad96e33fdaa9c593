"""Benchmark protocol: repeated seeded runs, aggregation, report files.

Per-run seeds are derived from the campaign base seed and the run index
through a fixed 64-bit mixer, so results do not depend on execution
order or on the worker count.  The type-0 problem gets a fresh random
instance per run (peak position and height drawn from the run seed);
every other problem is a fixed instance.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from . import presets
from .algorithms.de import de_run
from .algorithms.iasa import iasa_run
from .algorithms.rasa import rasa_run
from .algorithms.sade import sade_run
from .core import (ConfigInvalid, EvaluationBudget, Problem, RngStream,
                   RunRecord, UnknownProblem)
from .problems.beam import BeamProblem
from .problems.chebyshev import ChebyshevProblem
from .problems.puc import PucProblem
from .problems.type0 import type0_random_instance

RUNNERS = {"de": de_run, "sade": sade_run, "rasa": rasa_run, "iasa": iasa_run}

DEFAULT_DIMS = {"chebyshev": 9, "beam": 18, "puc": 20, "type0": 10}


def mix_seed(base_seed: int, index: int) -> int:
    """splitmix64 of base_seed + index; order-insensitive run seeds."""
    z = (int(base_seed) + 0x9E3779B97F4A7C15 * (index + 1)) & (2**64 - 1)
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & (2**64 - 1)
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & (2**64 - 1)
    return z ^ (z >> 31)


def default_dim(problem: str) -> int:
    if problem not in DEFAULT_DIMS:
        raise UnknownProblem(problem)
    return DEFAULT_DIMS[problem]


@lru_cache(maxsize=None)
def _static_problem(problem: str, dim: int) -> Problem:
    if problem == "chebyshev":
        return ChebyshevProblem(degree=dim - 1)
    if problem == "beam":
        return BeamProblem()
    if problem == "puc":
        return PucProblem()
    raise UnknownProblem(problem)


def make_problem(problem: str, dim: int, run_seed: int) -> Problem:
    if problem == "type0":
        return type0_random_instance(dim, RngStream(mix_seed(run_seed, 0xF00D)))
    inst = _static_problem(problem, dim)
    if dim != inst.dimension:
        raise ConfigInvalid(
            f"problem {problem!r} has fixed dimension {inst.dimension}")
    return inst


@dataclass(frozen=True)
class BenchmarkSpec:
    problem: str
    algorithm: str
    dim: Optional[int] = None
    run_count: int = 100
    base_seed: int = 0
    max_calls: Optional[int] = None
    threshold: Optional[float] = None
    workers: int = 1
    overrides: tuple = ()   # ((param, raw_value), ...)

    def __post_init__(self):
        if self.run_count < 1:
            raise ConfigInvalid("run_count must be at least 1")
        if self.algorithm not in RUNNERS:
            raise ConfigInvalid(f"unknown algorithm {self.algorithm!r}")
        if self.problem not in presets.PROBLEMS:
            raise UnknownProblem(self.problem)

    def resolved_dim(self) -> int:
        return self.dim if self.dim is not None else default_dim(self.problem)


def run_single(problem_id: str, algorithm: str, dim: int, seed: int,
               max_calls: Optional[int] = None,
               threshold: Optional[float] = None,
               overrides: tuple = ()) -> RunRecord:
    """One seeded trial; everything is derived from the arguments."""
    prob = make_problem(problem_id, dim, seed)
    preset_threshold, preset_calls = presets.termination_presets(problem_id)
    prob.threshold = threshold if threshold is not None else preset_threshold
    budget = EvaluationBudget(max_calls if max_calls is not None
                              else preset_calls)
    cfg = presets.algorithm_config(algorithm, problem_id, dim,
                                   grid=prob.grid, overrides=dict(overrides))
    return RUNNERS[algorithm](prob, cfg, budget, RngStream(seed))


def _run_indexed(args) -> tuple[int, RunRecord]:
    index, spec = args
    seed = mix_seed(spec.base_seed, index)
    try:
        rec = run_single(spec.problem, spec.algorithm, spec.resolved_dim(),
                         seed, spec.max_calls, spec.threshold, spec.overrides)
    except (ConfigInvalid, UnknownProblem):
        raise
    except Exception:
        # A crashed run counts as a failure; the campaign keeps going.
        rec = RunRecord(seed=seed, success=False, calls_at_success=None,
                        best_value=float("nan"),
                        best_chromosome=np.empty(0), calls_used=0)
    return index, rec


@dataclass
class BenchmarkReport:
    spec: BenchmarkSpec
    records: list
    wall_time: float = 0.0

    @property
    def successful_runs(self) -> int:
        return sum(1 for r in self.records if r.success)

    @property
    def avg_calls_successful(self) -> Optional[float]:
        calls = [r.calls_at_success for r in self.records if r.success]
        if not calls:
            return None
        return float(np.mean(calls))


def run_benchmark(spec: BenchmarkSpec) -> BenchmarkReport:
    start = time.perf_counter()
    jobs = [(i, spec) for i in range(spec.run_count)]
    if spec.workers > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(_run_indexed, jobs))
    else:
        results = [_run_indexed(j) for j in jobs]
    results.sort(key=lambda t: t[0])
    records = [rec for _, rec in results]
    return BenchmarkReport(spec=spec, records=records,
                           wall_time=time.perf_counter() - start)


def scaling_study(algorithm: str, dims: list, runs_per_dim: int = 100,
                  base_seed: int = 0, problem: str = "type0",
                  max_calls: Optional[int] = None, workers: int = 1,
                  overrides: tuple = ()) -> list:
    """Per-dimension benchmark reports for the complexity-growth study."""
    out = []
    for dim in dims:
        spec = BenchmarkSpec(problem=problem, algorithm=algorithm, dim=dim,
                             run_count=runs_per_dim, base_seed=base_seed,
                             max_calls=max_calls, workers=workers,
                             overrides=overrides)
        out.append((dim, run_benchmark(spec)))
    return out


# -- serialization -----------------------------------------------------

def _fmt_avg(avg: Optional[float]) -> str:
    return "N/A" if avg is None else repr(avg)


def report_csv_text(report: BenchmarkReport) -> str:
    s = report.spec
    return ("problem,algorithm,dim,runs,successes,avg_calls,base_seed\n"
            f"{s.problem},{s.algorithm},{s.resolved_dim()},{s.run_count},"
            f"{report.successful_runs},{_fmt_avg(report.avg_calls_successful)},"
            f"{s.base_seed}\n")


def runs_csv_text(report: BenchmarkReport) -> str:
    lines = ["run_index,seed,success,calls,best_value"]
    for i, r in enumerate(report.records):
        calls = r.calls_at_success if r.success else r.calls_used
        lines.append(f"{i},{r.seed},{int(r.success)},{calls},{r.best_value!r}")
    return "\n".join(lines) + "\n"


def report_json_text(report: BenchmarkReport) -> str:
    s = report.spec
    payload = {
        "report": {
            "problem": s.problem, "algorithm": s.algorithm,
            "dim": s.resolved_dim(), "runs": s.run_count,
            "successes": report.successful_runs,
            "avg_calls": report.avg_calls_successful,
            "base_seed": s.base_seed,
        },
        "runs": [
            {"run_index": i, "seed": r.seed, "success": r.success,
             "calls": r.calls_at_success if r.success else r.calls_used,
             "best_value": r.best_value}
            for i, r in enumerate(report.records)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def scaling_table_text(rows: list) -> str:
    """Plot-ready two-column data: dim avg_calls (N/A when no successes)."""
    lines = []
    for dim, report in rows:
        lines.append(f"{dim} {_fmt_avg(report.avg_calls_successful)}")
    return "\n".join(lines) + ("\n" if lines else "")
