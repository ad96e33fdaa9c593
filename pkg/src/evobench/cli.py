"""Command-line front end: single runs, campaigns, scaling study, presets."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import presets
from .core import ConfigInvalid, UnknownProblem
from .harness import (BenchmarkSpec, default_dim, mix_seed, report_csv_text,
                      report_json_text, run_benchmark, run_single,
                      runs_csv_text, scaling_study, scaling_table_text)

ENV_WORKERS = "EVOBENCH_WORKERS"


def _add_common(p, problem=True):
    if problem:
        p.add_argument("--problem", required=True, choices=presets.PROBLEMS)
    p.add_argument("--algo", required=True, choices=presets.ALGORITHMS)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-calls", type=int, default=None)
    p.add_argument("--preset", type=Path, default=None,
                   help="preset file (as emitted by the presets subcommand)")
    p.add_argument("--set", dest="sets", action="append", default=[],
                   metavar="KEY=VALUE", help="override one preset parameter")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="evobench")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="one seeded optimization run")
    _add_common(run)

    bench = sub.add_parser("bench", help="seeded benchmark campaign")
    _add_common(bench)
    bench.add_argument("--runs", type=int, default=100)
    bench.add_argument("--workers", type=int,
                       default=int(os.environ.get(ENV_WORKERS, "1")))
    bench.add_argument("--out", type=Path, required=True,
                       help="output directory for report files")

    scale = sub.add_parser("scale", help="type-0 complexity growth study")
    _add_common(scale, problem=False)
    scale.add_argument("--dims", type=str, required=True,
                       help="comma-separated dimensions, e.g. 10,30,50")
    scale.add_argument("--runs", type=int, default=100)
    scale.add_argument("--workers", type=int,
                       default=int(os.environ.get(ENV_WORKERS, "1")))
    scale.add_argument("--out", type=Path, required=True)

    pr = sub.add_parser("presets", help="dump parameter tables")
    pr.add_argument("--algo", choices=presets.ALGORITHMS, default=None)
    pr.add_argument("--out", type=Path, default=None)
    return ap


def _collect_overrides(args, problem: str) -> tuple:
    params = {}
    if args.preset is not None:
        sections = presets.load_preset_text(args.preset.read_text())
        for (algo, prob), vals in sections.items():
            if algo == args.algo and prob == problem:
                params.update(vals)
    for item in args.sets:
        if "=" not in item:
            raise ConfigInvalid(f"--set expects KEY=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        params[key.strip()] = value.strip()
    # Validate the keys eagerly so typos fail before any run starts.
    dim = args.dim if args.dim is not None else default_dim(problem)
    presets.algorithm_config(args.algo, problem, dim,
                             grid=_grid_for(problem), overrides=params)
    return tuple(sorted(params.items()))


def _grid_for(problem: str):
    if problem == "beam":
        from .problems.beam import GRID_STEPS
        return GRID_STEPS
    return None


def _cmd_run(args) -> int:
    overrides = _collect_overrides(args, args.problem)
    dim = args.dim if args.dim is not None else default_dim(args.problem)
    rec = run_single(args.problem, args.algo, dim, args.seed,
                     max_calls=args.max_calls, overrides=overrides)
    print(f"problem={args.problem} algo={args.algo} dim={dim} seed={args.seed}")
    print(f"success={rec.success} calls_at_success={rec.calls_at_success} "
          f"calls_used={rec.calls_used}")
    print(f"best_value={rec.best_value!r}")
    print("best_chromosome=" + " ".join(repr(v) for v in rec.best_chromosome))
    return 0


def _cmd_bench(args) -> int:
    overrides = _collect_overrides(args, args.problem)
    spec = BenchmarkSpec(problem=args.problem, algorithm=args.algo,
                         dim=args.dim, run_count=args.runs,
                         base_seed=args.seed, max_calls=args.max_calls,
                         workers=args.workers, overrides=overrides)
    report = run_benchmark(spec)
    try:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "report.csv").write_text(report_csv_text(report))
        (args.out / "runs.csv").write_text(runs_csv_text(report))
        (args.out / "report.json").write_text(report_json_text(report))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    print(report_csv_text(report), end="")
    return 0


def _cmd_scale(args) -> int:
    overrides = _collect_overrides(args, "type0")
    dims = [int(d) for d in args.dims.split(",") if d.strip()]
    rows = scaling_study(args.algo, dims, runs_per_dim=args.runs,
                         base_seed=args.seed, max_calls=args.max_calls,
                         workers=args.workers, overrides=overrides)
    try:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "scaling.dat").write_text(scaling_table_text(rows))
        for dim, report in rows:
            (args.out / f"runs_dim{dim}.csv").write_text(runs_csv_text(report))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    print(scaling_table_text(rows), end="")
    return 0


def _cmd_presets(args) -> int:
    text = presets.dump_presets(args.algo)
    if args.out is not None:
        try:
            args.out.write_text(text)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return 1
    else:
        print(text, end="")
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "scale":
            return _cmd_scale(args)
        return _cmd_presets(args)
    except (ConfigInvalid, UnknownProblem) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
