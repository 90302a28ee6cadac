"""Command-line entry point.

Subcommands:
  run         execute a sweep described by a JSON config file
  demo-fig1   single-curve fitting demo sweep (basis count 4..120)
  sweep-data  sweep over user-supplied x/y CSV files

Exit codes: 0 success, 2 configuration error, 3 data error, 4 numerical
error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .datagen import default_config
from .errors import ConfigError, DataError, InvalidInputError, NumericalError
from .experiment import (
    RealDataConfig,
    SweepConfig,
    emit_outputs,
    load_config_file,
    run_sweep,
    summarize,
)

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fdadd",
        description="Functional-data regression sweeps with excess basis functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a sweep from a JSON config file")
    p_run.add_argument("--config", required=True, help="path to the JSON sweep config")
    p_run.add_argument("--out", default=None, help="output directory (overrides config)")
    p_run.add_argument("--seed", type=int, default=None, help="seed override")
    p_run.add_argument("--threads", type=int, default=None, help="worker thread override")

    p_demo = sub.add_parser("demo-fig1", help="single-curve double-descent demo")
    p_demo.add_argument("--seed", type=int, default=0)
    p_demo.add_argument("--out", default="fig1-demo-out")

    p_data = sub.add_parser("sweep-data", help="sweep over x/y CSV data files")
    p_data.add_argument("--x", required=True, help="CSV of functional observations")
    p_data.add_argument("--y", required=True, help="CSV of scalar responses")
    p_data.add_argument("--train-size", type=int, required=True)
    p_data.add_argument("--k-min", type=int, default=4)
    p_data.add_argument("--k-max", type=int, default=50)
    p_data.add_argument("--replicates", type=int, default=50)
    p_data.add_argument("--seed", type=int, default=0)
    p_data.add_argument("--threads", type=int, default=1)
    p_data.add_argument("--out", default="sweep-data-out")
    return parser


def _finish(cfg: SweepConfig, out_dir: str) -> int:
    result = run_sweep(cfg)
    summary = summarize(result)
    paths = emit_outputs(result, summary, out_dir)
    peak = max(summary.per_k, key=lambda s: s.stats.median)
    print(f"sweep complete: {cfg.replicates} replicate(s), k = {cfg.k_grid[0]}..{cfg.k_grid[-1]}")
    print(f"median-MSE peak at k={peak.k} (median {peak.stats.median:.6g})")
    for ms in summary.per_method:
        print(
            f"method {ms.method}: mean MSE {ms.mean_mse:.6g}, "
            f"median chosen k {ms.chosen_k_stats.median:g}"
        )
    for p in paths:
        print(f"wrote {p}")
    return 0


def _cmd_run(args) -> int:
    cfg = load_config_file(args.config)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.threads is not None:
        cfg = replace(cfg, threads=args.threads)
    out_dir = args.out or cfg.out_dir or "out"
    return _finish(cfg, out_dir)


def _cmd_demo(args) -> int:
    cfg = SweepConfig(
        scenario_cfg=default_config("fig1-demo"),
        k_grid=tuple(range(4, 121)),
        replicates=1,
        fixed_k=50,
        seed=args.seed,
    )
    return _finish(cfg, args.out)


def _cmd_sweep_data(args) -> int:
    if args.k_max < args.k_min:
        raise ConfigError(f"--k-max must be >= --k-min, got {args.k_min}..{args.k_max}")
    cfg = SweepConfig(
        data=RealDataConfig(x_path=args.x, y_path=args.y, train_size=args.train_size),
        k_grid=tuple(range(args.k_min, args.k_max + 1)),
        replicates=args.replicates,
        fixed_k=min(50, args.k_max) if args.k_min <= 50 <= args.k_max else args.k_max,
        seed=args.seed,
        threads=args.threads,
    )
    return _finish(cfg, args.out)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "demo-fig1":
            return _cmd_demo(args)
        return _cmd_sweep_data(args)
    except (ConfigError, InvalidInputError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
