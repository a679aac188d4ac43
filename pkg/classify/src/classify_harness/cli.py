"""Command line for the classification harness.

    classify-harness run --features FEATURE_DIR --out REPORT_DIR \
        [--kernels linear rbf] [--folds 2 3 5] [--seed 0] [--rank]

Reads every feature CSV + metadata pair under FEATURE_DIR, evaluates the full
(threshold x theory x kind x kernel x folds) grid, and writes
accuracy_report.csv, accuracy_summary.csv, figures, and optionally
feature_ranks.csv per (theory, kind) group.
"""
from __future__ import annotations

import argparse
import os
import sys
from collections import defaultdict

from .harness import FOLD_CHOICES, KERNELS, grid_configs, run_grid
from .io import discover_feature_sets
from .plots import plot_accuracy_grid, plot_feature_frequencies
from .ranking import rank_features


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classify-harness")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("run", help="evaluate the SVM grid over feature CSVs")
    p.add_argument("--features", required=True, help="directory of feature CSV + meta files")
    p.add_argument("--out", required=True, help="report output directory")
    p.add_argument("--kernels", nargs="+", choices=KERNELS, default=list(KERNELS))
    p.add_argument("--folds", nargs="+", type=int, default=list(FOLD_CHOICES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-standardize", action="store_true")
    p.add_argument("--rank", action="store_true",
                   help="also run RFECV feature ranking (linear kernel)")
    return parser


def cmd_run(args) -> int:
    feature_sets = discover_feature_sets(args.features)
    os.makedirs(args.out, exist_ok=True)
    configs = grid_configs(
        feature_sets,
        kernels=tuple(args.kernels),
        folds=tuple(args.folds),
        seed=args.seed,
        standardize=not args.no_standardize,
    )
    report = run_grid(configs)
    report.write_csv(os.path.join(args.out, "accuracy_report.csv"))
    report.write_summary_csv(os.path.join(args.out, "accuracy_summary.csv"))
    for path in plot_accuracy_grid(report, args.out):
        print(path)
    print(os.path.join(args.out, "accuracy_report.csv"))

    if args.rank:
        groups = defaultdict(list)
        for fs in feature_sets:
            groups[(fs.theory, fs.kind)].append(fs)
        for (theory, kind), members in sorted(groups.items()):
            ranking_configs = [
                c
                for c in grid_configs(
                    members, kernels=("linear",), folds=tuple(args.folds), seed=args.seed
                )
            ]
            ranks = rank_features(ranking_configs)
            tag = f"{theory}_{kind}"
            ranks.write_csv(os.path.join(args.out, f"feature_ranks_{tag}.csv"))
            print(plot_feature_frequencies(ranks, args.out, tag))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return cmd_run(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
