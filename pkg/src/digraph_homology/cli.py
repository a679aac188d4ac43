"""Command-line entry point.

Subcommands:
  features          manifest of weighted digraphs -> feature CSVs + metadata
  synth             generate a synthetic two-class dataset
  betti             Betti numbers of a single graph file
  happel            degree-1 Hochschild rank of an acyclic digraph
  random-experiment mean Betti numbers over Erdos-Renyi digraphs
  reach-debug       component count and reachability poset size of a graph

Exit codes: 0 success, 1 usage error, 2 data error, 3 size guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .datasets import make_synthetic_dataset
from .errors import DataError, GuardExceeded
from .graphs import load_adjacency, subgraph_at, threshold
from .hochschild import happel_betti1_components, count_paths, hh_cochain_betti, path_algebra
from .complexes import directed_flag_complex, order_complex
from .pipeline import (
    THEORIES,
    compute_curves,
    features_from_curves,
    load_manifest,
    theory_betti,
    write_features_csv,
    write_metadata,
)
from .randgraphs import ErExperimentConfig, mean_betti_experiment
from .reach import reachability_poset, scc


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1 for usage
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _add_common(parser):
    parser.add_argument("--field-char", type=int, default=2, help="prime field characteristic")
    parser.add_argument("--jobs", type=int, default=1, help="worker process cap")
    parser.add_argument("--config", help="JSON file with defaults; explicit flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="digraph-homology")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("features", help="compute feature CSVs from a dataset manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--theta1", type=float, nargs="+", default=[-0.4],
                   help="lower threshold(s); one output set per value")
    p.add_argument("--theta2", type=float, default=0.0, help="upper threshold")
    p.add_argument("--degrees", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--n", type=int, default=10, help="grid subdivisions per degree")
    p.add_argument("--theory", choices=THEORIES + ("both",), default="both")
    p.add_argument("--kind", choices=("betti", "betti-integral", "both"), default="both")
    p.add_argument("--scan-stride", type=int, default=1,
                   help="bound scan sampling; 1 is exact, larger is a coarse pre-scan")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; unused here")
    _add_common(p)

    p = sub.add_parser("synth", help="write a synthetic two-class dataset")
    p.add_argument("--out", required=True)
    p.add_argument("--n-subjects", type=int, default=28)
    p.add_argument("--vertices", type=int, default=30)
    p.add_argument("--p-a", type=float, default=0.05)
    p.add_argument("--p-b", type=float, default=0.15)
    p.add_argument("--theta1", type=float, default=-0.4, help="lower end of the weight range")
    p.add_argument("--theta2", type=float, default=0.0, help="upper end of the weight range")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("betti", help="Betti numbers of one graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("dense", "edge-list"), default="dense")
    p.add_argument("--theory", choices=THEORIES + ("both",), default="both")
    p.add_argument("--degrees", type=int, nargs="+", default=[0, 1, 2])
    p.add_argument("--at", type=float, default=None,
                   help="filtration value; default uses every edge")
    p.add_argument("--dump-complex", action="store_true",
                   help="also print per-dimension simplex counts")
    _add_common(p)

    p = sub.add_parser("happel", help="degree-1 Hochschild rank of an acyclic digraph")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("dense", "edge-list"), default="edge-list")
    p.add_argument("--verify-cochain", action="store_true",
                   help="cross-check against the raw cochain ranks (guarded; exit 3 when too large)")
    _add_common(p)

    p = sub.add_parser("random-experiment", help="mean Betti sweep over G(n,p)")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--r", type=int, default=50, help="realisations per probability")
    p.add_argument("--p-min", type=float, default=0.0)
    p.add_argument("--p-max", type=float, default=0.3)
    p.add_argument("--steps", type=int, default=60, help="number of probability intervals")
    p.add_argument("--degrees", type=int, nargs="+", default=[0, 1])
    p.add_argument("--theory", choices=THEORIES + ("both",), default="both")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    _add_common(p)

    p = sub.add_parser("reach-debug", help="component count and poset size of a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("dense", "edge-list"), default="dense")
    p.add_argument("--at", type=float, default=None)
    _add_common(p)

    return parser


def _apply_config_file(args: argparse.Namespace, argv: list[str]) -> argparse.Namespace:
    """Merge values from --config JSON; flags given on the command line win."""
    if not getattr(args, "config", None):
        return args
    try:
        with open(args.config) as fh:
            overrides = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read config {args.config}: {exc}")
    if not isinstance(overrides, dict):
        raise DataError(f"{args.config}: config must be a JSON object")
    explicit = {token.split("=")[0].lstrip("-").replace("-", "_")
                for token in argv if token.startswith("--")}
    for key, value in overrides.items():
        attr = key.replace("-", "_")
        if attr in explicit or not hasattr(args, attr):
            continue
        setattr(args, attr, value)
    return args


def _underlying(graph, at):
    weights = [w for _, _, w in graph.edges]
    if at is None:
        at = max(weights) if weights else 0.0
    return subgraph_at(graph, at)


def _theories(choice: str) -> tuple[str, ...]:
    return THEORIES if choice == "both" else (choice,)


def cmd_features(args) -> int:
    ids, graphs, labels = load_manifest(args.manifest)
    kinds = ("betti", "betti-integral") if args.kind == "both" else (args.kind,)
    os.makedirs(args.out, exist_ok=True)
    written = []
    for theta1 in args.theta1:
        if theta1 > args.theta2:
            raise ValueError(f"theta1={theta1} exceeds theta2={args.theta2}")
        thresholded = [threshold(g, theta1, args.theta2) for g in graphs]
        for theory in _theories(args.theory):
            curveset = compute_curves(
                thresholded, args.degrees, args.n, args.field_char, theory,
                jobs=args.jobs, scan_stride=args.scan_stride,
            )
            for kind in kinds:
                matrix = features_from_curves(curveset, labels, ids, kind)
                stem = f"features_{theory}_{kind}_t1_{theta1:g}"
                csv_path = os.path.join(args.out, stem + ".csv")
                write_features_csv(matrix, csv_path)
                write_metadata(
                    matrix, os.path.join(args.out, stem + ".meta.json"),
                    theta1, args.theta2, args.n, args.field_char,
                )
                written.append(csv_path)
    for path in written:
        print(path)
    return 0


def cmd_synth(args) -> int:
    manifest = make_synthetic_dataset(
        args.out,
        n_subjects=args.n_subjects,
        vertices=args.vertices,
        p_a=args.p_a,
        p_b=args.p_b,
        w_min=args.theta1,
        w_max=args.theta2,
        seed=args.seed,
    )
    print(manifest)
    return 0


def cmd_betti(args) -> int:
    graph = load_adjacency(args.input, args.format)
    digraph = _underlying(graph, args.at)
    result = {}
    for theory in _theories(args.theory):
        bv = theory_betti(digraph, args.degrees, args.field_char, theory)
        result[theory] = {str(j): bv[j] for j in sorted(args.degrees)}
    if args.dump_complex:
        max_dim = max(args.degrees) + 1
        counts = {}
        for theory in _theories(args.theory):
            if theory == "dflag":
                counts[theory] = directed_flag_complex(digraph, max_dim).counts()
            else:
                counts[theory] = order_complex(reachability_poset(digraph), max_dim).counts()
        result["simplex_counts"] = counts
    print(json.dumps(result, indent=2, sort_keys=True))
    return 0


def cmd_happel(args) -> int:
    graph = load_adjacency(args.input, args.format)
    digraph = _underlying(graph, None)
    try:
        value = happel_betti1_components(digraph)
    except ValueError as exc:
        raise DataError(str(exc))
    breakdown = [
        {"source": u, "target": v, "paths": count_paths(digraph, u, v)}
        for u, v in digraph.sorted_edges()
    ]
    result = {"betti1": value, "edges": breakdown}
    if args.verify_cochain:
        # Hochschild cohomology splits over weak components, so the whole-graph
        # cochain ranks must reproduce the componentwise combinatorial sum.
        hh = hh_cochain_betti(path_algebra(digraph), [0, 1], args.field_char)
        result["cochain"] = {"hh0": hh[0], "hh1": hh[1], "agrees": hh[1] == value}
        if hh[1] != value:
            print(json.dumps(result, indent=2))
            raise DataError("cochain rank disagrees with the combinatorial formula")
    print(json.dumps(result, indent=2))
    return 0


def cmd_random_experiment(args) -> int:
    if args.steps < 1:
        raise ValueError("need at least one probability interval")
    p_grid = tuple(float(x) for x in np.linspace(args.p_min, args.p_max, args.steps + 1))
    blocks = []
    for theory in _theories(args.theory):
        cfg = ErExperimentConfig(
            n=args.n,
            p_grid=p_grid,
            r=args.r,
            degrees=tuple(args.degrees),
            theory=theory,
            p_field=args.field_char,
            master_seed=args.seed,
        )
        blocks.append(mean_betti_experiment(cfg, jobs=args.jobs))
    lines = ["p,degree,mean,std,r,n,theory"]
    for table in blocks:
        cfg = table.config
        for row in table.rows:
            lines.append(
                f"{row.p!r},{row.degree},{row.mean!r},{row.std!r},{cfg.r},{cfg.n},{cfg.theory}"
            )
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print(args.out)
    return 0


def cmd_reach_debug(args) -> int:
    graph = load_adjacency(args.input, args.format)
    digraph = _underlying(graph, args.at)
    partition = scc(digraph)
    poset = reachability_poset(digraph)
    print(json.dumps({
        "vertices": digraph.num_vertices,
        "edges": len(digraph.edges),
        "components": partition.num_components,
        "poset_elements": poset.num_elements,
        "poset_relation_size": len(poset.strict_relation),
    }, indent=2, sort_keys=True))
    return 0


_COMMANDS = {
    "features": cmd_features,
    "synth": cmd_synth,
    "betti": cmd_betti,
    "happel": cmd_happel,
    "random-experiment": cmd_random_experiment,
    "reach-debug": cmd_reach_debug,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _apply_config_file(args, argv)
        return _COMMANDS[args.command](args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
