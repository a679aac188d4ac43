"""Filtration bounds, Betti curves, Betti integrals, and feature assembly.

Given a collection of thresholded weighted digraphs, the pipeline finds the
weight range where each homology degree is nontrivial anywhere in the
collection, subdivides that range into an equally spaced grid, samples Betti
curves per subject on the grid, and concatenates curves (or their running
trapezoid integrals) into one feature row per subject.

Bounds, grids and curves are computed per degree and per homology theory:
the two theories generally become nontrivial over different weight ranges.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from .complexes import directed_flag_complex, order_complex
from .errors import DataError
from .graphs import WeightedDigraph, Digraph, distinct_weights, subgraph_at, load_adjacency
from .homology import BettiVector, betti
from .reach import reachability_poset

__all__ = [
    "THEORIES",
    "FiltrationBounds",
    "FiltrationGrid",
    "BettiCurve",
    "FeatureMatrix",
    "theory_betti",
    "filtration_bounds",
    "filtration_grid",
    "betti_curve",
    "betti_integral",
    "compute_curves",
    "assemble_features",
    "features_from_curves",
    "write_features_csv",
    "write_metadata",
    "load_manifest",
]

THEORIES = ("dflag", "reach")


@dataclass(frozen=True)
class FiltrationBounds:
    """Minimal and maximal weights at which degree-j homology is nontrivial
    anywhere in the collection; degree 0 uses the full weight range."""

    degree: int
    low: float | None
    high: float | None
    nontrivial: bool


@dataclass(frozen=True)
class FiltrationGrid:
    points: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class BettiCurve:
    degree: int
    grid: FiltrationGrid
    values: tuple[int, ...]


@dataclass
class FeatureMatrix:
    """Per-subject feature rows with aligned ids and labels."""

    subject_ids: list[str]
    labels: list[int]
    kind: str  # "betti" | "betti-integral"
    theory: str
    rows: list[list]
    column_names: list[str]
    degrees_used: list[int]
    dropped_degrees: list[int]
    grids: dict[int, FiltrationGrid] = field(default_factory=dict)


def theory_betti(graph: Digraph, degrees, p: int = 2, theory: str = "dflag") -> BettiVector:
    """Betti numbers of a digraph under one of the two theories: the directed
    flag complex of the digraph itself, or the order complex of its
    reachability poset. The two agree on acyclic transitively closed inputs."""
    degrees = sorted(set(int(j) for j in degrees))
    if not degrees:
        return BettiVector({})
    max_dim = degrees[-1] + 1
    if theory == "dflag":
        complex_ = directed_flag_complex(graph, max_dim)
    elif theory == "reach":
        complex_ = order_complex(reachability_poset(graph), max_dim)
    else:
        raise ValueError(f"unknown theory {theory!r} (expected one of {THEORIES})")
    return betti(complex_, degrees, p)


def _scan_one_graph(args) -> dict[int, tuple[float, float] | None]:
    """Weight window with nonzero Betti numbers per degree, for one graph."""
    graph, degrees, p, theory, stride = args
    found: dict[int, tuple[float, float] | None] = {j: None for j in degrees}
    weights = distinct_weights(graph)
    if stride > 1 and weights:
        sampled = weights[::stride]
        if sampled[-1] != weights[-1]:
            sampled.append(weights[-1])  # the full graph is the cheapest informative point
        weights = sampled
    for w in weights:
        bv = theory_betti(subgraph_at(graph, w), degrees, p, theory)
        for j in degrees:
            if bv[j] != 0:
                cur = found[j]
                found[j] = (w, w) if cur is None else (min(cur[0], w), max(cur[1], w))
    return found


def _merge_windows(per_graph, degrees) -> dict[int, tuple[float, float] | None]:
    merged: dict[int, tuple[float, float] | None] = {j: None for j in degrees}
    for found in per_graph:
        for j in degrees:
            window = found[j]
            if window is None:
                continue
            cur = merged[j]
            merged[j] = window if cur is None else (
                min(cur[0], window[0]), max(cur[1], window[1])
            )
    return merged


def _map_jobs(func, work, jobs: int):
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(func, work))
    return [func(item) for item in work]


def _scan_nontrivial_range(
    graphs: list[WeightedDigraph],
    degrees: list[int],
    p: int,
    theory: str,
    jobs: int = 1,
    scan_stride: int = 1,
) -> dict[int, tuple[float, float] | None]:
    """One pass over every distinct weight of every graph, recording the global
    min and max weight with nonzero Betti number per requested degree.

    scan_stride > 1 samples every stride-th weight (plus the maximum) as a
    coarse pre-scan for large graphs; the default 1 is exact, a larger stride
    can miss narrow windows."""
    if not degrees:
        return {}
    if scan_stride < 1:
        raise ValueError("scan_stride must be >= 1")
    per_graph = _map_jobs(
        _scan_one_graph, [(g, degrees, p, theory, scan_stride) for g in graphs], jobs
    )
    return _merge_windows(per_graph, degrees)


def filtration_bounds(
    graphs: list[WeightedDigraph],
    j: int,
    p: int = 2,
    theory: str = "dflag",
    scan_stride: int = 1,
) -> FiltrationBounds:
    """Bounds of the weight range where degree-j homology is nontrivial in at
    least one graph of the collection. Degree 0 is nontrivial everywhere, so it
    gets the full range of weights present."""
    if not graphs:
        raise ValueError("empty graph collection")
    j = int(j)
    if j == 0:
        weights = [w for g in graphs for w in distinct_weights(g)]
        if not weights:
            return FiltrationBounds(0, None, None, False)
        return FiltrationBounds(0, min(weights), max(weights), True)
    window = _scan_nontrivial_range(graphs, [j], p, theory, scan_stride=scan_stride)[j]
    if window is None:
        return FiltrationBounds(j, None, None, False)
    return FiltrationBounds(j, window[0], window[1], True)


def filtration_grid(bounds: FiltrationBounds, n: int) -> FiltrationGrid:
    """n+1 equally spaced points from the lower to the upper bound inclusive.

    A degenerate single-weight range yields n+1 copies of the same point so
    feature dimensions stay uniform across configurations."""
    if n < 1:
        raise ValueError("n must be positive")
    if not bounds.nontrivial:
        raise ValueError(f"degree {bounds.degree} has trivial bounds; no grid exists")
    points = np.linspace(bounds.low, bounds.high, n + 1)
    return FiltrationGrid(tuple(float(x) for x in points))


def betti_curve(
    graph: WeightedDigraph, j: int, grid: FiltrationGrid, p: int = 2, theory: str = "dflag"
) -> BettiCurve:
    """Degree-j Betti number sampled at every grid point of the filtration."""
    cache: dict[float, int] = {}
    values = []
    for x in grid.points:
        if x not in cache:
            cache[x] = theory_betti(subgraph_at(graph, x), [j], p, theory)[j]
        values.append(cache[x])
    return BettiCurve(j, grid, tuple(values))


def betti_integral(curve: BettiCurve) -> list[float]:
    """Running trapezoid areas under the curve: element i (1-based) is the
    approximate area between the first grid point and grid point i."""
    points = curve.grid.points
    if len(points) < 2:
        raise ValueError("betti_integral needs a curve with at least 2 points")
    values = curve.values
    out = []
    acc = 0.0
    for k in range(len(points) - 1):
        acc += (values[k + 1] + values[k]) / 2.0 * (points[k + 1] - points[k])
        out.append(acc)
    return out


@dataclass
class CurveSet:
    """Curves for every subject and every degree that survived bound scanning."""

    theory: str
    n: int
    p: int
    degrees_used: list[int]
    dropped_degrees: list[int]
    grids: dict[int, FiltrationGrid]
    curves: list[dict[int, BettiCurve]]  # aligned with the input graph list


def _curves_one_graph(args) -> dict[int, BettiCurve]:
    graph, used, grids, p, theory = args
    return {j: betti_curve(graph, j, grids[j], p, theory) for j in used}


def compute_curves(
    graphs: list[WeightedDigraph],
    degrees,
    n: int,
    p: int = 2,
    theory: str = "dflag",
    jobs: int = 1,
    scan_stride: int = 1,
) -> CurveSet:
    """Scan bounds for all requested degrees, drop the globally trivial ones,
    and sample one Betti curve per subject per surviving degree. Subjects are
    independent work units; results are identical for any jobs value."""
    if not graphs:
        raise ValueError("empty graph collection")
    degrees = sorted(set(int(j) for j in degrees))
    positive = [j for j in degrees if j >= 1]
    windows = _scan_nontrivial_range(graphs, positive, p, theory, jobs, scan_stride)
    grids: dict[int, FiltrationGrid] = {}
    used, dropped = [], []
    for j in degrees:
        bounds = (
            filtration_bounds(graphs, 0, p, theory)
            if j == 0
            else FiltrationBounds(j, *(windows[j] or (None, None)), windows[j] is not None)
        )
        if not bounds.nontrivial:
            dropped.append(j)
            continue
        grids[j] = filtration_grid(bounds, n)
        used.append(j)
    if not used:
        raise DataError("every requested degree has trivial homology across the collection")
    curves = _map_jobs(
        _curves_one_graph, [(graph, used, grids, p, theory) for graph in graphs], jobs
    )
    return CurveSet(theory, n, p, used, dropped, grids, curves)


def features_from_curves(
    curveset: CurveSet, labels, subject_ids=None, kind: str = "betti"
) -> FeatureMatrix:
    """Concatenate per-degree curves (or integrals) into one row per subject."""
    if kind not in ("betti", "betti-integral"):
        raise ValueError(f"unknown kind {kind!r}")
    count = len(curveset.curves)
    labels = list(labels)
    if len(labels) != count:
        raise ValueError(f"{count} subjects but {len(labels)} labels")
    if subject_ids is None:
        subject_ids = [str(i) for i in range(count)]
    subject_ids = [str(s) for s in subject_ids]
    if len(subject_ids) != count:
        raise ValueError("subject_ids misaligned with curves")

    steps = range(curveset.n + 1) if kind == "betti" else range(1, curveset.n + 1)
    prefix = "b" if kind == "betti" else "g"
    column_names = [f"{prefix}{j}_s{s}" for j in curveset.degrees_used for s in steps]
    rows = []
    for per_degree in curveset.curves:
        row: list = []
        for j in curveset.degrees_used:
            curve = per_degree[j]
            row.extend(curve.values if kind == "betti" else betti_integral(curve))
        rows.append(row)
    return FeatureMatrix(
        subject_ids,
        labels,
        kind,
        curveset.theory,
        rows,
        column_names,
        list(curveset.degrees_used),
        list(curveset.dropped_degrees),
        dict(curveset.grids),
    )


def assemble_features(
    graphs: list[WeightedDigraph],
    labels,
    degrees,
    n: int,
    p: int = 2,
    theory: str = "dflag",
    kind: str = "betti",
    subject_ids=None,
) -> FeatureMatrix:
    """End-to-end: bounds, grids, curves, and concatenated feature rows."""
    curveset = compute_curves(graphs, degrees, n, p, theory)
    return features_from_curves(curveset, labels, subject_ids, kind)


def _format_value(x) -> str:
    return str(x) if isinstance(x, int) else repr(float(x))


def write_features_csv(matrix: FeatureMatrix, path: str) -> None:
    """CSV with header subject_id,label,<columns>; ints stay integers, floats
    use shortest round-trip formatting so outputs are byte-reproducible."""
    lines = [",".join(["subject_id", "label"] + matrix.column_names)]
    for sid, label, row in zip(matrix.subject_ids, matrix.labels, matrix.rows):
        lines.append(",".join([sid, str(label)] + [_format_value(x) for x in row]))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def write_metadata(
    matrix: FeatureMatrix, path: str, theta1: float, theta2: float, n: int, field_char: int
) -> None:
    meta = {
        "theory": matrix.theory,
        "kind": matrix.kind,
        "degrees_used": matrix.degrees_used,
        "dropped_degrees": matrix.dropped_degrees,
        "grids": {str(j): list(grid.points) for j, grid in matrix.grids.items()},
        "theta1": theta1,
        "theta2": theta2,
        "n": n,
        "field_char": field_char,
    }
    with open(path, "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_manifest(path: str):
    """Dataset manifest: {"subjects": [{"id", "matrix", "label", "format"?}]}.

    Matrix paths are resolved relative to the manifest file. Returns aligned
    lists (ids, graphs, labels)."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read manifest {path}: {exc}")
    subjects = doc.get("subjects")
    if not isinstance(subjects, list) or not subjects:
        raise DataError(f"{path}: manifest must contain a non-empty 'subjects' list")
    base = os.path.dirname(os.path.abspath(path))
    ids, graphs, labels = [], [], []
    for i, entry in enumerate(subjects):
        try:
            sid = str(entry["id"])
            matrix_path = entry["matrix"]
            label = entry["label"]
        except (TypeError, KeyError) as exc:
            raise DataError(f"{path}: subject {i} missing field {exc}")
        if label not in (0, 1):
            raise DataError(f"{path}: subject {sid} has non-binary label {label!r}")
        fmt = entry.get("format", "dense")
        resolved = matrix_path if os.path.isabs(matrix_path) else os.path.join(base, matrix_path)
        try:
            graphs.append(load_adjacency(resolved, fmt))
        except OSError as exc:
            raise DataError(f"{path}: cannot read matrix for subject {sid}: {exc}")
        ids.append(sid)
        labels.append(int(label))
    if len(set(ids)) != len(ids):
        raise DataError(f"{path}: duplicate subject ids")
    return ids, graphs, labels
