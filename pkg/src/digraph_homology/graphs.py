"""Weighted digraph representation, ingestion, thresholding, and filtration snapshots.

Vertices are integers 0..num_vertices-1. Graphs are simple (at most one edge
per ordered pair) and loop-free. All operations are pure; both graph types are
immutable after construction.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

from .errors import DataError

__all__ = [
    "Digraph",
    "WeightedDigraph",
    "load_adjacency",
    "threshold",
    "distinct_weights",
    "subgraph_at",
    "weakly_connected_components",
]


@dataclass(frozen=True)
class Digraph:
    """Finite simple digraph: vertex count plus a set of (source, target) pairs."""

    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, num_vertices: int, edges=()):
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(self, "edges", frozenset((int(u), int(v)) for u, v in edges))
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u},{v}) out of range for {self.num_vertices} vertices")

    def out_neighbors(self) -> list[set[int]]:
        """Adjacency as a list of successor sets, indexed by vertex."""
        out: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            out[u].add(v)
        return out

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class WeightedDigraph:
    """Simple digraph with one real weight per directed edge."""

    num_vertices: int
    weights: dict[tuple[int, int], float] = field(compare=False)

    def __init__(self, num_vertices: int, edges=()):
        """Build from an iterable of (source, target, weight) triples."""
        weights: dict[tuple[int, int], float] = {}
        n = int(num_vertices)
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if (u, v) in weights:
                raise ValueError(f"duplicate edge ({u},{v})")
            weights[(u, v)] = w
        object.__setattr__(self, "num_vertices", n)
        object.__setattr__(self, "weights", weights)
        if n < 0:
            raise ValueError("num_vertices must be nonnegative")

    @property
    def edges(self) -> list[tuple[int, int, float]]:
        """Edges as sorted (source, target, weight) triples."""
        return sorted((u, v, w) for (u, v), w in self.weights.items())

    def num_edges(self) -> int:
        return len(self.weights)

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.weights == other.weights


def _parse_cell(token: str, path: str, row: int, col: int) -> float | None:
    """A dense cell: empty or NaN means no edge; anything else must be a float."""
    token = token.strip()
    if token == "":
        return None
    try:
        value = float(token)
    except ValueError:
        raise DataError(f"{path}: unparsable cell {token!r} at row {row}, column {col}")
    if math.isnan(value):
        return None
    return value


def _load_dense(path: str) -> WeightedDigraph:
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if row]  # skip blank lines only
    n = len(rows)
    edges = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DataError(f"{path}: dense matrix is not square ({n} rows, row {i} has {len(row)} cells)")
        for j, token in enumerate(row):
            value = _parse_cell(token, path, i, j)
            if value is None or i == j:
                continue  # absent edge, or a silently dropped diagonal entry
            edges.append((i, j, value))
    return WeightedDigraph(n, edges)


def _load_edge_list(path: str) -> WeightedDigraph:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: empty edge-list file")
        if [h.strip().lower() for h in header] != ["source", "target", "weight"]:
            raise DataError(f"{path}: edge-list header must be 'source,target,weight', got {header}")
        seen: set[tuple[int, int]] = set()
        triples = []
        max_id = -1
        for lineno, row in enumerate(reader, start=2):
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 3:
                raise DataError(f"{path}:{lineno}: expected 3 fields, got {len(row)}")
            try:
                u, v, w = int(row[0]), int(row[1]), float(row[2])
            except ValueError:
                raise DataError(f"{path}:{lineno}: unparsable edge row {row!r}")
            if u < 0 or v < 0:
                raise DataError(f"{path}:{lineno}: negative vertex id")
            max_id = max(max_id, u, v)
            if u == v:
                continue  # loop rows dropped, same as dense diagonal
            if (u, v) in seen:
                raise DataError(f"{path}:{lineno}: duplicate edge ({u},{v})")
            seen.add((u, v))
            triples.append((u, v, w))
    return WeightedDigraph(max_id + 1, triples)


def load_adjacency(path: str, format: str = "dense") -> WeightedDigraph:
    """Load a weighted digraph from disk.

    format="dense": CSV of N rows x N cells, cell (i,j) is the weight of edge
    i->j, NaN or empty meaning no edge, diagonal ignored. format="edge-list":
    CSV with header source,target,weight and 0-based integer ids.
    """
    if format == "dense":
        return _load_dense(path)
    if format == "edge-list":
        return _load_edge_list(path)
    raise ValueError(f"unknown format {format!r} (expected 'dense' or 'edge-list')")


def threshold(graph: WeightedDigraph, theta1: float, theta2: float) -> WeightedDigraph:
    """Keep exactly the edges with theta1 <= weight <= theta2; vertices are retained."""
    if theta1 > theta2:
        raise ValueError(f"theta1={theta1} exceeds theta2={theta2}")
    kept = [(u, v, w) for (u, v), w in graph.weights.items() if theta1 <= w <= theta2]
    return WeightedDigraph(graph.num_vertices, kept)


def distinct_weights(graph: WeightedDigraph) -> list[float]:
    """Strictly increasing list of the distinct edge weights."""
    return sorted(set(graph.weights.values()))


def subgraph_at(graph: WeightedDigraph, w: float) -> Digraph:
    """Unweighted snapshot containing every edge of weight <= w; all vertices kept."""
    return Digraph(
        graph.num_vertices,
        ((u, v) for (u, v), weight in graph.weights.items() if weight <= w),
    )


def weakly_connected_components(graph: Digraph) -> list[list[int]]:
    """Vertex sets of the weakly connected components, each sorted, ordered by minimum vertex."""
    n = graph.num_vertices
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in graph.edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    seen = [False] * n
    components = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in neighbors[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        components.append(sorted(comp))
    return components
