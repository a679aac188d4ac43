"""Ordered simplicial complexes: directed flag complexes and order complexes.

Simplices are ordered vertex tuples with alternating-face boundary semantics,
so a reciprocal edge pair contributes two distinct 1-simplices. Within each
dimension the tuples are listed in lexicographic order, which keeps boundary
matrices and ranks reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Digraph
from .reach import Poset, poset_digraph

__all__ = ["OrderedComplex", "directed_flag_complex", "order_complex"]

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class OrderedComplex:
    """Simplices grouped by dimension, closed under faces up to the cap max_dim."""

    simplices_by_dim: tuple[tuple[Simplex, ...], ...]
    max_dim: int

    def __init__(self, simplices_by_dim, max_dim: int):
        max_dim = int(max_dim)
        if max_dim < 0:
            raise ValueError("max_dim must be nonnegative")
        dims = [tuple(map(tuple, simplices_by_dim[d])) if d < len(simplices_by_dim) else ()
                for d in range(max_dim + 1)]
        if len(simplices_by_dim) > max_dim + 1 and any(
            simplices_by_dim[d] for d in range(max_dim + 1, len(simplices_by_dim))
        ):
            raise ValueError("simplices listed above max_dim")
        object.__setattr__(self, "simplices_by_dim", tuple(dims))
        object.__setattr__(self, "max_dim", max_dim)

    def simplices(self, dim: int) -> tuple[Simplex, ...]:
        if dim < 0 or dim > self.max_dim:
            return ()
        return self.simplices_by_dim[dim]

    def counts(self) -> list[int]:
        """Number of simplices per dimension, 0..max_dim."""
        return [len(level) for level in self.simplices_by_dim]

    def num_vertices(self) -> int:
        return len(self.simplices_by_dim[0])

    def validate(self) -> None:
        """Check the structural invariants; raises ValueError on the first failure."""
        vertex_set = set()
        for level in self.simplices_by_dim[0]:
            if len(level) != 1:
                raise ValueError(f"0-simplex {level} is not a single vertex")
            vertex_set.add(level[0])
        for d, level in enumerate(self.simplices_by_dim):
            if len(set(level)) != len(level):
                raise ValueError(f"duplicate simplices in dimension {d}")
            for simplex in level:
                if len(simplex) != d + 1:
                    raise ValueError(f"{simplex} listed in dimension {d}")
                if len(set(simplex)) != len(simplex):
                    raise ValueError(f"repeated vertex in simplex {simplex}")
                if not vertex_set.issuperset(simplex):
                    raise ValueError(f"simplex {simplex} uses an unlisted vertex")
            if d == 0:
                continue
            below = set(self.simplices_by_dim[d - 1])
            for simplex in level:
                for i in range(d + 1):
                    face = simplex[:i] + simplex[i + 1:]
                    if face not in below:
                        raise ValueError(f"face {face} of {simplex} is missing")


def directed_flag_complex(graph: Digraph, max_dim: int) -> OrderedComplex:
    """Directed flag complex: d-simplices are ordered (d+1)-tuples with all
    forward edges (v_i, v_j), i < j, present in the digraph.

    Enumeration expands each tuple by the common out-neighbors of its vertices,
    in ascending vertex order, so every dimension comes out lexicographically
    sorted. Enumeration stops at max_dim.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be nonnegative")
    out = graph.out_neighbors()
    levels: list[list[Simplex]] = [[(v,) for v in range(graph.num_vertices)]]
    if max_dim >= 1:
        frontier = [((u, v), out[u] & out[v]) for u, v in graph.sorted_edges()]
        levels.append([t for t, _ in frontier])
        for _ in range(2, max_dim + 1):
            extended = []
            for simplex, common in frontier:
                for w in sorted(common):
                    extended.append((simplex + (w,), common & out[w]))
            levels.append([t for t, _ in extended])
            frontier = extended
            if not frontier:
                break
    return OrderedComplex(levels, max_dim)


def order_complex(poset: Poset, max_dim: int) -> OrderedComplex:
    """Complex of strict chains x_0 < ... < x_k, k <= max_dim.

    Chains are exactly the directed cliques of the comparability digraph, so
    this is the directed flag complex of poset_digraph(poset), tuple for tuple.
    """
    return directed_flag_complex(poset_digraph(poset), max_dim)
