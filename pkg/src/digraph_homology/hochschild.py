"""Path algebras, incidence algebras, path counting, and Hochschild cochain oracles.

The degree-1 cohomology rank of an acyclic digraph's path algebra has a closed
combinatorial form (1 - #vertices + total path counts over edges); this module
implements both that formula and the raw cochain computation it is checked
against, plus the incidence-algebra oracle for posets.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError, GuardExceeded
from .graphs import Digraph, weakly_connected_components
from .homology import BettiVector, pack_gf2_rows, rank_gf2, rank_mod_p, _check_prime
from .reach import Poset

__all__ = [
    "FiniteAlgebra",
    "count_paths",
    "happel_betti1",
    "happel_betti1_components",
    "path_algebra",
    "incidence_algebra",
    "hh_cochain_betti",
    "ALGEBRA_DIM_GUARD",
    "HH_DIM_GUARD",
]

ALGEBRA_DIM_GUARD = 64  # basis elements in path/incidence algebras
HH_DIM_GUARD = 32  # cochain matrices are dim^3 x dim^2 dense


@dataclass(frozen=True)
class FiniteAlgebra:
    """Associative unital algebra given by integer structure constants.

    table[i, j, c] is the coefficient of basis element c in the product
    basis[i] * basis[j]. Associativity and the unit laws are verified on all
    basis triples at construction time.
    """

    dim: int
    basis_labels: tuple[str, ...]
    table: np.ndarray  # shape (dim, dim, dim)
    unit: np.ndarray  # shape (dim,)

    def __init__(self, basis_labels, table, unit):
        labels = tuple(str(x) for x in basis_labels)
        dim = len(labels)
        table = np.asarray(table, dtype=np.int64)
        unit = np.asarray(unit, dtype=np.int64)
        if table.shape != (dim, dim, dim):
            raise ValueError(f"table shape {table.shape} != {(dim, dim, dim)}")
        if unit.shape != (dim,):
            raise ValueError("unit vector has wrong length")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "unit", unit)
        self._check_laws()

    def _check_laws(self) -> None:
        m = self.table
        for i in range(self.dim):
            lhs = np.tensordot(m[i], m, axes=([1], [0]))  # (e_i e_j) e_k
            rhs = np.tensordot(m, m[i], axes=([2], [0]))  # e_i (e_j e_k)
            if not np.array_equal(lhs, rhs):
                raise ValueError(f"multiplication not associative at basis element {i}")
        identity = np.eye(self.dim, dtype=np.int64)
        left = np.tensordot(self.unit, m, axes=([0], [0]))  # unit * e_j
        right = np.tensordot(self.unit, m, axes=([0], [1]))  # e_i * unit
        if not np.array_equal(left, identity) or not np.array_equal(right, identity):
            raise ValueError("unit vector is not a two-sided identity")


def _topological_order(graph: Digraph) -> list[int]:
    """Kahn's algorithm; raises DataError if the digraph has a directed cycle."""
    n = graph.num_vertices
    out = graph.out_neighbors()
    indegree = [0] * n
    for u, v in graph.edges:
        indegree[v] += 1
    queue = sorted(v for v in range(n) if indegree[v] == 0)
    order = []
    while queue:
        v = queue.pop()
        order.append(v)
        for w in out[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if len(order) != n:
        raise DataError("digraph contains a directed cycle")
    return order


def count_paths(graph: Digraph, u: int, v: int) -> int:
    """Number of directed paths from u to v in an acyclic digraph.

    The trivial path counts when u == v. Exact big-integer arithmetic; the
    counts grow exponentially and must not wrap.
    """
    if not (0 <= u < graph.num_vertices and 0 <= v < graph.num_vertices):
        raise ValueError(f"vertices ({u},{v}) out of range")
    order = _topological_order(graph)
    out = graph.out_neighbors()
    counts = {x: 0 for x in range(graph.num_vertices)}
    counts[v] = 1
    # Processing in reverse topological order satisfies the recurrence
    # count(x) = [x == v] + sum over successors of count(successor).
    for x in reversed(order):
        counts[x] += sum(counts[y] for y in out[x])
    return counts[u]


def _all_path_counts(graph: Digraph) -> dict[int, list[int]]:
    """count(x, v) for every pair, as target -> list indexed by source."""
    order = _topological_order(graph)
    out = graph.out_neighbors()
    table: dict[int, list[int]] = {}
    for v in range(graph.num_vertices):
        counts = [0] * graph.num_vertices
        counts[v] = 1
        for x in reversed(order):
            counts[x] += sum(counts[y] for y in out[x])
        table[v] = counts
    return table


def happel_betti1(graph: Digraph) -> int:
    """Degree-1 Hochschild rank of the path algebra of a weakly connected
    acyclic digraph: 1 - #vertices + sum over edges of path counts from the
    edge's source to its target."""
    if graph.num_vertices == 0:
        raise ValueError("empty digraph has no connected structure")
    if len(weakly_connected_components(graph)) != 1:
        raise ValueError("digraph is not weakly connected; use happel_betti1_components")
    by_target = _all_path_counts(graph)
    return 1 - graph.num_vertices + sum(by_target[v][u] for u, v in graph.edges)


def happel_betti1_components(graph: Digraph) -> int:
    """Sum of the connected-digraph formula over weakly connected components.

    The degree-0 counterpart is simply the number of weakly connected
    components."""
    _topological_order(graph)  # reject cycles even for the edgeless total
    total = 0
    for comp in weakly_connected_components(graph):
        relabel = {v: i for i, v in enumerate(comp)}
        sub = Digraph(
            len(comp),
            ((relabel[u], relabel[v]) for u, v in graph.edges if u in relabel),
        )
        total += happel_betti1(sub)
    return total


def path_algebra(graph: Digraph) -> FiniteAlgebra:
    """Path algebra of an acyclic digraph: basis is every directed path
    (including the trivial path at each vertex), product is concatenation when
    the first path ends where the second starts, zero otherwise."""
    _topological_order(graph)
    out = graph.out_neighbors()
    paths: list[tuple[int, ...]] = [(v,) for v in range(graph.num_vertices)]
    if len(paths) > ALGEBRA_DIM_GUARD:
        raise GuardExceeded(f"path algebra dimension exceeds guard {ALGEBRA_DIM_GUARD}")
    frontier = list(paths)
    while frontier:
        extended = []
        for path in frontier:
            for w in sorted(out[path[-1]]):
                extended.append(path + (w,))
        paths.extend(extended)
        if len(paths) > ALGEBRA_DIM_GUARD:
            raise GuardExceeded(
                f"path algebra dimension exceeds guard {ALGEBRA_DIM_GUARD}"
            )
        frontier = extended
    paths.sort(key=lambda t: (len(t), t))
    index = {p: i for i, p in enumerate(paths)}
    dim = len(paths)
    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, left in enumerate(paths):
        for j, right in enumerate(paths):
            if left[-1] == right[0]:
                table[i, j, index[left + right[1:]]] = 1
    unit = np.zeros(dim, dtype=np.int64)
    for v in range(graph.num_vertices):
        unit[index[(v,)]] = 1
    labels = ["->".join(map(str, p)) if len(p) > 1 else f"e{p[0]}" for p in paths]
    return FiniteAlgebra(labels, table, unit)


def incidence_algebra(poset: Poset) -> FiniteAlgebra:
    """Incidence algebra: basis e[x,y] for x = y or x < y, with
    e[x,y] e[y,w] = e[x,w] and all other products zero."""
    pairs = sorted(
        [(x, x) for x in range(poset.num_elements)] + sorted(poset.strict_relation)
    )
    dim = len(pairs)
    if dim > ALGEBRA_DIM_GUARD:
        raise GuardExceeded(f"incidence algebra dimension {dim} exceeds guard {ALGEBRA_DIM_GUARD}")
    index = {pair: i for i, pair in enumerate(pairs)}
    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, (x, y) in enumerate(pairs):
        for j, (z, w) in enumerate(pairs):
            if y == z:
                table[i, j, index[(x, w)]] = 1
    unit = np.zeros(dim, dtype=np.int64)
    for x in range(poset.num_elements):
        unit[index[(x, x)]] = 1
    labels = [f"e[{x},{y}]" for x, y in pairs]
    return FiniteAlgebra(labels, table, unit)


def _coboundary_matrices(algebra: FiniteAlgebra, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Matrices of the cochain differentials in degrees 0 and 1.

    Cochains are multilinear maps into the algebra: degree 0 is the algebra
    itself, degree 1 is basis maps f[a->b], degree 2 is indexed by pairs. The
    differential follows (df)(x, y) = x f(y) - f(xy) + f(x) y, and in degree 0
    (da)(x) = x a - a x.
    """
    m = algebra.table.astype(np.int64) % p  # reduce first so int16 below cannot wrap
    d = algebra.dim
    # rows (j, l), cols c: coefficient of e_l in e_j e_c - e_c e_j
    d0 = (m.transpose(0, 2, 1) - m.transpose(1, 2, 0)).reshape(d * d, d) % p
    # rows (i, j, out), cols (a, b) for the basis cochain e_a -> e_b
    m16 = m.astype(np.int16)
    d1 = np.zeros((d, d, d, d, d), dtype=np.int16)
    t_right = m16.transpose(0, 2, 1)  # [i, out, b] = coeff of e_out in e_i e_b
    t_left = m16.transpose(1, 2, 0)  # [j, out, b] = coeff of e_out in e_b e_j
    for a in range(d):
        d1[:, a, :, a, :] += t_right
        d1[a, :, :, a, :] += t_left
    for b in range(d):
        d1[:, :, b, :, b] -= m16
    d1 = d1.reshape(d**3, d**2).astype(np.int64) % p
    return d0, d1


def _rank(matrix: np.ndarray, p: int) -> int:
    if p == 2:
        return rank_gf2(pack_gf2_rows(matrix))
    return rank_mod_p(matrix, p)


def hh_cochain_betti(algebra: FiniteAlgebra, degrees, p: int = 2) -> BettiVector:
    """Hochschild cohomology ranks of the algebra acting on itself, degrees 0
    and 1 only, computed from the explicit cochain complex on the basis."""
    degrees = sorted(set(int(j) for j in degrees))
    if any(j not in (0, 1) for j in degrees):
        raise ValueError("only cochain degrees 0 and 1 are supported")
    p = _check_prime(p)
    if p >= 2**13:
        raise ValueError("field characteristic too large for the cochain tables")
    if algebra.dim > HH_DIM_GUARD:
        raise GuardExceeded(
            f"cochain computation limited to dimension {HH_DIM_GUARD}, algebra has {algebra.dim}"
        )
    if not degrees:
        return BettiVector({})
    d0, d1 = _coboundary_matrices(algebra, p)
    rank0 = _rank(d0, p)
    result = {}
    if 0 in degrees:
        result[0] = algebra.dim - rank0
    if 1 in degrees:
        rank1 = _rank(d1, p)
        result[1] = (algebra.dim**2 - rank1) - rank0
    return BettiVector(result)
