"""Strongly connected components, condensation, and reachability posets.

Components are numbered canonically by their minimum vertex id, so an acyclic
digraph condenses to itself under the identity relabeling. The poset stores the
full strict transitive closure, not just covering pairs; its chains can then be
read off directly as directed cliques of the comparability digraph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Digraph

__all__ = [
    "SccPartition",
    "Poset",
    "scc",
    "condensation",
    "reachability_poset",
    "poset_digraph",
]


@dataclass(frozen=True)
class SccPartition:
    """Partition of vertices into strongly connected components."""

    component_of: tuple[int, ...]  # vertex id -> component id
    num_components: int


@dataclass(frozen=True)
class Poset:
    """Strict partial order: irreflexive, antisymmetric, transitively closed."""

    num_elements: int
    strict_relation: frozenset[tuple[int, int]]

    def __init__(self, num_elements: int, strict_relation=()):
        object.__setattr__(self, "num_elements", int(num_elements))
        object.__setattr__(
            self, "strict_relation", frozenset((int(x), int(y)) for x, y in strict_relation)
        )
        self._validate()

    def _validate(self) -> None:
        n = self.num_elements
        up = [0] * n  # up[x] = bitmask of elements above x
        for x, y in self.strict_relation:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair ({x},{y}) out of range")
            if x == y:
                raise ValueError(f"reflexive pair ({x},{x}) in strict relation")
            up[x] |= 1 << y
        for x, y in self.strict_relation:
            if up[y] & (1 << x):
                raise ValueError(f"antisymmetry violated on ({x},{y})")
            if up[y] & ~up[x]:
                raise ValueError(f"relation not transitively closed at ({x},{y})")


def _tarjan_components(graph: Digraph) -> list[list[int]]:
    """SCCs in completion order (every component precedes the ones that reach it)."""
    n = graph.num_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in graph.sorted_edges():
        adj[u].append(v)

    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, edge_pos = work[-1]
            if edge_pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(edge_pos, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
    return components


def _canonical_order(components: list[list[int]]) -> list[int]:
    """Map Tarjan component index -> canonical id (sorted by minimum vertex)."""
    order = sorted(range(len(components)), key=lambda c: min(components[c]))
    rank = [0] * len(components)
    for new_id, old_id in enumerate(order):
        rank[old_id] = new_id
    return rank


def scc(graph: Digraph) -> SccPartition:
    """Strongly connected components of a digraph."""
    components = _tarjan_components(graph)
    rank = _canonical_order(components)
    component_of = [0] * graph.num_vertices
    for tarjan_id, comp in enumerate(components):
        for v in comp:
            component_of[v] = rank[tarjan_id]
    return SccPartition(tuple(component_of), len(components))


def condensation(graph: Digraph) -> Digraph:
    """Digraph on the SCCs, with an edge (X,Y) when some edge of G crosses X to Y."""
    components = _tarjan_components(graph)
    rank = _canonical_order(components)
    comp_of = [0] * graph.num_vertices
    for tarjan_id, comp in enumerate(components):
        for v in comp:
            comp_of[v] = rank[tarjan_id]
    edges = {
        (comp_of[u], comp_of[v])
        for u, v in graph.edges
        if comp_of[u] != comp_of[v]
    }
    return Digraph(len(components), edges)


def reachability_poset(graph: Digraph) -> Poset:
    """SCCs of the digraph ordered by directed reachability (strict closure)."""
    components = _tarjan_components(graph)
    k = len(components)
    rank = _canonical_order(components)
    comp_of = [0] * graph.num_vertices
    for tarjan_id, comp in enumerate(components):
        for v in comp:
            comp_of[v] = tarjan_id

    succ: list[set[int]] = [set() for _ in range(k)]
    for u, v in graph.edges:
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv:
            succ[cu].add(cv)

    # Completion order lists every component after all components it reaches,
    # so a single pass accumulates the full reachable set as a bitmask.
    reach_bits = [0] * k
    for c in range(k):
        bits = 0
        for s in succ[c]:
            bits |= (1 << s) | reach_bits[s]
        reach_bits[c] = bits

    pairs = []
    for c in range(k):
        bits = reach_bits[c]
        while bits:
            lowbit = bits & -bits
            s = lowbit.bit_length() - 1
            bits ^= lowbit
            pairs.append((rank[c], rank[s]))
    return Poset(k, pairs)


def poset_digraph(poset: Poset) -> Digraph:
    """Comparability digraph: one edge (p,q) for every strict pair p < q."""
    return Digraph(poset.num_elements, poset.strict_relation)
