"""Condensation and reachability posets.

Strongly connected pieces collapse to single poset elements; what remains is
the partial order of "can reach". A strongly connected digraph becomes a
point, a transitive tournament becomes a chain.
"""
from digraph_homology import Digraph, condensation, poset_digraph, reachability_poset, scc

# a 3-cycle feeding a 2-cycle feeding a sink
g = Digraph(6, [
    (0, 1), (1, 2), (2, 0),   # cycle A
    (2, 3),
    (3, 4), (4, 3),           # cycle B
    (4, 5),
])
part = scc(g)
print("components:", part.num_components, "membership:", part.component_of)

c = condensation(g)
print("condensation edges:", sorted(c.edges))

poset = reachability_poset(g)
print("poset relation (strict, closed):", sorted(poset.strict_relation))
print("comparability digraph edges:", sorted(poset_digraph(poset).edges))

# strongly connected -> single element
ring = Digraph(7, [(i, (i + 1) % 7) for i in range(7)])
print("ring condenses to", reachability_poset(ring).num_elements, "element")

# transitive tournament -> chain
t4 = Digraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
print("T4 poset has", len(reachability_poset(t4).strict_relation), "strict pairs (chain of 4)")
