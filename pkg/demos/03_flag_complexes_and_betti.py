"""Directed flag complexes, order complexes, and Betti numbers.

The same digraph can look very different to the two theories: a directed
3-cycle is a circle to the flag complex but condenses to a point for
reachability.
"""
from digraph_homology import (
    Digraph,
    betti,
    betti_oracle,
    directed_flag_complex,
    order_complex,
    reachability_poset,
    theory_betti,
)

cycle = Digraph(3, [(0, 1), (1, 2), (2, 0)])
flag = directed_flag_complex(cycle, 2)
print("3-cycle flag complex counts:", flag.counts())
print("  dflag betti:", {j: theory_betti(cycle, [0, 1], 2, "dflag")[j] for j in (0, 1)})
print("  reach betti:", {j: theory_betti(cycle, [0, 1], 2, "reach")[j] for j in (0, 1)})

# reciprocal edges give two ordered 1-simplices
pair = Digraph(2, [(0, 1), (1, 0)])
print("reciprocal pair 1-simplices:", directed_flag_complex(pair, 1).simplices(1))

# order complex of the face poset of a triangle boundary: a hexagon circle
from digraph_homology import Poset

face_poset = Poset(6, [(0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)])
hexagon = order_complex(face_poset, 2)
print("hexagon counts:", hexagon.counts())
print("hexagon betti over GF(2):", {j: betti(hexagon, [0, 1], 2)[j] for j in (0, 1)})
print("oracle agrees:", betti_oracle(hexagon, [0, 1], 2) == betti(hexagon, [0, 1], 2))

# the homology is the same over any small prime here
for p in (2, 3, 5):
    bv = betti(hexagon, [0, 1], p)
    print(f"  GF({p}): beta0={bv[0]} beta1={bv[1]}")
