"""Weighted digraphs, thresholding, and filtration snapshots.

A weighted digraph enters the pipeline as a correlation-style matrix; the
interesting objects are the unweighted snapshots G[w] that keep every edge of
weight <= w.
"""
from digraph_homology import (
    WeightedDigraph,
    distinct_weights,
    subgraph_at,
    threshold,
)

g = WeightedDigraph(5, [
    (0, 1, -0.35),
    (1, 2, -0.28),
    (2, 0, -0.22),
    (2, 3, -0.15),
    (3, 4, -0.05),
    (4, 3, 0.12),
])
print("graph:", g.num_vertices, "vertices,", g.num_edges(), "edges")
print("distinct weights:", distinct_weights(g))

# Keep only the correlation band of interest; vertices always survive.
band = threshold(g, -0.4, 0.0)
print("after threshold [-0.4, 0]:", band.num_edges(), "edges")

for w in distinct_weights(band):
    snapshot = subgraph_at(band, w)
    print(f"  G[{w:+.2f}] has edges {sorted(snapshot.edges)}")
