"""The featurization pipeline on a tiny two-subject collection.

Bounds are scanned per degree and per theory; grids subdivide the nontrivial
window; curves are sampled on the grid and either used directly or integrated
with the running trapezoid rule.
"""
from digraph_homology import (
    WeightedDigraph,
    assemble_features,
    betti_curve,
    betti_integral,
    compute_curves,
    filtration_bounds,
    filtration_grid,
)

# subject 1: a weighted circle (beta1 support), subject 2: a denser blob
circle = WeightedDigraph(6, [
    (0, 1, -0.30), (1, 2, -0.26), (2, 3, -0.22),
    (3, 4, -0.18), (4, 5, -0.14), (5, 0, -0.10),
])
blob = WeightedDigraph(6, [
    (0, 1, -0.32), (1, 0, -0.28), (1, 2, -0.24), (2, 1, -0.20),
    (2, 3, -0.16), (3, 4, -0.12), (4, 2, -0.08), (0, 5, -0.04),
])
collection = [circle, blob]

for theory in ("dflag", "reach"):
    bounds = filtration_bounds(collection, 1, 2, theory)
    print(f"{theory}: degree-1 window", (bounds.low, bounds.high), "nontrivial:", bounds.nontrivial)

grid = filtration_grid(filtration_bounds(collection, 1, 2, "dflag"), 6)
print("grid:", [round(x, 3) for x in grid.points])
curve = betti_curve(circle, 1, grid, 2, "dflag")
print("circle beta1 curve:", curve.values)
print("running integral:", [round(v, 4) for v in betti_integral(curve)])

features = assemble_features(
    collection, labels=[0, 1], degrees=[0, 1], n=6,
    theory="dflag", kind="betti", subject_ids=["circle", "blob"],
)
print("feature columns:", features.column_names)
for sid, row in zip(features.subject_ids, features.rows):
    print(f"  {sid}: {row}")

# one scan, both feature kinds
curveset = compute_curves(collection, [0, 1], 6, 2, "reach")
print("reach degrees used:", curveset.degrees_used, "dropped:", curveset.dropped_degrees)
