"""Synthetic dataset -> feature CSVs, the same flow the CLI drives.

Equivalent shell session:

    digraph-homology synth --out demo_data --n-subjects 8 --vertices 20 --seed 3
    digraph-homology features --manifest demo_data/manifest.json \
        --theta1 -0.4 --degrees 0 1 --n 10 --out demo_features
"""
import os

from digraph_homology import (
    assemble_features,
    load_manifest,
    make_synthetic_dataset,
    threshold,
    write_features_csv,
    write_metadata,
)

manifest = make_synthetic_dataset(
    "demo_data", n_subjects=8, vertices=20, p_a=0.05, p_b=0.15, seed=3
)
print("dataset at", manifest)

ids, graphs, labels = load_manifest(manifest)
print("subjects:", ids, "labels:", labels)

os.makedirs("demo_features", exist_ok=True)
theta1, theta2, n = -0.4, 0.0, 10
thresholded = [threshold(g, theta1, theta2) for g in graphs]
for theory in ("dflag", "reach"):
    matrix = assemble_features(
        thresholded, labels, [0, 1], n, 2, theory, "betti", ids
    )
    stem = f"demo_features/features_{theory}_betti_t1_{theta1:g}"
    write_features_csv(matrix, stem + ".csv")
    write_metadata(matrix, stem + ".meta.json", theta1, theta2, n, 2)
    print(f"{theory}: wrote {stem}.csv with rows of length {len(matrix.rows[0])}")
