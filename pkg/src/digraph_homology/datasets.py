"""Synthetic two-class digraph datasets for end-to-end runs.

Class A subjects are G(n, p_a) digraphs, class B subjects G(n, p_b), with edge
weights drawn uniformly from a configurable range; everything is written as
dense matrices plus a manifest so the feature pipeline ingests it like real
data.
"""
from __future__ import annotations

import json
import os

import numpy as np

__all__ = ["make_synthetic_dataset"]


def _write_dense(path: str, n: int, weights: dict[tuple[int, int], float]) -> None:
    rows = []
    for i in range(n):
        cells = []
        for j in range(n):
            w = weights.get((i, j))
            cells.append("nan" if w is None else repr(w))
        rows.append(",".join(cells))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(rows) + "\n")


def make_synthetic_dataset(
    out_dir: str,
    n_subjects: int = 28,
    vertices: int = 30,
    p_a: float = 0.05,
    p_b: float = 0.15,
    w_min: float = -0.4,
    w_max: float = 0.0,
    seed: int = 0,
) -> str:
    """Write matrices and a manifest under out_dir; returns the manifest path.

    The first half of the subjects (rounded up) belongs to class A with label
    0, the rest to class B with label 1. Fully deterministic for a fixed seed.
    """
    if n_subjects < 1:
        raise ValueError("need at least one subject")
    if p_a == p_b:
        raise ValueError("class probabilities must differ")
    if w_min > w_max:
        raise ValueError("weight range is empty")
    matrices_dir = os.path.join(out_dir, "matrices")
    os.makedirs(matrices_dir, exist_ok=True)
    n_class_a = (n_subjects + 1) // 2
    subjects = []
    for k in range(n_subjects):
        in_class_a = k < n_class_a
        cls, p, label = ("a", p_a, 0) if in_class_a else ("b", p_b, 1)
        sid = f"{cls}{k if in_class_a else k - n_class_a:02d}"
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(k,)))
        mask = rng.random((vertices, vertices)) < p
        np.fill_diagonal(mask, False)
        draws = rng.uniform(w_min, w_max, size=(vertices, vertices))
        weights = {
            (int(i), int(j)): float(draws[i, j]) for i, j in zip(*np.nonzero(mask))
        }
        rel_path = f"matrices/{sid}.csv"
        _write_dense(os.path.join(out_dir, rel_path), vertices, weights)
        subjects.append({"id": sid, "matrix": rel_path, "label": label})
    manifest_path = os.path.join(out_dir, "manifest.json")
    with open(manifest_path, "w") as fh:
        json.dump({"subjects": subjects}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest_path
