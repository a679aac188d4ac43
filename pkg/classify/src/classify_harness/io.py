"""Reading the feature pipeline's CSV + metadata JSON surface.

This package talks to the feature extractor only through files: one CSV with
header subject_id,label,<columns> per (theory, kind, theta1) cell, plus a
sibling .meta.json describing how it was produced.
"""
from __future__ import annotations

import csv
import glob
import json
import os
from dataclasses import dataclass, field

import numpy as np

__all__ = ["FeatureTable", "FeatureSet", "read_features", "discover_feature_sets"]


@dataclass
class FeatureTable:
    subject_ids: list[str]
    labels: np.ndarray  # shape (n,), ints
    X: np.ndarray  # shape (n, d), floats
    column_names: list[str]

    def sorted_by_id(self) -> "FeatureTable":
        """Rows reordered by subject id, so fold assignment never depends on
        the order rows happened to be written in."""
        order = sorted(range(len(self.subject_ids)), key=lambda i: self.subject_ids[i])
        return FeatureTable(
            [self.subject_ids[i] for i in order],
            self.labels[order],
            self.X[order],
            list(self.column_names),
        )


@dataclass
class FeatureSet:
    """One feature CSV with the metadata that locates it in the grid."""

    csv_path: str
    theory: str
    kind: str
    theta1: float
    meta: dict = field(default_factory=dict)


def read_features(path: str) -> FeatureTable:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[:2] != ["subject_id", "label"]:
            raise ValueError(f"{path}: expected header subject_id,label,...")
        columns = header[2:]
        ids, labels, rows = [], [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} fields")
            ids.append(row[0])
            labels.append(int(row[1]))
            rows.append([float(x) for x in row[2:]])
    if not ids:
        raise ValueError(f"{path}: no data rows")
    return FeatureTable(ids, np.asarray(labels), np.asarray(rows, dtype=float), columns)


def discover_feature_sets(directory: str) -> list[FeatureSet]:
    """Pair every *.meta.json in the directory with its CSV."""
    found = []
    for meta_path in sorted(glob.glob(os.path.join(directory, "*.meta.json"))):
        with open(meta_path) as fh:
            meta = json.load(fh)
        csv_path = meta_path[: -len(".meta.json")] + ".csv"
        if not os.path.exists(csv_path):
            raise FileNotFoundError(f"{meta_path} has no matching CSV {csv_path}")
        found.append(
            FeatureSet(
                csv_path,
                theory=meta.get("theory", "?"),
                kind=meta.get("kind", "?"),
                theta1=float(meta.get("theta1", float("nan"))),
                meta=meta,
            )
        )
    if not found:
        raise FileNotFoundError(f"no *.meta.json files under {directory}")
    return found
