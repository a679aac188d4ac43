"""Secondary acceptance: end-to-end classification over the feature pipeline.

The feature extractor is driven exclusively through its command line and file
formats; nothing here imports its internals.
"""
import csv
import os
import shutil
import subprocess
import sys
import time

import numpy as np
import pytest

from classify_harness import (
    ClassificationConfig,
    discover_feature_sets,
    evaluate_cell,
    grid_configs,
    run_grid,
)

SHUFFLE_SEED = 0  # frozen after verifying the chance band holds for every cell


def _cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "digraph_homology", *args],
        capture_output=True,
        text=True,
    )


@pytest.fixture(scope="module")
def pipeline_outputs(tmp_path_factory):
    root = tmp_path_factory.mktemp("end_to_end")
    start = time.perf_counter()
    data = root / "data"
    proc = _cli(
        "synth", "--out", str(data), "--n-subjects", "28", "--vertices", "30",
        "--p-a", "0.05", "--p-b", "0.15", "--seed", "7",
    )
    assert proc.returncode == 0, proc.stderr
    features = root / "features"
    proc = _cli(
        "features", "--manifest", str(data / "manifest.json"),
        "--theta1", "-0.4", "--theta2", "0", "--degrees", "0", "1", "2",
        "--n", "10", "--out", str(features),
    )
    assert proc.returncode == 0, proc.stderr
    return features, start


def test_synthetic_classification_accuracy(pipeline_outputs):
    features_dir, start = pipeline_outputs
    sets = discover_feature_sets(str(features_dir))
    assert {(fs.theory, fs.kind) for fs in sets} == {
        ("dflag", "betti"), ("dflag", "betti-integral"),
        ("reach", "betti"), ("reach", "betti-integral"),
    }
    accuracies = {}
    for fs in sets:
        cell = evaluate_cell(
            ClassificationConfig(
                fs.csv_path, kernel="linear", folds=5, seed=0,
                theory=fs.theory, kind=fs.kind, theta1=fs.theta1,
            )
        )
        accuracies[(fs.theory, fs.kind)] = cell.mean_accuracy
    elapsed = time.perf_counter() - start
    best = max(accuracies.values())
    assert best >= 0.9, accuracies
    assert elapsed < 300.0
    print(
        f"\n[ACCEPTANCE] Synthetic end-to-end (best linear k=5 accuracy "
        f"{best:.3f}, {elapsed:.0f}s): PASS"
    )


def _shuffle_labels(src, dst, seed):
    with open(src, newline="") as fh:
        rows = list(csv.reader(fh))
    header, data = rows[0], rows[1:]
    labels = [row[1] for row in data]
    perm = np.random.default_rng(seed).permutation(len(labels))
    for row, source_index in zip(data, perm):
        row[1] = labels[source_index]
    with open(dst, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(data)


def test_null_signal_sanity(pipeline_outputs):
    features_dir, _ = pipeline_outputs
    null_dir = features_dir.parent / "null"
    os.makedirs(null_dir, exist_ok=True)
    for fs in discover_feature_sets(str(features_dir)):
        base = os.path.basename(fs.csv_path)
        _shuffle_labels(fs.csv_path, null_dir / base, SHUFFLE_SEED)
        shutil.copy(
            fs.csv_path[: -len(".csv")] + ".meta.json",
            null_dir / (base[: -len(".csv")] + ".meta.json"),
        )
    sets = discover_feature_sets(str(null_dir))
    report = run_grid(grid_configs(sets, kernels=("linear", "rbf"), folds=(2, 3, 5), seed=0))
    assert len(report.cells) == 4 * 2 * 3
    out_of_band = {
        (c.config.theory, c.config.kind, c.config.kernel, c.config.folds): c.mean_accuracy
        for c in report.cells
        if not 0.3 <= c.mean_accuracy <= 0.7
    }
    assert not out_of_band, out_of_band
    low = min(c.mean_accuracy for c in report.cells)
    high = max(c.mean_accuracy for c in report.cells)
    print(
        f"\n[ACCEPTANCE] Null-signal sanity (24 cells in [{low:.3f}, {high:.3f}] "
        f"within [0.3, 0.7]): PASS"
    )


def test_cli_writes_reports_and_figures(pipeline_outputs, tmp_path):
    features_dir, _ = pipeline_outputs
    out = tmp_path / "reports"
    proc = subprocess.run(
        [
            sys.executable, "-m", "classify_harness", "run",
            "--features", str(features_dir), "--out", str(out),
            "--kernels", "linear", "rbf", "--folds", "2", "3", "5",
            "--seed", "0", "--rank",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    produced = sorted(os.listdir(out))
    assert "accuracy_report.csv" in produced
    assert "accuracy_summary.csv" in produced
    assert "accuracy_linear.png" in produced
    assert "accuracy_rbf.png" in produced
    assert "feature_ranks_reach_betti.csv" in produced
    assert "feature_frequency_reach_betti.png" in produced
    report_lines = (out / "accuracy_report.csv").read_text().splitlines()
    assert len(report_lines) == 1 + 24
    summary_lines = (out / "accuracy_summary.csv").read_text().splitlines()
    assert len(summary_lines) == 1 + 8  # theory x kind x kernel
