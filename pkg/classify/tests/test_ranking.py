import numpy as np
import pytest

from classify_harness import ClassificationConfig, rank_features

from helpers import write_csv


def signal_in_b1(tmp_path, name, seed):
    """b0 columns are noise, b1 columns carry the labels."""
    rng = np.random.default_rng(seed)
    n = 28
    labels = [0] * 14 + [1] * 14
    noise = rng.normal(size=(n, 6))
    signal = rng.normal(size=(n, 6)) + 4.0 * np.asarray(labels)[:, None]
    X = np.hstack([noise, signal])
    columns = [f"b0_s{i}" for i in range(6)] + [f"b1_s{i}" for i in range(6)]
    path = tmp_path / name
    write_csv(path, [f"s{i:02d}" for i in range(n)], labels, X, columns)
    return path


def test_ranking_requires_linear(tmp_path):
    path = signal_in_b1(tmp_path, "f.csv", 0)
    with pytest.raises(ValueError):
        rank_features([ClassificationConfig(str(path), kernel="rbf")])


def test_single_run_frequencies_binary(tmp_path):
    path = signal_in_b1(tmp_path, "f.csv", 1)
    ranks = rank_features([ClassificationConfig(str(path), kernel="linear", folds=5, seed=2)])
    assert ranks.n_runs == 1
    assert set(ranks.frequencies.tolist()) <= {0.0, 1.0}


def test_signal_columns_dominate(tmp_path):
    configs = []
    for i, folds in enumerate((2, 3, 5)):
        path = signal_in_b1(tmp_path, f"f{i}.csv", seed=10 + i)
        configs.append(ClassificationConfig(str(path), kernel="linear", folds=folds, seed=5))
    ranks = rank_features(configs)
    assert ranks.n_runs == 3
    b0_mass = ranks.frequencies[:6].sum()
    b1_mass = ranks.frequencies[6:].sum()
    assert b1_mass > b0_mass
    assert np.all(ranks.frequencies <= 1.0)


def test_mismatched_columns_rejected(tmp_path):
    a = signal_in_b1(tmp_path, "a.csv", 3)
    rng = np.random.default_rng(4)
    b = tmp_path / "b.csv"
    write_csv(b, ["s1", "s2"], [0, 1], rng.normal(size=(2, 2)), ["x", "y"])
    with pytest.raises(ValueError):
        rank_features([
            ClassificationConfig(str(a), kernel="linear"),
            ClassificationConfig(str(b), kernel="linear"),
        ])
