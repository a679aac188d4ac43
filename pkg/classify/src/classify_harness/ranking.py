"""Feature importance via recursive feature elimination with cross-validation.

A feature's frequency is the fraction of classification runs in which RFECV
kept it; with linear SVMs the eliminated weights are actual hyperplane
coefficients, which is why ranking is restricted to the linear kernel.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.feature_selection import RFECV

from .harness import ClassificationConfig, build_model, fold_splitter
from .io import read_features

__all__ = ["FeatureRanks", "rank_features"]


@dataclass
class FeatureRanks:
    column_names: list[str]
    counts: np.ndarray  # selections per column
    n_runs: int
    by_group: dict[str, list[str]] = field(default_factory=dict)  # e.g. theory -> columns

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.n_runs

    def write_csv(self, path: str) -> None:
        lines = ["feature_index,column_name,count,frequency"]
        for i, (name, count) in enumerate(zip(self.column_names, self.counts), start=1):
            lines.append(f"{i},{name},{int(count)},{count / self.n_runs!r}")
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")


def rank_features(configs: list[ClassificationConfig]) -> FeatureRanks:
    """Run RFECV once per config and count how often each column survives.

    All configs must share the same column layout (same degrees and n); runs
    typically range over thresholds and fold counts.
    """
    if not configs:
        raise ValueError("no configurations to rank")
    if any(c.kernel != "linear" for c in configs):
        raise ValueError("feature ranking requires the linear kernel")
    columns = None
    counts = None
    for config in configs:
        table = read_features(config.features_csv).sorted_by_id()
        if columns is None:
            columns = table.column_names
            counts = np.zeros(len(columns), dtype=int)
        elif table.column_names != columns:
            raise ValueError(
                f"{config.features_csv}: column layout differs across ranking runs"
            )
        selector = RFECV(
            estimator=build_model(config),
            step=1,
            cv=fold_splitter(config),
            scoring="accuracy",
            importance_getter="named_steps.svc.coef_",
            min_features_to_select=1,
        )
        selector.fit(table.X, table.labels)
        counts += selector.support_.astype(int)
    return FeatureRanks(columns, counts, len(configs))
