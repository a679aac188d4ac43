"""SVM cross-validation grid over feature sets.

Models are deliberately default-hyperparameter SVC: the point of the harness
is comparing feature sets, not squeezing accuracy. Standardization happens
inside the fold pipeline, so scalers only ever see training folds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from sklearn.model_selection import StratifiedKFold, cross_val_score
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import StandardScaler
from sklearn.svm import SVC

from .io import FeatureSet, read_features

__all__ = ["ClassificationConfig", "CellResult", "AccuracyReport", "evaluate_cell",
           "run_grid", "grid_configs"]

KERNELS = ("linear", "rbf")
FOLD_CHOICES = (2, 3, 5)


@dataclass(frozen=True)
class ClassificationConfig:
    """One grid cell: a feature CSV evaluated with one kernel and fold count."""

    features_csv: str
    kernel: str = "linear"
    folds: int = 5
    standardize: bool = True
    feature_ranking: bool = False
    seed: int = 0
    theory: str = ""
    kind: str = ""
    theta1: float = math.nan

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise ValueError(f"kernel must be one of {KERNELS}")
        if self.folds < 2:
            raise ValueError("need at least 2 folds")
        if self.feature_ranking and self.kernel != "linear":
            raise ValueError("feature ranking requires the linear kernel")


@dataclass
class CellResult:
    config: ClassificationConfig
    mean_accuracy: float
    std_accuracy: float
    fold_accuracies: tuple[float, ...]
    n_features: int
    note: str = ""


@dataclass
class AccuracyReport:
    cells: list[CellResult] = field(default_factory=list)

    def best_summary(self) -> list[dict]:
        """Best mean accuracy per (theory, kind, kernel) over thresholds and
        fold counts; the grid stays available for any other aggregation."""
        best: dict[tuple, CellResult] = {}
        for cell in self.cells:
            if math.isnan(cell.mean_accuracy):
                continue
            key = (cell.config.theory, cell.config.kind, cell.config.kernel)
            if key not in best or cell.mean_accuracy > best[key].mean_accuracy:
                best[key] = cell
        return [
            {
                "theory": key[0],
                "kind": key[1],
                "kernel": key[2],
                "best_accuracy": cell.mean_accuracy,
                "theta1": cell.config.theta1,
                "folds": cell.config.folds,
            }
            for key, cell in sorted(best.items())
        ]

    def write_csv(self, path: str) -> None:
        lines = ["theta1,theory,kind,kernel,folds,mean_accuracy,std_accuracy,n_features,note"]
        for cell in self.cells:
            cfg = cell.config
            lines.append(
                f"{cfg.theta1:g},{cfg.theory},{cfg.kind},{cfg.kernel},{cfg.folds},"
                f"{cell.mean_accuracy!r},{cell.std_accuracy!r},{cell.n_features},{cell.note}"
            )
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")

    def write_summary_csv(self, path: str) -> None:
        lines = ["theory,kind,kernel,best_accuracy,theta1,folds"]
        for row in self.best_summary():
            lines.append(
                f"{row['theory']},{row['kind']},{row['kernel']},"
                f"{row['best_accuracy']!r},{row['theta1']:g},{row['folds']}"
            )
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")


def build_model(config: ClassificationConfig) -> Pipeline:
    steps = []
    if config.standardize:
        steps.append(("scale", StandardScaler()))
    steps.append(("svc", SVC(kernel=config.kernel)))
    return Pipeline(steps)


def fold_splitter(config: ClassificationConfig) -> StratifiedKFold:
    return StratifiedKFold(n_splits=config.folds, shuffle=True, random_state=config.seed)


def evaluate_cell(config: ClassificationConfig) -> CellResult:
    """Mean cross-validated accuracy for one cell. Degenerate folds (a single
    class in some training fold, or too few members per class) are reported in
    the note instead of raising."""
    table = read_features(config.features_csv).sorted_by_id()
    try:
        scores = cross_val_score(
            build_model(config), table.X, table.labels,
            cv=fold_splitter(config), scoring="accuracy", error_score="raise",
        )
    except ValueError as exc:
        return CellResult(config, math.nan, math.nan, (), table.X.shape[1], note=str(exc))
    return CellResult(
        config,
        float(scores.mean()),
        float(scores.std()),
        tuple(float(s) for s in scores),
        table.X.shape[1],
    )


def grid_configs(
    feature_sets: list[FeatureSet],
    kernels=KERNELS,
    folds=FOLD_CHOICES,
    seed: int = 0,
    standardize: bool = True,
) -> list[ClassificationConfig]:
    return [
        ClassificationConfig(
            features_csv=fs.csv_path,
            kernel=kernel,
            folds=k,
            standardize=standardize,
            seed=seed,
            theory=fs.theory,
            kind=fs.kind,
            theta1=fs.theta1,
        )
        for fs in feature_sets
        for kernel in kernels
        for k in folds
    ]


def run_grid(configs: list[ClassificationConfig]) -> AccuracyReport:
    report = AccuracyReport()
    for config in configs:
        report.cells.append(evaluate_cell(config))
    return report
