"""SVM classification harness over homology feature CSVs."""

__version__ = "0.1.0"

from .harness import (
    AccuracyReport,
    CellResult,
    ClassificationConfig,
    evaluate_cell,
    grid_configs,
    run_grid,
)
from .io import FeatureSet, FeatureTable, discover_feature_sets, read_features
from .ranking import FeatureRanks, rank_features

__all__ = [
    "__version__",
    "ClassificationConfig",
    "CellResult",
    "AccuracyReport",
    "evaluate_cell",
    "grid_configs",
    "run_grid",
    "FeatureTable",
    "FeatureSet",
    "read_features",
    "discover_feature_sets",
    "FeatureRanks",
    "rank_features",
]
