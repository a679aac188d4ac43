"""Homology-based features for weighted directed networks.

Two homology theories of a digraph sit behind one pipeline: the directed flag
complex of the digraph itself, and the order complex of its reachability poset
(the condensation of the transitive closure). Betti curves over weight
filtrations, their running integrals, Hochschild cochain oracles for the
reachability theory, and Erdos-Renyi baseline sweeps round out the toolkit.
"""

__version__ = "0.1.0"

from .errors import DataError, GuardExceeded
from .graphs import (
    Digraph,
    WeightedDigraph,
    distinct_weights,
    load_adjacency,
    subgraph_at,
    threshold,
    weakly_connected_components,
)
from .reach import Poset, SccPartition, condensation, poset_digraph, reachability_poset, scc
from .complexes import OrderedComplex, directed_flag_complex, order_complex
from .homology import BettiVector, FieldMatrix, betti, betti_oracle, boundary_matrix
from .hochschild import (
    FiniteAlgebra,
    count_paths,
    happel_betti1,
    happel_betti1_components,
    hh_cochain_betti,
    incidence_algebra,
    path_algebra,
)
from .pipeline import (
    BettiCurve,
    FeatureMatrix,
    FiltrationBounds,
    FiltrationGrid,
    assemble_features,
    betti_curve,
    betti_integral,
    compute_curves,
    features_from_curves,
    filtration_bounds,
    filtration_grid,
    load_manifest,
    theory_betti,
    write_features_csv,
    write_metadata,
)
from .randgraphs import (
    ErExperimentConfig,
    MeanBettiTable,
    er_digraph,
    mean_betti_experiment,
    support_window,
)
from .datasets import make_synthetic_dataset

__all__ = [
    "__version__",
    "DataError",
    "GuardExceeded",
    "Digraph",
    "WeightedDigraph",
    "load_adjacency",
    "threshold",
    "distinct_weights",
    "subgraph_at",
    "weakly_connected_components",
    "SccPartition",
    "Poset",
    "scc",
    "condensation",
    "reachability_poset",
    "poset_digraph",
    "OrderedComplex",
    "directed_flag_complex",
    "order_complex",
    "FieldMatrix",
    "BettiVector",
    "boundary_matrix",
    "betti",
    "betti_oracle",
    "FiniteAlgebra",
    "count_paths",
    "happel_betti1",
    "happel_betti1_components",
    "path_algebra",
    "incidence_algebra",
    "hh_cochain_betti",
    "theory_betti",
    "FiltrationBounds",
    "FiltrationGrid",
    "BettiCurve",
    "FeatureMatrix",
    "filtration_bounds",
    "filtration_grid",
    "betti_curve",
    "betti_integral",
    "compute_curves",
    "assemble_features",
    "features_from_curves",
    "write_features_csv",
    "write_metadata",
    "load_manifest",
    "ErExperimentConfig",
    "MeanBettiTable",
    "er_digraph",
    "mean_betti_experiment",
    "support_window",
    "make_synthetic_dataset",
]
