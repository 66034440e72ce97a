"""Quality metrics for self-organizing maps.

Clustering-quality and topographic indices, internal and external, over a
codebook and its map lattice, plus the reference stochastic trainer used to
build evaluation fixtures.
"""

from .external import class_scatter_index, clustering_accuracy, contingency_table, purity
from .grid import GAUSSIAN, WINDOW, MapGrid, NeighborhoodKernel, adjacency_pairs, distance_matrix
from .internal import (
    TopographicFunction,
    c_measure,
    combined_error,
    distortion,
    kruskal_shepard_error,
    neighborhood_preservation,
    quantization_error,
    topographic_error,
    topographic_function,
    topographic_product,
    trustworthiness,
)
from .model import (
    CodeBook,
    Dataset,
    ProjectionIndex,
    TrainerConfig,
    init_codebook,
    project,
    receptive_field_connectivity,
    train_som,
)
from .report import METRIC_NAMES, EvaluationConfig, MetricReport, evaluate

__version__ = "0.1.0"

__all__ = [
    "MapGrid",
    "NeighborhoodKernel",
    "GAUSSIAN",
    "WINDOW",
    "distance_matrix",
    "adjacency_pairs",
    "CodeBook",
    "Dataset",
    "ProjectionIndex",
    "TrainerConfig",
    "project",
    "init_codebook",
    "train_som",
    "receptive_field_connectivity",
    "quantization_error",
    "distortion",
    "topographic_error",
    "combined_error",
    "trustworthiness",
    "neighborhood_preservation",
    "topographic_product",
    "topographic_function",
    "TopographicFunction",
    "kruskal_shepard_error",
    "c_measure",
    "purity",
    "clustering_accuracy",
    "class_scatter_index",
    "contingency_table",
    "EvaluationConfig",
    "MetricReport",
    "METRIC_NAMES",
    "evaluate",
    "__version__",
]
