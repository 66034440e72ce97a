"""Codebook and dataset containers, BMU projection, and the stochastic trainer.

The trainer exists to generate evaluation fixtures; it draws samples with
replacement from a seeded generator, anneals the temperature geometrically
from ``t_max`` to ``t_min``, and keeps the learning rate constant.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import GAUSSIAN, MapGrid, NeighborhoodKernel, distance_matrix


@dataclass
class Dataset:
    """N x D sample matrix with optional integer class labels."""

    samples: np.ndarray
    labels: np.ndarray | None = None

    def __post_init__(self) -> None:
        self.samples = np.atleast_2d(np.asarray(self.samples, dtype=float))
        if self.samples.ndim != 2 or self.samples.shape[0] < 1:
            raise ValueError(f"samples must be a nonempty 2-D matrix, got shape {self.samples.shape}")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("samples contain non-finite values")
        if self.labels is not None:
            self.labels = np.asarray(self.labels)
            if not np.issubdtype(self.labels.dtype, np.integer):
                raise ValueError("labels must be integers")
            self.labels = self.labels.astype(np.int64).ravel()
            if self.labels.shape[0] != self.samples.shape[0]:
                raise ValueError(
                    f"labels length {self.labels.shape[0]} does not match sample count {self.samples.shape[0]}"
                )
            if self.labels.min() < 0:
                raise ValueError("labels must be nonnegative class ids")

    @property
    def n_samples(self) -> int:
        return self.samples.shape[0]

    @property
    def n_features(self) -> int:
        return self.samples.shape[1]

    @property
    def n_classes(self) -> int | None:
        return None if self.labels is None else int(self.labels.max()) + 1


@dataclass
class CodeBook:
    """K x D prototype matrix, row k belonging to map unit k of ``grid``."""

    prototypes: np.ndarray
    grid: MapGrid

    def __post_init__(self) -> None:
        self.prototypes = np.atleast_2d(np.asarray(self.prototypes, dtype=float))
        if self.prototypes.shape[0] != self.grid.n_units:
            raise ValueError(
                f"codebook has {self.prototypes.shape[0]} rows but grid "
                f"{self.grid.rows}x{self.grid.cols} has {self.grid.n_units} units"
            )
        if not np.all(np.isfinite(self.prototypes)):
            raise ValueError("prototypes contain non-finite values")

    @property
    def n_units(self) -> int:
        return self.prototypes.shape[0]

    @property
    def n_features(self) -> int:
        return self.prototypes.shape[1]


@dataclass
class ProjectionIndex:
    """Per-sample unit rankings by ascending squared distance, ties to lowest index."""

    bmu_ranks: np.ndarray  # (N, depth) int

    @property
    def bmu(self) -> np.ndarray:
        return self.bmu_ranks[:, 0]

    @property
    def second_bmu(self) -> np.ndarray:
        if self.bmu_ranks.shape[1] < 2:
            raise ValueError("projection was computed with depth < 2")
        return self.bmu_ranks[:, 1]

    @property
    def depth(self) -> int:
        return self.bmu_ranks.shape[1]


def _check_dims(codebook: CodeBook, data: Dataset) -> None:
    if codebook.n_features != data.n_features:
        raise ValueError(
            f"dimension mismatch: codebook is {codebook.n_units}x{codebook.n_features}, "
            f"data is {data.n_samples}x{data.n_features}"
        )


def squared_distances(x: np.ndarray, prototypes: np.ndarray) -> np.ndarray:
    """Exact squared euclidean distances, rows of ``x`` against all prototypes.

    Computed from explicit differences (not the expanded dot-product form) so
    that exact ties in the inputs stay exact ties in the output.
    """
    return ((x[:, None, :] - prototypes[None, :, :]) ** 2).sum(axis=2)


def project(codebook: CodeBook, data: Dataset, depth: int = 2) -> ProjectionIndex:
    """Rank map units by distance to each sample, truncated to ``depth``."""
    _check_dims(codebook, data)
    K = codebook.n_units
    if not 1 <= depth <= K:
        raise ValueError(f"depth must be in 1..{K}, got {depth}")
    protos = codebook.prototypes
    n, d = data.samples.shape
    block = max(1, int(4_000_000 // max(1, K * d)))
    ranks = np.empty((n, depth), dtype=np.int64)
    for start in range(0, n, block):
        sl = slice(start, min(start + block, n))
        d2 = squared_distances(data.samples[sl], protos)
        ranks[sl] = np.argsort(d2, axis=1, kind="stable")[:, :depth]
    return ProjectionIndex(ranks)


def bmu_distances(codebook: CodeBook, data: Dataset, bmus: np.ndarray) -> np.ndarray:
    """Euclidean distance from each sample to its assigned unit's prototype."""
    diff = data.samples - codebook.prototypes[bmus]
    return np.sqrt((diff * diff).sum(axis=1))


def receptive_field_connectivity(codebook: CodeBook, data: Dataset) -> np.ndarray:
    """K x K boolean matrix marking unit pairs that are BMU and second BMU of some sample.

    Symmetric with an all-false diagonal; estimates receptive-field adjacency
    without a Voronoi tessellation.
    """
    if codebook.n_units < 2:
        raise ValueError("receptive-field connectivity requires at least two units")
    proj = project(codebook, data, depth=2)
    K = codebook.n_units
    conn = np.zeros((K, K), dtype=bool)
    conn[proj.bmu, proj.second_bmu] = True
    conn |= conn.T
    np.fill_diagonal(conn, False)
    return conn


def init_codebook(data: Dataset, grid: MapGrid, seed) -> CodeBook:
    """Initialize prototypes by sampling data rows (without replacement when N >= K)."""
    rng = np.random.default_rng(seed)
    K = grid.n_units
    n = data.n_samples
    idx = rng.choice(n, size=K, replace=n < K)
    return CodeBook(data.samples[idx].copy(), grid)


@dataclass
class TrainerConfig:
    """Stochastic trainer parameters; defaults match the square-map fixture."""

    rows: int
    cols: int
    topology: str = "rectangular"
    t_max: float = 10.0
    t_min: float = 0.1
    alpha: float = 0.5
    iterations: int = 20000
    seed: int = 0
    kernel: NeighborhoodKernel = field(default_factory=lambda: GAUSSIAN)

    def __post_init__(self) -> None:
        if not (self.t_max >= self.t_min > 0):
            raise ValueError(f"need t_max >= t_min > 0, got t_max={self.t_max}, t_min={self.t_min}")
        if not self.alpha > 0:
            raise ValueError(f"learning rate must be positive, got {self.alpha}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")

    @property
    def grid(self) -> MapGrid:
        return MapGrid(self.rows, self.cols, self.topology)


def train_som(data: Dataset, config: TrainerConfig) -> CodeBook:
    """Run the stochastic training loop and return the trained codebook.

    At step n (1-based) the temperature is
    ``t_max * (t_min / t_max) ** (n / iterations)`` and the learning rate
    anneals by the same geometric factor (staying at ``alpha`` when the
    temperature is held constant); one sample is drawn uniformly per step and
    every prototype moves toward it, weighted by the neighborhood kernel
    around the BMU. Deterministic given the seed.
    """
    grid = config.grid
    rng = np.random.default_rng(config.seed)
    codebook = init_codebook(data, grid, rng)
    protos = codebook.prototypes
    _check_dims(codebook, data)

    dmat = distance_matrix(grid).astype(float)
    x = data.samples
    n = data.n_samples
    ratio = config.t_min / config.t_max
    iters = config.iterations
    for step in range(1, iters + 1):
        anneal = ratio ** (step / iters)
        t = config.t_max * anneal
        i = int(rng.integers(n))
        diff = x[i] - protos
        b = int(np.argmin((diff * diff).sum(axis=1)))
        w = config.kernel.weight(dmat[b], t)
        protos += (config.alpha * anneal) * w[:, None] * diff
    return CodeBook(protos, grid)
