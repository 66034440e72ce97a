"""Metric registry, evaluation orchestration, and report serialization."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import external, internal
from .dataio import content_hash, load_labels, load_matrix
from .errors import ConfigError, InputError
from .grid import KERNEL_KINDS, TOPOLOGIES, MapGrid, NeighborhoodKernel
from .internal import TopographicFunction
from .model import CodeBook, Dataset, project


@dataclass(frozen=True)
class MetricSpec:
    compute: Callable[["EvaluationContext"], Any]
    needs_labels: bool = False
    needs_k: bool = False
    needs_temperature: bool = False


@dataclass
class EvaluationContext:
    codebook: CodeBook
    data: Dataset
    k: int | None
    temperature: float | None
    kernel: NeighborhoodKernel


def _bmus(ctx: EvaluationContext) -> np.ndarray:
    return project(ctx.codebook, ctx.data, depth=1).bmu


REGISTRY: dict[str, MetricSpec] = {
    "quantization_error": MetricSpec(lambda c: internal.quantization_error(c.codebook, c.data)),
    "distortion": MetricSpec(
        lambda c: internal.distortion(c.codebook, c.data, c.temperature, c.kernel),
        needs_temperature=True,
    ),
    "topographic_error": MetricSpec(lambda c: internal.topographic_error(c.codebook, c.data)),
    "combined_error": MetricSpec(lambda c: internal.combined_error(c.codebook, c.data)),
    "trustworthiness": MetricSpec(
        lambda c: internal.trustworthiness(c.codebook, c.data, c.k), needs_k=True
    ),
    "neighborhood_preservation": MetricSpec(
        lambda c: internal.neighborhood_preservation(c.codebook, c.data, c.k), needs_k=True
    ),
    "topographic_product": MetricSpec(lambda c: internal.topographic_product(c.codebook)),
    "topographic_function": MetricSpec(lambda c: internal.topographic_function(c.codebook, c.data)),
    "kruskal_shepard_error": MetricSpec(lambda c: internal.kruskal_shepard_error(c.codebook, c.data)),
    "c_measure": MetricSpec(lambda c: internal.c_measure(c.codebook, c.data)),
    "purity": MetricSpec(
        lambda c: external.purity(_bmus(c), c.data.labels), needs_labels=True
    ),
    "clustering_accuracy": MetricSpec(
        lambda c: external.clustering_accuracy(_bmus(c), c.data.labels), needs_labels=True
    ),
    "class_scatter_index": MetricSpec(
        lambda c: external.class_scatter_index(c.codebook, c.data), needs_labels=True
    ),
}

METRIC_NAMES = tuple(REGISTRY)


@dataclass
class EvaluationConfig:
    """One evaluation request: input files, map geometry, metric list, parameters."""

    codebook_path: str
    data_path: str
    rows: int
    cols: int
    metrics: tuple[str, ...]
    labels_path: str | None = None
    topology: str = "rectangular"
    k: int | None = None
    temperature: float | None = None
    kernel: str = "gaussian"

    def __post_init__(self) -> None:
        self.metrics = tuple(self.metrics)

    def validate(self) -> None:
        if not self.metrics:
            raise ConfigError("no metrics requested")
        unknown = [m for m in self.metrics if m not in REGISTRY]
        if unknown:
            raise ConfigError(
                f"unknown metric name(s) {', '.join(unknown)}; valid names: {', '.join(METRIC_NAMES)}"
            )
        if self.topology not in TOPOLOGIES:
            raise ConfigError(f"unknown topology {self.topology!r}; valid: {', '.join(TOPOLOGIES)}")
        if self.kernel not in KERNEL_KINDS:
            raise ConfigError(f"unknown kernel {self.kernel!r}; valid: {', '.join(KERNEL_KINDS)}")
        if self.rows < 1 or self.cols < 1:
            raise ConfigError(f"map size must be positive, got {self.rows}x{self.cols}")
        for name in self.metrics:
            spec = REGISTRY[name]
            if spec.needs_labels and self.labels_path is None:
                raise ConfigError(f"metric {name} requires a labels file (--labels)")
            if spec.needs_k and self.k is None:
                raise ConfigError(f"metric {name} requires the neighborhood order k (--k)")
            if spec.needs_temperature and self.temperature is None:
                raise ConfigError(f"metric {name} requires a temperature (--temperature)")


@dataclass
class MetricReport:
    """Computed metric values plus the parameters and input fingerprints used."""

    metrics: dict[str, Any]
    params: dict[str, Any]
    inputs: dict[str, Any]
    failed: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "metrics": {name: _jsonable(v) for name, v in self.metrics.items()},
            "params": self.params,
            "inputs": self.inputs,
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["metric", "value"])
        for name, value in self.metrics.items():
            for key, cell in _csv_cells(name, value):
                writer.writerow([key, cell])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ConfigError(f"unknown report format {fmt!r}; valid: json, csv")


def _jsonable(value):
    if isinstance(value, TopographicFunction):
        return {
            "k": value.k.tolist(),
            "tf": value.tf.tolist(),
            "normalized_k": value.normalized_k.tolist(),
            "normalized_tf": None if value.normalized_tf is None else value.normalized_tf.tolist(),
        }
    return value


def _csv_cells(name: str, value) -> list[tuple[str, str]]:
    if isinstance(value, TopographicFunction):
        cells = [
            (f"{name}.k", ";".join(str(int(k)) for k in value.k)),
            (f"{name}.tf", ";".join(str(int(t)) for t in value.tf)),
            (f"{name}.normalized_k", ";".join(repr(float(v)) for v in value.normalized_k)),
        ]
        if value.normalized_tf is not None:
            cells.append((f"{name}.normalized_tf", ";".join(repr(float(v)) for v in value.normalized_tf)))
        return cells
    if isinstance(value, dict) and "error" in value:
        return [(name, f"error:{value['error']}")]
    return [(name, repr(float(value)))]


def _fingerprint(matrix: np.ndarray) -> dict[str, Any]:
    return {
        "rows": int(matrix.shape[0]),
        "dims": int(matrix.shape[1]) if matrix.ndim > 1 else 1,
        "sha256": content_hash(matrix),
    }


def evaluate(config: EvaluationConfig) -> MetricReport:
    """Load inputs, compute the requested metrics, and assemble the report.

    A failing metric becomes an ``{"error": reason}`` entry without aborting
    the others; the report's ``failed`` list names such metrics.
    """
    config.validate()
    protos = load_matrix(config.codebook_path)
    samples = load_matrix(config.data_path)
    labels = load_labels(config.labels_path) if config.labels_path else None

    grid = MapGrid(config.rows, config.cols, config.topology)
    if protos.shape[0] != grid.n_units:
        raise InputError(
            f"codebook {config.codebook_path} has {protos.shape[0]} rows but the "
            f"{config.rows}x{config.cols} grid has {grid.n_units} units"
        )
    try:
        codebook = CodeBook(protos, grid)
        data = Dataset(samples, labels)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if codebook.n_features != data.n_features:
        raise InputError(
            f"dimension mismatch: codebook {config.codebook_path} is "
            f"{codebook.n_units}x{codebook.n_features}, data {config.data_path} is "
            f"{data.n_samples}x{data.n_features}"
        )

    ctx = EvaluationContext(codebook, data, config.k, config.temperature,
                            NeighborhoodKernel(config.kernel))
    results: dict[str, Any] = {}
    failed: list[str] = []
    for name in config.metrics:
        try:
            value = REGISTRY[name].compute(ctx)
            if isinstance(value, float) and not np.isfinite(value):
                raise ValueError(f"non-finite result {value!r}")
            results[name] = value
        except Exception as exc:  # one bad metric must not sink the others
            results[name] = {"error": f"{type(exc).__name__}: {exc}"}
            failed.append(name)

    params = {
        "rows": config.rows,
        "cols": config.cols,
        "topology": config.topology,
        "k": config.k,
        "temperature": config.temperature,
        "kernel": config.kernel,
    }
    inputs = {
        "codebook": {"path": str(config.codebook_path), **_fingerprint(protos)},
        "data": {"path": str(config.data_path), **_fingerprint(samples)},
    }
    if labels is not None:
        inputs["labels"] = {"path": str(config.labels_path), **_fingerprint(labels.astype(float))}
    return MetricReport(results, params, inputs, failed)
