"""Plain-text matrix and label files: comma-separated rows, diffable, dependency-free.

Codebook files hold one prototype per line in row-major unit order; label
files hold one integer per line. Matrices are written with 17 significant
digits so a write/read round trip reproduces the exact float64 values.
"""
from __future__ import annotations

import hashlib
from pathlib import Path

import numpy as np

from .errors import InputError


def load_matrix(path) -> np.ndarray:
    """Parse a comma-separated numeric matrix; raises InputError naming file and line."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    rows: list[list[float]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        try:
            row = [float(f) for f in fields]
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: not a numeric row: {line!r}") from exc
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError(f"{path}:{lineno}: expected {width} columns, found {len(row)}")
        rows.append(row)
    if not rows:
        raise InputError(f"{path}: file holds no data rows")
    return np.asarray(rows, dtype=float)


def load_labels(path) -> np.ndarray:
    """Parse one integer class id per line; raises InputError naming file and line."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    labels = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            labels.append(int(line))
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: not an integer label: {line!r}") from exc
    if not labels:
        raise InputError(f"{path}: file holds no labels")
    return np.asarray(labels, dtype=np.int64)


def save_matrix(path, matrix: np.ndarray) -> None:
    """Write a matrix as comma-separated rows with round-trip-exact precision."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    lines = [",".join(f"{v:.17g}" for v in row) for row in matrix]
    Path(path).write_text("\n".join(lines) + "\n")


def content_hash(matrix: np.ndarray) -> str:
    """SHA-256 of the canonical float64 row-major bytes; format-independent."""
    canonical = np.ascontiguousarray(matrix, dtype=float)
    return hashlib.sha256(canonical.tobytes()).hexdigest()
