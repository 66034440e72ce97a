import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sommetrics import GAUSSIAN, WINDOW, MapGrid, NeighborhoodKernel, adjacency_pairs, distance_matrix

from oracles import bfs_distances

SHAPES = [(1, 2), (2, 1), (1, 7), (3, 3), (2, 5), (4, 4), (5, 5), (3, 7), (10, 10)]


def _grid_edges(grid):
    return [tuple(e) for e in adjacency_pairs(grid)]


@pytest.mark.parametrize("shape", SHAPES)
@pytest.mark.parametrize("topology", ["rectangular", "hexagonal"])
def test_distance_equals_bfs_on_adjacency(shape, topology):
    grid = MapGrid(*shape, topology)
    expected = np.asarray(bfs_distances(grid.n_units, _grid_edges(grid)))
    assert np.array_equal(distance_matrix(grid), expected)


@pytest.mark.parametrize("topology", ["rectangular", "hexagonal"])
def test_distance_metric_axioms_exhaustive(topology):
    grid = MapGrid(8, 8, topology)
    d = distance_matrix(grid)
    assert np.array_equal(d, d.T)
    assert np.all(np.diag(d) == 0)
    assert np.all(d[~np.eye(grid.n_units, dtype=bool)] > 0)
    # triangle inequality over all triples
    assert np.all(d[:, None, :] <= d[:, :, None] + d[None, :, :])


def test_rectangular_distance_examples():
    grid = MapGrid(10, 10)
    assert grid.distance(0, 0) == 0
    assert grid.distance(grid.unit_index(0, 0), grid.unit_index(2, 3)) == 5


def test_hexagonal_adjacent_units_have_distance_one():
    grid = MapGrid(5, 5, "hexagonal")
    center = grid.unit_index(2, 2)
    nbrs = grid.neighbors(center)
    assert len(nbrs) == 6
    assert all(grid.distance(center, int(l)) == 1 for l in nbrs)


def test_neighbors_rectangular_3x3():
    grid = MapGrid(3, 3)
    assert set(grid.neighbors(4)) == {1, 3, 5, 7}  # center: the 4 edge-sharing units
    assert set(grid.neighbors(0)) == {1, 3}  # corner


def test_neighbors_single_unit_grid():
    assert MapGrid(1, 1).neighbors(0).size == 0


@pytest.mark.parametrize("shape,topology", [(s, t) for s in SHAPES for t in ("rectangular", "hexagonal")])
def test_neighbor_counts_bounded(shape, topology):
    grid = MapGrid(*shape, topology)
    limit = 4 if topology == "rectangular" else 6
    for k in range(grid.n_units):
        assert len(grid.neighbors(k)) <= limit


@pytest.mark.parametrize("shape,expected", [((10, 10), 18), ((1, 5), 4), ((1, 2), 1)])
def test_max_distance_rectangular(shape, expected):
    grid = MapGrid(*shape)
    assert grid.max_distance() == expected
    assert grid.max_distance() == int(distance_matrix(grid).max())  # exhaustive pair scan


@pytest.mark.parametrize("shape", SHAPES)
def test_max_distance_hexagonal_matches_pair_scan(shape):
    grid = MapGrid(*shape, "hexagonal")
    assert grid.max_distance() == int(distance_matrix(grid).max())


def test_max_distance_degenerate_grid():
    with pytest.raises(ValueError):
        MapGrid(1, 1).max_distance()


def test_index_round_trip():
    grid = MapGrid(4, 7)
    for k in range(grid.n_units):
        assert grid.unit_index(*grid.unit_position(k)) == k


def test_index_out_of_range():
    grid = MapGrid(3, 3)
    with pytest.raises(ValueError):
        grid.distance(0, 9)
    with pytest.raises(ValueError):
        grid.neighbors(-1)


def test_bad_grid_parameters():
    with pytest.raises(ValueError):
        MapGrid(0, 3)
    with pytest.raises(ValueError):
        MapGrid(3, 3, "toroidal")


def test_dimensionality():
    assert MapGrid(1, 9).dimensionality == 1
    assert MapGrid(9, 1).dimensionality == 1
    assert MapGrid(1, 1).dimensionality == 1
    assert MapGrid(2, 2).dimensionality == 2


def test_kernel_values():
    assert GAUSSIAN.weight(0.0, 3.7) == 1.0
    assert GAUSSIAN.weight(2.0, 2.0) == pytest.approx(math.exp(-1.0))
    assert WINDOW.weight(2.0, 1.0) == 0.0
    assert WINDOW.weight(1.0, 1.0) == 1.0


def test_kernel_validation():
    with pytest.raises(ValueError):
        GAUSSIAN.weight(1.0, 0.0)
    with pytest.raises(ValueError):
        GAUSSIAN.weight(-0.5, 1.0)
    with pytest.raises(ValueError):
        NeighborhoodKernel("triangular")


@settings(max_examples=200)
@given(
    kind=st.sampled_from(["gaussian", "window"]),
    d1=st.floats(min_value=0, max_value=50),
    d2=st.floats(min_value=0, max_value=50),
    t1=st.floats(min_value=1e-3, max_value=50),
    t2=st.floats(min_value=1e-3, max_value=50),
)
def test_kernel_monotonicity(kind, d1, d2, t1, t2):
    kernel = NeighborhoodKernel(kind)
    lo_d, hi_d = sorted((d1, d2))
    assert kernel.weight(lo_d, t1) >= kernel.weight(hi_d, t1)
    lo_t, hi_t = sorted((t1, t2))
    d = max(d1, 1e-2)
    assert kernel.weight(d, hi_t) >= kernel.weight(d, lo_t)
    w = kernel.weight(d1, t1)
    assert 0.0 <= w <= 1.0
