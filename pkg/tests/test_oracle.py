import numpy as np
import pytest

from sublinear_mincut.graph import Graph
from sublinear_mincut.oracle import Oracle

from conftest import DOUBLED, STAR4, TRIANGLE, TWO_EDGES


def test_degree_queries_and_counter():
    o = Oracle(STAR4)
    assert o.counters.degree_count == 0
    assert o.q_degree(0) == 4
    assert o.counters.degree_count == 1
    assert Oracle(Graph(3, [(0, 1)])).q_degree(2) == 0


def test_out_of_range_aborts():
    o = Oracle(TRIANGLE)
    with pytest.raises(IndexError):
        o.q_degree(3)
    with pytest.raises(IndexError):
        o.q_neighbor(-1, 1)
    with pytest.raises(IndexError):
        o.q_adjacency(0, 7)


def test_neighbor_queries_count_absent_answers():
    o = Oracle(TRIANGLE)
    assert o.q_neighbor(0, 1) == 1
    assert o.q_neighbor(0, 3) is None
    assert o.counters.neighbor_count == 2
    assert [o.q_neighbor(0, 2) for _ in range(5)] == [2] * 5
    assert Oracle(DOUBLED).q_neighbor(0, 2) == 1


def test_batch_neighbors():
    g = Graph(3, [(0, 1), (1, 2), (0, 1)])
    o = Oracle(g)
    v, k = o.q_neighbors([0, 0, 1, 2, 2], [1, 2, 2, 1, 2])
    assert v.tolist() == [1, 1, 2, 1, -1]
    assert k.tolist() == [1, 3, 1, 2, -1]
    assert o.counters.neighbor_count == 5


def test_adjacency():
    o = Oracle(TRIANGLE)
    assert o.q_adjacency(0, 1) and o.q_adjacency(1, 0)
    assert not o.q_adjacency(1, 1)
    assert not Oracle(TWO_EDGES).q_adjacency(0, 2)
    assert o.counters.adjacency_count == 3


def test_random_edge_single_edge():
    o = Oracle(Graph(3, [(1, 2)]), seed=0)
    assert all(sorted(o.q_random_edge()) == [1, 2] for _ in range(50))
    assert o.counters.random_edge_count == 50


def test_random_edge_empty_graph():
    with pytest.raises(ValueError, match="no edges"):
        Oracle(Graph(3, [])).q_random_edge()


def _edge_id(g, u, j):
    s = g.offsets[u] + j - 1
    return int(min(s, g.twin[s]))


@pytest.mark.parametrize("g", [TRIANGLE, DOUBLED], ids=["triangle", "doubled"])
def test_random_edge_uniform(g):
    draws = 30000
    o = Oracle(g, seed=2024)
    ids = [_edge_id(g, *o.q_random_edge_slot()[:2]) for _ in range(draws)]
    _, counts = np.unique(ids, return_counts=True)
    assert len(counts) == g.m
    p = 1 / g.m
    sigma = np.sqrt(p * (1 - p) / draws)
    assert np.all(np.abs(counts / draws - p) <= 3 * sigma)


def test_same_seed_same_stream():
    a, b = Oracle(TRIANGLE, seed=5), Oracle(TRIANGLE, seed=5)
    assert [a.q_random_edge() for _ in range(100)] == [b.q_random_edge() for _ in range(100)]


def test_counters_json_shape():
    o = Oracle(TRIANGLE)
    o.q_degree(0)
    assert o.counters.as_dict() == {"degree": 1, "neighbor": 0, "adjacency": 0, "random_edge": 0}
