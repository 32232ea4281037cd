"""Query access to a hidden graph, with exact per-query-type tallies."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph, neighbor_at


@dataclass
class QueryCounters:
    degree_count: int = 0
    neighbor_count: int = 0
    adjacency_count: int = 0
    random_edge_count: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def add(self, kind: str, k: int = 1) -> None:
        with self._lock:
            setattr(self, kind, getattr(self, kind) + k)

    def snapshot(self) -> "QueryCounters":
        with self._lock:
            return QueryCounters(self.degree_count, self.neighbor_count,
                                 self.adjacency_count, self.random_edge_count)

    def as_dict(self) -> dict:
        return {
            "degree": self.degree_count,
            "neighbor": self.neighbor_count,
            "adjacency": self.adjacency_count,
            "random_edge": self.random_edge_count,
        }

    @property
    def total(self) -> int:
        return (self.degree_count + self.neighbor_count
                + self.adjacency_count + self.random_edge_count)


class Oracle:
    """Degree / Neighbor / Adjacency / Random-Edge queries over one fixed graph.

    The vertex count ``n`` is public; everything else about the graph must be
    learned through queries, each of which is tallied in ``counters``.
    Out-of-range vertex ids raise ``IndexError``.
    """

    def __init__(self, graph: Graph, seed=None):
        self._graph = graph
        self.n = graph.n
        self.counters = QueryCounters()
        self._rng = np.random.default_rng(seed)
        self._adj_index: Optional[set] = None

    def _check(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range 0..{self.n - 1}")

    def q_degree(self, u: int) -> int:
        self._check(u)
        self.counters.add("degree_count")
        return self._graph.degree(u)

    def q_neighbor(self, u: int, j: int) -> Optional[int]:
        """``j``-th neighbor of ``u`` (1-based) or ``None``; counted even when absent."""
        self._check(u)
        if j < 1:
            raise ValueError("slot index is 1-based")
        self.counters.add("neighbor_count")
        return neighbor_at(self._graph, u, j)

    def q_neighbors(self, us: np.ndarray, js: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Batch of ``len(us)`` Neighbor queries.

        Returns ``(v, k)`` arrays: ``v[i]`` is the ``js[i]``-th neighbor of
        ``us[i]`` and ``k[i]`` is the 1-based position of ``us[i]`` in
        ``v[i]``'s list for that same physical edge, which identifies
        parallel copies.  Absent answers are ``-1`` in both arrays.
        """
        us = np.asarray(us, dtype=np.int64)
        js = np.asarray(js, dtype=np.int64)
        if us.size and (us.min() < 0 or us.max() >= self.n):
            raise IndexError("vertex out of range in batch neighbor query")
        if js.size and js.min() < 1:
            raise ValueError("slot index is 1-based")
        self.counters.add("neighbor_count", int(us.size))
        g = self._graph
        deg = g.offsets[us + 1] - g.offsets[us]
        ok = js <= deg
        v = np.full(us.shape, -1, dtype=np.int64)
        k = np.full(us.shape, -1, dtype=np.int64)
        s = g.offsets[us[ok]] + js[ok] - 1
        v[ok] = g.targets[s]
        k[ok] = g.twin[s] - g.offsets[v[ok]] + 1
        return v, k

    def q_adjacency(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        self.counters.add("adjacency_count")
        if self._adj_index is None:
            self._adj_index = set(map(tuple, np.sort(self._graph.edges, axis=1).tolist()))
        return (min(u, v), max(u, v)) in self._adj_index

    def q_random_edge(self) -> tuple[int, int]:
        """Uniform physical edge: vertex drawn proportional to degree, then a uniform slot."""
        u, _, v = self.q_random_edge_slot()
        return u, v

    def q_random_edge_slot(self) -> tuple[int, int, int]:
        """Random-Edge query that also reports the drawn slot: ``(u, j, v)``."""
        g = self._graph
        if g.m == 0:
            raise ValueError("no edges")
        self.counters.add("random_edge_count")
        r = self._rng.random() * (2 * g.m)
        u = int(np.searchsorted(g.offsets, r, side="right") - 1)
        j = int(self._rng.integers(1, g.degree(u) + 1))
        return u, j, neighbor_at(g, u, j)
