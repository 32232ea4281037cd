"""Edge sampling through Neighbor queries only.

Every slot is selected independently with probability
``q = 1 - sqrt(1 - p)``; an edge enters the sample when at least one of its
two slots is selected, which happens with probability ``1 - (1 - q)**2 = p``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph
from .oracle import Oracle


class SampleError(RuntimeError):
    """The degree sequence disagrees with the oracle's graph."""


@dataclass(frozen=True)
class SampledSubgraph:
    n: int
    edges: np.ndarray       # (k, 2) endpoints
    slot_keys: np.ndarray   # lower global slot id of each edge; unique
    p: float
    q: float
    queries: int            # Neighbor queries spent producing this sample

    @property
    def m(self) -> int:
        return len(self.edges)

    def to_graph(self) -> Graph:
        return Graph(self.n, self.edges)


def slot_probability(p: float) -> float:
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    return 1.0 - math.sqrt(1.0 - p)


def select_slots(total: int, q: float, rng: np.random.Generator) -> np.ndarray:
    """Sorted indices in ``[0, total)``, each kept independently with probability ``q``.

    Uses geometric gaps, so the work is proportional to the output size.
    """
    if total <= 0:
        return np.empty(0, dtype=np.int64)
    if q >= 1.0:
        return np.arange(total, dtype=np.int64)
    chunks = []
    pos = -1
    while True:
        k = max(16, int(1.2 * (total - pos) * q) + 16)
        steps = rng.geometric(q, size=k)
        idx = pos + np.cumsum(steps)
        if idx[-1] >= total:
            chunks.append(idx[idx < total])
            break
        chunks.append(idx)
        pos = int(idx[-1])
    return np.concatenate(chunks).astype(np.int64)


def sample(oracle: Oracle, degrees, p: float, rng: np.random.Generator) -> SampledSubgraph:
    """Draw ``H`` with each physical edge kept independently with probability ``p``.

    Slot selection is decided from the degree sequence alone; one Neighbor
    query is then issued per selected slot.
    """
    q = slot_probability(p)
    d = np.asarray(degrees, dtype=np.int64)
    if d.shape != (oracle.n,):
        raise SampleError(f"degree sequence has length {d.size}, expected {oracle.n}")
    offsets = np.zeros(oracle.n + 1, dtype=np.int64)
    np.cumsum(d, out=offsets[1:])
    total = int(offsets[-1])
    if total % 2:
        raise SampleError("degree sum is odd")

    chosen = select_slots(total, q, rng)
    us = np.searchsorted(offsets, chosen, side="right") - 1
    js = chosen - offsets[us] + 1
    vs, ks = oracle.q_neighbors(us, js)
    if np.any(vs < 0):
        bad = int(np.flatnonzero(vs < 0)[0])
        raise SampleError(f"slot {int(js[bad])} of vertex {int(us[bad])} is empty; "
                          "degree sequence does not match the graph")
    if np.any(ks > d[vs]):
        raise SampleError("neighbor slot beyond recorded degree; degree sequence does not match")

    other = offsets[vs] + ks - 1
    keys = np.minimum(chosen, other)
    keys, first = np.unique(keys, return_index=True)
    edges = np.stack([us[first], vs[first]], axis=1)
    return SampledSubgraph(oracle.n, edges, keys, float(p), q, int(chosen.size))


def _csr(n: int, e: np.ndarray) -> csr_matrix:
    # One stored entry per edge is enough for undirected components; building
    # CSR directly skips the slower COO conversion.
    indptr = np.zeros(n + 1, dtype=np.int32)
    np.cumsum(np.bincount(e[:, 0], minlength=n), out=indptr[1:])
    indices = e[np.argsort(e[:, 0], kind="stable"), 1].astype(np.int32)
    return csr_matrix((np.ones(len(e), dtype=np.int8), indices, indptr), shape=(n, n))


def component_count(h) -> int:
    """Number of connected components; accepts a ``SampledSubgraph`` or ``Graph``."""
    n = h.n
    if n == 0:
        return 0
    if len(h.edges) == 0:
        return n
    k, _ = connected_components(_csr(n, h.edges), directed=False)
    return int(k)


def is_connected(h) -> bool:
    return component_count(h) == 1


def component_labels(h) -> np.ndarray:
    return connected_components(_csr(h.n, h.edges), directed=False)[1]
