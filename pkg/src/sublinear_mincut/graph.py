"""Undirected multigraph with frozen neighbor order, stored in CSR form.

Every physical edge owns two *slots*, one in each endpoint's neighbor list.
Parallel edges are repeated entries; each copy has its own slot pair.
"""
from __future__ import annotations

import os
from typing import Iterable, Optional

import numpy as np

EDGELIST = "edgelist"


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input."""


class Graph:
    """Immutable multigraph on vertices ``0..n-1``.

    Neighbor lists follow the order in which edges were given, and that
    order never changes.  Attributes:

    ``offsets``  CSR row pointers, length ``n + 1``
    ``targets``  neighbor id per slot, length ``2m``
    ``twin``     global index of the other slot of the same edge
    ``edges``    ``(m, 2)`` array of endpoints in input order
    ``slot_edge`` input-edge index owning each slot
    """

    __slots__ = ("n", "edges", "offsets", "targets", "twin", "slot_edge", "_pairs")

    def __init__(self, n: int, edges: Iterable = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                       dtype=np.int64)
        e = e.reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError(f"edge endpoint out of range 0..{n - 1}")
        if np.any(e[:, 0] == e[:, 1]):
            bad = int(np.flatnonzero(e[:, 0] == e[:, 1])[0])
            raise ValueError(f"self-loop at vertex {int(e[bad, 0])} (edge {bad})")

        m = len(e)
        # Interleave both directions so that a stable sort by source keeps
        # every vertex's neighbors in input-edge order.
        src = e.ravel()
        dst = e[:, ::-1].ravel()
        perm = np.argsort(src, kind="stable")
        pos = np.empty(2 * m, dtype=np.int64)
        pos[perm] = np.arange(2 * m)
        twin = np.empty(2 * m, dtype=np.int64)
        twin[pos[0::2]] = pos[1::2]
        twin[pos[1::2]] = pos[0::2]

        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])

        self.n = n
        self.edges = e
        self.offsets = offsets
        self.targets = dst[perm]
        self.twin = twin
        self.slot_edge = perm // 2
        self._pairs = None
        for arr in (self.edges, self.offsets, self.targets, self.twin, self.slot_edge):
            arr.flags.writeable = False

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def degree(self, u: int) -> int:
        return int(self.offsets[u + 1] - self.offsets[u])

    def neighbors(self, u: int) -> np.ndarray:
        return self.targets[self.offsets[u]:self.offsets[u + 1]]

    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(u).tolist() for u in range(self.n)]

    def slot_twin(self, u: int, j: int) -> tuple[int, int]:
        """Map 1-based slot ``j`` of ``u`` to ``(v, k)``, the same edge seen from ``v``."""
        s = self.offsets[u] + j - 1
        v = int(self.targets[s])
        return v, int(self.twin[s] - self.offsets[v]) + 1

    def multiplicities(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct unordered pairs ``(k, 2)`` with ``u < v`` and their multiplicities."""
        if self._pairs is None:
            lo = np.minimum(self.edges[:, 0], self.edges[:, 1])
            hi = np.maximum(self.edges[:, 0], self.edges[:, 1])
            keys, counts = np.unique(lo * self.n + hi, return_counts=True)
            pairs = np.stack([keys // max(self.n, 1), keys % max(self.n, 1)], axis=1)
            self._pairs = (pairs, counts)
        return self._pairs

    def weight_matrix(self) -> np.ndarray:
        """Dense symmetric matrix of edge multiplicities."""
        w = np.zeros((self.n, self.n), dtype=np.int64)
        np.add.at(w, (self.edges[:, 0], self.edges[:, 1]), 1)
        return w + w.T

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree_sequence(g: Graph) -> np.ndarray:
    """Degrees ``d[i]`` of every vertex; sums to ``2m``."""
    return g.degrees.copy()


def neighbor_at(g: Graph, u: int, j: int) -> Optional[int]:
    """The ``j``-th (1-based) neighbor of ``u``, or ``None`` past its degree."""
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range 0..{g.n - 1}")
    if j < 1 or j > g.degree(u):
        return None
    return int(g.targets[g.offsets[u] + j - 1])


def parse_edgelist(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(f"line {lineno}: negative header value")
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if a == b:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {a}")
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_edgelist(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges.tolist())
    return "\n".join(lines) + "\n"


def load_graph(path: str | os.PathLike, format: str = EDGELIST) -> Graph:
    if format != EDGELIST:
        raise ValueError(f"unknown graph format {format!r}")
    with open(path) as fh:
        return parse_edgelist(fh.read())


def save_graph(g: Graph, path: str | os.PathLike, comments: Iterable[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_edgelist(g, comments))
