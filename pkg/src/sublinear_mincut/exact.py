"""Exact cut engines: Stoer-Wagner, brute-force enumeration, r-way cuts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph
from .sampler import component_labels

BRUTE_MAX_N = 20
RCUT_MAX_N = 12
_NEG = -(1 << 60)


@dataclass(frozen=True)
class CutResult:
    size: int
    side: tuple[int, ...]  # one side of the bipartition, sorted

    def other_side(self, n: int) -> tuple[int, ...]:
        s = set(self.side)
        return tuple(v for v in range(n) if v not in s)


@dataclass(frozen=True)
class RWayCutResult:
    r: int
    size: int
    parts: tuple[tuple[int, ...], ...]


def crossing_count(g: Graph, side) -> int:
    """Edges (with multiplicity) with exactly one endpoint in ``side``."""
    mask = np.zeros(g.n, dtype=bool)
    mask[list(side)] = True
    return int(np.count_nonzero(mask[g.edges[:, 0]] != mask[g.edges[:, 1]]))


def rway_crossing_count(g: Graph, parts) -> int:
    label = np.empty(g.n, dtype=np.int64)
    for i, part in enumerate(parts):
        label[list(part)] = i
    return int(np.count_nonzero(label[g.edges[:, 0]] != label[g.edges[:, 1]]))


def min_cut_exact(g: Graph) -> CutResult:
    """Global minimum cut by maximum-adjacency ordering (Stoer-Wagner).

    Parallel edges act as integer weights.  A disconnected graph yields size
    0 with the component of vertex 0 as the reported side.
    """
    n = g.n
    if n < 2:
        raise ValueError("minimum cut needs at least 2 vertices")
    labels = component_labels(g)
    if labels.max() > 0:
        return CutResult(0, tuple(np.flatnonzero(labels == labels[0]).tolist()))

    w = g.weight_matrix()
    active = np.ones(n, dtype=bool)
    groups = [[v] for v in range(n)]
    best_size, best_side = None, None
    for remaining in range(n, 1, -1):
        start = int(np.flatnonzero(active)[0])
        key = w[start].copy()
        key[~active] = _NEG
        key[start] = _NEG
        prev, last = start, start
        for _ in range(remaining - 1):
            prev = last
            last = int(np.argmax(key))
            cut_of_phase = int(key[last])
            key += w[last]
            key[last] = _NEG
        if best_size is None or cut_of_phase < best_size:
            best_size, best_side = cut_of_phase, list(groups[last])
        # merge last into prev
        w[prev] += w[last]
        w[:, prev] += w[:, last]
        w[prev, prev] = 0
        w[last] = 0
        w[:, last] = 0
        active[last] = False
        groups[prev].extend(groups[last])
        groups[last] = []
    return CutResult(best_size, tuple(sorted(best_side)))


def all_cut_sizes(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Every proper bipartition as a bitmask (vertex ``n-1`` always outside) and its size."""
    n = g.n
    if n < 2:
        raise ValueError("cuts need at least 2 vertices")
    if n > BRUTE_MAX_N:
        raise ValueError(f"brute-force enumeration limited to n <= {BRUTE_MAX_N}, got {n}")
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    sizes = np.zeros(masks.shape, dtype=np.int64)
    pairs, mult = g.multiplicities()
    for (u, v), c in zip(pairs.tolist(), mult.tolist()):
        sizes += c * (((masks >> u) ^ (masks >> v)) & 1)
    return masks, sizes


def _mask_side(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)


def min_cut_brute(g: Graph) -> CutResult:
    masks, sizes = all_cut_sizes(g)
    i = int(np.argmin(sizes))
    return CutResult(int(sizes[i]), _mask_side(int(masks[i]), g.n))


def min_cut_sides(g: Graph) -> list[tuple[int, ...]]:
    """All bipartitions achieving the minimum cut (brute force)."""
    masks, sizes = all_cut_sizes(g)
    best = sizes.min()
    return [_mask_side(int(mk), g.n) for mk in masks[sizes == best]]


def count_cuts_below(g: Graph, j) -> int:
    """Number of bipartitions whose cut is at most ``j`` times the minimum cut."""
    j = Fraction(j)
    if j <= 0:
        raise ValueError("j must be positive")
    masks, sizes = all_cut_sizes(g)
    t = int(sizes.min())
    if t == 0:
        raise ValueError("graph is disconnected")
    return int(np.count_nonzero(sizes * j.denominator <= j.numerator * t))


def min_rcut_brute(g: Graph, r: int) -> RWayCutResult:
    """Exact minimum r-way cut by dynamic programming over vertex subsets.

    ``best[k][S]`` is the least total boundary of a split of ``S`` into ``k``
    blocks; each crossing edge is counted by both blocks it touches.
    """
    n = g.n
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    if n > RCUT_MAX_N:
        raise ValueError(f"exact r-way cut limited to n <= {RCUT_MAX_N}, got {n}")
    full = (1 << n) - 1
    subsets = np.arange(1 << n, dtype=np.int64)
    boundary = np.zeros(1 << n, dtype=np.int64)
    pairs, mult = g.multiplicities()
    for (u, v), c in zip(pairs.tolist(), mult.tolist()):
        boundary += c * (((subsets >> u) ^ (subsets >> v)) & 1)
    boundary = boundary.tolist()

    inf = float("inf")
    best = [None, {s: boundary[s] for s in range(1, full + 1)}]
    choice = [None, {}]
    memo_sets = {full}
    # sets reachable as remainders: everything; restrict the top level to ``full``
    for k in range(2, r + 1):
        level, pick = {}, {}
        targets = memo_sets if k == r else range(1, full + 1)
        prev = best[k - 1]
        for s in targets:
            low = s & -s
            rest = s ^ low
            top, arg = inf, 0
            b = rest
            while True:
                block = b | low
                if block != s:
                    val = boundary[block] + prev.get(s ^ block, inf)
                    if val < top:
                        top, arg = val, block
                if b == 0:
                    break
                b = (b - 1) & rest
            level[s] = top
            pick[s] = arg
        best.append(level)
        choice.append(pick)

    parts = []
    s = full
    for k in range(r, 1, -1):
        block = choice[k][s]
        parts.append(_mask_side(block, n))
        s ^= block
    parts.append(_mask_side(s, n))
    total = best[r][full]
    return RWayCutResult(r, int(total) // 2, tuple(sorted(parts)))
