"""Seeded instance generators: planted cuts, random (multi)graphs, and the
two-bitstring lower-bound construction."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class PlantedCutParams:
    """Two dense sides joined by ``t`` bridge edges.

    ``density`` is the probability of each intra-side pair (1.0 gives a
    clique); every intra-side pair present gets ``multiplicity`` parallel
    copies.  Bridges are spread over ``t // bridge_multiplicity`` distinct
    pairs, each repeated ``bridge_multiplicity`` times.
    """
    n1: int
    n2: int
    t: int
    density: float = 1.0
    multiplicity: int = 1
    bridge_multiplicity: int = 1
    seed: int = 0
    check: bool = True


def _side_edges(k: int, offset: int, density: float, mult: int,
                rng: np.random.Generator) -> np.ndarray:
    iu, ju = np.triu_indices(k, 1)
    if density < 1.0:
        keep = rng.random(iu.size) < density
        iu, ju = iu[keep], ju[keep]
    e = np.stack([iu, ju], axis=1) + offset
    return np.repeat(e, mult, axis=0)


def gen_planted(params: PlantedCutParams) -> Graph:
    """Planted-cut graph; with ``check`` the bridges are verified to be the unique min cut."""
    from .exact import min_cut_exact

    n1, n2, t = params.n1, params.n2, params.t
    if n1 < 1 or n2 < 1:
        raise ValueError("both sides need at least one vertex")
    if not 0.0 < params.density <= 1.0:
        raise ValueError("density must lie in (0, 1]")
    if params.multiplicity < 1 or params.bridge_multiplicity < 1:
        raise ValueError("multiplicities must be positive")
    if t < 0 or t % params.bridge_multiplicity:
        raise ValueError("t must be a non-negative multiple of bridge_multiplicity")
    pairs = t // params.bridge_multiplicity
    if pairs > n1 * n2:
        raise ValueError(f"{pairs} distinct bridges do not fit between sides of {n1} and {n2}")

    rng = np.random.default_rng(params.seed)
    a = _side_edges(n1, 0, params.density, params.multiplicity, rng)
    b = _side_edges(n2, n1, params.density, params.multiplicity, rng)
    chosen = rng.choice(n1 * n2, size=pairs, replace=False)
    bridges = np.stack([chosen // n2, n1 + chosen % n2], axis=1)
    bridges = np.repeat(bridges, params.bridge_multiplicity, axis=0)

    if params.check:
        for k, e, off in ((n1, a, 0), (n2, b, n1)):
            if k < 2:
                continue
            lam = min_cut_exact(Graph(k, e - off)).size
            if t >= lam:
                raise ValueError(f"bridge count t={t} is not below the side's "
                                 f"edge connectivity {lam}")
    return Graph(n1 + n2, np.concatenate([a, b, bridges]).astype(np.int64))


def gen_random_gnm(n: int, m: int, seed=None) -> Graph:
    """Uniform simple graph with exactly ``m`` edges."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"simple graph on {n} vertices holds at most {total} edges, asked {m}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    pick = np.sort(rng.choice(total, size=m, replace=False))
    return Graph(n, np.stack([iu[pick], ju[pick]], axis=1))


def gen_random_multigraph(n: int, m: int, seed=None) -> Graph:
    """``m`` edges, each an independent uniform pair of distinct vertices."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if n < 2 and m > 0:
        raise ValueError("a loopless multigraph with edges needs n >= 2")
    rng = np.random.default_rng(seed)
    u = rng.integers(0, n, size=m) if m else np.empty(0, dtype=np.int64)
    v = (u + rng.integers(1, n, size=m)) % n if m else u
    return Graph(n, np.stack([u, v], axis=1))


@dataclass(frozen=True)
class HardInstanceParams:
    """Parameters of the bitstring-driven hard instance.

    ``x`` and ``y`` are 0/1 sequences of length ``s*s`` whose common ones
    number exactly ``t // 2``; bit ``i*s + j`` controls the pair ``(i, j)``.
    """
    n: int
    m: int
    t: int
    x: tuple = field(default=())
    y: tuple = field(default=())
    strict: bool = True

    @property
    def s(self) -> int:
        return block_size(self.n, self.m, self.t)


def block_size(n: int, m: int, t: int) -> int:
    return t + math.ceil(math.sqrt(t * t + (m - n * t) / 2))


def validate_hard_params(params: HardInstanceParams) -> int:
    n, m, t = params.n, params.m, params.t
    if t <= 0 or t % 2:
        raise ValueError(f"t must be positive and even, got {t}")
    if params.strict:
        if not t <= n - 1:
            raise ValueError(f"violates t <= n-1 (t={t}, n={n})")
        if not 2 * n * t <= m:
            raise ValueError(f"violates 2nt <= m (2nt={2 * n * t}, m={m})")
        if not m <= n * (n - 1) // 2:
            raise ValueError(f"violates m <= C(n,2) (m={m}, C(n,2)={n * (n - 1) // 2})")
    if m - n * t < -2 * t * t:
        raise ValueError("block size is undefined: t^2 + (m - nt)/2 < 0")
    s = params.s
    if not 2 * t <= s:
        raise ValueError(f"violates 2t <= s (t={t}, s={s})")
    if not 4 * s <= n:
        raise ValueError(f"violates 4s <= n (s={s}, n={n})")
    x = np.asarray(params.x, dtype=np.int64)
    y = np.asarray(params.y, dtype=np.int64)
    if x.shape != (s * s,) or y.shape != (s * s,):
        raise ValueError(f"x and y must have length s^2 = {s * s}")
    if not (np.isin(x, (0, 1)).all() and np.isin(y, (0, 1)).all()):
        raise ValueError("x and y must be 0/1 strings")
    if int(np.sum(x * y)) != t // 2:
        raise ValueError(f"violates sum x_i y_i = t/2 (got {int(np.sum(x * y))}, want {t // 2})")
    return s


def hard_instance_blocks(n: int, s: int) -> dict[str, range]:
    """Vertex id ranges of the five blocks."""
    return {
        "S_A": range(0, s),
        "T_A": range(s, 2 * s),
        "S_B": range(2 * s, 3 * s),
        "T_B": range(3 * s, 4 * s),
        "C": range(4 * s, n),
    }


def gen_hard_instance(params: HardInstanceParams) -> Graph:
    """Build ``G(x, y)``.

    Each ``C`` vertex ``k`` attaches to ``S_A`` indices ``(2t*k + j) mod s``
    for ``j < 2t``.  For every pair ``(i, j)``, a common one in ``x`` and
    ``y`` wires ``s_i^A - t_j^B`` and ``s_i^B - t_j^A``; otherwise
    ``s_i^A - t_j^A`` and ``s_i^B - t_j^B``.  Edges are emitted C-first, so
    every ``S_A`` vertex lists its ``C`` neighbors before the others.
    """
    s = validate_hard_params(params)
    n, t = params.n, params.t
    blk = hard_instance_blocks(n, s)
    sa, ta, sb, tb = (blk[k].start for k in ("S_A", "T_A", "S_B", "T_B"))
    edges = []
    for k, c in enumerate(blk["C"]):
        for j in range(2 * t):
            edges.append((c, sa + (2 * t * k + j) % s))
    both = np.asarray(params.x, dtype=np.int64) * np.asarray(params.y, dtype=np.int64)
    for i in range(s):
        for j in range(s):
            if both[i * s + j]:
                edges.append((sa + i, tb + j))
                edges.append((sb + i, ta + j))
            else:
                edges.append((sa + i, ta + j))
                edges.append((sb + i, tb + j))
    return Graph(n, edges)


def random_hard_params(n: int, m: int, t: int, seed=None, density: float = 0.5,
                       strict: bool = True) -> HardInstanceParams:
    """Draw ``x, y`` with exactly ``t/2`` common ones (all other bits random)."""
    s = block_size(n, m, t)
    N = s * s
    rng = np.random.default_rng(seed)
    x = (rng.random(N) < density).astype(np.int64)
    y = (rng.random(N) < density).astype(np.int64)
    common = rng.choice(N, size=t // 2, replace=False)
    # clear all other coincidences, then plant the chosen ones
    clash = (x & y).astype(bool)
    clash[common] = False
    y[clash] = 0
    x[common] = 1
    y[common] = 1
    return HardInstanceParams(n, m, t, tuple(x.tolist()), tuple(y.tolist()), strict)


def smallest_hard_params(t: int) -> tuple[int, int]:
    """Smallest ``n`` (with ``m = 2nt``) satisfying every constraint."""
    n = t + 1
    while True:
        m = 2 * n * t
        if m <= n * (n - 1) // 2:
            s = block_size(n, m, t)
            if 2 * t <= s and 4 * s <= n:
                return n, m
        n += 1
