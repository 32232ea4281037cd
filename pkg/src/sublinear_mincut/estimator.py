"""Minimum-cut size estimation from Degree and Neighbor queries.

A guess ``t_hat`` is checked by drawing ``gamma`` edge samples at rate
``p = min(c_p * log n / (eps^2 * t_hat), 1)``: mostly-disconnected samples
mean the guess is far too high, all-connected samples mean it is low enough
that ``|Cut(H)| / p`` is already a good estimate.  The estimator halves the
guess from ``n / 2`` until it stops being rejected, shrinks it by ``kappa``
and verifies once more.
"""
from __future__ import annotations

import enum
import json
import math
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

import numpy as np

from .exact import RCUT_MAX_N, min_cut_exact, min_rcut_brute
from .oracle import Oracle
from .sampler import component_count, sample

PAPER_CONSTANTS = (200.0, 2000.0, 100.0)
# Desk-scale pack: keeps p < 1 on graphs with a few hundred vertices.
SCALED_CONSTANTS = (0.05, 0.5, 2.0)


class Mode(str, enum.Enum):
    PAPER = "paper"
    SCALED = "scaled"


@dataclass(frozen=True)
class EstimatorConfig:
    eps: float = 0.25
    c_p: float = PAPER_CONSTANTS[0]
    c_kappa: float = PAPER_CONSTANTS[1]
    c_gamma: float = PAPER_CONSTANTS[2]
    log_base: str = "e"
    seed: Optional[int] = None
    mode: Mode = Mode.PAPER

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if not 0.0 < self.eps < 1.0:
            raise ValueError(f"eps must lie in (0, 1), got {self.eps}")
        if min(self.c_p, self.c_kappa, self.c_gamma) <= 0:
            raise ValueError("constants must be positive")
        if self.log_base not in ("e", "2"):
            raise ValueError("log_base must be 'e' or '2'")
        if self.mode is Mode.PAPER and (self.c_p, self.c_kappa, self.c_gamma) != PAPER_CONSTANTS:
            raise ValueError("paper mode fixes (c_p, c_kappa, c_gamma) = (200, 2000, 100)")

    @classmethod
    def paper(cls, eps: float = 0.25, seed=None, log_base: str = "e") -> "EstimatorConfig":
        return cls(eps, *PAPER_CONSTANTS, log_base=log_base, seed=seed, mode=Mode.PAPER)

    @classmethod
    def scaled(cls, eps: float = 0.25, seed=None, c_p: float = SCALED_CONSTANTS[0],
               c_kappa: float = SCALED_CONSTANTS[1], c_gamma: float = SCALED_CONSTANTS[2],
               log_base: str = "e") -> "EstimatorConfig":
        return cls(eps, c_p, c_kappa, c_gamma, log_base=log_base, seed=seed, mode=Mode.SCALED)

    def log(self, n: int) -> float:
        return math.log(n) if self.log_base == "e" else math.log2(n)

    def rate(self, n: int, t_hat, r: int = 2) -> float:
        """Edge sampling probability for guess ``t_hat`` (factor ``r - 1`` for r-way cuts)."""
        return min(self.c_p * (r - 1) * self.log(n) / (self.eps ** 2 * float(t_hat)), 1.0)

    def gamma(self, n: int) -> int:
        return max(1, math.ceil(self.c_gamma * self.log(n)))

    def kappa(self, n: int) -> float:
        return self.c_kappa * self.log(n) / self.eps ** 2


class Verdict(str, enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    FAIL = "fail"


@dataclass(frozen=True)
class GuessVerdict:
    kind: Verdict
    estimate: Optional[float] = None
    t_hat: float = 0.0
    p: float = 1.0
    gamma: int = 0
    disconnected: int = 0


class Outcome(str, enum.Enum):
    ESTIMATE = "estimate"
    DISCONNECTED = "disconnected"
    FAIL = "fail"


@dataclass
class EstimateReport:
    outcome: Outcome
    value: Optional[float]
    queries: dict
    guesses: list = field(default_factory=list)  # [(t_hat, GuessVerdict)]
    seed: Optional[int] = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "value": self.value,
            "queries": dict(self.queries),
            "guesses": [[float(t), v.kind.value] for t, v in self.guesses],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


class UnsupportedScale(ValueError):
    """The exact r-way cut needed in the accept branch is too large."""


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def verify_guess(oracle: Oracle, degrees, t_hat, cfg: EstimatorConfig, rng=None,
                 r: int = 2) -> GuessVerdict:
    """Accept (with an estimate), Reject, or Fail the guess ``t_hat``.

    A sample counts as disconnected when it has at least ``r`` components.
    Each of the ``gamma`` samples draws from its own child stream of ``rng``.
    """
    d = np.asarray(degrees, dtype=np.int64)
    n = oracle.n
    m2 = int(d.sum())
    if not 1 <= t_hat <= Fraction(n, 2):
        raise ValueError(f"guess must satisfy 1 <= t_hat <= n/2, got {float(t_hat)}")
    if m2 // 2 < n - r + 1:
        raise ValueError(f"need m >= n - {r - 1}, got m={m2 // 2}, n={n}")

    rng = _as_generator(rng)
    p = cfg.rate(n, t_hat, r)
    gamma = cfg.gamma(n)
    first = None
    disconnected = 0
    for child in rng.spawn(gamma):
        h = sample(oracle, d, p, child)
        if component_count(h) >= r:
            disconnected += 1
        elif first is None:
            first = h
    info = dict(t_hat=float(t_hat), p=p, gamma=gamma, disconnected=disconnected)
    if disconnected >= gamma / 2:
        return GuessVerdict(Verdict.REJECT, **info)
    if disconnected:
        return GuessVerdict(Verdict.FAIL, **info)
    hg = first.to_graph()
    size = min_cut_exact(hg).size if r == 2 else min_rcut_brute(hg, r).size
    return GuessVerdict(Verdict.ACCEPT, size / p, **info)


def estimate_rcut(oracle: Oracle, r: int, cfg: EstimatorConfig) -> EstimateReport:
    """Estimate the minimum r-way cut; ``r = 2`` is the global minimum cut."""
    n = oracle.n
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    if r > 2 and n > RCUT_MAX_N:
        raise UnsupportedScale(f"exact {r}-way cut is limited to n <= {RCUT_MAX_N}, got n={n}")

    start = time.perf_counter()
    seed = cfg.seed
    if seed is None:
        seed = int(np.random.SeedSequence().generate_state(1, np.uint64)[0] >> 1)
    rng = np.random.default_rng(seed)
    guesses = []

    def report(outcome, value):
        return EstimateReport(outcome, value, oracle.counters.as_dict(), guesses, seed,
                              (time.perf_counter() - start) * 1e3)

    d = np.array([oracle.q_degree(u) for u in range(n)], dtype=np.int64)
    if np.count_nonzero(d == 0) >= r - 1:
        return report(Outcome.ESTIMATE, 0.0)
    m = int(d.sum()) // 2
    if n - m >= r:
        return report(Outcome.ESTIMATE, 0.0)

    kappa = cfg.kappa(n)
    t_hat = Fraction(n, 2)
    while t_hat >= 1:
        v = verify_guess(oracle, d, t_hat, cfg, rng, r)
        guesses.append((t_hat, v))
        if v.kind is Verdict.REJECT:
            t_hat /= 2
            continue
        t_low = max(float(t_hat) / kappa, 1.0)
        v = verify_guess(oracle, d, t_low, cfg, rng, r)
        guesses.append((t_low, v))
        if v.kind is Verdict.ACCEPT:
            return report(Outcome.ESTIMATE, v.estimate)
        return report(Outcome.FAIL, None)
    return report(Outcome.DISCONNECTED, None)


def estimate_mincut(oracle: Oracle, cfg: EstimatorConfig) -> EstimateReport:
    """Estimate the global minimum cut of the oracle's graph.

    Only Degree and Neighbor queries are issued: ``n`` of the former, then one
    Neighbor query per sampled slot.
    """
    return estimate_rcut(oracle, 2, cfg)
