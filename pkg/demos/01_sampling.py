"""
Edge sampling through the query oracle
======================================

Sample each edge of a planted-cut graph with probability p, using only
degree and neighbor queries, and watch how the planted cut shrinks.
"""
import numpy as np

from sublinear_mincut import Oracle, PlantedCutParams, gen_planted, min_cut_exact, sample
from sublinear_mincut.sampler import component_count

g = gen_planted(PlantedCutParams(40, 40, 12, seed=1))
print(g, "min cut", min_cut_exact(g).size)

# Degrees are learned once, then every sample costs only neighbor queries.
oracle = Oracle(g)
degrees = np.array([oracle.q_degree(u) for u in range(g.n)])
rng = np.random.default_rng(0)

for p in (1.0, 0.5, 0.2, 0.05):
    h = sample(oracle, degrees, p, rng)
    print(f"p={p:<5} kept {h.m:4d}/{g.m} edges, {h.queries:5d} neighbor queries, "
          f"components={component_count(h)}, sampled min cut={min_cut_exact(h.to_graph()).size}")

print("counters:", oracle.counters.as_dict())
