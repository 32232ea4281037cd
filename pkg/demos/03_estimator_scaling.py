"""
Estimating the min cut, and how query cost falls as the cut grows
=================================================================

A fixed family with n = 200 and about 59400 edges; only the planted
cut t changes.  Larger cuts let the estimator sample more sparsely.
"""
import numpy as np

from sublinear_mincut import EstimatorConfig, Oracle, PlantedCutParams, estimate_mincut, gen_planted

for t in (10, 20, 40, 80):
    g = gen_planted(PlantedCutParams(100, 100, t, multiplicity=6, seed=70 + t))
    reports = [estimate_mincut(Oracle(g), EstimatorConfig.scaled(0.5, seed=s)) for s in range(5)]
    values = [r.value for r in reports]
    queries = np.mean([r.queries["neighbor"] for r in reports])
    print(f"t={t:3d} m={g.m} estimates={np.round(values, 1)} mean neighbor queries={queries:.0f}")

print(reports[-1].to_json())
