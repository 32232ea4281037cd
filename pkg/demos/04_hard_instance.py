"""
The lower-bound construction
============================

Two mirrored halves joined by exactly t crossing edges, whose
positions encode the AND of two hidden bit strings.
"""
from sublinear_mincut import gen_hard_instance, min_cut_exact
from sublinear_mincut.generators import hard_instance_blocks, random_hard_params, smallest_hard_params

t = 4
n, m = smallest_hard_params(t)
params = random_hard_params(n, m, t, seed=3)
g = gen_hard_instance(params)
blocks = hard_instance_blocks(n, params.s)
print(f"n={n} m={g.m} t={t} s={params.s}")
print({k: (r.start, r.stop) for k, r in blocks.items()})
print("bits where x and y are both 1:",
      [i for i, (a, b) in enumerate(zip(params.x, params.y)) if a and b])
print("min cut:", min_cut_exact(g).size)
