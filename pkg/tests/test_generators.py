import networkx as nx
import numpy as np
import pytest

from sublinear_mincut.exact import min_cut_exact, min_cut_sides
from sublinear_mincut.generators import (HardInstanceParams, PlantedCutParams, block_size,
                                         gen_hard_instance, gen_planted, gen_random_gnm,
                                         gen_random_multigraph, hard_instance_blocks,
                                         random_hard_params, smallest_hard_params)
from sublinear_mincut.graph import format_edgelist


def test_smallest_admissible_t4():
    # m = 2nt, s = 4 + ceil(sqrt(16 + 2n)) and 4s <= n first holds at n = 64
    assert smallest_hard_params(4) == (64, 512)
    assert block_size(64, 512, 4) == 16


def _parts(params):
    return hard_instance_blocks(params.n, params.s)


def _cross(g, params):
    blk = _parts(params)
    b_side = set(blk["S_B"]) | set(blk["T_B"])
    return [tuple(e) for e in g.edges.tolist() if (e[0] in b_side) != (e[1] in b_side)]


@pytest.mark.parametrize("n,m,t", [(64, 512, 4), (80, 640, 4), (100, 1200, 6)])
def test_hard_instance_properties(n, m, t):
    params = random_hard_params(n, m, t, seed=3)
    g = gen_hard_instance(params)
    blk = _parts(params)
    s = params.s
    d = g.degrees
    # Property 1
    assert all(d[c] == 2 * t for c in blk["C"])
    c_set = set(blk["C"])
    for v in range(4 * s):
        assert sum(1 for w in g.neighbors(v) if w not in c_set) == s
    # Property 2
    assert len(_cross(g, params)) == t
    # Property 5
    both = np.array(params.x) & np.array(params.y)
    sa, ta, sb, tb = (blk[k].start for k in ("S_A", "T_A", "S_B", "T_B"))
    cross = set(_cross(g, params))
    for i in range(s):
        for j in range(s):
            present = (sa + i, tb + j) in cross
            assert present == bool(both[i * s + j])
            assert ((sb + i, ta + j) in cross) == present
    assert min_cut_exact(g).size == t


def test_degrees_independent_of_bitstrings():
    a = gen_hard_instance(random_hard_params(80, 640, 4, seed=1))
    b = gen_hard_instance(random_hard_params(80, 640, 4, seed=2))
    assert not np.array_equal(a.edges, b.edges)
    assert np.array_equal(a.degrees, b.degrees)
    # neighbors inside C are fixed too
    blk = hard_instance_blocks(80, block_size(80, 640, 4))
    c = set(blk["C"])
    for v in range(80):
        assert [w for w in a.neighbors(v) if w in c] == [w for w in b.neighbors(v) if w in c]


def test_edge_disjoint_paths_spot_check():
    params = random_hard_params(80, 640, 4, seed=5)
    g = gen_hard_instance(params)
    h = nx.Graph(g.edges.tolist())
    blk = _parts(params)
    a_side = list(blk["S_A"]) + list(blk["T_A"]) + list(blk["C"])
    b_side = list(blk["S_B"]) + list(blk["T_B"])
    rng = np.random.default_rng(0)
    for side in (a_side, b_side):
        for _ in range(8):
            u, v = rng.choice(side, size=2, replace=False)
            assert nx.edge_connectivity(h, int(u), int(v)) >= 3 * params.t // 2


def test_relaxed_instance_unique_min_cut_by_brute_force():
    # t=2, s=5, n=20: below the 2nt <= m bound but small enough to enumerate
    params = random_hard_params(20, 50, 2, seed=0, strict=False)
    assert params.s == 5
    g = gen_hard_instance(params)
    sides = min_cut_sides(g)
    assert len(sides) == 1
    assert set(sides[0]) == set(range(10))  # S_A and T_A; C is empty
    assert min_cut_exact(g).size == 2


@pytest.mark.parametrize("kw,msg", [
    (dict(n=64, m=512, t=3), "even"),
    (dict(n=64, m=500, t=4), "2nt <= m"),
    (dict(n=70, m=2400, t=4), "4s <= n"),
    (dict(n=10, m=200, t=4), r"C\(n,2\)"),
])
def test_hard_instance_rejects(kw, msg):
    with pytest.raises(ValueError, match=msg):
        gen_hard_instance(HardInstanceParams(**kw, x=(), y=()))


def test_hard_instance_intersection_checked():
    params = random_hard_params(64, 512, 4, seed=1)
    y = list(params.y)
    on = [i for i, (a, b) in enumerate(zip(params.x, y)) if a and b]
    y[on[0]] = 0
    with pytest.raises(ValueError, match="t/2"):
        gen_hard_instance(HardInstanceParams(64, 512, 4, params.x, tuple(y)))


def test_planted_examples():
    g = gen_planted(PlantedCutParams(50, 50, 40, seed=4))
    assert min_cut_exact(g).size == 40
    assert min_cut_exact(gen_planted(PlantedCutParams(5, 5, 1))).size == 1
    z = gen_planted(PlantedCutParams(5, 5, 0))
    assert min_cut_exact(z).size == 0


def test_planted_rejects_infeasible():
    with pytest.raises(ValueError, match="edge connectivity"):
        gen_planted(PlantedCutParams(20, 20, 40))
    with pytest.raises(ValueError):
        gen_planted(PlantedCutParams(2, 2, 5))


def test_planted_parallel_bridge():
    g = gen_planted(PlantedCutParams(6, 6, 2, bridge_multiplicity=2, seed=1))
    res = min_cut_exact(g)
    assert res.size == 2 and len(res.side) == 6


def test_random_generators():
    k5 = gen_random_gnm(5, 10, seed=0)
    assert sorted(map(tuple, np.sort(k5.edges, axis=1).tolist())) == \
        [(a, b) for a in range(5) for b in range(a + 1, 5)]
    tri = gen_random_multigraph(2, 3, seed=0)
    assert tri.m == 3 and min_cut_exact(tri).size == 3
    with pytest.raises(ValueError):
        gen_random_gnm(4, 7)


def test_generators_deterministic():
    for make in (lambda: gen_random_gnm(30, 100, 9), lambda: gen_random_multigraph(30, 100, 9),
                 lambda: gen_planted(PlantedCutParams(10, 12, 3, density=0.7, seed=9, check=False)),
                 lambda: gen_hard_instance(random_hard_params(64, 512, 4, seed=9))):
        assert format_edgelist(make()) == format_edgelist(make())
