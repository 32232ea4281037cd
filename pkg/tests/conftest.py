import itertools

import numpy as np
import pytest

from sublinear_mincut.generators import (PlantedCutParams, gen_planted, gen_random_gnm,
                                         gen_random_multigraph)
from sublinear_mincut.graph import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def two_cliques(k, bridges):
    e = list(itertools.combinations(range(k), 2))
    e += [(a + k, b + k) for a, b in itertools.combinations(range(k), 2)]
    return Graph(2 * k, e + list(bridges))


TRIANGLE = Graph(3, [(0, 1), (1, 2), (2, 0)])
TWO_EDGES = Graph(4, [(0, 1), (2, 3)])
DOUBLED = Graph(2, [(0, 1), (0, 1)])
STAR4 = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def small_corpus(count=200, seed=12345):
    """Mixed corpus of graphs with 2 <= n <= 12."""
    rng = np.random.default_rng(seed)
    graphs = [path(4), cycle(5), clique(4), clique(6), TRIANGLE, DOUBLED, STAR4, TWO_EDGES,
              two_cliques(5, [(0, 5), (1, 6)]), cycle(12), path(12)]
    graphs.append(gen_planted(PlantedCutParams(5, 6, 3, seed=1)))
    graphs.append(gen_planted(PlantedCutParams(4, 4, 4, multiplicity=3, seed=2)))
    while len(graphs) < count:
        n = int(rng.integers(2, 13))
        kind = len(graphs) % 3
        s = int(rng.integers(1 << 30))
        if kind == 0:
            m = int(rng.integers(0, n * (n - 1) // 2 + 1))
            graphs.append(gen_random_gnm(n, m, s))
        elif kind == 1:
            graphs.append(gen_random_multigraph(n, int(rng.integers(0, 3 * n)), s))
        else:
            a = int(rng.integers(1, n))
            graphs.append(gen_planted(PlantedCutParams(a, n - a, int(rng.integers(0, 3)),
                                                       density=0.8, seed=s, check=False)))
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()
