"""
Exact cuts: Stoer-Wagner against enumeration
============================================
"""
from sublinear_mincut import Graph, min_cut_exact
from sublinear_mincut.exact import count_cuts_below, min_cut_brute, min_rcut_brute

k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
print("K4:", min_cut_exact(k4), min_cut_brute(k4))

c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
# Every pair of cycle edges is a minimum cut, so there are C(5, 2) of them.
print("C5 cuts of size <= 2:", count_cuts_below(c5, 1))

p8 = Graph(8, [(i, i + 1) for i in range(7)])
print("P8 3-way cut:", min_rcut_brute(p8, 3))
