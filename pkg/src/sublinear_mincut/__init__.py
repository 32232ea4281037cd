"""Sublinear-query estimation of global minimum cut size.

The estimator sees the graph only through an :class:`Oracle` answering
Degree and Neighbor queries; exact solvers and instance generators provide
ground truth.
"""
from .estimator import (EstimateReport, EstimatorConfig, GuessVerdict, Mode, Outcome,
                        UnsupportedScale, Verdict, estimate_mincut, estimate_rcut,
                        verify_guess)
from .exact import (CutResult, RWayCutResult, count_cuts_below, min_cut_brute,
                    min_cut_exact, min_rcut_brute)
from .generators import (HardInstanceParams, PlantedCutParams, gen_hard_instance,
                         gen_planted, gen_random_gnm, gen_random_multigraph)
from .graph import Graph, GraphFormatError, degree_sequence, load_graph, neighbor_at, save_graph
from .oracle import Oracle, QueryCounters
from .sampler import SampledSubgraph, SampleError, is_connected, sample, slot_probability

__version__ = "0.1.0"
