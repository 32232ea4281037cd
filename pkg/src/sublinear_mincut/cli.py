"""Command-line front end.

    sublinear-mincut estimate GRAPH [--eps E --seed S --mode paper|scaled ...]
    sublinear-mincut exact GRAPH [--brute] [--write-truth]
    sublinear-mincut rcut GRAPH --r R [--estimate]
    sublinear-mincut gen {hard,planted,gnm,multi} ... [--out PATH]
    sublinear-mincut sample GRAPH --p P [--seed S] [--out PATH]
    sublinear-mincut bench CORPUS_DIR [--runs K] [--format csv|json]

Reports go to stdout, diagnostics to stderr.  Exit status: 0 success,
1 usage or I/O error, 2 when the estimator returns Fail.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import estimator as est
from .exact import min_cut_brute, min_cut_exact, min_rcut_brute
from .generators import (PlantedCutParams, gen_hard_instance, gen_planted,
                         gen_random_gnm, gen_random_multigraph, random_hard_params)
from .graph import GraphFormatError, format_edgelist, load_graph
from .oracle import Oracle
from .sampler import sample, slot_probability

log = logging.getLogger("sublinear_mincut")

BENCH_COLUMNS = ["n", "m", "t_true", "eps", "seed", "estimate", "rel_err",
                 "degree_q", "neighbor_q", "ms"]
EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _probability(text):
    p = float(text)
    if not 0.0 < p <= 1.0:
        raise argparse.ArgumentTypeError("must lie in (0, 1]")
    return p


def _add_config_flags(p):
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--mode", choices=["paper", "scaled"], default="paper")
    p.add_argument("--c-p", type=float, default=None)
    p.add_argument("--c-kappa", type=float, default=None)
    p.add_argument("--c-gamma", type=float, default=None)
    p.add_argument("--log-base", choices=["e", "2"], default="e")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sublinear-mincut", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("estimate", help="estimate the global minimum cut")
    p.add_argument("graph")
    _add_config_flags(p)
    p.add_argument("--retries", type=int, default=0,
                   help="rerun with fresh seeds when the estimator fails")
    p.add_argument("--out")

    p = sub.add_parser("exact", help="exact minimum cut")
    p.add_argument("graph")
    p.add_argument("--brute", action="store_true")
    p.add_argument("--write-truth", action="store_true",
                   help="also write the <name>.truth sidecar")
    p.add_argument("--out")

    p = sub.add_parser("rcut", help="exact (or estimated) minimum r-way cut")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--estimate", action="store_true")
    _add_config_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=["hard", "planted", "gnm", "multi"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--multiplicity", type=int, default=1)
    p.add_argument("--bridge-multiplicity", type=int, default=1)
    p.add_argument("--relaxed", action="store_true",
                   help="hard instance: skip the n, m, t admissibility bounds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("sample", help="draw one edge sample")
    p.add_argument("graph")
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")

    p = sub.add_parser("bench", help="run the estimator over a corpus")
    p.add_argument("corpus")
    _add_config_flags(p)
    p.add_argument("--runs", type=int, default=1, help="seeds per graph: seed, seed+1, ...")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out")
    return parser


def config_from_args(args, seed=None) -> est.EstimatorConfig:
    seed = args.seed if seed is None else seed
    if args.mode == "paper":
        if any(v is not None for v in (args.c_p, args.c_kappa, args.c_gamma)):
            raise UsageError("--c-p/--c-kappa/--c-gamma require --mode scaled")
        return est.EstimatorConfig.paper(args.eps, seed, args.log_base)
    c_p, c_k, c_g = est.SCALED_CONSTANTS
    return est.EstimatorConfig.scaled(
        args.eps, seed,
        c_p if args.c_p is None else args.c_p,
        c_k if args.c_kappa is None else args.c_kappa,
        c_g if args.c_gamma is None else args.c_gamma,
        args.log_base)


def _emit(text: str, out, stdout) -> None:
    if out:
        Path(out).write_text(text)
    else:
        stdout.write(text)


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().generate_state(1, np.uint64)[0] >> 1)


def cmd_estimate(args, stdout) -> int:
    cfg = config_from_args(args, seed=args.seed if args.seed is not None else _fresh_seed())
    g = load_graph(args.graph)
    report = None
    for attempt in range(args.retries + 1):
        if attempt:
            log.warning("estimator failed with seed %d; retrying", cfg.seed)
            cfg = replace(cfg, seed=cfg.seed + 1)
        report = est.estimate_mincut(Oracle(g), cfg)
        if report.outcome is not est.Outcome.FAIL:
            break
    _emit(report.to_json() + "\n", args.out, stdout)
    return EXIT_FAIL if report.outcome is est.Outcome.FAIL else EXIT_OK


def truth_path(graph_path) -> Path:
    return Path(graph_path).with_suffix(".truth")


def cmd_exact(args, stdout) -> int:
    g = load_graph(args.graph)
    res = min_cut_brute(g) if args.brute else min_cut_exact(g)
    if args.write_truth:
        truth_path(args.graph).write_text(f"{res.size}\n")
    _emit(json.dumps({"mincut": res.size}) + "\n", args.out, stdout)
    return EXIT_OK


def cmd_rcut(args, stdout) -> int:
    cfg = config_from_args(args)
    g = load_graph(args.graph)
    if args.estimate:
        report = est.estimate_rcut(Oracle(g), args.r, cfg)
        _emit(report.to_json() + "\n", args.out, stdout)
        return EXIT_FAIL if report.outcome is est.Outcome.FAIL else EXIT_OK
    res = min_rcut_brute(g, args.r)
    _emit(json.dumps({"r": res.r, "rcut": res.size, "parts": [list(p) for p in res.parts]}) + "\n",
          args.out, stdout)
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"gen {args.kind} requires {', '.join(missing)}")


def cmd_gen(args, stdout) -> int:
    if args.kind == "hard":
        _need(args, "n", "m", "t")
        params = random_hard_params(args.n, args.m, args.t, seed=args.seed, strict=not args.relaxed)
        g = gen_hard_instance(params)
        comment = {"kind": "hard", "n": args.n, "m_requested": args.m, "m": g.m, "t": args.t,
                   "s": params.s, "seed": args.seed}
    elif args.kind == "planted":
        _need(args, "n1", "n2", "t")
        g = gen_planted(PlantedCutParams(args.n1, args.n2, args.t, args.density,
                                         args.multiplicity, args.bridge_multiplicity, args.seed))
        comment = {"kind": "planted", "n1": args.n1, "n2": args.n2, "t": args.t, "seed": args.seed}
    else:
        _need(args, "n", "m")
        fn = gen_random_gnm if args.kind == "gnm" else gen_random_multigraph
        g = fn(args.n, args.m, args.seed)
        comment = {"kind": args.kind, "n": args.n, "m": args.m, "seed": args.seed}
    _emit(format_edgelist(g, [json.dumps(comment)]), args.out, stdout)
    return EXIT_OK


def cmd_sample(args, stdout) -> int:
    seed = args.seed if args.seed is not None else _fresh_seed()
    g = load_graph(args.graph)
    oracle = Oracle(g)
    h = sample(oracle, np.array([oracle.q_degree(u) for u in range(g.n)]), args.p,
               np.random.default_rng(seed))
    header = {"p": args.p, "q": slot_probability(args.p), "neighbor_queries": h.queries,
              "seed": seed}
    _emit(format_edgelist(h.to_graph(), [json.dumps(header)]), args.out, stdout)
    return EXIT_OK


def bench_rows(corpus, args) -> list[dict]:
    rows = []
    base = args.seed if args.seed is not None else 0
    graphs = [f for f in sorted(Path(corpus).iterdir())
              if f.is_file() and f.suffix != ".truth" and not f.name.startswith(".")]
    for path in graphs:
        tp = truth_path(path)
        if not tp.exists():
            log.warning("skipping %s: no %s sidecar", path.name, tp.name)
            continue
        t_true = int(tp.read_text().split()[0])
        g = load_graph(path)
        for k in range(args.runs):
            cfg = config_from_args(args, seed=base + k)
            rep = est.estimate_mincut(Oracle(g), cfg)
            if rep.outcome is est.Outcome.FAIL:
                value = None
            else:
                value = rep.value if rep.outcome is est.Outcome.ESTIMATE else 0.0
            if value is None:
                rel = None
            elif t_true:
                rel = abs(value - t_true) / t_true
            else:
                rel = 0.0 if value == 0 else math.inf
            rows.append({"n": g.n, "m": g.m, "t_true": t_true, "eps": cfg.eps, "seed": cfg.seed,
                         "estimate": value, "rel_err": rel, "degree_q": rep.queries["degree"],
                         "neighbor_q": rep.queries["neighbor"], "ms": round(rep.elapsed_ms, 3)})
    return rows


def cmd_bench(args, stdout) -> int:
    if not Path(args.corpus).is_dir():
        raise FileNotFoundError(f"corpus directory not found: {args.corpus}")
    rows = bench_rows(args.corpus, args)
    if args.format == "json":
        text = json.dumps(rows) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: ("" if v is None else v) for k, v in row.items()})
        text = buf.getvalue()
    _emit(text, args.out, stdout)
    return EXIT_OK


COMMANDS = {"estimate": cmd_estimate, "exact": cmd_exact, "rcut": cmd_rcut,
            "gen": cmd_gen, "sample": cmd_sample, "bench": cmd_bench}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s",
                        stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except (OSError, GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
