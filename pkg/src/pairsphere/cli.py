"""Command-line interface: stats, detect, sweep, heatmap, generate, compare.

Angle-valued inputs and outputs (latitudes, grids, distances) are in units of
pi.  Exit codes: 0 success, 2 usage error, 3 data error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import clusterings as cl
from . import experiments as ex
from . import generators, graphs, queries
from .louvain import LouvainConfig

USAGE_ERROR = 2
DATA_ERROR = 3

_FAMILY_FLAGS = {
    "er-modularity": "er_modularity",
    "cm-modularity": "cm_modularity",
    "edge-meridian": "edge_meridian",
    "cm-meridian": "cm_meridian",
    "wedge-meridian": "wedge_meridian",
    "combo": "linear_combo",
}


def _parse_grid(text: str, name: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"{name} must be start:stop:points, got {text!r}")
    start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    if points < 1:
        raise ValueError(f"{name}: need at least one point")
    return np.linspace(start, stop, points)


def _parse_seeds(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",") if tok]


def _add_input_args(p: argparse.ArgumentParser, truth_required: bool) -> None:
    p.add_argument("--graph", help="edge list file")
    p.add_argument("--dataset", help="registered dataset name")
    p.add_argument("--manifest", help="dataset manifest (default: bundled)")
    p.add_argument("--truth", help="ground-truth clustering file",
                   required=False)
    p.set_defaults(truth_required=truth_required)


def _add_query_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--query", choices=sorted(_FAMILY_FLAGS), required=True)
    p.add_argument("--gamma", type=float, default=1.0,
                   help="resolution parameter")
    p.add_argument("--latitude", type=float,
                   help="target latitude in units of pi")
    p.add_argument("--c1", type=float, default=1.0,
                   help="uniform null-model weight (combo)")
    p.add_argument("--c2", type=float, default=0.0,
                   help="degree-product null-model weight (combo)")


def _add_louvain_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", choices=("ascending", "shuffle"),
                   default="ascending")
    p.add_argument("--seed", type=int, default=0,
                   help="shuffle seed for --order shuffle")
    p.add_argument("--no-aggregation", action="store_true")
    p.add_argument("--max-passes", type=int, default=100)


def _load_inputs(args, parser):
    if bool(args.graph) == bool(args.dataset):
        parser.error("exactly one of --graph or --dataset is required")
    if args.dataset:
        try:
            graph, truth = graphs.load_dataset(args.dataset, args.manifest)
        except (ValueError, OSError) as err:
            raise _Data(str(err))
        return graph, truth
    try:
        graph = graphs.load_edge_list(args.graph)
        truth = None
        if args.truth:
            truth = cl.read_clustering(args.truth, graph.labels)
    except (ValueError, OSError) as err:
        raise _Data(str(err))
    if args.truth_required and truth is None:
        parser.error("this command requires --truth (or --dataset)")
    return graph, truth


class _Data(Exception):
    pass


def _query_spec(args, parser) -> queries.QuerySpec:
    family = _FAMILY_FLAGS[args.query]
    if family in queries.MERIDIAN_FAMILIES and args.latitude is None:
        parser.error(f"--query {args.query} requires --latitude")
    lat = None if args.latitude is None else args.latitude * math.pi
    try:
        return queries.QuerySpec(family, gamma=args.gamma, lat=lat,
                                 c1=args.c1, c2=args.c2)
    except ValueError as err:
        parser.error(str(err))


def _config(args) -> LouvainConfig:
    return LouvainConfig(vertex_order=args.order, seed=args.seed,
                         max_passes=args.max_passes,
                         aggregate=not args.no_aggregation)


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_stats(args, parser) -> int:
    graph, truth = _load_inputs(args, parser)
    out = ex.stats_to_json(ex.run_stats(graph, truth))
    if args.dataset:
        out["dataset"] = args.dataset
    out["load_report"] = {
        "self_loops_dropped": graph.load_report.self_loops_dropped,
        "duplicates_dropped": graph.load_report.duplicates_dropped,
    }
    _emit(out)
    return 0


def cmd_detect(args, parser) -> int:
    graph, truth = _load_inputs(args, parser)
    spec = _query_spec(args, parser)
    try:
        clustering, record = ex.run_detect(graph, spec, _config(args), truth)
    except ValueError as err:
        raise _Data(str(err))
    if args.out:
        cl.write_clustering(args.out, clustering, graph.labels)
    out = {"schema_version": ex.SCHEMA_VERSION, "query": spec.to_json(),
           "clusters": clustering.num_clusters,
           "record": ex.record_to_json(record)}
    if args.out:
        out["clustering_file"] = args.out
    _emit(out)
    return 0


def cmd_sweep(args, parser) -> int:
    graph, truth = _load_inputs(args, parser)
    family = _FAMILY_FLAGS[args.query]
    lats = _parse_grid(args.lat_grid, "--lat-grid") * math.pi
    if lats.min() < 0 or lats.max() > math.pi:
        parser.error("--lat-grid must stay within [0, 1] (units of pi)")
    seeds = _parse_seeds(args.seeds) if args.seeds else None
    try:
        records, summary = ex.run_sweep(
            graph, truth, family, lats, seeds=seeds, config=_config(args),
            gamma=args.gamma, c1=args.c1, c2=args.c2, jobs=args.jobs)
    except ValueError as err:
        raise _Data(str(err))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(ex.sweep_csv_lines(records)) + "\n")
    summary["query"] = {"family": family, "gamma": args.gamma,
                        "c1": args.c1, "c2": args.c2}
    summary["csv"] = args.out
    _emit(summary)
    return 0


def cmd_heatmap(args, parser) -> int:
    graph, truth = _load_inputs(args, parser)
    gammas = _parse_grid(args.gamma_grid, "--gamma-grid")
    lats = _parse_grid(args.lat_grid, "--lat-grid") * math.pi
    seeds = _parse_seeds(args.seeds) if args.seeds else None
    try:
        records = ex.run_heatmap(graph, truth, gammas, lats, seeds=seeds,
                                 config=_config(args))
    except ValueError as err:
        raise _Data(str(err))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(ex.heatmap_csv_lines(records)) + "\n")
    _emit({"schema_version": ex.SCHEMA_VERSION, "csv": args.out,
           "gamma_grid": args.gamma_grid, "lat_grid": args.lat_grid,
           "seeds": seeds, "cells": len(records)})
    return 0


def cmd_generate(args, parser) -> int:
    if args.model == "ring":
        if args.k is None or args.s is None:
            parser.error("ring model requires --k and --s")
        try:
            spec = generators.RingOfCliquesSpec(args.k, args.s)
            graph, truth = generators.ring_of_cliques(spec)
        except ValueError as err:
            parser.error(str(err))
    else:
        required = (args.communities, args.size, args.deg_in, args.deg_out)
        if any(v is None for v in required):
            parser.error("ppm model requires --communities --size "
                         "--deg-in --deg-out")
        try:
            pspec = generators.PPMSpec(args.communities, args.size,
                                       args.deg_in, args.deg_out, args.seed)
            graph, truth = generators.planted_partition(pspec)
        except ValueError as err:
            parser.error(str(err))
    edges_path = f"{args.out_prefix}.edges"
    truth_path = f"{args.out_prefix}.truth"
    graphs.write_edge_list(edges_path, graph)
    cl.write_clustering(truth_path, truth, graph.labels)
    _emit({"schema_version": ex.SCHEMA_VERSION, "n": graph.n, "m": graph.m,
           "communities": truth.num_clusters,
           "edges_file": edges_path, "truth_file": truth_path})
    return 0


def _read_assignment(path) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}: line {lineno}: expected 'node cluster'")
            if parts[0] in out:
                raise ValueError(f"{path}: line {lineno}: duplicate node")
            out[parts[0]] = parts[1]
    if not out:
        raise ValueError(f"{path}: empty clustering file")
    return out


def cmd_compare(args, parser) -> int:
    try:
        first = _read_assignment(args.first)
        second = _read_assignment(args.second)
        if set(first) != set(second):
            raise ValueError("clustering files cover different node sets")
    except (ValueError, OSError) as err:
        raise _Data(str(err))
    nodes = sorted(first)
    a = cl.Clustering(first[v] for v in nodes)
    b = cl.Clustering(second[v] for v in nodes)
    counts = cl.pair_counts(a, b)
    out = {"schema_version": ex.SCHEMA_VERSION, "n": a.n,
           "pairs": counts.n_pairs, "m_first": counts.m_t,
           "m_second": counts.m_c, "m_both": counts.m_tc,
           "rand": round(cl.rand_index(counts), 6),
           "hubert": round(cl.hubert_index(counts), 6),
           "dcc": round(cl.correlation_distance(a, b) / math.pi, 6)}
    try:
        out["jaccard"] = round(cl.jaccard_index(counts), 6)
    except cl.PoleError:
        out["jaccard"] = None
    try:
        out["correlation"] = round(cl.correlation_coefficient(counts), 6)
    except cl.PoleError:
        out["correlation"] = None
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairsphere",
        description="Community detection by projection in pair space")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="dataset summary angles")
    _add_input_args(p, truth_required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("detect", help="run one projection")
    _add_input_args(p, truth_required=False)
    _add_query_args(p)
    _add_louvain_args(p)
    p.add_argument("--out", help="write candidate clustering here")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("sweep", help="latitude sweep, CSV rows")
    _add_input_args(p, truth_required=False)
    _add_query_args(p)
    _add_louvain_args(p)
    p.add_argument("--lat-grid", default="0:1:50",
                   help="start:stop:points in units of pi")
    p.add_argument("--seeds", help="comma list or lo:hi range")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("heatmap", help="resolution x latitude grid, CSV cells")
    _add_input_args(p, truth_required=True)
    _add_louvain_args(p)
    p.add_argument("--gamma-grid", default="-1.5:2:40",
                   help="start:stop:points")
    p.add_argument("--lat-grid", default="0.3333333333:0.6666666667:40",
                   help="start:stop:points in units of pi")
    p.add_argument("--seeds", help="comma list or lo:hi range")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_heatmap)

    p = sub.add_parser("generate", help="synthetic benchmark graphs")
    p.add_argument("--model", choices=("ring", "ppm"), required=True)
    p.add_argument("--k", type=int, help="clique count (ring)")
    p.add_argument("--s", type=int, help="clique size (ring)")
    p.add_argument("--communities", type=int)
    p.add_argument("--size", type=int)
    p.add_argument("--deg-in", type=float)
    p.add_argument("--deg-out", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compare", help="pair-counting indices of two clusterings")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except _Data as err:
        print(f"error: {err}", file=sys.stderr)
        return DATA_ERROR
    except ValueError as err:
        _parse_grid_hint = str(err)
        print(f"error: {_parse_grid_hint}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
