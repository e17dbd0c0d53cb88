"""Experiment drivers: detection runs, latitude sweeps, heatmaps, stats.

These produce the machine-readable records the CLI serializes.  A sweep row
holds the seven standard quantities for one (query, candidate, truth) triple:
the two latitudes, the angular distances from the query to candidate and
truth, the correlation distances from the query to both, and the correlation
distance between truth and candidate (the performance measure).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import clusterings as cl
from . import graphs, queries
from .clusterings import Clustering
from .louvain import LouvainConfig, LouvainResult, louvain_project
from .pairvectors import (PairVector, centered_norm, correlation_distance,
                          inner_with_ones, is_pole, latitude, norm, num_pairs,
                          parallel_project, PoleError)

SCHEMA_VERSION = 1

SWEEP_COLUMNS = ("family", "gamma", "seed", "query_latitude",
                 "candidate_latitude", "da_q_c", "da_q_t", "dcc_q_c",
                 "dcc_q_t", "dcc_t_c")
HEATMAP_COLUMNS = ("gamma", "latitude", "x", "y", "value")


@dataclass(frozen=True)
class SweepRecord:
    """One sweep row; angles in radians, truth columns None without truth."""

    family: str
    gamma: float | None
    seed: int | None
    query_latitude: float
    candidate_latitude: float
    da_q_c: float
    da_q_t: float | None
    dcc_q_c: float
    dcc_q_t: float | None
    dcc_t_c: float | None


@dataclass(frozen=True)
class HeatmapRecord:
    """One heatmap cell; ``value`` is the truth-candidate correlation.

    ``x`` is the signed correlation distance from the query to the edge
    vector, ``y`` the query latitude.  Cells whose meridian degenerates to a
    pole carry None everywhere.
    """

    gamma: float
    lat: float
    x: float | None
    y: float | None
    value: float | None


def _clamp(c: float) -> float:
    return min(1.0, max(-1.0, c))


def _query_clustering_angles(q: PairVector, c: Clustering,
                             objective: float) -> tuple[float, float]:
    """``(d_a(q, b(C)), d_cc(q, b(C)))`` without materializing ``b(C)``."""
    npairs = num_pairs(c.n)
    root_n = math.sqrt(npairs)
    q_norm = norm(q)
    da = math.acos(_clamp(objective / (root_n * q_norm)))
    mass_c = 2.0 * c.intra_pairs - npairs
    pole_c = c.intra_pairs in (0, npairs)
    pole_q = is_pole(q)
    if pole_q and pole_c:
        same = inner_with_ones(q) * mass_c > 0
        dcc = 0.0 if same else math.pi
    elif pole_q or pole_c:
        dcc = math.pi / 2.0
    else:
        cnorm_c = math.sqrt(npairs - mass_c * mass_c / npairs)
        num = objective - inner_with_ones(q) * mass_c / npairs
        dcc = math.acos(_clamp(num / (centered_norm(q) * cnorm_c)))
    return da, dcc


def evaluate_candidate(q: PairVector, result: LouvainResult,
                       truth: Clustering | None, family: str,
                       gamma: float | None,
                       seed: int | None) -> SweepRecord:
    cand = result.clustering
    da_q_c, dcc_q_c = _query_clustering_angles(q, cand, result.objective)
    da_q_t = dcc_q_t = dcc_t_c = None
    if truth is not None:
        from .louvain import clustering_objective

        obj_t = clustering_objective(q, truth)
        da_q_t, dcc_q_t = _query_clustering_angles(q, truth, obj_t)
        dcc_t_c = cl.correlation_distance(truth, cand)
    return SweepRecord(family, gamma, seed, latitude(q),
                       cl.clustering_latitude(cand), da_q_c, da_q_t,
                       dcc_q_c, dcc_q_t, dcc_t_c)


def run_detect(graph: graphs.Graph, spec: queries.QuerySpec,
               config: LouvainConfig = LouvainConfig(),
               truth: Clustering | None = None
               ) -> tuple[Clustering, SweepRecord]:
    q = queries.build_query(graph, spec)
    result = louvain_project(q, config)
    gamma = spec.gamma if spec.family not in queries.MERIDIAN_FAMILIES else None
    record = evaluate_candidate(q, result, truth, spec.family, gamma, None)
    return result.clustering, record


def _sweep_query(graph: graphs.Graph, family: str, lam: float, base,
                 gamma: float, c1: float, c2: float
                 ) -> tuple[PairVector | None, float | None]:
    """Query vector and effective resolution for one grid latitude."""
    if family in queries.MERIDIAN_FAMILIES or family == "linear_combo":
        if family == "linear_combo":
            src = queries.linear_combo_vector(graph, gamma, c1, c2)
        else:
            src = base
        try:
            return parallel_project(src, lam), None
        except PoleError:
            return None, None
    model = "er" if family == "er_modularity" else "cm"
    g = queries.gamma_for_latitude(graph, model, lam)
    if g is None:
        return None, None
    if math.isinf(g):
        return PairVector.constant(graph.n, -1.0 if g > 0 else 1.0), None
    return queries.modularity_vector(graph, model, g), g


def _sweep_point(args):
    q, truth, family, gamma, seed, order, aggregate, max_passes = args
    config = LouvainConfig(vertex_order=order, seed=seed or 0,
                           aggregate=aggregate, max_passes=max_passes)
    result = louvain_project(q, config)
    return evaluate_candidate(q, result, truth, family, gamma, seed)


def run_sweep(graph: graphs.Graph, truth: Clustering | None, family: str,
              lats, seeds=None, config: LouvainConfig = LouvainConfig(),
              gamma: float = 1.0, c1: float = 1.0, c2: float = 0.0,
              jobs: int = 1) -> tuple[list[SweepRecord], dict]:
    """One row per (grid latitude, seed), in grid-then-seed order.

    With seeds, each run uses a seeded vertex shuffle; without, a single
    deterministic ascending-order run per grid point.  Grid latitudes a query
    family cannot reach (a resolution sweep covers only part of ``[0, pi]``)
    are dropped and counted in the summary.
    """
    if family == "edge_meridian":
        base = graphs.edge_vector(graph)
    elif family == "cm_meridian":
        base = queries.modularity_vector(graph, "cm", 1.0)
    elif family == "wedge_meridian":
        base = graphs.wedge_vector(graph)
    else:
        base = None
    seed_list: list[int | None] = list(seeds) if seeds else [None]
    tasks = []
    unreachable = 0
    for lam in lats:
        q, g_eff = _sweep_query(graph, family, lam, base, gamma, c1, c2)
        if q is None:
            unreachable += 1
            continue
        for seed in seed_list:
            order = config.vertex_order if seed is None else "shuffle"
            tasks.append((q, truth, family, g_eff, seed, order,
                          config.aggregate, config.max_passes))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_sweep_point, tasks, chunksize=4))
    else:
        records = [_sweep_point(t) for t in tasks]
    return records, _sweep_summary(records, truth, unreachable)


def _sweep_summary(records: list[SweepRecord], truth: Clustering | None,
                   unreachable: int) -> dict:
    summary: dict = {"schema_version": SCHEMA_VERSION,
                     "points": len(records),
                     "unreachable_grid_points": unreachable}
    if not records or truth is None:
        return summary
    truth_lat = cl.clustering_latitude(truth)
    best = min(records, key=lambda r: (r.dcc_t_c, r.query_latitude))
    lam_prime = min(records, key=lambda r: (r.da_q_t, r.query_latitude))
    summary["truth_latitude"] = truth_lat / math.pi
    summary["best"] = {"dcc_t_c": best.dcc_t_c / math.pi,
                       "query_latitude": best.query_latitude / math.pi}
    summary["lambda_prime"] = lam_prime.query_latitude / math.pi
    crossing = None
    for rec in records:
        if rec.candidate_latitude >= truth_lat:
            crossing = rec.query_latitude / math.pi
            break
    summary["crossing_latitude"] = crossing
    closer = sum(1 for r in records if r.da_q_c <= r.da_q_t + 1e-12)
    summary["candidate_at_least_as_close"] = {"holds": closer,
                                              "total": len(records)}
    return summary


def run_heatmap(graph: graphs.Graph, truth: Clustering, gammas, lats,
                seeds=None, config: LouvainConfig = LouvainConfig()
                ) -> list[HeatmapRecord]:
    """Correlation between truth and candidate over a (gamma, latitude) grid.

    Each gamma fixes a meridian through the degree-product modularity vector
    at that resolution; the latitude is then swept by parallel projection.
    The cell holds the best correlation across the seed set (single
    deterministic run when no seeds are given).  Gammas whose modularity
    vector degenerates to a pole have no meridian; their cells are missing.
    """
    e = graphs.edge_vector(graph)
    seed_list: list[int | None] = list(seeds) if seeds else [None]
    records = []
    for g in gammas:
        try:
            base = queries.modularity_vector(graph, "cm", g)
            degenerate = is_pole(base)
        except (ValueError, ZeroDivisionError):
            degenerate = True
        for lam in lats:
            if degenerate:
                records.append(HeatmapRecord(g, lam, None, None, None))
                continue
            q = parallel_project(base, lam)
            sign = 1.0 if g > 0 else (-1.0 if g < 0 else 0.0)
            x = sign * correlation_distance(q, e)
            y = latitude(q)
            best = None
            for seed in seed_list:
                order = config.vertex_order if seed is None else "shuffle"
                cfg = LouvainConfig(vertex_order=order, seed=seed or 0,
                                    aggregate=config.aggregate,
                                    max_passes=config.max_passes)
                cand = louvain_project(q, cfg).clustering
                value = math.cos(cl.correlation_distance(truth, cand))
                if best is None or value > best:
                    best = value
            records.append(HeatmapRecord(g, lam, x, y, best))
    return records


def run_stats(graph: graphs.Graph, truth: Clustering) -> dict:
    """Dataset summary: sizes plus the five standard angles (radians)."""
    if truth.n != graph.n:
        raise ValueError(f"size mismatch: graph n={graph.n}, truth n={truth.n}")
    dcc = correlation_distance
    b_t = cl.to_pair_vector(truth)
    return {
        "n": graph.n,
        "m": graph.m,
        "communities": truth.num_clusters,
        "truth_latitude": cl.clustering_latitude(truth),
        "edge_latitude": latitude(graphs.edge_vector(graph)),
        "dcc_er_truth": dcc(queries.modularity_vector(graph, "er", 1.0), b_t),
        "dcc_cm_truth": dcc(queries.modularity_vector(graph, "cm", 1.0), b_t),
        "dcc_wedge_truth": dcc(graphs.wedge_vector(graph), b_t),
    }


def fmt_angle(x: float | None, digits: int = 6) -> str:
    """Serialize an angle as a multiple of pi."""
    return "" if x is None else f"{x / math.pi:.{digits}f}"


def fmt_value(x: float | None, digits: int = 6) -> str:
    return "" if x is None else f"{x:.{digits}f}"


def sweep_csv_lines(records: list[SweepRecord]) -> list[str]:
    lines = [",".join(SWEEP_COLUMNS)]
    for r in records:
        lines.append(",".join((
            r.family,
            "" if r.gamma is None else f"{r.gamma:.6g}",
            "" if r.seed is None else str(r.seed),
            fmt_angle(r.query_latitude),
            fmt_angle(r.candidate_latitude),
            fmt_angle(r.da_q_c),
            fmt_angle(r.da_q_t),
            fmt_angle(r.dcc_q_c),
            fmt_angle(r.dcc_q_t),
            fmt_angle(r.dcc_t_c),
        )))
    return lines


def heatmap_csv_lines(records: list[HeatmapRecord]) -> list[str]:
    lines = [",".join(HEATMAP_COLUMNS)]
    for r in records:
        lines.append(",".join((
            f"{r.gamma:.6g}",
            fmt_angle(r.lat),
            fmt_angle(r.x),
            fmt_angle(r.y),
            fmt_value(r.value),
        )))
    return lines


def record_to_json(r: SweepRecord) -> dict:
    out: dict = {"family": r.family, "gamma": r.gamma, "seed": r.seed,
                 "query_latitude": round(r.query_latitude / math.pi, 6),
                 "candidate_latitude": round(r.candidate_latitude / math.pi, 6),
                 "da_q_c": round(r.da_q_c / math.pi, 6),
                 "dcc_q_c": round(r.dcc_q_c / math.pi, 6)}
    if r.da_q_t is not None:
        out["da_q_t"] = round(r.da_q_t / math.pi, 6)
        out["dcc_q_t"] = round(r.dcc_q_t / math.pi, 6)
        out["dcc_t_c"] = round(r.dcc_t_c / math.pi, 6)
    return out


def stats_to_json(stats: dict) -> dict:
    out = {"schema_version": SCHEMA_VERSION, "n": stats["n"], "m": stats["m"],
           "communities": stats["communities"]}
    for key in ("truth_latitude", "edge_latitude", "dcc_er_truth",
                "dcc_cm_truth", "dcc_wedge_truth"):
        out[key] = round(stats[key] / math.pi, 3)
    return out
