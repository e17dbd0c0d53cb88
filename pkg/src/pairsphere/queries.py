"""Query vector constructors: modularity vectors, meridians, combinations.

A detection method in this framework is a *query mapping* (graph -> pair
vector) followed by projection to the nearest clustering vector.  This module
builds the query families: modularity vectors for the uniform (ER) and
degree-product (CM) null models at any resolution, parallel-projected
meridian queries based on the edge vector, the resolution-1 CM vector, or the
wedge vector, and linear combinations of the two null models.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import graphs
from .pairvectors import (PairVector, ProductKernel, correlation_distance,
                          inner, latitude, num_pairs, parallel_project)

FAMILIES = ("er_modularity", "cm_modularity", "edge_meridian", "cm_meridian",
            "wedge_meridian", "linear_combo")
MERIDIAN_FAMILIES = ("edge_meridian", "cm_meridian", "wedge_meridian")


@dataclass(frozen=True)
class QuerySpec:
    """Declarative description of one query vector.

    ``gamma`` is the resolution for the modularity and combo families;
    ``lat`` is the target latitude (radians), required for the meridian
    families and optional for ``linear_combo``; ``c1``/``c2`` weight the
    uniform and degree-product null models in ``linear_combo``.
    """

    family: str
    gamma: float = 1.0
    lat: float | None = None
    c1: float = 1.0
    c2: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown query family {self.family!r}")
        if self.lat is not None and not 0.0 <= self.lat <= math.pi:
            raise ValueError(f"latitude {self.lat} outside [0, pi]")
        if not math.isfinite(self.gamma):
            raise ValueError("resolution must be finite")

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        if self.family in ("er_modularity", "cm_modularity", "linear_combo"):
            out["gamma"] = self.gamma
        if self.family == "linear_combo":
            out["c1"] = self.c1
            out["c2"] = self.c2
        if self.lat is not None:
            out["latitude"] = self.lat / math.pi
        return out


def null_expectation(graph: graphs.Graph, null_model: str) -> PairVector:
    """Per-pair expected edge count under rewiring: ``p^N(G)``.

    Uniform model: ``m/N`` on every pair.  Degree-product model:
    ``d_i d_j / (2 m~)`` with ``m~ = m - sum(d^2)/(4m)``, the normalization
    that makes the entries sum to ``m`` exactly.
    """
    model = null_model.lower()
    if model == "er":
        return PairVector.constant(graph.n, graph.m / num_pairs(graph.n))
    if model == "cm":
        if graph.m == 0:
            raise ValueError("degree-product null model undefined without edges")
        deg = graph.degrees.astype(float)
        m_tilde = graph.m - float(deg @ deg) / (4.0 * graph.m)
        return PairVector.build(
            graph.n, kernels=(ProductKernel(1.0 / (2.0 * m_tilde), deg),))
    raise ValueError(f"unknown null model {null_model!r}")


def modularity_vector(graph: graphs.Graph, null_model: str,
                      gamma: float = 1.0) -> PairVector:
    """``1 + e(G) - 2*gamma*p^N(G)`` in structured form.

    The constant parts merge into a single constant kernel, so the result is
    sparse ``+2`` on edges plus at most two kernels.  Negative resolutions
    are allowed.
    """
    base = PairVector.constant(graph.n, 1.0) + graphs.edge_vector(graph)
    return base + null_expectation(graph, null_model) * (-2.0 * gamma)


def modularity_latitude(graph: graphs.Graph, null_model: str,
                        gamma: float = 1.0) -> float:
    """Closed-form latitude of the modularity vector at resolution ``gamma``.

    ``acos((gamma-1) m / (sqrt(N) sqrt((1-gamma) m + gamma^2 |p|^2
    - gamma <p, e>)))``; crosses the equator exactly at ``gamma = 1``.
    """
    p = null_expectation(graph, null_model)
    e = graphs.edge_vector(graph)
    m = graph.m
    radicand = (1.0 - gamma) * m + gamma * gamma * inner(p, p) \
        - gamma * inner(p, e)
    if radicand <= 0.0:
        raise ValueError("modularity vector is numerically zero")
    cosine = (gamma - 1.0) * m / (math.sqrt(num_pairs(graph.n))
                                  * math.sqrt(radicand))
    return math.acos(min(1.0, max(-1.0, cosine)))


def linear_combo_vector(graph: graphs.Graph, gamma: float, c1: float,
                        c2: float) -> PairVector:
    """``1 + e(G) - 2*gamma*(c1 p^ER + c2 p^CM)``.

    The coefficients need not be positive, so the result does not in general
    correspond to any null model; it is simply a point on the hypersphere.
    """
    base = PairVector.constant(graph.n, 1.0) + graphs.edge_vector(graph)
    combo = null_expectation(graph, "er") * c1 \
        + null_expectation(graph, "cm") * c2
    return base + combo * (-2.0 * gamma)


def build_query(graph: graphs.Graph, spec: QuerySpec) -> PairVector:
    """Construct the query vector a :class:`QuerySpec` describes."""
    if spec.family == "er_modularity":
        return modularity_vector(graph, "er", spec.gamma)
    if spec.family == "cm_modularity":
        return modularity_vector(graph, "cm", spec.gamma)
    if spec.family in MERIDIAN_FAMILIES:
        if spec.lat is None:
            raise ValueError(f"{spec.family} requires a target latitude")
        if spec.family == "edge_meridian":
            base = graphs.edge_vector(graph)
        elif spec.family == "cm_meridian":
            base = modularity_vector(graph, "cm", 1.0)
        else:
            base = graphs.wedge_vector(graph)
        return parallel_project(base, spec.lat)
    # linear_combo
    q = linear_combo_vector(graph, spec.gamma, spec.c1, spec.c2)
    if spec.lat is not None:
        q = parallel_project(q, spec.lat)
    return q


def gamma_for_latitude(graph: graphs.Graph, null_model: str,
                       lam: float) -> float | None:
    """Resolution whose modularity vector has latitude ``lam``, if any.

    The uniform model covers all of ``(0, pi)`` in closed form (and the grid
    endpoints 0 and ``pi`` map to infinite resolutions, returned as signed
    inf).  The degree-product model's latitude is strictly decreasing in the
    resolution but spans only an open interval around the equator; latitudes
    outside it return None.
    """
    if not 0.0 <= lam <= math.pi:
        raise ValueError(f"latitude {lam} outside [0, pi]")
    if graph.m == 0:
        return None
    model = null_model.lower()
    if model == "er":
        if graph.m == num_pairs(graph.n):
            return None  # complete graph: edge vector is the coarse pole
        if lam == 0.0:
            return math.inf
        if lam == math.pi:
            return -math.inf
        if lam == math.pi / 2.0:
            return 1.0
        return 1.0 + math.sqrt((num_pairs(graph.n) - graph.m) / graph.m) \
            / math.tan(lam)
    if model != "cm":
        raise ValueError(f"unknown null model {null_model!r}")
    p = null_expectation(graph, "cm")
    e = graphs.edge_vector(graph)
    pp = inner(p, p)
    pe = inner(p, e)
    m = graph.m
    root_n = math.sqrt(num_pairs(graph.n))

    def lat_of(g: float) -> float:
        radicand = max((1.0 - g) * m + g * g * pp - g * pe, 0.0)
        if radicand == 0.0:
            return math.pi / 2.0
        c = (g - 1.0) * m / (root_n * math.sqrt(radicand))
        return math.acos(min(1.0, max(-1.0, c)))

    lo_lat = math.acos(min(1.0, m / (root_n * math.sqrt(pp))))
    hi_lat = math.acos(max(-1.0, -m / (root_n * math.sqrt(pp))))
    if not lo_lat < lam < hi_lat:
        return None
    span = 1.0
    while lat_of(span) > lam:
        span *= 2.0
        if span > 1e12:
            return None
    lo, hi = -span, span
    while lat_of(lo) < lam:
        lo *= 2.0
        if lo < -1e12:
            return None
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if lat_of(mid) > lam:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def heatmap_coordinates(graph: graphs.Graph, q: PairVector,
                        gamma_sign: float) -> tuple[float, float]:
    """Signed meridian coordinate and latitude of a query vector.

    ``x`` is ``sign(gamma)`` times the correlation distance from ``q`` to the
    edge vector (distance to the uniform-model meridian); ``y`` is the
    latitude of ``q``.
    """
    sign = float(np.sign(gamma_sign))
    x = sign * correlation_distance(q, graphs.edge_vector(graph))
    return x, latitude(q)
