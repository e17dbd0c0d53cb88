"""Synthetic benchmark graphs with known ground truth."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clusterings import Clustering
from .graphs import Graph


@dataclass(frozen=True)
class RingOfCliquesSpec:
    """``k`` cliques of ``s`` vertices, neighboring cliques joined by one edge."""

    k: int
    s: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError("need at least 3 cliques")
        if self.s < 2:
            raise ValueError("cliques need at least 2 vertices")


def ring_of_cliques(spec: RingOfCliquesSpec) -> tuple[Graph, Clustering]:
    """Deterministic ring of cliques and its clique ground truth.

    Clique ``t`` occupies vertices ``t*s .. t*s+s-1``; the ring edge from
    clique ``t`` runs from its vertex 0 to vertex 1 of clique ``t+1 mod k``.
    """
    k, s = spec.k, spec.s
    edges = []
    for t in range(k):
        base = t * s
        for a in range(s):
            for b in range(a + 1, s):
                edges.append((base + a, base + b))
        edges.append((base, ((t + 1) % k) * s + 1))
    labels = [t for t in range(k) for _ in range(s)]
    return Graph.from_edges(edges, n=k * s), Clustering(labels)


@dataclass(frozen=True)
class PPMSpec:
    """Planted partition: equal-size communities, Bernoulli pair edges.

    ``deg_in``/``deg_out`` are expected intra- and inter-community degrees;
    they convert to pair probabilities ``p_in = deg_in/(size-1)`` and
    ``p_out = deg_out/(n-size)``.
    """

    communities: int
    size: int
    deg_in: float
    deg_out: float
    seed: int = 0

    def __post_init__(self):
        if self.communities < 1 or self.size < 1:
            raise ValueError("need at least one community of at least one node")

    @property
    def n(self) -> int:
        return self.communities * self.size

    @property
    def p_in(self) -> float:
        if self.size == 1:
            if self.deg_in != 0:
                raise ValueError("size-1 communities cannot carry intra edges")
            return 0.0
        return self.deg_in / (self.size - 1)

    @property
    def p_out(self) -> float:
        if self.communities == 1:
            if self.deg_out != 0:
                raise ValueError("single community cannot carry inter edges")
            return 0.0
        return self.deg_out / (self.n - self.size)


def planted_partition(spec: PPMSpec) -> tuple[Graph, Clustering]:
    """Sample a planted partition graph from a seeded generator."""
    p_in, p_out = spec.p_in, spec.p_out
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name}={p} outside [0, 1]")
    rng = np.random.default_rng(spec.seed)
    s = spec.size
    blocks = [np.arange(b * s, (b + 1) * s) for b in range(spec.communities)]
    edges: list[tuple[int, int]] = []
    for bi in range(spec.communities):
        vi = blocks[bi]
        if p_in > 0.0 and s > 1:
            draw = rng.random((s, s))
            iu, ju = np.triu_indices(s, 1)
            hit = draw[iu, ju] < p_in
            edges.extend(zip(vi[iu[hit]].tolist(), vi[ju[hit]].tolist()))
        for bj in range(bi + 1, spec.communities):
            if p_out <= 0.0:
                continue
            draw = rng.random((s, s))
            ii, jj = np.nonzero(draw < p_out)
            edges.extend(zip(vi[ii].tolist(), blocks[bj][jj].tolist()))
    labels = [b for b in range(spec.communities) for _ in range(s)]
    return Graph.from_edges(edges, n=spec.n), Clustering(labels)
