"""Partitions of the vertex set, their pair vectors and pair-counting indices.

A clustering of ``[n]`` induces a +/-1 vector over vertex pairs (+1 on
intra-cluster pairs).  All classic pair-counting validation indices are
functions of four sufficient statistics: the pair total ``N``, the
intra-cluster pair counts of each clustering, and the count of pairs that are
intra-cluster in both.
"""

from __future__ import annotations

from typing import Hashable, Iterable, NamedTuple, Sequence

import math

import numpy as np

from .pairvectors import PairVector, PoleError, ProductKernel, num_pairs


class Clustering:
    """An immutable partition of ``[n]``, canonically relabeled.

    Cluster identifiers in the input may be arbitrary hashables; internally
    clusters are renumbered 0, 1, ... by first occurrence so that equal
    partitions compare (and serialize) identically.
    """

    __slots__ = ("labels", "sizes", "_hash")

    def __init__(self, labels: Iterable[Hashable]):
        seen: dict = {}
        canon = []
        for lab in labels:
            if lab not in seen:
                seen[lab] = len(seen)
            canon.append(seen[lab])
        self_labels = tuple(canon)
        object.__setattr__(self, "labels", self_labels)
        sizes = [0] * len(seen)
        for lab in self_labels:
            sizes[lab] += 1
        object.__setattr__(self, "sizes", tuple(sizes))
        object.__setattr__(self, "_hash", hash(self_labels))

    def __setattr__(self, *a):
        raise AttributeError("Clustering is immutable")

    def __reduce__(self):
        return (Clustering, (self.labels,))

    @classmethod
    def singletons(cls, n: int) -> "Clustering":
        return cls(range(n))

    @classmethod
    def single_cluster(cls, n: int) -> "Clustering":
        return cls([0] * n)

    @classmethod
    def from_clusters(cls, clusters: Iterable[Iterable[int]],
                      n: int | None = None) -> "Clustering":
        groups = [sorted(c) for c in clusters]
        members = [v for g in groups for v in g]
        size = max(members) + 1 if n is None else n
        if sorted(members) != list(range(size)):
            raise ValueError("clusters must partition 0..n-1 exactly")
        labels = [0] * size
        for cid, group in enumerate(groups):
            for v in group:
                labels[v] = cid
        return cls(labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_clusters(self) -> int:
        return len(self.sizes)

    @property
    def intra_pairs(self) -> int:
        """Number of intra-cluster vertex pairs ``m_C``."""
        return sum(s * (s - 1) // 2 for s in self.sizes)

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.sizes]
        for v, lab in enumerate(self.labels):
            out[lab].append(v)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Clustering) and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Clustering(n={self.n}, clusters={self.num_clusters})"


def to_pair_vector(c: Clustering) -> PairVector:
    """The +/-1 vector of ``c``: constant -1 plus +2 on intra-cluster pairs."""
    sparse = {}
    for group in c.members():
        for a in range(len(group)):
            va = group[a]
            for vb in group[a + 1:]:
                sparse[(va, vb)] = 2.0
    return PairVector.build(c.n, sparse,
                            (ProductKernel(-1.0, np.ones(c.n)),))


def is_clustering_vector(x: PairVector, tol: float = 1e-9) -> bool:
    """True iff the dense expansion of ``x`` is +/-1 and transitive."""
    return _decode_dense(x, tol) is not None


def from_pair_vector(x: PairVector, tol: float = 1e-9) -> Clustering:
    """Reconstruct the unique clustering whose pair vector is ``x``."""
    c = _decode_dense(x, tol)
    if c is None:
        raise ValueError("not a clustering vector (non-binary or intransitive)")
    return c


def _decode_dense(x: PairVector, tol: float) -> Clustering | None:
    dense = x.dense()
    if not np.all(np.abs(np.abs(dense) - 1.0) <= tol):
        return None
    # union-find over positive pairs, then verify transitivity by round-trip
    parent = list(range(x.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    k = 0
    positive = dense > 0
    for i in range(x.n):
        for j in range(i + 1, x.n):
            if positive[k]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
            k += 1
    labels = [find(v) for v in range(x.n)]
    k = 0
    for i in range(x.n):
        for j in range(i + 1, x.n):
            if (labels[i] == labels[j]) != bool(positive[k]):
                return None
            k += 1
    return Clustering(labels)


class PairCounts(NamedTuple):
    """Sufficient statistics for all pair-counting indices."""

    n_pairs: int
    m_t: int
    m_c: int
    m_tc: int


def pair_counts(t: Clustering, c: Clustering) -> PairCounts:
    """Pair statistics of two clusterings via their label contingency table."""
    if t.n != c.n:
        raise ValueError(f"size mismatch: n={t.n} vs n={c.n}")
    table: dict = {}
    for lt, lc in zip(t.labels, c.labels):
        key = (lt, lc)
        table[key] = table.get(key, 0) + 1
    m_tc = sum(v * (v - 1) // 2 for v in table.values())
    return PairCounts(num_pairs(t.n), t.intra_pairs, c.intra_pairs, m_tc)


def correlation_coefficient(counts: PairCounts) -> float:
    """Pearson correlation of the two pair indicators, in ``[-1, 1]``.

    Undefined when either clustering is a pole (``m`` equal to 0 or ``N``);
    that degenerate case raises :class:`PoleError` so callers can apply the
    geometric pole conventions explicitly.
    """
    npairs, m_t, m_c, m_tc = counts
    if m_t in (0, npairs) or m_c in (0, npairs):
        raise PoleError("correlation undefined for a pole clustering")
    if m_t == m_c == m_tc:
        return 1.0  # identical clusterings, exactly
    if m_tc == 0 and m_t + m_c == npairs:
        return -1.0  # complementary pair indicators, exactly
    num = m_tc * npairs - m_t * m_c
    den = math.sqrt(m_t * (npairs - m_t) * m_c * (npairs - m_c))
    return num / den


def rand_index(counts: PairCounts) -> float:
    """Fraction of pairs on which the two clusterings agree."""
    npairs, m_t, m_c, m_tc = counts
    return (npairs - m_t - m_c + 2 * m_tc) / npairs


def jaccard_index(counts: PairCounts) -> float:
    npairs, m_t, m_c, m_tc = counts
    if m_t == 0 and m_c == 0:
        raise PoleError("Jaccard undefined when both clusterings are singletons")
    return m_tc / (m_t + m_c - m_tc)


def hubert_index(counts: PairCounts) -> float:
    """Agreements minus disagreements over ``N``; equals ``2*Rand - 1``."""
    return 2.0 * rand_index(counts) - 1.0


def clustering_latitude(c: Clustering) -> float:
    """Latitude ``acos(1 - 2 m_C / N)`` of the pair vector of ``c``."""
    ratio = 2.0 * c.intra_pairs / num_pairs(c.n)
    return math.acos(min(1.0, max(-1.0, 1.0 - ratio)))


def angular_distance(t: Clustering, c: Clustering) -> float:
    """Angular distance between the two pair vectors (acos of Hubert)."""
    return math.acos(min(1.0, max(-1.0, hubert_index(pair_counts(t, c)))))


def correlation_distance(t: Clustering, c: Clustering) -> float:
    """Correlation distance between clusterings, with pole conventions.

    acos of :func:`correlation_coefficient` off the poles; 0 / pi / pi/2 when
    both, opposite, or exactly one of the clusterings is a pole.
    """
    counts = pair_counts(t, c)
    npairs = counts.n_pairs
    pole_t = counts.m_t in (0, npairs)
    pole_c = counts.m_c in (0, npairs)
    if pole_t and pole_c:
        return 0.0 if counts.m_t == counts.m_c else math.pi
    if pole_t or pole_c:
        return math.pi / 2.0
    return math.acos(min(1.0, max(-1.0, correlation_coefficient(counts))))


def write_clustering(path, c: Clustering, node_ids: Sequence[str]) -> None:
    """Write one ``node_id<TAB>cluster_id`` line per node."""
    if len(node_ids) != c.n:
        raise ValueError(f"{len(node_ids)} node ids for n={c.n}")
    with open(path, "w", encoding="utf-8") as fh:
        for node, lab in zip(node_ids, c.labels):
            fh.write(f"{node}\t{lab}\n")


def read_clustering(path, node_ids: Sequence[str]) -> Clustering:
    """Read a ``node_id<TAB>cluster_id`` file over a known node vocabulary.

    Every node of the vocabulary must appear exactly once; unknown node ids
    are an error.
    """
    index = {node: k for k, node in enumerate(node_ids)}
    assignment: dict[int, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}: line {lineno}: expected 'node cluster'")
            node, cluster = parts
            if node not in index:
                raise ValueError(f"{path}: line {lineno}: unknown node {node!r}")
            if index[node] in assignment:
                raise ValueError(f"{path}: line {lineno}: duplicate node {node!r}")
            assignment[index[node]] = cluster
    if len(assignment) != len(node_ids):
        missing = len(node_ids) - len(assignment)
        raise ValueError(f"{path}: {missing} nodes have no cluster assignment")
    return Clustering(assignment[k] for k in range(len(node_ids)))
