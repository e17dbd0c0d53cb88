"""Simple undirected graphs, edge-list ingestion, and graph pair vectors.

A graph maps into pair space two ways: the +/-1 edge vector (+1 on edges) and
the nonnegative wedge vector counting common neighbors per pair.  Both stay
in the structured sparse-plus-kernel representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .pairvectors import (PairVector, ProductKernel, inner, inner_with_ones,
                          norm, num_pairs)


@dataclass(frozen=True)
class LoadReport:
    """What ingestion dropped or rewrote, for reproducibility metadata."""

    edge_lines: int = 0
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph with dense internal vertex ids.

    ``labels[k]`` is the external id of internal vertex ``k``; adjacency is
    kept as sorted neighbor arrays.
    """

    n: int
    neighbors: tuple
    degrees: np.ndarray
    m: int
    labels: tuple
    load_report: LoadReport = field(default=LoadReport())

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None,
                   labels: Sequence[str] | None = None,
                   load_report: LoadReport = LoadReport()) -> "Graph":
        edge_set = set()
        top = -1
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            if a < 0:
                raise ValueError(f"negative vertex id {a}")
            edge_set.add((a, b))
            top = max(top, b)
        size = top + 1 if n is None else n
        if top >= size:
            raise ValueError(f"vertex id {top} out of range for n={size}")
        adj: list[list[int]] = [[] for _ in range(size)]
        for a, b in edge_set:
            adj[a].append(b)
            adj[b].append(a)
        neighbors = tuple(np.array(sorted(ns), dtype=np.intp) for ns in adj)
        degrees = np.array([len(ns) for ns in neighbors], dtype=np.intp)
        if labels is None:
            labels = tuple(str(k) for k in range(size))
        else:
            labels = tuple(labels)
            if len(labels) != size:
                raise ValueError(f"{len(labels)} labels for n={size}")
        return cls(size, neighbors, degrees, len(edge_set), labels, load_report)

    @property
    def label_index(self) -> dict:
        return {lab: k for k, lab in enumerate(self.labels)}

    def edges(self) -> list[tuple[int, int]]:
        return [(i, int(j)) for i in range(self.n)
                for j in self.neighbors[i] if i < j]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def load_edge_list(path, fmt: str = "edgelist") -> Graph:
    """Parse a whitespace-separated edge list into a :class:`Graph`.

    Each non-comment line holds two node tokens.  Directed or repeated input
    edges are symmetrized and deduplicated, self-loops are dropped; the counts
    end up in ``Graph.load_report``.  External node ids are remapped to dense
    internal indices in order of first appearance.
    """
    if fmt != "edgelist":
        raise ValueError(f"unknown edge list format {fmt!r}")
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    loops = 0
    dupes = 0
    lines = 0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line[0] in "#%":
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(
                    f"{path}: line {lineno}: expected two node tokens, "
                    f"got {len(parts)}")
            lines += 1
            u, v = parts
            for tok in (u, v):
                if tok not in index:
                    index[tok] = len(index)
            if u == v:
                loops += 1
                continue
            a, b = index[u], index[v]
            key = (a, b) if a < b else (b, a)
            if key in edges:
                dupes += 1
            else:
                edges.add(key)
    if not edges:
        raise ValueError(f"{path}: no edges")
    labels = [None] * len(index)
    for tok, k in index.items():
        labels[k] = tok
    return Graph.from_edges(edges, n=len(index), labels=labels,
                            load_report=LoadReport(lines, loops, dupes))


def write_edge_list(path, graph: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for i, j in graph.edges():
            fh.write(f"{graph.labels[i]}\t{graph.labels[j]}\n")


def edge_vector(graph: Graph) -> PairVector:
    """The +/-1 connectivity vector: constant -1 plus +2 on edges."""
    sparse = {(i, j): 2.0 for i, j in graph.edges()}
    return PairVector.build(graph.n, sparse,
                            (ProductKernel(-1.0, np.ones(graph.n)),))


def wedge_vector(graph: Graph) -> PairVector:
    """Common-neighbor counts per pair (adjacent pairs included).

    The total mass ``<w, 1>`` equals the wedge count ``sum_i C(d_i, 2)``; the
    cost of building the vector matches that bound.
    """
    n = graph.n
    codes = []
    for nbrs in graph.neighbors:
        d = len(nbrs)
        if d < 2:
            continue
        a, b = np.triu_indices(d, 1)
        codes.append(nbrs[a] * n + nbrs[b])
    if not codes:
        return PairVector.zero(n)
    uniq, counts = np.unique(np.concatenate(codes), return_counts=True)
    sparse = {(int(c) // n, int(c) % n): float(k)
              for c, k in zip(uniq, counts)}
    return PairVector.build(n, sparse)


def global_clustering(graph: Graph) -> float:
    """Global clustering coefficient via edge/wedge pair-space geometry.

    Evaluates ``(1 - cos d_a(e, w) / cos l(w)) / 2`` from structured inner
    products; equals thrice the triangle count over the wedge count.
    Undefined (raises) for wedge-free graphs.
    """
    w = wedge_vector(graph)
    wedges = inner_with_ones(w)
    if wedges == 0.0:
        raise ValueError("graph has no wedges: clustering coefficient undefined")
    e = edge_vector(graph)
    cos_da = inner(e, w) / (norm(e) * norm(w))
    cos_lat = -wedges / (math.sqrt(num_pairs(graph.n)) * norm(w))
    return 0.5 * (1.0 - cos_da / cos_lat)


@dataclass(frozen=True)
class DatasetEntry:
    edges_path: Path
    truth_path: Path


def parse_manifest(path) -> dict[str, DatasetEntry]:
    """Read a ``name = edges_file truth_file`` manifest; paths are relative."""
    base = Path(path).parent
    out: dict[str, DatasetEntry] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}: line {lineno}: expected 'name = edges truth'")
            name, rhs = line.split("=", 1)
            parts = rhs.split()
            if len(parts) != 2:
                raise ValueError(f"{path}: line {lineno}: expected two file names")
            out[name.strip()] = DatasetEntry(base / parts[0], base / parts[1])
    return out


def bundled_manifest_path() -> Path:
    from importlib.resources import files

    return Path(str(files("pairsphere") / "data" / "manifest.txt"))


def load_dataset(name: str, manifest_path=None):
    """Load a registered dataset: returns ``(Graph, Clustering)``.

    Uses the bundled manifest unless another is given.  A registered dataset
    whose files are not present raises ``FileNotFoundError`` naming them.
    """
    from .clusterings import read_clustering

    manifest = parse_manifest(manifest_path or bundled_manifest_path())
    if name not in manifest:
        raise ValueError(f"dataset {name!r} not in manifest "
                         f"(known: {', '.join(sorted(manifest))})")
    entry = manifest[name]
    for p in (entry.edges_path, entry.truth_path):
        if not p.exists():
            raise FileNotFoundError(
                f"dataset {name!r} is registered but {p} is not bundled; "
                f"place the file there to enable it")
    graph = load_edge_list(entry.edges_path)
    truth = read_clustering(entry.truth_path, graph.labels)
    return graph, truth
