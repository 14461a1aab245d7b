"""Network structures extracted from a dependence matrix.

Market graph (threshold graph), degree distribution, edge-weight histogram,
maximum clique, maximum independent set, maximum spanning tree and its
topology.  Clique and MST extraction are exact and deterministic: ties are
broken so that repeated runs and symmetric-difference comparisons are
well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import MeasureRangeError
from .measures import DependenceMatrix, MeasureKind


class SetKind(str, Enum):
    CLIQUE = "clique"
    INDEPENDENT_SET = "independent_set"


@dataclass(frozen=True)
class MarketGraph:
    """Simple unweighted graph: edges are pairs with weight above a threshold."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]
    threshold: float

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < j < self.n_vertices):
                raise ValueError(f"invalid edge ({i}, {j}) for {self.n_vertices} vertices")

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_vertices, dtype=int)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (used by the exact solvers)."""
        adj = [0] * self.n_vertices
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def as_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "threshold": self.threshold,
            "edges": sorted(list(e) for e in self.edges),
        }


@dataclass(frozen=True)
class DegreeDistribution:
    """counts[i] = number of vertices of degree i, i = 0..N-1."""

    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=int)
        if counts.ndim != 1:
            raise ValueError("degree counts must be a vector")
        object.__setattr__(self, "counts", counts)

    @property
    def n_vertices(self) -> int:
        return int(self.counts.sum())

    def as_dict(self) -> dict:
        return {"degree_counts": self.counts.tolist()}


@dataclass(frozen=True)
class EdgeWeightHistogram:
    """Histogram of the N(N-1)/2 edge weights of the complete graph."""

    bin_edges: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        edges = np.asarray(self.bin_edges, dtype=float)
        counts = np.asarray(self.counts, dtype=int)
        if edges.ndim != 1 or np.any(np.diff(edges) <= 0.0):
            raise ValueError("bin edges must be strictly increasing")
        if counts.shape != (edges.size - 1,):
            raise ValueError("need one count per bin")
        object.__setattr__(self, "bin_edges", edges)
        object.__setattr__(self, "counts", counts)

    def as_dict(self) -> dict:
        return {"bin_edges": self.bin_edges.tolist(), "counts": self.counts.tolist()}


@dataclass(frozen=True)
class VertexSet:
    """Sorted vertex indices forming a clique or an independent set."""

    members: tuple[int, ...]
    kind: SetKind

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and unique")

    def as_dict(self) -> dict:
        return {"set_kind": self.kind.value, "members": list(self.members)}


@dataclass(frozen=True)
class SpanningTree:
    """Spanning tree of the complete weighted graph: N-1 edges plus weights."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    edge_weights: tuple[float, ...]
    total_weight: float

    def __post_init__(self):
        if len(self.edges) != self.n_vertices - 1:
            raise ValueError("a spanning tree has exactly N-1 edges")
        if len(self.edge_weights) != len(self.edges):
            raise ValueError("need one weight per edge")

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_vertices, dtype=int)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def as_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "total_weight": self.total_weight,
            "edges": [[i, j, w] for (i, j), w in zip(self.edges, self.edge_weights)],
        }


@dataclass(frozen=True)
class TreeTopology:
    """Non-decreasing degree sequence of a spanning tree."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError("degree sequence must be non-decreasing")
        if self.degrees and min(self.degrees) < 1:
            raise ValueError("tree degrees are at least 1")

    def as_dict(self) -> dict:
        return {"degrees": list(self.degrees)}


def market_graph(w: DependenceMatrix, gamma0: float) -> MarketGraph:
    """Threshold graph: edge (i, j) present iff ``w[i, j] > gamma0`` (strict)."""
    values = w.values
    n = w.n_vertices
    i, j = np.triu_indices(n, k=1)
    keep = values[i, j] > gamma0
    edges = frozenset(zip(i[keep].tolist(), j[keep].tolist()))
    return MarketGraph(n_vertices=n, edges=edges, threshold=float(gamma0))


def complement(g: MarketGraph) -> MarketGraph:
    all_pairs = {
        (i, j) for i in range(g.n_vertices) for j in range(i + 1, g.n_vertices)
    }
    return MarketGraph(
        n_vertices=g.n_vertices,
        edges=frozenset(all_pairs - g.edges),
        threshold=g.threshold,
    )


def degree_distribution(g: MarketGraph) -> DegreeDistribution:
    """Number of vertices of each degree 0..N-1."""
    counts = np.bincount(g.degrees(), minlength=g.n_vertices)
    return DegreeDistribution(counts=counts)


def default_bins(kind: MeasureKind, width: float = 0.1) -> np.ndarray:
    """Bins of the given width spanning the measure's range."""
    lo, hi = kind.value_range
    n_bins = int(round((hi - lo) / width))
    return np.linspace(lo, hi, n_bins + 1)


def edge_histogram(w: DependenceMatrix, bins: np.ndarray | None = None) -> EdgeWeightHistogram:
    """Histogram of the upper-triangle edge weights.

    Bins are right-open except the last, which is right-closed (numpy
    convention), so every admissible weight lands in exactly one bin.
    """
    if bins is None:
        bins = default_bins(w.kind)
    bins = np.asarray(bins, dtype=float)
    weights = w.upper_triangle()
    if weights.size and (weights.min() < bins[0] or weights.max() > bins[-1]):
        raise MeasureRangeError(
            f"edge weight outside histogram range [{bins[0]}, {bins[-1]}]"
        )
    counts, edges = np.histogram(weights, bins=bins)
    return EdgeWeightHistogram(bin_edges=edges, counts=counts)


def _greedy_color_bound(adj: list[int], candidates: list[int]) -> int:
    # Number of greedy color classes bounds the clique size on `candidates`.
    color_masks: list[int] = []
    for v in candidates:
        for idx, mask in enumerate(color_masks):
            if not (adj[v] & mask):
                color_masks[idx] = mask | (1 << v)
                break
        else:
            color_masks.append(1 << v)
    return len(color_masks)


def max_clique(g: MarketGraph) -> VertexSet:
    """Exact maximum clique, deterministic across runs.

    Branch and bound with a greedy-coloring upper bound.  Candidates are
    expanded in ascending vertex order and the incumbent is replaced only by
    strictly larger cliques, so the result is the lexicographically smallest
    sorted member list among all maximum cliques.
    """
    n = g.n_vertices
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    adj = g.adjacency_masks()
    best: list[int] = []

    def expand(current: list[int], candidates: list[int]) -> None:
        nonlocal best
        if len(current) + len(candidates) <= len(best):
            return
        if candidates and len(current) + _greedy_color_bound(adj, candidates) <= len(best):
            return
        if not candidates:
            if len(current) > len(best):
                best = current.copy()
            return
        for idx, v in enumerate(candidates):
            if len(current) + len(candidates) - idx <= len(best):
                break
            rest = [u for u in candidates[idx + 1:] if (adj[v] >> u) & 1]
            current.append(v)
            if rest:
                expand(current, rest)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()

    expand([], list(range(n)))
    if not best:
        best = [0]
    return VertexSet(members=tuple(best), kind=SetKind.CLIQUE)


def max_independent_set(g: MarketGraph) -> VertexSet:
    """Exact maximum independent set: maximum clique of the complement."""
    clique = max_clique(complement(g))
    return VertexSet(members=clique.members, kind=SetKind.INDEPENDENT_SET)


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def maximum_spanning_tree(w: DependenceMatrix) -> SpanningTree:
    """Maximum-weight spanning tree of the complete graph.

    Kruskal over edges sorted by weight descending; ties are broken by
    ascending (i, j) edge index, so the result is deterministic even when
    weights tie.
    """
    n = w.n_vertices
    if n < 2:
        raise ValueError("need at least two vertices")
    values = w.values
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs.sort(key=lambda e: (-values[e[0], e[1]], e))
    dsu = _DisjointSets(n)
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    for i, j in pairs:
        if dsu.union(i, j):
            edges.append((i, j))
            weights.append(float(values[i, j]))
            if len(edges) == n - 1:
                break
    return SpanningTree(
        n_vertices=n,
        edges=tuple(edges),
        edge_weights=tuple(weights),
        total_weight=float(sum(weights)),
    )


def tree_topology(t: SpanningTree) -> TreeTopology:
    """Sorted (non-decreasing) degree sequence of the tree."""
    return TreeTopology(degrees=tuple(sorted(int(d) for d in t.degrees())))
