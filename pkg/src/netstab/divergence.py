"""Divergence between network characteristics of two dependence matrices.

Each function compares one kind of structure and returns a scalar.  The
first three are distances (0 means identical, larger means further apart);
``topology_match`` is an agreement indicator where larger is better.
"""

from __future__ import annotations

import numpy as np

from .errors import BinMismatchError, KindMismatchError, ShapeMismatchError
from .structures import DegreeDistribution, EdgeWeightHistogram, TreeTopology, VertexSet


def histogram_divergence(a: EdgeWeightHistogram, b: EdgeWeightHistogram) -> float:
    """Sum over bins of |count difference| times bin width.

    Both histograms must be built on identical bin edges.
    """
    if a.bin_edges.shape != b.bin_edges.shape or not np.array_equal(
        a.bin_edges, b.bin_edges
    ):
        raise BinMismatchError("histograms use different bin edges")
    widths = np.diff(a.bin_edges)
    return float(np.sum(np.abs(a.counts - b.counts) * widths))


def degree_divergence(a: DegreeDistribution, b: DegreeDistribution) -> float:
    """L1 distance between the degree count vectors."""
    if a.counts.shape != b.counts.shape:
        raise ShapeMismatchError(
            f"degree distributions of different sizes: {a.counts.shape[0]} vs {b.counts.shape[0]}"
        )
    return float(np.sum(np.abs(a.counts - b.counts)))


def set_divergence(a: VertexSet, b: VertexSet) -> float:
    """Size of the symmetric difference of the member sets.

    Comparing a clique with an independent set is a usage error.
    """
    if a.kind != b.kind:
        raise KindMismatchError(
            f"cannot compare a {a.kind.value} with a {b.kind.value}"
        )
    return float(len(set(a.members) ^ set(b.members)))


def topology_match(a: TreeTopology, b: TreeTopology) -> float:
    """1.0 when the sorted degree sequences coincide, else 0.0."""
    return 1.0 if a.degrees == b.degrees else 0.0
