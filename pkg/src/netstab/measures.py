"""True and sample dependence matrices for the two network kinds.

Edge weights are either Pearson correlations or sign-coincidence
probabilities P((X_i - mu_i)(X_j - mu_j) > 0).  For elliptical laws the two
are linked by the arcsine identity ``p = 1/2 + arcsin(rho) / pi``, which is
what makes the true networks of both kinds computable from one scale matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateVariableError,
    MatrixFormatError,
    MeasureRangeError,
    ShapeMismatchError,
)
from .matrixio import read_matrix, write_matrix
from .sampler import SampleMatrix

RANGE_TOL = 1e-12


class MeasureKind(str, Enum):
    PEARSON = "pearson"
    SIGN = "sign"

    @property
    def value_range(self) -> tuple[float, float]:
        return (-1.0, 1.0) if self is MeasureKind.PEARSON else (0.0, 1.0)


@dataclass(frozen=True)
class DependenceMatrix:
    """Symmetric edge-weight matrix tagged with its measure kind.

    ``n_source`` records the sample size the matrix was estimated from and
    is absent (None) for true matrices.
    """

    kind: MeasureKind
    values: np.ndarray
    n_source: int | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"dependence matrix must be square, got {values.shape}")
        if np.max(np.abs(values - values.T), initial=0.0) > RANGE_TOL:
            raise ValueError("dependence matrix is not symmetric")
        if np.max(np.abs(np.diag(values) - 1.0), initial=0.0) > 0.0:
            raise ValueError("diagonal must be exactly 1")
        lo, hi = self.kind.value_range
        if values.min() < lo - RANGE_TOL or values.max() > hi + RANGE_TOL:
            raise MeasureRangeError(
                f"{self.kind.value} values must lie in [{lo}, {hi}]"
            )
        object.__setattr__(self, "values", values)

    @property
    def n_vertices(self) -> int:
        return self.values.shape[0]

    def upper_triangle(self) -> np.ndarray:
        """Edge weights of the complete graph, one per unordered pair."""
        i, j = np.triu_indices(self.n_vertices, k=1)
        return self.values[i, j]


def pearson_true(scale: np.ndarray) -> DependenceMatrix:
    """True Pearson matrix of an elliptical law with the given scale matrix.

    ``rho[i, j] = scale[i, j] / sqrt(scale[i, i] * scale[j, j])``.  The same
    matrix is the population correlation for every mixture weight, since the
    mixture components share the scale matrix.
    """
    a = np.asarray(scale, dtype=float)
    d = np.diag(a)
    if np.any(d <= 0.0):
        raise DegenerateVariableError(int(np.argmin(d)))
    s = np.sqrt(d)
    rho = a / np.outer(s, s)
    rho = np.clip((rho + rho.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(rho, 1.0)
    return DependenceMatrix(kind=MeasureKind.PEARSON, values=rho)


def sign_probability(rho):
    """Arcsine identity mapping correlation to sign-coincidence probability.

    For elliptical laws, ``P((X_i - mu_i)(X_j - mu_j) > 0)`` equals
    ``1/2 + arcsin(rho) / pi``.  Accepts scalars or arrays.
    """
    return 0.5 + np.arcsin(rho) / np.pi


def sign_true(pearson: DependenceMatrix) -> DependenceMatrix:
    """True sign-coincidence matrix obtained from a true Pearson matrix."""
    if pearson.kind is not MeasureKind.PEARSON:
        raise ValueError("sign_true expects a Pearson matrix")
    rho = pearson.values
    if np.max(np.abs(rho)) > 1.0 + RANGE_TOL:
        raise MeasureRangeError("correlations must satisfy |rho| <= 1")
    p = sign_probability(np.clip(rho, -1.0, 1.0))
    p = (p + p.T) / 2.0
    np.fill_diagonal(p, 1.0)
    return DependenceMatrix(kind=MeasureKind.SIGN, values=p)


def pearson_sample(sample: SampleMatrix) -> DependenceMatrix:
    """Sample Pearson correlation matrix with sample-mean centering.

    Uses the n-denominator convention throughout (the correlation is
    invariant to that choice).  Values are clamped to [-1, 1] against
    rounding and the diagonal is set to exactly 1.
    """
    x = sample.data
    y = x - x.mean(axis=1, keepdims=True)
    second_moment = (y * y).mean(axis=1)
    if np.any(second_moment == 0.0):
        raise DegenerateVariableError(int(np.argmin(second_moment)))
    z = y / np.sqrt(second_moment)[:, None]
    c = (z @ z.T) / sample.n
    c = np.clip((c + c.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(c, 1.0)
    return DependenceMatrix(kind=MeasureKind.PEARSON, values=c, n_source=sample.n)


def sign_sample(sample: SampleMatrix, center: np.ndarray) -> DependenceMatrix:
    """Sign-coincidence frequency matrix.

    ``p[i, j]`` is the fraction of time points with
    ``(x_i(t) - center_i) (x_j(t) - center_j) > 0``; the inequality is
    strict, so exact-zero products count as non-coincidence.  The diagonal
    is forced to 1.

    ``center`` is the vector the observations are centered at: the model's
    true location in simulations, or a per-variable sample mean for real
    data.
    """
    center = np.asarray(center, dtype=float)
    if center.shape != (sample.n_variables,):
        raise ShapeMismatchError(
            f"center length {center.shape} does not match {sample.n_variables} variables"
        )
    y = sample.data - center[:, None]
    pos = (y > 0.0).astype(float)
    neg = (y < 0.0).astype(float)
    p = (pos @ pos.T + neg @ neg.T) / sample.n
    p = (p + p.T) / 2.0
    np.fill_diagonal(p, 1.0)
    return DependenceMatrix(kind=MeasureKind.SIGN, values=p, n_source=sample.n)


def hypothesis_count_market_graph(n_vertices: int) -> int:
    """Number of candidate market graphs on N vertices: 2^(N(N-1)/2)."""
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    return 2 ** (n_vertices * (n_vertices - 1) // 2)


def spanning_tree_count(n_vertices: int) -> int:
    """Cayley's count of labeled spanning trees of the complete graph: N^(N-2)."""
    if n_vertices < 2:
        raise ValueError("need at least two vertices")
    return n_vertices ** (n_vertices - 2)


def save_dependence_csv(path: str | Path, matrix: DependenceMatrix) -> None:
    """Write the matrix in scale-matrix CSV format plus a kind header."""
    write_matrix(path, matrix.values, kind=matrix.kind.value)


def load_dependence_csv(path: str | Path) -> DependenceMatrix:
    """Read a dependence matrix; a missing kind header means Pearson."""
    values, kind_token = read_matrix(path)
    if kind_token is None:
        kind = MeasureKind.PEARSON
    else:
        try:
            kind = MeasureKind(kind_token)
        except ValueError:
            raise MatrixFormatError(f"{path}: unknown measure kind {kind_token!r}") from None
    return DependenceMatrix(kind=kind, values=values)
