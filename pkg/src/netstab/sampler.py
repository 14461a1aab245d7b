"""Sampling from a Gaussian / Student-t mixture with a shared scale matrix.

Both components are elliptical with the same location vector and scale
matrix; the mixture draws each observation from the Gaussian component with
probability ``gaussian_weight`` and from the Student-t component otherwise.
The Student-t draw uses the normal/chi-square ratio construction, which is
exact and preserves the correlation structure of the scale matrix for every
mixture weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import NotPositiveDefiniteError, SampleSizeError
from .matrixio import read_matrix

SYMMETRY_TOL = 1e-12


def cholesky(scale: np.ndarray) -> np.ndarray:
    """Lower-triangular factor L with ``L @ L.T == scale``.

    Parameters
    ----------
    scale : (N, N) ndarray
        Symmetric positive definite matrix.

    Returns
    -------
    L : (N, N) ndarray
        Lower-triangular Cholesky factor.

    Raises
    ------
    NotPositiveDefiniteError
        If a pivot is non-positive; the error carries the zero-based index
        of the failing pivot.
    """
    a = np.asarray(scale, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"scale matrix must be square, got shape {a.shape}")
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOL:
        raise ValueError(f"scale matrix is not symmetric within {SYMMETRY_TOL}")
    n = a.shape[0]
    lower = np.zeros_like(a)
    for j in range(n):
        pivot = a[j, j] - lower[j, :j] @ lower[j, :j]
        if pivot <= 0.0:
            raise NotPositiveDefiniteError(j, float(pivot))
        lower[j, j] = np.sqrt(pivot)
        if j + 1 < n:
            lower[j + 1:, j] = (a[j + 1:, j] - lower[j + 1:, :j] @ lower[j, :j]) / lower[j, j]
    return lower


@dataclass(frozen=True)
class MixtureModel:
    """Sampling law: shared location/scale, Student df, Gaussian weight.

    Parameters
    ----------
    location : (N,) ndarray
        Location vector of both components (zero for centered returns).
    scale : (N, N) ndarray
        Symmetric positive definite scale matrix shared by both components.
    df : int
        Degrees of freedom of the Student-t component, at least 3 so that
        the component has finite correlations.
    gaussian_weight : float
        Probability in [0, 1] that an observation comes from the Gaussian
        component.
    """

    location: np.ndarray
    scale: np.ndarray
    df: int = 3
    gaussian_weight: float = 1.0
    factor: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        location = np.atleast_1d(np.asarray(self.location, dtype=float))
        scale = np.asarray(self.scale, dtype=float)
        if location.ndim != 1:
            raise ValueError("location must be a vector")
        if scale.shape != (location.size, location.size):
            raise ValueError(
                f"scale shape {scale.shape} does not match location length {location.size}"
            )
        if not (0.0 <= self.gaussian_weight <= 1.0):
            raise ValueError(f"gaussian_weight must be in [0, 1], got {self.gaussian_weight}")
        if int(self.df) != self.df or self.df < 3:
            raise ValueError(f"df must be an integer >= 3, got {self.df}")
        factor = cholesky(scale)  # also enforces symmetry and definiteness
        object.__setattr__(self, "location", location)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "df", int(self.df))
        object.__setattr__(self, "factor", factor)

    @property
    def n_variables(self) -> int:
        return self.location.size


@dataclass(frozen=True)
class SampleMatrix:
    """N x n observation matrix: rows are variables, columns are time points."""

    data: np.ndarray
    n: int

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.ndim != 2:
            raise ValueError("sample data must be a 2-d matrix")
        if data.shape[1] != self.n:
            raise ValueError(f"n={self.n} does not match data shape {data.shape}")
        if self.n < 2:
            raise SampleSizeError(f"need at least 2 observations, got {self.n}")
        if not np.all(np.isfinite(data)):
            raise ValueError("sample contains non-finite entries")
        object.__setattr__(self, "data", data)

    @property
    def n_variables(self) -> int:
        return self.data.shape[0]


def draw_gaussian(model: MixtureModel, rng: np.random.Generator) -> np.ndarray:
    """One observation from the Gaussian component: location + L z."""
    z = rng.standard_normal(model.n_variables)
    return model.location + model.factor @ z


def draw_student(model: MixtureModel, rng: np.random.Generator) -> np.ndarray:
    """One observation from the Student-t component.

    Uses the standard elliptical construction
    ``location + (L z) / sqrt(w / df)`` with ``z`` standard normal and ``w``
    an independent chi-square variate with ``df`` degrees of freedom.  The
    positive scalar divisor leaves signs and correlations unchanged.
    """
    z = rng.standard_normal(model.n_variables)
    w = rng.chisquare(model.df)
    return model.location + (model.factor @ z) / np.sqrt(w / model.df)


def draw_mixture(model: MixtureModel, n: int, rng: np.random.Generator) -> SampleMatrix:
    """Draw ``n`` independent observations from the mixture.

    Each column is Gaussian with probability ``gaussian_weight`` and
    Student-t otherwise.  The stream is consumed in a fixed documented
    order -- one selection uniform per column, then the standard normal
    block, then the chi-square block -- so a given (seed, model, n) always
    reproduces the same matrix bit for bit.

    Parameters
    ----------
    model : MixtureModel
    n : int
        Number of observations (columns); at least 2.
    rng : numpy.random.Generator

    Returns
    -------
    SampleMatrix
    """
    if n < 2:
        raise SampleSizeError(f"need at least 2 observations, got {n}")
    u = rng.random(n)
    z = rng.standard_normal((model.n_variables, n))
    w = rng.chisquare(model.df, n)
    x = model.factor @ z
    student = u >= model.gaussian_weight
    if student.any():
        x[:, student] /= np.sqrt(w[student] / model.df)
    x += model.location[:, None]
    return SampleMatrix(data=x, n=n)


def load_scale_matrix(path: str | Path) -> np.ndarray:
    """Load a scale matrix from plain CSV (comment lines are skipped)."""
    values, _ = read_matrix(path)
    return values
