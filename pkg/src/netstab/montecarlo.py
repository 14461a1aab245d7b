"""Monte-Carlo stability experiments.

For each mixture weight gamma on a grid: repeatedly draw a sample, estimate
both dependence matrices (Pearson and sign) from the same draws, extract the
requested network characteristic from each, compute its divergence from the
corresponding true characteristic, and average over replications.  The output
is one stability curve per measure kind.

Determinism contract: every replication gets its own generator derived from
(seed, gamma index, replication index), so results are a pure function of the
config, independent of worker count and scheduling.
"""

from __future__ import annotations

import json
import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .divergence import (
    degree_divergence,
    histogram_divergence,
    set_divergence,
    topology_match,
)
from .errors import ConfigError, SampleSizeError
from .fixtures import fixture_path, is_fixture_id
from .measures import (
    DependenceMatrix,
    MeasureKind,
    pearson_sample,
    pearson_true,
    sign_probability,
    sign_sample,
    sign_true,
)
from .sampler import MixtureModel, draw_mixture, load_scale_matrix
from .structures import (
    degree_distribution,
    edge_histogram,
    market_graph,
    max_clique,
    max_independent_set,
    maximum_spanning_tree,
    tree_topology,
)

MAX_SEED = 2**64 - 1


class Characteristic(str, Enum):
    HISTOGRAM = "hist"
    DEGREES = "degrees"
    MAX_CLIQUE = "clique"
    MAX_INDEPENDENT_SET = "mis"
    MST_TOPOLOGY = "mst_topology"


class CenterMode(str, Enum):
    TRUE_MU = "true_mu"
    SAMPLE_MEAN = "sample_mean"


# characteristics whose extraction thresholds a market graph
_THRESHOLDED = frozenset(
    {Characteristic.DEGREES, Characteristic.MAX_CLIQUE, Characteristic.MAX_INDEPENDENT_SET}
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one stability experiment.

    ``lambda_source`` is either a fixture id (e.g. ``uk2010``) or a path to a
    scale-matrix CSV.  ``thresholds`` must hold exactly one market-graph
    threshold for the degree/clique/independent-set characteristics; it is
    unused for histograms and spanning-tree topology.  Thresholds are given
    on the correlation scale; the sign-network curve uses the arcsine-mapped
    value so both true market graphs coincide.  ``leading_submatrix`` trims
    the loaded matrix to its leading principal block (the spanning-tree
    experiments use 10x10 truths cut from larger matrices).
    """

    lambda_source: str
    characteristic: Characteristic
    n: int
    replications: int
    gamma_grid: tuple[float, ...]
    thresholds: tuple[float, ...] = ()
    nu: int = 3
    seed: int = 0
    center_mode: CenterMode = CenterMode.TRUE_MU
    leading_submatrix: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "characteristic", Characteristic(self.characteristic))
        object.__setattr__(self, "center_mode", CenterMode(self.center_mode))
        object.__setattr__(self, "gamma_grid", tuple(float(g) for g in self.gamma_grid))
        object.__setattr__(self, "thresholds", tuple(float(t) for t in self.thresholds))
        problems = []
        if not self.lambda_source:
            problems.append("lambda_source: empty")
        if not (isinstance(self.n, int) and self.n >= 2):
            problems.append("n: need an integer >= 2")
        if not (isinstance(self.replications, int) and self.replications >= 1):
            problems.append("replications: need an integer >= 1")
        if not self.gamma_grid:
            problems.append("gamma_grid: empty")
        elif any(not (0.0 <= g <= 1.0) for g in self.gamma_grid):
            problems.append("gamma_grid: values must lie in [0, 1]")
        if not (isinstance(self.nu, int) and self.nu >= 3):
            problems.append("nu: need an integer >= 3")
        if not (isinstance(self.seed, int) and 0 <= self.seed <= MAX_SEED):
            problems.append("seed: need an integer in [0, 2^64)")
        if self.characteristic in _THRESHOLDED:
            if len(self.thresholds) != 1:
                problems.append(
                    "thresholds: exactly one threshold required for "
                    f"characteristic {self.characteristic.value!r}"
                )
            elif not (-1.0 <= self.thresholds[0] <= 1.0):
                problems.append("thresholds: threshold must lie in [-1, 1]")
        if self.leading_submatrix is not None and (
            not isinstance(self.leading_submatrix, int) or self.leading_submatrix < 2
        ):
            problems.append("leading_submatrix: need an integer >= 2")
        if problems:
            raise ConfigError(problems)
        if self.characteristic is Characteristic.MST_TOPOLOGY and self.thresholds:
            warnings.warn(
                "thresholds are ignored for the spanning-tree topology characteristic",
                UserWarning,
                stacklevel=2,
            )

    def to_dict(self) -> dict:
        return {
            "lambda_source": self.lambda_source,
            "characteristic": self.characteristic.value,
            "n": self.n,
            "replications": self.replications,
            "gamma_grid": list(self.gamma_grid),
            "thresholds": list(self.thresholds),
            "nu": self.nu,
            "seed": self.seed,
            "center_mode": self.center_mode.value,
            "leading_submatrix": self.leading_submatrix,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        if not isinstance(raw, dict):
            raise ConfigError(["config: expected a JSON object"])
        known = {
            "lambda_source",
            "characteristic",
            "n",
            "replications",
            "gamma_grid",
            "thresholds",
            "nu",
            "seed",
            "center_mode",
            "leading_submatrix",
        }
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ConfigError([f"unknown field {name!r}" for name in unknown])
        missing = [
            name
            for name in ("lambda_source", "characteristic", "n", "replications", "gamma_grid")
            if name not in raw
        ]
        if missing:
            raise ConfigError([f"missing field {name!r}" for name in missing])
        try:
            characteristic = Characteristic(raw["characteristic"])
        except ValueError:
            allowed = ", ".join(c.value for c in Characteristic)
            raise ConfigError(
                [f"characteristic: {raw['characteristic']!r} not one of {allowed}"]
            ) from None
        center_raw = raw.get("center_mode", CenterMode.TRUE_MU.value)
        try:
            center = CenterMode(center_raw)
        except ValueError:
            allowed = ", ".join(c.value for c in CenterMode)
            raise ConfigError(
                [f"center_mode: {center_raw!r} not one of {allowed}"]
            ) from None
        return cls(
            lambda_source=raw["lambda_source"],
            characteristic=characteristic,
            n=raw["n"],
            replications=raw["replications"],
            gamma_grid=tuple(raw["gamma_grid"]),
            thresholds=tuple(raw.get("thresholds", ())),
            nu=raw.get("nu", 3),
            seed=raw.get("seed", 0),
            center_mode=center,
            leading_submatrix=raw.get("leading_submatrix"),
        )


def load_config(path: str | Path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError([f"config is not valid JSON: {exc}"]) from exc
    return ExperimentConfig.from_dict(raw)


@dataclass(frozen=True)
class CurvePoint:
    gamma: float
    mean_divergence: float
    std_error: float
    replications: int

    def __post_init__(self):
        if self.std_error < 0.0:
            raise ValueError("std_error must be non-negative")


@dataclass(frozen=True)
class StabilityCurve:
    """Averaged divergence (or topology match) per gamma for one measure kind."""

    measure_kind: MeasureKind
    characteristic: Characteristic
    points: tuple[CurvePoint, ...] = field(default_factory=tuple)


def rng_for_replication(seed: int, gamma_index: int, replication: int) -> np.random.Generator:
    """Independent generator for one (gamma, replication) work unit.

    Splitting the master seed through a spawn key makes any subset of the
    work recomputable in isolation, which is what keeps the experiment
    deterministic under parallel execution.
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(gamma_index, replication))
    return np.random.default_rng(ss)


def resolve_lambda_source(source: str) -> str | Path:
    return fixture_path(source) if is_fixture_id(source) else Path(source)


def _load_truth_scale(config: ExperimentConfig) -> np.ndarray:
    scale = load_scale_matrix(resolve_lambda_source(config.lambda_source))
    if config.leading_submatrix is not None:
        k = config.leading_submatrix
        if k > scale.shape[0]:
            raise ConfigError(
                [f"leading_submatrix: {k} exceeds matrix size {scale.shape[0]}"]
            )
        scale = scale[:k, :k].copy()
    return scale


def _true_characteristic(truth: DependenceMatrix, characteristic: Characteristic, threshold: float | None):
    if characteristic is Characteristic.HISTOGRAM:
        return edge_histogram(truth)
    if characteristic is Characteristic.MST_TOPOLOGY:
        return tree_topology(maximum_spanning_tree(truth))
    graph = market_graph(truth, threshold)
    if characteristic is Characteristic.DEGREES:
        return degree_distribution(graph)
    if characteristic is Characteristic.MAX_CLIQUE:
        return max_clique(graph)
    return max_independent_set(graph)


def _sample_characteristic(estimate: DependenceMatrix, characteristic: Characteristic, threshold: float | None):
    return _true_characteristic(estimate, characteristic, threshold)


_DIVERGENCE = {
    Characteristic.HISTOGRAM: histogram_divergence,
    Characteristic.DEGREES: degree_divergence,
    Characteristic.MAX_CLIQUE: set_divergence,
    Characteristic.MAX_INDEPENDENT_SET: set_divergence,
    Characteristic.MST_TOPOLOGY: topology_match,
}


def _thresholds_for(config: ExperimentConfig) -> tuple[float | None, float | None]:
    # sign-network threshold is the arcsine image of the correlation threshold
    if config.characteristic in _THRESHOLDED:
        gamma0 = config.thresholds[0]
        return gamma0, float(sign_probability(gamma0))
    return None, None


def _replication_block(
    scale: np.ndarray,
    config: ExperimentConfig,
    gamma_index: int,
    gamma: float,
    start: int,
    stop: int,
) -> tuple[list[float], list[float]]:
    """Divergences for replications [start, stop) at one gamma value."""
    model = MixtureModel(
        location=np.zeros(scale.shape[0]),
        scale=scale,
        df=config.nu,
        gaussian_weight=gamma,
    )
    truth_p = pearson_true(scale)
    truth_s = sign_true(truth_p)
    thr_p, thr_s = _thresholds_for(config)
    char = config.characteristic
    true_char_p = _true_characteristic(truth_p, char, thr_p)
    true_char_s = _true_characteristic(truth_s, char, thr_s)
    div = _DIVERGENCE[char]
    out_p: list[float] = []
    out_s: list[float] = []
    for r in range(start, stop):
        rng = rng_for_replication(config.seed, gamma_index, r)
        sample = draw_mixture(model, config.n, rng)
        if config.center_mode is CenterMode.SAMPLE_MEAN:
            center = sample.data.mean(axis=1)
        else:
            center = model.location
        est_p = pearson_sample(sample)
        est_s = sign_sample(sample, center)
        out_p.append(div(_sample_characteristic(est_p, char, thr_p), true_char_p))
        out_s.append(div(_sample_characteristic(est_s, char, thr_s), true_char_s))
    return out_p, out_s


def _block_bounds(replications: int, workers: int) -> list[tuple[int, int]]:
    # fixed-size blocks; the split never affects results, only scheduling
    n_blocks = min(replications, max(1, workers * 4))
    size = math.ceil(replications / n_blocks)
    return [(s, min(s + size, replications)) for s in range(0, replications, size)]


def run_experiment(
    config: ExperimentConfig, workers: int | None = None
) -> tuple[StabilityCurve, StabilityCurve]:
    """Run the full experiment; returns the (Pearson, sign) stability curves."""
    scale = _load_truth_scale(config)
    # validate positive definiteness up front (raises with the failing pivot)
    MixtureModel(
        location=np.zeros(scale.shape[0]),
        scale=scale,
        df=config.nu,
        gaussian_weight=1.0,
    )
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, int(workers))

    per_gamma: list[tuple[np.ndarray, np.ndarray]] = []
    if workers == 1:
        for gi, gamma in enumerate(config.gamma_grid):
            p, s = _replication_block(scale, config, gi, gamma, 0, config.replications)
            per_gamma.append((np.asarray(p), np.asarray(s)))
    else:
        bounds = _block_bounds(config.replications, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                [
                    pool.submit(_replication_block, scale, config, gi, gamma, start, stop)
                    for start, stop in bounds
                ]
                for gi, gamma in enumerate(config.gamma_grid)
            ]
            for row in futures:
                p_parts: list[float] = []
                s_parts: list[float] = []
                for fut in row:  # fixed submission order, not completion order
                    p, s = fut.result()
                    p_parts.extend(p)
                    s_parts.extend(s)
                per_gamma.append((np.asarray(p_parts), np.asarray(s_parts)))

    def summarize(values: np.ndarray, gamma: float) -> CurvePoint:
        reps = values.size
        se = float(values.std(ddof=1) / math.sqrt(reps)) if reps > 1 else 0.0
        return CurvePoint(
            gamma=float(gamma),
            mean_divergence=float(values.mean()),
            std_error=se,
            replications=reps,
        )

    pearson_points = tuple(
        summarize(p, g) for (p, _), g in zip(per_gamma, config.gamma_grid)
    )
    sign_points = tuple(
        summarize(s, g) for (_, s), g in zip(per_gamma, config.gamma_grid)
    )
    return (
        StabilityCurve(MeasureKind.PEARSON, config.characteristic, pearson_points),
        StabilityCurve(MeasureKind.SIGN, config.characteristic, sign_points),
    )


def summarize_flatness(curve: StabilityCurve) -> tuple[float, float | None]:
    """Curve spread: (max mean - min mean, same normalized by the grand mean).

    The normalized value is None when the grand mean is not positive.
    """
    if len(curve.points) < 2:
        raise SampleSizeError("flatness needs a curve with at least two points")
    means = [p.mean_divergence for p in curve.points]
    absolute = max(means) - min(means)
    grand = sum(means) / len(means)
    normalized = absolute / grand if grand > 0 else None
    return absolute, normalized


CURVE_CSV_HEADER = "gamma,measure_kind,characteristic,mean_divergence,std_error,replications"


def format_curves_csv(curves: tuple[StabilityCurve, ...] | list[StabilityCurve]) -> str:
    lines = [CURVE_CSV_HEADER]
    for curve in curves:
        for pt in curve.points:
            lines.append(
                ",".join(
                    (
                        repr(pt.gamma),
                        curve.measure_kind.value,
                        curve.characteristic.value,
                        repr(pt.mean_divergence),
                        repr(pt.std_error),
                        str(pt.replications),
                    )
                )
            )
    return "\n".join(lines) + "\n"


def sidecar_path(csv_path: str | Path) -> Path:
    csv_path = Path(csv_path)
    return csv_path.with_name(csv_path.stem + ".config.json")


def write_curves_csv(
    path: str | Path,
    curves: tuple[StabilityCurve, ...] | list[StabilityCurve],
    config: ExperimentConfig,
) -> None:
    """Write the curve CSV plus a JSON sidecar echoing the config.

    The sidecar lands next to the CSV as ``<stem>.config.json``.  Output is
    byte-deterministic for a given (curves, config) pair.
    """
    path = Path(path)
    path.write_text(format_curves_csv(curves), encoding="utf-8")
    sidecar_path(path).write_text(
        json.dumps(config.to_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
