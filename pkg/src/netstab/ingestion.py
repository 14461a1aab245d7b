"""Build truth matrices from daily price data.

Pipeline: price CSV -> log returns -> sample Pearson matrix, optionally
shrunk toward the identity when it is numerically singular (the sampler
needs a strictly positive definite scale).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DegenerateVariableError, PriceFormatError
from .measures import DependenceMatrix, pearson_sample
from .sampler import SampleMatrix

EIGENVALUE_FLOOR = 1e-8


@dataclass(frozen=True)
class PriceTable:
    """Daily close prices: one row per ticker, one column per trading day."""

    tickers: tuple[str, ...]
    prices: np.ndarray

    def __post_init__(self):
        prices = np.asarray(self.prices, dtype=float)
        if prices.ndim != 2 or prices.shape[0] != len(self.tickers):
            raise ValueError("need one price row per ticker")
        object.__setattr__(self, "prices", prices)

    @property
    def n_days(self) -> int:
        return self.prices.shape[1]


def load_prices(path: str | Path) -> PriceTable:
    """Parse a price CSV: header row of tickers, one row per trading day.

    Every price must parse as a positive decimal; a missing or non-positive
    cell fails the load with its row and column named.
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        rows = [row for row in reader if any(cell.strip() for cell in row)]
    if not rows:
        raise PriceFormatError(f"{path}: empty file")
    tickers = tuple(cell.strip() for cell in rows[0])
    if any(not t for t in tickers):
        raise PriceFormatError(f"{path}: blank ticker name in header")
    if len(set(tickers)) != len(tickers):
        dupes = sorted({t for t in tickers if tickers.count(t) > 1})
        raise PriceFormatError(f"{path}: duplicate ticker(s): {', '.join(dupes)}")
    data_rows = rows[1:]
    if len(data_rows) < 3:
        raise PriceFormatError(
            f"{path}: need at least 3 trading days, found {len(data_rows)}"
        )
    table = np.empty((len(data_rows), len(tickers)))
    for r, row in enumerate(data_rows, start=2):  # 1-based file line numbers
        if len(row) != len(tickers):
            raise PriceFormatError(
                f"{path}:{r}: expected {len(tickers)} prices, found {len(row)}"
            )
        for c, cell in enumerate(row):
            text = cell.strip()
            if not text:
                raise PriceFormatError(
                    f"{path}:{r}: missing price for {tickers[c]}"
                )
            try:
                value = float(text)
            except ValueError:
                raise PriceFormatError(
                    f"{path}:{r}: unparseable price {text!r} for {tickers[c]}"
                ) from None
            if not np.isfinite(value) or value <= 0.0:
                raise PriceFormatError(
                    f"{path}:{r}: non-positive price {text} for {tickers[c]}"
                )
            table[r - 2, c] = value
    return PriceTable(tickers=tickers, prices=table.T)


def to_returns(prices: PriceTable) -> SampleMatrix:
    """Daily log returns, ln(P(t) / P(t-1)); one fewer column than days."""
    p = prices.prices
    returns = np.log(p[:, 1:] / p[:, :-1])
    return SampleMatrix(data=returns, n=returns.shape[1])


def build_truth(returns: SampleMatrix, labels: tuple[str, ...] | None = None) -> DependenceMatrix:
    """Sample Pearson matrix of the return series, usable as a truth.

    A constant return series cannot be correlated with anything; the error
    names the offending ticker when labels are given.
    """
    try:
        return pearson_sample(returns)
    except DegenerateVariableError as exc:
        if labels is not None and 0 <= exc.index < len(labels):
            raise DegenerateVariableError(exc.index, label=labels[exc.index]) from None
        raise


def repair_positive_definite(
    values: np.ndarray, floor: float = EIGENVALUE_FLOOR
) -> tuple[np.ndarray, float]:
    """Shrink a correlation matrix toward the identity until it is PD.

    Returns (repaired matrix, epsilon) where the repair is
    (1 - eps) * C + eps * I with the smallest eps lifting the minimum
    eigenvalue to ``floor``.  eps is 0.0 when no repair is needed.
    Shrinkage preserves the unit diagonal and symmetry.
    """
    values = np.asarray(values, dtype=float)
    lambda_min = float(np.linalg.eigvalsh(values).min())
    if lambda_min >= floor:
        return values, 0.0
    eps = (floor - lambda_min) / (1.0 - lambda_min)
    repaired = (1.0 - eps) * values + eps * np.eye(values.shape[0])
    return repaired, float(eps)
