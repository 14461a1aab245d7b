"""Plain CSV reader/writer for square matrices.

Format: N rows of N comma-separated decimal values with '.' as the decimal
separator.  Lines starting with '#' are treated as comments; an optional
``# kind: <token>`` comment carries the measure kind of a dependence matrix.
Writing uses ``repr`` for floats, so a read/write round trip is byte exact.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import MatrixFormatError

KIND_PREFIX = "# kind:"


def read_matrix(path: str | Path) -> tuple[np.ndarray, str | None]:
    """Read a square matrix; returns ``(values, kind_token_or_None)``."""
    path = Path(path)
    kind: str | None = None
    rows: list[list[float]] = []
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if stripped.lower().startswith(KIND_PREFIX):
                kind = stripped[len(KIND_PREFIX):].strip()
            continue
        cells = stripped.split(",")
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            raise MatrixFormatError(f"{path}:{lineno}: unparseable value ({exc})") from None
    if not rows:
        raise MatrixFormatError(f"{path}: no data rows")
    n = len(rows)
    if any(len(r) != n for r in rows):
        bad = next(i for i, r in enumerate(rows) if len(r) != n)
        raise MatrixFormatError(
            f"{path}: row {bad + 1} has {len(rows[bad])} values, expected {n} (square matrix)"
        )
    values = np.array(rows, dtype=float)
    if not np.all(np.isfinite(values)):
        raise MatrixFormatError(f"{path}: non-finite entries")
    return values, kind


def format_matrix(values: np.ndarray, kind: str | None = None) -> str:
    lines = []
    if kind is not None:
        lines.append(f"{KIND_PREFIX} {kind}")
    for row in np.asarray(values, dtype=float):
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def write_matrix(path: str | Path, values: np.ndarray, kind: str | None = None) -> None:
    Path(path).write_text(format_matrix(values, kind))
