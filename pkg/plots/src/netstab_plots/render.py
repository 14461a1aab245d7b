"""Render stability-curve CSVs as figures.

Consumes exactly the curve CSV schema the netstab `experiment` command
emits (columns gamma, measure_kind, characteristic, mean_divergence,
std_error, replications) plus its optional `<stem>.config.json` sidecar.
This package never imports the simulator; the CSV is the whole contract.

Convention: the sign-network series is red, the Pearson series blue, the
x-axis is the mixture weight gamma.
"""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from matplotlib.figure import Figure

REQUIRED_COLUMNS = (
    "gamma",
    "measure_kind",
    "characteristic",
    "mean_divergence",
    "std_error",
    "replications",
)

SERIES_COLORS = {"sign": "red", "pearson": "blue"}


class CurveFormatError(ValueError):
    """The input file does not follow the curve CSV schema."""


@dataclass
class CurveSeries:
    """One measure kind's curve: parallel per-point lists in file order."""

    measure_kind: str
    characteristic: str
    gammas: list[float] = field(default_factory=list)
    means: list[float] = field(default_factory=list)
    std_errors: list[float] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.gammas)


def read_curves(csv_path: str | Path) -> list[CurveSeries]:
    """Parse a curve CSV into one series per measure kind, in file order."""
    csv_path = Path(csv_path)
    with open(csv_path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in REQUIRED_COLUMNS if c not in (reader.fieldnames or ())]
        if missing:
            raise CurveFormatError(
                f"{csv_path}: missing column(s): {', '.join(missing)}"
            )
        rows = list(reader)
    if not rows:
        raise CurveFormatError(f"{csv_path}: no data rows")
    series: dict[str, CurveSeries] = {}
    order: list[str] = []
    for lineno, row in enumerate(rows, start=2):
        try:
            gamma = float(row["gamma"])
            mean = float(row["mean_divergence"])
            std_error = float(row["std_error"])
        except (TypeError, ValueError):
            raise CurveFormatError(f"{csv_path}:{lineno}: unparseable numeric field") from None
        kind = row["measure_kind"]
        if kind not in series:
            series[kind] = CurveSeries(
                measure_kind=kind, characteristic=row["characteristic"]
            )
            order.append(kind)
        current = series[kind]
        if row["characteristic"] != current.characteristic:
            raise CurveFormatError(
                f"{csv_path}:{lineno}: mixed characteristics in one file"
            )
        current.gammas.append(gamma)
        current.means.append(mean)
        current.std_errors.append(std_error)
    return [series[k] for k in order]


def sidecar_path(csv_path: str | Path) -> Path:
    csv_path = Path(csv_path)
    return csv_path.with_name(csv_path.stem + ".config.json")


def read_sidecar(csv_path: str | Path) -> dict | None:
    """Config sidecar contents, or None when the file is absent/unreadable."""
    path = sidecar_path(csv_path)
    if not path.is_file():
        return None
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    return raw if isinstance(raw, dict) else None


def figure_title(config: dict | None, series: list[CurveSeries]) -> str:
    characteristic = series[0].characteristic if series else "curves"
    if config is None:
        return f"{characteristic} stability"
    parts = [f"{config.get('characteristic', characteristic)} stability"]
    if config.get("lambda_source"):
        parts.append(f"truth {config['lambda_source']}")
    if config.get("n"):
        parts.append(f"n={config['n']}")
    thresholds = config.get("thresholds") or []
    if thresholds:
        parts.append(f"threshold {thresholds[0]:g}")
    if config.get("replications"):
        parts.append(f"{config['replications']} replications")
    return ", ".join(parts)


def y_axis_label(series: list[CurveSeries]) -> str:
    if series and all(s.characteristic == "mst_topology" for s in series):
        return "topology match probability"
    return "divergence"


def build_figure(series: list[CurveSeries], title: str) -> Figure:
    """Line chart with one error-barred series per measure kind."""
    if not series:
        raise CurveFormatError("nothing to plot")
    fig = Figure(figsize=(7.0, 4.5))
    ax = fig.add_subplot(111)
    for s in series:
        ax.errorbar(
            s.gammas,
            s.means,
            yerr=s.std_errors,
            label=s.measure_kind,
            color=SERIES_COLORS.get(s.measure_kind, "gray"),
            marker="o",
            capsize=3,
        )
    ax.set_xlabel("mixture weight (probability of the Gaussian component)")
    ax.set_ylabel(y_axis_label(series))
    ax.set_title(title)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    return fig


def config_hash(csv_path: str | Path) -> str:
    """Short content hash for traceable figure filenames.

    Hashes the config sidecar when present (same config, same name), falling
    back to the CSV bytes.
    """
    source = sidecar_path(csv_path)
    if not source.is_file():
        source = Path(csv_path)
    return hashlib.sha256(source.read_bytes()).hexdigest()[:10]


def render_curves(curve_csv: str | Path, out_image: str | Path) -> Path:
    """Render one CSV to one image file; returns the image path."""
    curve_csv = Path(curve_csv)
    series = read_curves(curve_csv)
    title = figure_title(read_sidecar(curve_csv), series)
    fig = build_figure(series, title)
    out_image = Path(out_image)
    out_image.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out_image)
    return out_image


def render_directory(source_dir: str | Path, out_dir: str | Path) -> list[Path]:
    """Render every curve CSV in a directory; returns the written images."""
    source_dir = Path(source_dir)
    csvs = sorted(p for p in source_dir.glob("*.csv"))
    if not csvs:
        raise CurveFormatError(f"{source_dir}: no curve CSVs found")
    out_dir = Path(out_dir)
    written = []
    for path in csvs:
        out = out_dir / f"{path.stem}-{config_hash(path)}.png"
        written.append(render_curves(path, out))
    return written
