"""Figure rendering for stability-curve CSVs."""

from .render import (
    CurveFormatError,
    CurveSeries,
    build_figure,
    config_hash,
    read_curves,
    read_sidecar,
    render_curves,
    render_directory,
)

__version__ = "0.1.0"
