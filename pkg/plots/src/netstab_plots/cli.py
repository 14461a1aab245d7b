"""Command-line entry point: batch-render curve CSVs to PNG figures.

Exit codes match the simulator CLI: 0 success, 1 runtime failure, 2 usage
or input-format error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import CurveFormatError, config_hash, render_curves, render_directory


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netstab-plots",
        description="Render stability-curve CSVs as figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_render = sub.add_parser("render", help="render a curve CSV or a directory of them")
    p_render.add_argument("source", help="curve CSV file or a directory containing them")
    p_render.add_argument("--out", required=True, help="output directory for images")
    p_render.set_defaults(func=cmd_render)
    return parser


def cmd_render(args) -> int:
    source = Path(args.source)
    out_dir = Path(args.out)
    if source.is_dir():
        written = render_directory(source, out_dir)
    elif source.is_file():
        written = [render_curves(source, out_dir / f"{source.stem}-{config_hash(source)}.png")]
    else:
        raise FileNotFoundError(f"no such input: {source}")
    for path in written:
        print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CurveFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
