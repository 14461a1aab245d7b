"""Command-line interface.

Three commands:

``truth``       build a truth matrix from a price CSV (or re-emit a fixture)
``structures``  extract one true characteristic from a matrix as JSON
``experiment``  run a stability experiment and write the curve CSV + sidecar

Exit codes: 0 success, 1 runtime failure (e.g. a matrix that is not positive
definite), 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

import numpy as np

from .errors import ConfigError, MatrixFormatError, NetstabError, PriceFormatError
from .fixtures import FIXTURE_IDS, fixture_path
from .ingestion import build_truth, load_prices, repair_positive_definite, to_returns
from .matrixio import write_matrix
from .measures import load_dependence_csv
from .montecarlo import (
    load_config,
    run_experiment,
    sidecar_path,
    summarize_flatness,
    write_curves_csv,
)
from .structures import (
    degree_distribution,
    edge_histogram,
    market_graph,
    max_clique,
    max_independent_set,
    maximum_spanning_tree,
    tree_topology,
)

STRUCTURE_KINDS = ("hist", "degrees", "clique", "mis", "mst", "mst-topology")
_NEEDS_THRESHOLD = {"degrees", "clique", "mis"}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="override the experiment seed")
    common.add_argument(
        "--workers", type=int, default=None, help="worker processes (default: all cores)"
    )
    common.add_argument(
        "--fixture",
        choices=FIXTURE_IDS,
        default=None,
        help="use a bundled truth matrix instead of an input file",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="netstab",
        description="Stability analysis of market-network identification procedures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_truth = sub.add_parser(
        "truth", parents=[common], help="build a truth matrix from daily prices"
    )
    p_truth.add_argument("prices_csv", nargs="?", help="price CSV (omit with --fixture)")
    p_truth.add_argument("out_matrix_csv", help="where to write the truth matrix")
    p_truth.set_defaults(func=cmd_truth)

    p_struct = sub.add_parser(
        "structures", parents=[common], help="extract a true characteristic as JSON"
    )
    p_struct.add_argument("matrix_csv", nargs="?", help="matrix CSV (omit with --fixture)")
    p_struct.add_argument("kind", choices=STRUCTURE_KINDS)
    p_struct.add_argument("out_json")
    p_struct.add_argument(
        "--gamma0",
        type=float,
        default=None,
        help="market-graph threshold (required for degrees/clique/mis)",
    )
    p_struct.set_defaults(func=cmd_structures)

    p_exp = sub.add_parser(
        "experiment", parents=[common], help="run a stability experiment"
    )
    p_exp.add_argument("config_json")
    p_exp.add_argument("out_csv")
    p_exp.set_defaults(func=cmd_experiment)
    return parser


def _resolve_input(parser_hint: str, path_arg: str | None, fixture: str | None) -> Path:
    if fixture is not None:
        if path_arg is not None:
            raise ConfigError([f"{parser_hint}: give either a file or --fixture, not both"])
        return fixture_path(fixture)
    if path_arg is None:
        raise ConfigError([f"{parser_hint}: an input file or --fixture is required"])
    path = Path(path_arg)
    if not path.is_file():
        raise FileNotFoundError(f"no such input: {path}")
    return path


def cmd_truth(args) -> int:
    out = Path(args.out_matrix_csv)
    if args.fixture is not None:
        source = _resolve_input("truth", args.prices_csv, args.fixture)
        matrix = load_dependence_csv(source)
        values, eps = matrix.values, 0.0
    else:
        source = _resolve_input("truth", args.prices_csv, None)
        prices = load_prices(source)
        returns = to_returns(prices)
        truth = build_truth(returns, labels=prices.tickers)
        values, eps = repair_positive_definite(truth.values)
    write_matrix(out, values)
    n = values.shape[0]
    off = values[~np.eye(n, dtype=bool)]
    print(f"wrote {out}: {n}x{n} truth matrix")
    print(f"off-diagonal range: [{off.min():.4f}, {off.max():.4f}]")
    if eps > 0.0:
        print(f"positive-definite repair applied: eps = {eps:.3e}")
    return 0


def cmd_structures(args) -> int:
    source = _resolve_input("structures", args.matrix_csv, args.fixture)
    matrix = load_dependence_csv(source)
    kind = args.kind
    gamma0 = args.gamma0
    if kind in _NEEDS_THRESHOLD and gamma0 is None:
        raise ConfigError([f"structures: kind {kind!r} requires --gamma0"])
    if kind not in _NEEDS_THRESHOLD and gamma0 is not None:
        print(f"note: --gamma0 is ignored for kind {kind!r}", file=sys.stderr)

    if kind == "hist":
        obj = edge_histogram(matrix)
    elif kind == "mst":
        obj = maximum_spanning_tree(matrix)
    elif kind == "mst-topology":
        obj = tree_topology(maximum_spanning_tree(matrix))
    else:
        graph = market_graph(matrix, gamma0)
        if kind == "degrees":
            obj = degree_distribution(graph)
        elif kind == "clique":
            obj = max_clique(graph)
        else:
            obj = max_independent_set(graph)

    payload = {"kind": kind, "measure_kind": matrix.kind.value, "source": str(source)}
    if kind in _NEEDS_THRESHOLD:
        payload["gamma0"] = gamma0
    payload.update(obj.as_dict())
    out = Path(args.out_json)
    out.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")
    return 0


def cmd_experiment(args) -> int:
    config_path = Path(args.config_json)
    if not config_path.is_file():
        raise FileNotFoundError(f"no such input: {config_path}")
    config = load_config(config_path)
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    if args.fixture is not None:
        config = dataclasses.replace(config, lambda_source=args.fixture)

    started = time.perf_counter()
    curves = run_experiment(config, workers=args.workers)
    elapsed = time.perf_counter() - started

    out = Path(args.out_csv)
    write_curves_csv(out, curves, config)
    n_rows = sum(len(c.points) for c in curves)
    print(f"wrote {out} ({n_rows} rows) and {sidecar_path(out)}")
    print(f"wall time: {elapsed:.2f} s")
    for curve in curves:
        if len(curve.points) < 2:
            print(f"{curve.measure_kind.value} flatness: n/a (single point)")
            continue
        absolute, normalized = summarize_flatness(curve)
        norm_text = f"{normalized:.4f}" if normalized is not None else "n/a"
        print(
            f"{curve.measure_kind.value} flatness: {absolute:.4f} absolute, "
            f"{norm_text} normalized"
        )
    return 0


_USAGE_ERRORS = (ConfigError, MatrixFormatError, PriceFormatError, FileNotFoundError, KeyError)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2
    except (NetstabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
