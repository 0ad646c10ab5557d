"""Command-line interface.

Subcommands: ``stats``, ``select``, ``evaluate``, ``correlate``, ``gen``.
Exit codes: 0 success, 2 usage/input errors, 3 internal invariant
violations.  Diagnostics go to stderr; data goes to stdout or ``--out``.
Identical invocations on identical inputs emit byte-identical output.

The ``NETCOVER_THREADS`` environment variable caps internal parallelism;
every computation in this package is currently sequential (and therefore
deterministic), so any cap >= 1 is honored as-is.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import render
from .centrality import Rank
from .coverage import centrality_rank_select, greedy_select
from .evaluation import (
    METHODS,
    centrality_rank,
    coverage_table,
    default_ks,
    rank_correlation_report,
)
from .generators import gen_erdos_renyi, gen_preferential
from .graph import DirectedGraph, ParseError, graph_stats, parse_edge_list, to_csv, to_json

_MODEL_ALIASES = {
    "er": "erdos_renyi",
    "erdos_renyi": "erdos_renyi",
    "pa": "preferential_attachment",
    "preferential_attachment": "preferential_attachment",
}


def thread_cap() -> int:
    """Parse NETCOVER_THREADS; 0 means uncapped.  Invalid values are ignored."""
    raw = os.environ.get("NETCOVER_THREADS")
    if raw is None:
        return 0
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        print(f"warning: ignoring invalid NETCOVER_THREADS={raw!r}", file=sys.stderr)
        return 0
    return cap


def _load_graph(path: str, fmt: str | None) -> DirectedGraph:
    text = Path(path).read_text(encoding="utf-8")
    if fmt is None:
        fmt = "json" if path.endswith(".json") else "csv"
    return parse_edge_list(text, fmt)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _add_io_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("graph", help="path to a CSV edge list or JSON graph file")
    sub.add_argument(
        "--input-format",
        choices=("csv", "json"),
        default=None,
        help="override input format detection (default: by file extension)",
    )
    sub.add_argument(
        "--format",
        choices=render.FORMATS,
        default="markdown",
        help="output format (default: markdown)",
    )
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netcover",
        description="Directed-graph coverage analytics: greedy seed selection, "
        "centrality rankings, and evaluation tables.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("stats", help="node/edge counts, density, average degree")
    _add_io_args(p)
    p.set_defaults(handler=_cmd_stats)

    p = subs.add_parser("select", help="pick nodes by greedy coverage or a centrality rank")
    _add_io_args(p)
    p.add_argument("--method", required=True, choices=METHODS)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--target", type=float, help="coverage fraction in (0, 1]")
    group.add_argument("--k", type=int, help="number of nodes to select")
    p.set_defaults(handler=_cmd_select)

    p = subs.add_parser("evaluate", help="coverage-vs-k table for every method")
    _add_io_args(p)
    p.add_argument(
        "--ks",
        default=None,
        help="comma-separated ascending counts (default: 1-5,10..50 clamped to n)",
    )
    p.set_defaults(handler=_cmd_evaluate)

    p = subs.add_parser(
        "correlate", help="Spearman rho between the greedy rank and each centrality"
    )
    _add_io_args(p)
    p.set_defaults(handler=_cmd_correlate)

    p = subs.add_parser("gen", help="generate a seeded synthetic graph")
    p.add_argument("--model", required=True, choices=sorted(_MODEL_ALIASES))
    p.add_argument("--n", required=True, type=int, help="node count")
    p.add_argument("--p", type=float, help="edge probability (erdos_renyi)")
    p.add_argument(
        "--epn", type=int, help="edges per arriving node (preferential_attachment)"
    )
    p.add_argument("--seed", required=True, type=int)
    p.add_argument(
        "--format",
        choices=("csv", "json"),
        default="json",
        help="graph file format (default: json; csv drops isolated nodes)",
    )
    p.add_argument("--out", default=None, help="write the graph to this file")
    p.set_defaults(handler=_cmd_gen)

    return parser


def _cmd_stats(args: argparse.Namespace) -> str:
    g = _load_graph(args.graph, args.input_format)
    return render.render_stats(graph_stats(g), args.format)


def _rank_prefix_to_target(g: DirectedGraph, rank: Rank, target: float):
    if not 0.0 < target <= 1.0:
        raise ValueError(f"target must be in (0, 1], got {target}")
    sel = centrality_rank_select(g, rank, g.n)
    for i, cov in enumerate(sel.cumulative):
        if cov >= target:
            return sel.truncated(i + 1)
    return sel


def _cmd_select(args: argparse.Namespace) -> str:
    g = _load_graph(args.graph, args.input_format)
    if args.method == "greedy":
        if args.target is not None:
            sel = greedy_select(g, args.target)
        else:
            if not 1 <= args.k <= g.n:
                raise ValueError(f"k must be in [1, {g.n}], got {args.k}")
            sel = greedy_select(g, 1.0).truncated(args.k)
    else:
        rank = centrality_rank(g, args.method)
        if args.k is not None:
            sel = centrality_rank_select(g, rank, args.k)
        else:
            sel = _rank_prefix_to_target(g, rank, args.target)
    return render.render_selection(sel, args.format)


def _cmd_evaluate(args: argparse.Namespace) -> str:
    g = _load_graph(args.graph, args.input_format)
    if args.ks is None:
        ks = default_ks(g.n)
    else:
        try:
            ks = tuple(int(part) for part in args.ks.split(","))
        except ValueError:
            raise ValueError(f"--ks must be comma-separated integers, got {args.ks!r}")
    return render.render_table(coverage_table(g, ks), args.format)


def _cmd_correlate(args: argparse.Namespace) -> str:
    g = _load_graph(args.graph, args.input_format)
    return render.render_matrix(rank_correlation_report(g), args.format)


def _cmd_gen(args: argparse.Namespace) -> str:
    model = _MODEL_ALIASES[args.model]
    if model == "erdos_renyi":
        if args.p is None:
            raise ValueError("--p is required for the erdos_renyi model")
        if args.epn is not None:
            raise ValueError("--epn does not apply to the erdos_renyi model")
        g = gen_erdos_renyi(args.n, args.p, args.seed)
    else:
        if args.epn is None:
            raise ValueError("--epn is required for the preferential_attachment model")
        if args.p is not None:
            raise ValueError("--p does not apply to the preferential_attachment model")
        g = gen_preferential(args.n, args.epn, args.seed)
    return to_json(g) if args.format == "json" else to_csv(g)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    thread_cap()
    try:
        text = args.handler(args)
        _emit(text, getattr(args, "out", None))
    except (ParseError, ValueError, LookupError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - invariant violations map to exit 3
        print(f"internal error: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
