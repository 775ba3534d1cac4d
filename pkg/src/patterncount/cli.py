"""Command-line entry point: count, search, verify, catalog."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .cache import ResultCache
from .counting import count_colorings, default_workers
from .errors import BudgetExceeded, LemmaInapplicable
from .extremal import search_all_graphs, search_multipartite
from .graphs import graph_key, parse_graph
from .patterns import CATALOG_NAMES, catalog, load_pattern
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="patterncount", description="Count edge colourings avoiding a coloured clique pattern.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count good colourings of one graph")
    c.add_argument("--graph", required=True, help="K<n>, turan:<n>:<k>, parts:<a,b,..>, path:<n>, cycle:<n>, empty:<n>, graph6, or a .g6/.json file")
    c.add_argument("--pattern", required=True, help="catalogue name or pattern JSON file")
    c.add_argument("--colors", type=_positive_int, required=True)
    c.add_argument("--threads", type=_positive_int, default=None)
    c.add_argument("--max-nodes", type=_positive_int, default=None)
    c.add_argument("--max-seconds", type=_positive_float, default=None)
    c.add_argument("--edge-order", default="colex", help="colex, lex, reverse or random:<seed>")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--cache-dir", default=None)

    s = sub.add_parser("search", help="find the graphs with the most good colourings")
    s.add_argument("--n", type=_positive_int, required=True)
    s.add_argument("--pattern", default="R0")
    s.add_argument("--colors", type=_positive_int, default=3)
    s.add_argument("--mode", choices=("all-graphs", "multipartite"), default="multipartite")
    s.add_argument("--threads", type=_positive_int, default=None)
    s.add_argument("--cache-dir", default=None)

    v = sub.add_parser("verify", help="run a self-check suite")
    v.add_argument("suite", help=", ".join(SUITES))

    sub.add_parser("catalog", help="list the named patterns")
    return p


def _emit(out, payload: dict) -> None:
    out.write(json.dumps(payload, sort_keys=True) + "\n")


def cmd_count(args, out) -> int:
    graph = parse_graph(args.graph)
    pattern = load_pattern(args.pattern)
    workers = args.threads or default_workers()
    cache = ResultCache.from_env(args.cache_dir)
    key = graph_key(graph)
    cached = cache.get(graph.n, args.colors, pattern.code_hex, graph6=key) if cache is not None else None
    if cached is not None:
        payload = {"count": str(cached), "graph": key, "pattern_code": pattern.code_hex, "r": args.colors, "cached": True}
    else:
        res = count_colorings(
            graph,
            pattern,
            args.colors,
            order=args.edge_order,
            workers=workers,
            max_nodes=args.max_nodes,
            max_seconds=args.max_seconds,
        )
        if cache is not None:
            cache.put(graph.n, args.colors, pattern.code_hex, res.count, graph6=key)
        payload = res.to_json()
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "pattern_code", "r", "count"])
        w.writerow([payload["graph"], payload["pattern_code"], payload["r"], payload["count"]])
        out.write(buf.getvalue())
    else:
        _emit(out, payload)
    return EXIT_OK


def cmd_search(args, out) -> int:
    pattern = load_pattern(args.pattern)
    cache = ResultCache.from_env(args.cache_dir)
    if args.mode == "all-graphs":
        rep = search_all_graphs(args.n, pattern, args.colors, workers=args.threads or default_workers(), cache=cache)
    else:
        rep = search_multipartite(args.n, pattern, args.colors, cache=cache)
    _emit(out, rep.to_json())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    res = run_suite(args.suite)
    _emit(out, res.to_json())
    return EXIT_OK if res.ok else EXIT_VERIFY


def cmd_catalog(args, out) -> int:
    names = [n for n in CATALOG_NAMES if "<" not in n] + ["MONO3", "MONO4", "RAINBOW4"]
    for name in names:
        p = catalog(name)
        _emit(out, {"name": name, "k": p.k, "classes": p.num_classes, "code": p.code_hex})
    return EXIT_OK


COMMANDS = {"count": cmd_count, "search": cmd_search, "verify": cmd_verify, "catalog": cmd_catalog}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (ValueError, KeyError, LemmaInapplicable, OSError) as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
