"""Command-line surface: gen, run, compare, ttest, fixtures.

Exit codes: 0 success, 1 runtime failure, 2 usage error.  The verdict of a
comparison is data, not a failure, so compare exits 0 either way.  The
--seed flag falls back to the EXTINF_BENCH_SEED environment variable.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import bench, generators, graphs, stats
from .fixtures import FIXTURE_NAMES, ROAD_ROUTES, fixture, primary_fixture_names
from .shortest_path import DOMAINS, SENTINEL, UnknownNodeError

SEED_ENV_VAR = "EXTINF_BENCH_SEED"


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extinf",
        description=(
            "Benchmark a sentinel infinity against IEEE +inf inside a "
            "linear-scan shortest-path search."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    gen = sub.add_parser("gen", help="generate a graph from a seeded parametric spec")
    gen.add_argument("--kind", required=True, choices=generators.KINDS)
    gen.add_argument("--nodes", required=True, type=int, metavar="N")
    gen.add_argument("--weight-range", default="1,10", metavar="LO,HI")
    gen.add_argument(
        "--weights",
        metavar="W1,W2,...",
        help="explicit per-edge weights (linear_chain, star, cycle only)",
    )
    gen.add_argument(
        "--seed", type=int, metavar="S", help=f"defaults to ${SEED_ENV_VAR}, then 0"
    )
    gen.add_argument("-o", "--output", metavar="FILE")

    run = sub.add_parser("run", help="time one arm on one graph, emit timing CSV")
    run.add_argument("--graph", metavar="FILE")
    run.add_argument("--fixture", metavar="NAME")
    run.add_argument("--domain", choices=sorted(DOMAINS), default=SENTINEL.name)
    run.add_argument("--source", metavar="NODE")
    run.add_argument("--iterations", type=int, default=50_000)
    run.add_argument("--repetitions", type=int, default=1)
    run.add_argument("-o", "--output", metavar="FILE")

    compare = sub.add_parser(
        "compare", help="paired baseline/sentinel benchmark plus Welch's t-test"
    )
    compare.add_argument("--fixtures", metavar="all|NAME[,NAME...]")
    compare.add_argument(
        "--graph", action="append", default=[], metavar="FILE", help="repeatable"
    )
    compare.add_argument("--source", metavar="NODE", help="applies to every graph")
    compare.add_argument("--iterations", type=int, default=50_000)
    compare.add_argument("--repetitions", type=int, default=2)
    compare.add_argument("--alpha", type=float, default=0.01)
    compare.add_argument("--format", choices=("table", "csv", "json"), default="table")
    compare.add_argument("-o", "--output", metavar="FILE")

    ttest = sub.add_parser("ttest", help="Welch's t-test over two CSV sample files")
    ttest.add_argument("samples_a", metavar="A.csv")
    ttest.add_argument("samples_b", metavar="B.csv")
    ttest.add_argument("--alpha", type=float, default=0.01)
    ttest.add_argument("--format", choices=("json", "verdict"), default="json")

    fixtures_cmd = sub.add_parser("fixtures", help="list or emit the bundled graphs")
    fixtures_cmd.add_argument("--emit", metavar="NAME")
    fixtures_cmd.add_argument(
        "--routes", action="store_true", help="list the road-route endpoint metadata"
    )
    fixtures_cmd.add_argument("-o", "--output", metavar="FILE")

    return parser


def _write_output(text: str, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_number(token: str):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        return float(token)


def _resolve_seed(flag_value):
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def _default_source(graph, graph_id):
    if not graph:
        raise ValueError(f"graph {graph_id!r} has no nodes")
    return min(graph)


def _load_graph_file(path):
    with open(path, encoding="utf-8") as handle:
        return graphs.parse_graph(handle.read())


def cmd_gen(args) -> int:
    try:
        lo, hi = (int(part) for part in args.weight_range.split(","))
        weights = None
        if args.weights is not None:
            weights = tuple(_parse_number(part) for part in args.weights.split(","))
        spec = generators.GeneratorSpec(
            kind=args.kind,
            node_count=args.nodes,
            weight_range=(lo, hi),
            seed=_resolve_seed(args.seed),
            weights=weights,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    graph = generators.generate(spec)
    _write_output(graphs.emit_graph(graph), args.output)
    summary = f"{len(graph)} nodes, {graphs.count_edges(graph)} edges"
    if args.output is None:
        print(summary, file=sys.stderr)
    else:
        print(f"wrote {args.output}: {summary}")
    return 0


def _single_graph(args):
    if (args.graph is None) == (args.fixture is None):
        raise _UsageError("pass exactly one of --graph or --fixture")
    if args.fixture is not None:
        return args.fixture, fixture(args.fixture)
    return args.graph, _load_graph_file(args.graph)


def cmd_run(args) -> int:
    if args.iterations < 1 or args.repetitions < 1:
        raise _UsageError("--iterations and --repetitions must be at least 1")
    graph_id, graph = _single_graph(args)
    source = args.source if args.source is not None else _default_source(graph, graph_id)
    samples = [
        bench.time_dijkstra(
            graph, source, args.domain, args.iterations, graph_id=graph_id
        )
        for _ in range(args.repetitions)
    ]
    _write_output(bench.timing_csv(samples), args.output)
    return 0


def _compare_entries(args):
    entries = []
    names = []
    if args.fixtures:
        if args.fixtures.strip() == "all":
            names = primary_fixture_names()
        else:
            names = [name.strip() for name in args.fixtures.split(",")]
    for name in names:
        entries.append((name, fixture(name)))
    for path in args.graph:
        entries.append((path, _load_graph_file(path)))
    if not entries:
        raise _UsageError("compare needs --fixtures and/or --graph")
    resolved = []
    for graph_id, graph in entries:
        source = args.source if args.source is not None else _default_source(graph, graph_id)
        if source not in graph:
            raise UnknownNodeError(
                f"unknown source node {source!r} in graph {graph_id!r}"
            )
        resolved.append((graph_id, graph, source))
    return resolved


def cmd_compare(args) -> int:
    if args.iterations < 1 or args.repetitions < 1:
        raise _UsageError("--iterations and --repetitions must be at least 1")
    if not 0.0 < args.alpha < 1.0:
        raise _UsageError(f"--alpha must lie strictly between 0 and 1, got {args.alpha}")
    entries = _compare_entries(args)
    if len(entries) * args.repetitions < 2:
        raise _UsageError("need at least two samples per arm; raise --repetitions")
    rows, report = bench.run_comparison(
        entries,
        iterations=args.iterations,
        repetitions=args.repetitions,
        alpha=args.alpha,
    )
    if args.format == "table":
        _write_output(bench.comparison_table(rows, report), args.output)
    elif args.format == "csv":
        _write_output(bench.comparison_csv(rows), args.output)
        # Keep the data stream machine-readable; the verdict goes elsewhere.
        verdict_stream = sys.stdout if args.output is not None else sys.stderr
        print(report.verdict_line(), file=verdict_stream)
    else:
        config = {
            "iterations": args.iterations,
            "repetitions": args.repetitions,
            "alpha": args.alpha,
        }
        doc = bench.comparison_jsonable(rows, report, config)
        _write_output(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def _load_samples(path) -> stats.SampleSet:
    """Samples from a CSV file: a timing CSV (per_iteration column), a CSV
    with a `value` column, or a headerless single column of numbers."""
    with open(path, encoding="utf-8") as handle:
        rows = [row for row in csv.reader(handle) if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ValueError(f"no samples in {path}")
    header = [cell.strip() for cell in rows[0]]
    for column in ("per_iteration", "value"):
        if column in header:
            index = header.index(column)
            values = [float(row[index]) for row in rows[1:]]
            break
    else:
        try:
            float(header[0])
        except ValueError:
            raise ValueError(
                f"cannot interpret {path}: expected a per_iteration/value column "
                "or a headerless column of numbers"
            ) from None
        values = [float(row[0]) for row in rows]
    if not values:
        raise ValueError(f"no samples in {path}")
    return stats.SampleSet(tuple(values), label=os.path.basename(path))


def cmd_ttest(args) -> int:
    if not 0.0 < args.alpha < 1.0:
        raise _UsageError(f"--alpha must lie strictly between 0 and 1, got {args.alpha}")
    report = stats.welch_test(
        _load_samples(args.samples_a), _load_samples(args.samples_b), alpha=args.alpha
    )
    if args.format == "json":
        print(json.dumps(report.to_jsonable(), indent=2))
    else:
        print(report.verdict_line())
    return 0


def cmd_fixtures(args) -> int:
    if args.emit is not None:
        _write_output(graphs.emit_graph(fixture(args.emit)), args.output)
        return 0
    if args.routes:
        out = io.StringIO()
        for route in ROAD_ROUTES:
            print(
                f"{route.name}: start={route.start} radius_m={route.radius_m} end={route.end}",
                file=out,
            )
        _write_output(out.getvalue(), args.output)
        return 0
    out = io.StringIO()
    for name in FIXTURE_NAMES:
        graph = fixture(name)
        print(f"{name}  {len(graph)} nodes  {graphs.count_edges(graph)} edges", file=out)
    _write_output(out.getvalue(), args.output)
    return 0


_HANDLERS = {
    "gen": cmd_gen,
    "run": cmd_run,
    "compare": cmd_compare,
    "ttest": cmd_ttest,
    "fixtures": cmd_fixtures,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, LookupError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
