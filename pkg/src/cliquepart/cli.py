"""Command-line front end.

Subcommands: enumerate (stream partitions as JSON lines), count,
generate (emit a benchmark family instance), bench (CSV timing rows).
Exit codes: 0 success, 1 usage or input errors, 2 internal errors.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, fields

from .cover import count_upper_bound, cover_context
from .families import parse_family
from .graph import Graph, ParseError, parse_dimacs, parse_edge_list, to_dimacs, to_edge_list
from .search import count_partitions, iter_partitions


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunStats:
    """One-line run summary, printed to stderr when --stats is given."""

    order: int
    clique_count: int
    shared_count: int
    partition_count: int
    upper_bound: int
    elapsed_ms: float

    def to_line(self) -> str:
        pairs = []
        for f in fields(self):
            val = getattr(self, f.name)
            if isinstance(val, float):
                pairs.append(f"{f.name}={val:.3f}")
            else:
                pairs.append(f"{f.name}={val}")
        return " ".join(pairs)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cliquepart")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", metavar="PATH", help="graph file to read")
        group.add_argument(
            "--family",
            metavar="SPEC",
            help="built-in instance: gn:<n>, hn:<n>, gmn:<m>,<n>, twoclique:<n>",
        )
        p.add_argument(
            "--format",
            choices=("edgelist", "dimacs"),
            default="edgelist",
            help="input file format (default: edgelist)",
        )

    p_enum = sub.add_parser("enumerate", help="stream all maximal clique-partitions")
    add_source(p_enum)
    p_enum.add_argument("--limit", type=int, metavar="N", help="stop after N partitions")
    p_enum.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_enum.add_argument("--stats", action="store_true", help="run summary on stderr")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_count = sub.add_parser("count", help="count maximal clique-partitions")
    add_source(p_count)
    p_count.add_argument(
        "--parallel", action="store_true", help="split top-level branches across threads"
    )
    p_count.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_count.add_argument("--stats", action="store_true", help="run summary on stderr")
    p_count.set_defaults(func=_cmd_count)

    p_gen = sub.add_parser("generate", help="emit a benchmark family instance")
    p_gen.add_argument("family", metavar="SPEC", help="gn:<n>, hn:<n>, gmn:<m>,<n>, twoclique:<n>")
    p_gen.add_argument(
        "--format",
        choices=("edgelist", "dimacs"),
        default="edgelist",
        help="output format (default: edgelist)",
    )
    p_gen.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_gen.set_defaults(func=_cmd_generate)

    p_bench = sub.add_parser("bench", help="time counting over a family range")
    p_bench.add_argument(
        "family", choices=("gn", "hn", "gmn", "twoclique"), help="family name"
    )
    p_bench.add_argument(
        "params",
        nargs="+",
        metavar="PARAM",
        help="range A..B (plus a fixed m first for gmn)",
    )
    p_bench.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def _load_graph(args) -> Graph:
    if args.family is not None:
        return parse_family(args.family)
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {args.input}: {e.strerror or e}") from None
    if args.format == "dimacs":
        return parse_dimacs(text)
    return parse_edge_list(text)


class _Sink:
    """stdout by default, a file when --output is given; always flushes."""

    def __init__(self, path: str | None):
        self.path = path
        self.fh = open(path, "w", encoding="utf-8") if path else sys.stdout

    def writeline(self, line: str) -> None:
        self.fh.write(line + "\n")
        self.fh.flush()

    def close(self) -> None:
        if self.path:
            self.fh.close()


def _emit_stats(ctx, partition_count: int, elapsed_ms: float) -> None:
    stats = RunStats(
        order=ctx.graph.n,
        clique_count=ctx.m,
        shared_count=len(ctx.shared),
        partition_count=partition_count,
        upper_bound=count_upper_bound(ctx),
        elapsed_ms=elapsed_ms,
    )
    print(stats.to_line(), file=sys.stderr)


def _cmd_enumerate(args) -> int:
    if args.limit is not None and args.limit < 0:
        raise ValueError("--limit must be >= 0")
    g = _load_graph(args)
    ctx = cover_context(g)
    sink = _Sink(args.output)
    emitted = 0
    t0 = time.perf_counter()
    try:
        for p in iter_partitions(ctx, limit=args.limit):
            sink.writeline(p.json_line(g))
            emitted += 1
    finally:
        sink.close()
    if args.stats:
        _emit_stats(ctx, emitted, (time.perf_counter() - t0) * 1000.0)
    return 0


def _cmd_count(args) -> int:
    g = _load_graph(args)
    ctx = cover_context(g)
    t0 = time.perf_counter()
    total = count_partitions(ctx, parallel=args.parallel)
    elapsed = (time.perf_counter() - t0) * 1000.0
    sink = _Sink(args.output)
    try:
        sink.writeline(str(total))
    finally:
        sink.close()
    if args.stats:
        _emit_stats(ctx, total, elapsed)
    return 0


def _cmd_generate(args) -> int:
    g = parse_family(args.family)
    text = to_dimacs(g) if args.format == "dimacs" else to_edge_list(g)
    sink = _Sink(args.output)
    try:
        sink.fh.write(text)
        sink.fh.flush()
    finally:
        sink.close()
    return 0


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            start, stop = int(lo), int(hi)
        else:
            start = stop = int(text)
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected A..B or N") from None
    if stop < start:
        raise ValueError(f"bad range {text!r}; end before start")
    return range(start, stop + 1)


def _cmd_bench(args) -> int:
    if args.family == "gmn":
        if len(args.params) != 2:
            raise ValueError("bench gmn takes a fixed m and a range, e.g. gmn 5 3..6")
        try:
            fixed_m = int(args.params[0])
        except ValueError:
            raise ValueError(f"bad m {args.params[0]!r}") from None
        span = _parse_range(args.params[1])
        specs = [f"gmn:{fixed_m},{n}" for n in span]
    else:
        if len(args.params) != 1:
            raise ValueError(f"bench {args.family} takes a single range, e.g. 4..8")
        span = _parse_range(args.params[0])
        specs = [f"{args.family}:{n}" for n in span]
    sink = _Sink(args.output)
    try:
        writer = csv.writer(sink.fh, lineterminator="\n")
        writer.writerow(["family", "order", "shared", "count", "elapsed_ms"])
        sink.fh.flush()
        for spec in specs:
            g = parse_family(spec)
            t0 = time.perf_counter()
            ctx = cover_context(g)
            total = count_partitions(ctx)
            elapsed = (time.perf_counter() - t0) * 1000.0
            writer.writerow([spec, g.n, len(ctx.shared), total, f"{elapsed:.3f}"])
            sink.fh.flush()
    finally:
        sink.close()
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); not an error
        try:
            sys.stdout.close()
        except Exception:
            pass
        return 0
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except Exception as e:  # invariant violations and genuine bugs
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
