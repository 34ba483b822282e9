"""Command-line front end.

Exit codes: 0 success, 1 violated invariant or failed verification,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import witness
from .brushing import brushing_number
from .corpus import BUNDLED, RunSettings, bundled_corpus, report_csv, report_json, run_corpus
from .errors import BadParams, ConsistencyError, Disconnected, ForceBrushError, GraphError
from .families import is_family_spec, parse_family_spec
from .forcing import zero_forcing_number
from .formats import graph6_str, read_graphs, write_edgelist
from .graph import Graph, components, line_graph, strip_isolated, to_dot
from .transfer import transfer


class UsageError(Exception):
    pass


def _read_input(source: str, fmt: str) -> list[Graph]:
    if source == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(source).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return read_graphs(data, fmt)
    except GraphError as exc:
        raise UsageError(f"bad {fmt} input: {exc}") from None


def _one_graph(args) -> Graph:
    graphs = _read_input(args.graph, args.format)
    if len(graphs) != 1:
        raise UsageError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def cmd_zf(args) -> int:
    for g in _read_input(args.graph, args.format):
        if g.n == 0:
            raise UsageError("zero forcing number of the empty graph is undefined")
        k, wit = zero_forcing_number(g, max_seconds=args.budget_seconds)
        print(f"{k} {{{', '.join(map(str, wit))}}}")
    return 0


def cmd_brush(args) -> int:
    for g in _read_input(args.graph, args.format):
        total = 0
        paths = []
        for comp, back in components(g):
            if comp.m == 0:
                continue
            b, w = brushing_number(comp, max_seconds=args.budget_seconds)
            total += b
            paths.extend(tuple(back[v] for v in p) for p in w.paths)
        if g.m == 0:
            print("0 (degenerate: no edges)")
            continue
        print(f"{total} " + "; ".join("->".join(map(str, p)) for p in paths))
    return 0


def cmd_linegraph(args) -> int:
    for g in _read_input(args.graph, args.format):
        if g.m == 0:
            raise UsageError("line graph of an edgeless graph is empty")
        lg, idx = line_graph(g)
        if args.format == "edgelist":
            for v, e in enumerate(idx):
                print(f"# vertex {v} = edge {g.edges[e][0]} {g.edges[e][1]}")
            sys.stdout.write(write_edgelist(lg))
        else:
            print(graph6_str(lg))
    return 0


def cmd_transfer(args) -> int:
    g = _one_graph(args)
    core, back, dropped = strip_isolated(g)
    if dropped and back != tuple(range(core.n)):
        print(f"note: {dropped} isolated vertices stripped; vertices relabelled densely",
              file=sys.stderr)
    elif dropped:
        print(f"note: {dropped} isolated vertices stripped", file=sys.stderr)
    if core.n == 0:
        raise UsageError("graph has no edges")
    if len(components(core)) > 1:
        raise UsageError("graph is disconnected; run transfer on each component")
    result = transfer(core, process_seed=args.seed, max_seconds=args.budget_seconds)
    text = witness.dumps(witness.to_document(result, isolated_stripped=dropped))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(to_dot(result.full))
    return 0 if all(result.checks.values()) else 1


def cmd_verify(args) -> int:
    try:
        doc = witness.load(args.witness) if args.witness != "-" else json.load(sys.stdin)
    except (OSError, ValueError, ForceBrushError) as exc:
        raise UsageError(f"cannot load witness: {exc}") from None
    verdict = witness.verify_document(doc, check_minimum=not args.no_minimum)
    if verdict:
        print("ok")
        return 0
    for clause in verdict.clauses:
        print(f"FAIL {clause}")
    return 1


def cmd_corpus(args) -> int:
    if args.source.startswith("@"):
        if args.source[1:] not in BUNDLED:
            raise UsageError(f"unknown bundled corpus {args.source}; choose from {BUNDLED}")
        graphs = bundled_corpus(args.source[1:])
    elif Path(args.source).exists() or args.source == "-":
        graphs = _read_input(args.source, args.format)
    elif is_family_spec(args.source):
        try:
            graphs = [parse_family_spec(args.source)]
        except BadParams as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError(f"{args.source} is neither a file nor a family spec")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    settings = RunSettings(
        budget_ms=args.budget,
        brush_max_edges=args.brush_max_edges,
        random_processes=args.random_process,
        seed=args.seed,
        timings=args.timings,
    )
    report = run_corpus(graphs, settings, jobs=args.jobs, source=args.source,
                        diagnostics_dir=args.diagnostics)
    if args.out:
        out = Path(args.out)
        out.write_text(report_csv(report) if out.suffix == ".csv" else report_json(report))
    else:
        sys.stdout.write(report_json(report))
    s = report["summary"]
    print(f"graphs={s['graphs']} ok={s['ok']} errors={s['errors']} violations={s['violations']}",
          file=sys.stderr)
    return 1 if s["failed"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcebrush", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_arg="graph"):
        if graph_arg:
            p.add_argument(graph_arg, help="input file, or - for standard input")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        p.add_argument("--budget", type=int, default=None, metavar="MS",
                       help="wall-clock budget per solver call in milliseconds")

    p = sub.add_parser("zf", help="zero forcing number and a minimum forcing set")
    common(p)
    p.set_defaults(func=cmd_zf)

    p = sub.add_parser("brush", help="brushing number and a covering path witness")
    common(p)
    p.set_defaults(func=cmd_brush)

    p = sub.add_parser("linegraph", help="line graph in the input format")
    common(p)
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("transfer", help="JSON witness for both bounds via L(G)")
    common(p)
    p.add_argument("--seed", type=int, default=None,
                   help="use a seeded random force scheduler on L(G)")
    p.add_argument("--out", help="write the JSON witness here instead of stdout")
    p.add_argument("--dot", help="also write the extended orientation as DOT")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("verify", help="re-check a transfer witness document")
    p.add_argument("witness", help="witness JSON file, or - for standard input")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--no-minimum", action="store_true",
                   help="skip the exhaustive minimality check of Z")
    p.set_defaults(func=cmd_verify, budget=None)

    p = sub.add_parser("corpus", help="check both inequalities over a corpus")
    p.add_argument("source", help="graph6/edgelist file, -, @bundled corpus name, or family spec like path:5")
    common(p, graph_arg=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="report path; .csv gives the flat projection, else JSON")
    p.add_argument("--brush-max-edges", type=int, default=12,
                   help="largest component size (edges) for exact B(G)")
    p.add_argument("--random-process", type=int, default=0, metavar="N",
                   help="also replay N seeded random force schedules per component")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true",
                   help="add per-row timings (makes reports run-dependent)")
    p.add_argument("--diagnostics", help="directory for diagnostic bundles")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.budget_seconds = None if args.budget is None else args.budget / 1000.0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"forcebrush {args.command}: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"forcebrush {args.command}: {exc}", file=sys.stderr)
        print(exc.bundle_json(), file=sys.stderr)
        return 1
    except Disconnected as exc:
        print(f"forcebrush {args.command}: {exc}", file=sys.stderr)
        return 2
    except ForceBrushError as exc:
        print(f"forcebrush {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
