"""Command-line surface: evaluate models on graphs, rank connection
matrices, run verification suites, and enumerate fragment families.

Exit codes: 0 on success / full pass, 1 on a failed check, 2 on input errors.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from .connection import connection_matrix, exact_rank
from .evaluator import MODES, partition_function
from .graph import format_fragment, parse_fragments, parse_graph
from .models import model_from_json, model_from_spec
from .suites import SUITES, enumerate_fragments


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedpf",
        description="Exact partition functions of edge-coloring models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a model on a graph file")
    pe.add_argument("graph", help="graph file in the text format")
    _model_args(pe)
    pe.add_argument("--mode", choices=MODES, required=True)

    pc = sub.add_parser("connrank", help="rank of a connection matrix over fragments")
    pc.add_argument("fragments", help="fragment list file (one block per fragment)")
    _model_args(pc)
    pc.add_argument("--mode", choices=MODES, default="mixed")
    pc.add_argument("--csv", help="write the matrix as CSV to this path")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=sorted(SUITES))
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--count", type=int)
    pv.add_argument("--trials", type=int)
    pv.add_argument("--pairs", type=int)
    pv.add_argument("--max-vertices", type=int, dest="max_vertices")
    pv.add_argument("--max-edges", type=int, dest="max_edges")
    pv.add_argument("--max-m", type=int, dest="max_m")
    pv.add_argument("--k", type=int, action="append", dest="k_values")
    pv.add_argument("--t", type=int, action="append", dest="t_values")
    pv.add_argument("--no-timing", action="store_true")

    pg = sub.add_parser("gen-fragments", help="enumerate small t-fragments")
    pg.add_argument("--t", type=int, required=True)
    pg.add_argument("--max-internal", type=int, default=2)
    pg.add_argument("--max-edges", type=int, default=3)
    pg.add_argument("--limit", type=int)
    return parser


def _model_args(sub):
    sub.add_argument("--model", help="built-in spec, e.g. charpoly?t=0")
    sub.add_argument("--model-file", dest="model_file", help="model JSON file")
    sub.add_argument(
        "--cap",
        type=int,
        help="degree cap for built-in models (default: max degree of the input)",
    )


def _load_model(args, default_cap: int):
    if bool(args.model) == bool(args.model_file):
        raise ValueError("exactly one of --model or --model-file is required")
    if args.model:
        cap = args.cap if args.cap is not None else default_cap
        return model_from_spec(args.model, cap=cap)
    with open(args.model_file) as fh:
        return model_from_json(json.load(fh))


def cmd_eval(args) -> int:
    with open(args.graph) as fh:
        graph = parse_graph(fh.read())
    model = _load_model(args, default_cap=max(graph.max_degree(), 0))
    result = partition_function(graph, model, args.mode)
    print(result.value)
    print(f"# subsets={result.subsets} colorings={result.colorings}")
    return 0


def cmd_connrank(args) -> int:
    with open(args.fragments) as fh:
        fragments = parse_fragments(fh.read())
    ts = {f.t for f in fragments}
    if len(ts) > 1:
        raise ValueError(f"fragments must share one t, found {sorted(ts)}")
    t = ts.pop() if ts else 0
    max_deg = max((f.graph.max_degree() for f in fragments), default=0)
    model = _load_model(args, default_cap=max_deg)
    matrix = connection_matrix(fragments, model, args.mode)
    rank = exact_rank(matrix)
    base = model.k if args.mode == "ordinary" else model.k + model.two_ell
    bound = base**t
    verdict = "PASS" if rank <= bound else "FAIL"
    print(f"rank={rank} bound={bound} {verdict}")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(matrix.to_csv())
    return 0 if verdict == "PASS" else 1


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    accepted = set(inspect.signature(suite).parameters)
    kwargs = {}
    for name in (
        "seed",
        "count",
        "trials",
        "pairs",
        "max_vertices",
        "max_edges",
        "max_m",
        "k_values",
        "t_values",
    ):
        value = getattr(args, name, None)
        if value is not None and name in accepted:
            kwargs[name] = tuple(value) if isinstance(value, list) else value
    report = suite(**kwargs)
    sys.stdout.write(report.render(show_timing=not args.no_timing))
    return 0 if report.all_passed else 1


def cmd_gen_fragments(args) -> int:
    count = 0
    for frag in enumerate_fragments(args.t, args.max_internal, args.max_edges):
        if args.limit is not None and count >= args.limit:
            break
        sys.stdout.write(format_fragment(frag))
        count += 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "eval": cmd_eval,
        "connrank": cmd_connrank,
        "verify": cmd_verify,
        "gen-fragments": cmd_gen_fragments,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
