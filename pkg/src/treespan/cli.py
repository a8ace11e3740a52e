"""Command line: treespan solve | minstretch | verify | gen | bench.

Exit codes: 0 ok, 1 no spanner (or a failed check), 2 not outerplanar,
3 unreadable input.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import Disconnected, GraphError, NotOuterplanar, ParseError
from .graph import SpanningTree, biconnected_components, require_connected, stretch
from .io import emit_result, format_graph, parse_graph_file, parse_tree_file
from .outerplanar import outerplane_embed, random_outerplanar
from .solver import min_stretch, tree_t_spanner
from .spanner import check_canonical

EXIT_OK, EXIT_NO, EXIT_NOT_OUTERPLANAR, EXIT_INPUT = 0, 1, 2, 3


def _read_graph(path):
    return parse_graph_file(Path(path).read_text(encoding="utf-8"))


def cmd_solve(args):
    result = tree_t_spanner(_read_graph(args.input), args.t)
    sys.stdout.write(emit_result(result, args.json))
    return EXIT_OK if result.exists else EXIT_NO


def cmd_minstretch(args):
    _, result = min_stretch(_read_graph(args.input))
    sys.stdout.write(emit_result(result, args.json))
    return EXIT_OK


def _canonical_failures(graph, tree):
    """``(block index, report)`` for every 2-connected block failing P1 or P2."""
    failures = []
    for i, blk in enumerate(biconnected_components(graph).blocks):
        if len(blk.edge_ids) == 1:
            continue
        local, _, emap = graph.subgraph(blk.edge_ids)
        emb = outerplane_embed(local)
        local_tree = SpanningTree.from_edge_ids(local, np.flatnonzero(tree.in_tree[emap]))
        report = check_canonical(emb, local_tree)
        if not report.ok:
            failures.append((i, report))
    return failures


def cmd_verify(args):
    graph = _read_graph(args.input)
    require_connected(graph)
    try:
        tree = parse_tree_file(Path(args.tree).read_text(encoding="utf-8"), graph)
    except GraphError as exc:
        print(f"invalid tree: {exc}")
        return EXIT_NO
    cert = stretch(graph, tree)
    ok = args.t is None or cert.t <= args.t
    print(f"stretch {cert.t}" + ("" if cert.witness is None else f" at edge {graph.edges[cert.witness]}"))
    if args.t is not None:
        print(f"within t={args.t}: {'yes' if ok else 'no'}")
    if args.check_canonical:
        failures = _canonical_failures(graph, tree)
        for i, rep in failures:
            print(f"block {i}: P1 {'pass' if rep.p1 else f'fail (face {rep.p1_witness})'}, "
                  f"P2 {'pass' if rep.p2 else f'fail (edge {rep.p2_witness})'}")
        print(f"canonical: {'yes' if not failures else 'no'}")
        ok = ok and not failures
    return EXIT_OK if ok else EXIT_NO


def cmd_gen(args):
    sys.stdout.write(format_graph(random_outerplanar(args.n, args.chords, args.seed)))
    return EXIT_OK


def cmd_bench(args):
    from .bench import run_bench

    sizes = [int(float(s)) for s in args.sizes.split(",")]
    report = run_bench(sizes, repeats=args.repeats)
    if args.json:
        print(json.dumps(report))
    else:
        print(f"backend {report['backend']}")
        for i, n in enumerate(sizes):
            print(f"n={n}  t={report['t'][i]}  solve {report['tree_t_spanner_ms'][i]:.1f} ms"
                  f"  minstretch {report['min_stretch_ms'][i]:.1f} ms")
        print("ratios solve", " ".join(f"{r:.2f}" for r in report["tree_t_spanner_ratio"]))
        print("ratios minstretch", " ".join(f"{r:.2f}" for r in report["min_stretch_ratio"]))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="treespan", description="Tree t-spanners of outerplanar graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a tree t-spanner")
    p.add_argument("--input", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("minstretch", help="smallest t with a tree t-spanner")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minstretch)

    p = sub.add_parser("verify", help="stretch of a given spanning tree")
    p.add_argument("--input", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--check-canonical", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="random 2-connected outerplanar graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chords", default="1/2", help="fraction of n-3 chords, e.g. 0.5 or 1/2")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="scaling on random maximal outerplanar graphs")
    p.add_argument("--sizes", default="1e5,2e5,4e5")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotOuterplanar as exc:
        print(f"not outerplanar: {exc}", file=sys.stderr)
        return EXIT_NOT_OUTERPLANAR
    except (ParseError, Disconnected, OSError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
