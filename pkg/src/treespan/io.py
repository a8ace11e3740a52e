"""Text formats for graphs, trees and results."""

import json

from .errors import GraphError, NotSpanningTree, ParseError
from .graph import SpanningTree, build_graph


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(lineno, line, count):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"not an integer in {line!r}") from None


def parse_graph_file(text):
    """Header ``n m`` then ``m`` lines ``u v``; ``#`` lines are comments."""
    lines = iter(_content_lines(text))
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing 'n m' header") from None
    n, m = _ints(lineno, header, 2)
    if n < 1 or m < 0:
        raise ParseError(lineno, f"bad header {header!r}")
    pairs = []
    seen = set()
    for lineno, line in lines:
        if len(pairs) == m:
            raise ParseError(lineno, f"more than {m} edge lines")
        u, v = _ints(lineno, line, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        pairs.append((u, v))
    if len(pairs) != m:
        raise ParseError(lineno, f"expected {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def parse_tree_file(text, graph):
    """Edge lines ``u v`` naming a spanning tree of ``graph``."""
    pairs = [tuple(_ints(no, line, 2)) for no, line in _content_lines(text)]
    try:
        return SpanningTree.from_pairs(graph, pairs)
    except GraphError as exc:
        raise NotSpanningTree(str(exc)) from None


def format_graph(graph):
    lines = [f"{graph.n} {graph.m}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def result_dict(result):
    return {
        "exists": result.exists,
        "t": result.t_queried,
        "stretch": result.stretch,
        "tree_edges": [list(e) for e in result.tree_edges],
        "blocks": [
            {"vertices": b.vertices, "edges": b.edges, "tau": b.tau, "stretch": b.stretch}
            for b in result.blocks
        ],
        "timings_ms": {k: round(v, 3) for k, v in result.timings_ms.items()},
    }


def emit_result(result, as_json=False):
    """JSON object, or a tree file whose ``#`` header carries the verdict."""
    if as_json:
        return json.dumps(result_dict(result)) + "\n"
    lines = [
        f"# exists {'yes' if result.exists else 'no'}",
        f"# t {result.t_queried}",
    ]
    if result.exists:
        lines.append(f"# stretch {result.stretch}")
        lines += [f"{u} {v}" for u, v in result.tree_edges]
    return "\n".join(lines) + "\n"
