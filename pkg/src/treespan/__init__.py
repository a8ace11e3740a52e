"""Tree t-spanners of outerplanar graphs in linear time."""

from .errors import (
    Disconnected,
    Infeasible,
    InvalidPartition,
    NotOuterplanar,
    NotSpanningTree,
    ParseError,
)
from .graph import Graph, SpanningTree, biconnected_components, build_graph, stretch
from .io import emit_result, parse_graph_file
from .outerplanar import outerplane_embed, random_outerplanar, weak_dual
from .sdpartition import reduce_to_sd, solve_sd
from .solver import SpannerResult, min_stretch, solve_block, tree_t_spanner
from .spanner import build_spanner, canonicalize, check_canonical
from .spartition import reduce_to_spartition

__all__ = [
    "Disconnected",
    "Graph",
    "Infeasible",
    "InvalidPartition",
    "NotOuterplanar",
    "NotSpanningTree",
    "ParseError",
    "SpanningTree",
    "SpannerResult",
    "biconnected_components",
    "build_graph",
    "build_spanner",
    "canonicalize",
    "check_canonical",
    "emit_result",
    "min_stretch",
    "outerplane_embed",
    "parse_graph_file",
    "random_outerplanar",
    "reduce_to_sd",
    "reduce_to_spartition",
    "solve_block",
    "solve_sd",
    "stretch",
    "tree_t_spanner",
    "weak_dual",
]
