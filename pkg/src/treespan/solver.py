"""End-to-end tree spanner search over the blocks of an outerplanar graph."""

import time
from dataclasses import dataclass, field

import numpy as np

from .errors import Infeasible
from .graph import SpanningTree, biconnected_components, require_connected, stretch
from .outerplanar import outerplane_embed
from .sdpartition import reduce_to_sd, sd_feasible, sd_to_spartition, solve_sd
from .spanner import build_spanner
from .spartition import reduce_to_spartition


@dataclass
class BlockReport:
    vertices: int
    edges: int
    tau: int | None  # None for a bridge
    stretch: int | None = None  # of the block's tree, when one was built


@dataclass
class SpannerResult:
    exists: bool
    t_queried: int
    tree: SpanningTree | None
    certificate: object  # StretchCertificate of the merged tree, or None
    blocks: list = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)

    @property
    def tree_edges(self):
        return self.tree.edges() if self.tree is not None else []

    @property
    def stretch(self):
        return self.certificate.t if self.certificate is not None else None


class _BlockPipeline:
    """Embedding and reductions of one block, shared across values of t."""

    def __init__(self, block):
        self.graph = block
        self.emb = outerplane_embed(block)
        self.sinst = reduce_to_spartition(self.emb, 2)
        self.sd = reduce_to_sd(self.sinst)

    def feasible(self, t):
        return sd_feasible(self.sd.with_supply(t - 1))

    def build(self, t):
        tau = t - 1
        sd = self.sd.with_supply(tau)
        try:
            part = solve_sd(sd)
        except Infeasible:
            return None
        return build_spanner(self.emb, sd_to_spartition(sd, part), tau)


def solve_block(block, t):
    """Tree t-spanner of a 2-connected outerplanar block, or ``None``."""
    if block.m == 1:
        return SpanningTree.from_edge_ids(block, [0]) if t >= 1 else None
    if t < 2:
        return None
    return _BlockPipeline(block).build(t)


def _blocks(graph):
    require_connected(graph)
    deco = biconnected_components(graph)
    if len(deco.blocks) == 1 and graph.m > 0:
        return [(graph, np.arange(graph.m))]
    out = []
    for blk in deco.blocks:
        local, _, edge_map = graph.subgraph(blk.edge_ids)
        out.append((local, edge_map))
    return out


def _merge(graph, pieces, reports, timings, t_queried, started):
    ids = np.concatenate([emap[tree.edge_ids] for tree, emap in pieces]) if pieces else []
    tree = SpanningTree.from_edge_ids(graph, ids)
    mark = time.perf_counter()
    cert = stretch(graph, tree)
    timings["certificate"] = (time.perf_counter() - mark) * 1e3
    timings["total"] = (time.perf_counter() - started) * 1e3
    return SpannerResult(True, t_queried, tree, cert, reports, timings)


def tree_t_spanner(graph, t):
    """Tree t-spanner of a connected outerplanar graph, if one exists.

    Each block is solved on its own and the block trees are united;
    bridges are blocks of one edge and always join the tree.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    started = time.perf_counter()
    timings = {}
    blocks = _blocks(graph)
    timings["blocks"] = (time.perf_counter() - started) * 1e3
    mark = time.perf_counter()
    pieces, reports = [], []
    exists = True
    for local, emap in blocks:
        report = BlockReport(local.n, local.m, None if local.m == 1 else t - 1)
        reports.append(report)
        tree = solve_block(local, t)
        if tree is None:
            exists = False
            break
        pieces.append((tree, emap))
    timings["solve"] = (time.perf_counter() - mark) * 1e3
    if not exists:
        timings["total"] = (time.perf_counter() - started) * 1e3
        return SpannerResult(False, t, None, None, reports, timings)
    return _merge(graph, pieces, reports, timings, t, started)


def _min_block_t(pipe):
    lo, hi = 2, pipe.graph.n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if pipe.feasible(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def min_stretch(graph):
    """Smallest t admitting a tree t-spanner, with a tree achieving it.

    Feasibility is monotone in t, so each block binary-searches its own
    minimum over ``[2, n_block - 1]``; the answer is the largest of these.
    """
    started = time.perf_counter()
    timings = {}
    blocks = _blocks(graph)
    timings["blocks"] = (time.perf_counter() - started) * 1e3
    mark = time.perf_counter()
    pieces, reports = [], []
    best = 1
    for local, emap in blocks:
        if local.m == 1:
            reports.append(BlockReport(local.n, local.m, None, 1))
            pieces.append((SpanningTree.from_edge_ids(local, [0]), emap))
            continue
        pipe = _BlockPipeline(local)
        t = _min_block_t(pipe)
        tree = pipe.build(t)
        if tree is None:
            raise AssertionError(f"block on {local.n} vertices infeasible at t={t}")
        reports.append(BlockReport(local.n, local.m, t - 1, t))
        pieces.append((tree, emap))
        best = max(best, t)
    timings["solve"] = (time.perf_counter() - mark) * 1e3
    result = _merge(graph, pieces, reports, timings, best, started)
    return best, result
