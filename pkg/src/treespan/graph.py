"""Graphs, spanning trees, block decomposition and stretch."""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import kernels
from .errors import (
    Disconnected,
    InstanceTooLarge,
    LoopEdge,
    NotSpanningTree,
    VertexOutOfRange,
)


def _csr(n, eu, ev):
    """Symmetric CSR adjacency: (ptr, neighbour, edge index)."""
    m = len(eu)
    ends = np.concatenate([eu, ev])
    other = np.concatenate([ev, eu]).astype(np.int64)
    ptr, order = kernels.group_by(n, ends)
    return ptr, other[order], order % m if m else order


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges[i]`` is the edge with id ``i``, stored as ``(min, max)``.
    Construct through :func:`build_graph` unless the edge list is known
    to be clean.
    """

    n: int
    edges: tuple

    @property
    def m(self):
        return len(self.edges)

    @cached_property
    def arrays(self):
        if not self.edges:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        a = np.asarray(self.edges, dtype=np.int64)
        return np.ascontiguousarray(a[:, 0]), np.ascontiguousarray(a[:, 1])

    @cached_property
    def edge_index(self):
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return adj

    @cached_property
    def connected(self):
        if self.n <= 1:
            return True
        eu, ev = self.arrays
        return kernels.root_tree(self.n, eu, ev, 0)[3] == self.n

    def edge_id(self, u, v):
        return self.edge_index[(u, v) if u < v else (v, u)]

    def degree(self, v):
        return len(self.adjacency[v])

    def subgraph(self, edge_ids):
        """Relabel an edge subset onto ``0..k-1`` (ascending global ids).

        Returns ``(graph, vertex_map, edge_map)`` where the maps send local
        ids back to ids of this graph.
        """
        edge_ids = np.asarray(edge_ids, dtype=np.int64)
        eu, ev = self.arrays
        su, sv = eu[edge_ids], ev[edge_ids]
        verts = np.unique(np.concatenate([su, sv]))
        lu = np.searchsorted(verts, su)
        lv = np.searchsorted(verts, sv)
        local = Graph(len(verts), tuple(zip(lu.tolist(), lv.tolist())))
        return local, verts, edge_ids


def build_graph(n, pairs):
    """Validate and deduplicate ``pairs``; edge ids follow first appearance."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    seen = {}
    for u, v in pairs:
        u = int(u)
        v = int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen[key] = len(seen)
    return Graph(n, tuple(seen))


def require_connected(graph):
    if not graph.connected:
        raise Disconnected(f"graph on {graph.n} vertices is not connected")


@dataclass(frozen=True, eq=False)
class Tree:
    """A free tree on nodes ``0..n-1`` given by parallel endpoint arrays."""

    n: int
    eu: np.ndarray
    ev: np.ndarray

    @classmethod
    def from_edges(cls, n, pairs, check=True):
        a = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        tree = cls(n, np.ascontiguousarray(a[:, 0]), np.ascontiguousarray(a[:, 1]))
        if check and not tree.is_tree():
            raise ValueError(f"{len(a)} edges on {n} nodes do not form a tree")
        return tree

    def is_tree(self):
        if self.n == 0 or len(self.eu) != self.n - 1:
            return False
        if len(self.eu) and (
            min(self.eu.min(), self.ev.min()) < 0
            or max(self.eu.max(), self.ev.max()) >= self.n
        ):
            return False
        return kernels.root_tree(self.n, self.eu, self.ev, 0)[3] == self.n

    @cached_property
    def csr(self):
        ptr, adj, _ = _csr(self.n, self.eu, self.ev)
        return ptr, adj

    @cached_property
    def neighbors(self):
        ptr, adj = self.csr
        adj = adj.tolist()
        ptr = ptr.tolist()
        return [adj[ptr[v]:ptr[v + 1]] for v in range(self.n)]

    def edges(self):
        return list(zip(self.eu.tolist(), self.ev.tolist()))


@dataclass(frozen=True, eq=False)
class SpanningTree:
    """Edge-id subset of ``graph`` forming a spanning tree."""

    graph: Graph
    edge_ids: np.ndarray

    @classmethod
    def from_edge_ids(cls, graph, edge_ids, validate=True):
        raw = np.asarray(edge_ids, dtype=np.int64).reshape(-1)
        if len(raw) < 2 or (raw[1:] > raw[:-1]).all():
            ids = raw
        else:
            ids = np.unique(raw)
        tree = cls(graph, ids)
        if validate:
            if len(ids) != len(raw):
                raise NotSpanningTree("repeated edge id")
            if len(ids) != max(graph.n - 1, 0):
                raise NotSpanningTree(f"{len(ids)} edges, need {graph.n - 1}")
            if len(ids) and (ids[0] < 0 or ids[-1] >= graph.m):
                raise NotSpanningTree("edge id outside the host graph")
            if graph.n and tree._rooted[3] != graph.n:
                raise NotSpanningTree("edge set is not connected")
        return tree

    @classmethod
    def from_pairs(cls, graph, pairs):
        try:
            ids = [graph.edge_id(int(u), int(v)) for u, v in pairs]
        except KeyError as exc:
            raise NotSpanningTree(f"edge {exc.args[0]} not in graph") from None
        return cls.from_edge_ids(graph, ids)

    @cached_property
    def in_tree(self):
        mask = np.zeros(self.graph.m, dtype=bool)
        mask[self.edge_ids] = True
        return mask

    @cached_property
    def _rooted(self):
        eu, ev = self.graph.arrays
        return kernels.root_tree(
            self.graph.n, eu[self.edge_ids], ev[self.edge_ids], 0
        )

    @property
    def parent(self):
        return self._rooted[0]

    @property
    def depth(self):
        return self._rooted[2]

    def edges(self):
        return [self.graph.edges[i] for i in self.edge_ids.tolist()]

    def __contains__(self, edge_id):
        return bool(self.in_tree[edge_id])


def tree_path(tree, u, v):
    """Vertices of the unique ``u``..``v`` path in ``tree``."""
    parent, depth = tree.parent, tree.depth
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = int(parent[a])
        left.append(a)
    while depth[b] > depth[a]:
        b = int(parent[b])
        right.append(b)
    while a != b:
        a = int(parent[a])
        b = int(parent[b])
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


@dataclass(frozen=True, eq=False)
class StretchCertificate:
    t: int
    witness: int | None
    nontree_ids: np.ndarray
    nontree_stretch: np.ndarray

    @cached_property
    def per_edge(self):
        return dict(zip(self.nontree_ids.tolist(), self.nontree_stretch.tolist()))


def stretch(graph, tree):
    """Maximum tree distance over the non-tree edges of ``graph``.

    The witness is the smallest edge id achieving it; a graph that is its
    own spanning tree has stretch 1 and no witness.
    """
    if tree.graph is not graph and tree.graph.edges != graph.edges:
        raise NotSpanningTree("tree belongs to a different graph")
    eu, ev = graph.arrays
    nontree = np.flatnonzero(~tree.in_tree)
    dist = kernels.tree_distances(
        graph.n, eu[tree.edge_ids], ev[tree.edge_ids], eu[nontree], ev[nontree]
    )
    if len(nontree) == 0:
        return StretchCertificate(1, None, nontree, dist)
    k = int(np.argmax(dist))
    return StretchCertificate(int(dist[k]), int(nontree[k]), nontree, dist)


@dataclass(frozen=True)
class Block:
    vertices: tuple
    edge_ids: tuple


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    blocks: tuple
    cut_vertices: frozenset
    edge_block: np.ndarray


def biconnected_components(graph):
    """Blocks of a connected graph, ordered by their smallest edge id."""
    eu, ev = graph.arrays
    raw, count = kernels.biconnected_edge_labels(graph.n, eu, ev)
    first = np.full(count, graph.m, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(graph.m))
    rank = np.empty(count, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(count)
    label = rank[raw]
    if count == 1:
        # a connected graph that is one block spans every vertex
        block = Block(tuple(range(graph.n)), tuple(range(graph.m)))
        return BlockDecomposition((block,), frozenset(), label)
    bounds, order = kernels.group_by(count, label)
    blocks = []
    seen_in = np.zeros(graph.n, dtype=np.int64)
    for b in range(count):
        ids = order[bounds[b]:bounds[b + 1]]
        verts = np.unique(np.concatenate([eu[ids], ev[ids]]))
        seen_in[verts] += 1
        blocks.append(Block(tuple(verts.tolist()), tuple(ids.tolist())))
    cuts = frozenset(np.flatnonzero(seen_in > 1).tolist())
    return BlockDecomposition(tuple(blocks), cuts, label)


def enumerate_spanning_trees(graph, cap=10):
    """Every spanning tree exactly once, by filtering (n-1)-edge subsets."""
    n, m = graph.n, graph.m
    if n > cap:
        raise InstanceTooLarge(f"{n} vertices exceeds the cap of {cap}")
    edges = graph.edges
    for combo in combinations(range(m), n - 1):
        root = list(range(n))
        ok = True
        for e in combo:
            a, b = edges[e]
            while root[a] != a:
                a = root[a]
            while root[b] != b:
                b = root[b]
            if a == b:
                ok = False
                break
            root[a] = b
        if ok:
            yield SpanningTree(graph, np.asarray(combo, dtype=np.int64))
