"""Tree spanners from tree S-partitions, and canonical form checks."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidPartition
from .graph import SpanningTree, tree_path
from .outerplanar import enclosed_region, faces_from_cycle
from .spartition import _part_index, reduce_to_spartition, verify_spartition


def _face_ids(emb):
    return np.repeat(np.arange(emb.num_faces, dtype=np.int64), emb.face_lengths)


def external_edges_of_faces(emb):
    """Face id -> edge ids of that face lying in no other interior face."""
    count = np.bincount(emb.face_edges, minlength=emb.graph.m)
    ptr = emb.face_ptr.tolist()
    fedges = emb.face_edges.tolist()
    once = (count == 1).tolist()
    return {
        f: [e for e in fedges[ptr[f]:ptr[f + 1]] if once[e]]
        for f in range(emb.num_faces)
    }


@dataclass(frozen=True, eq=False)
class PartSubgraphs:
    """Per-edge bookkeeping for the subgraphs spanned by each part's faces.

    ``count[e]`` is the number of interior faces holding ``e``;
    ``part[e]`` lists (up to two, ``-1`` padded) the parts whose faces hold
    ``e``.  An edge is interior to part ``i`` exactly when ``count[e] == 2``
    and ``part[e] == {i}``.
    """

    emb: object
    face_part: np.ndarray
    count: np.ndarray
    part: np.ndarray

    @cached_property
    def interior(self):
        """Edge mask of the union of the X_i."""
        return (self.count == 2) & (self.part[:, 1] < 0)

    @property
    def num_parts(self):
        return int(self.face_part.max()) + 1 if len(self.face_part) else 0

    def internal_edges(self, i):
        return np.flatnonzero(self.interior & (self.part[:, 0] == i)).tolist()

    def edge_ids(self, i):
        faces = np.flatnonzero(self.face_part == i)
        fid = _face_ids(self.emb)
        return np.unique(self.emb.face_edges[np.isin(fid, faces)]).tolist()

    def vertices(self, i):
        faces = np.flatnonzero(self.face_part == i)
        fid = _face_ids(self.emb)
        return np.unique(self.emb.face_verts[np.isin(fid, faces)]).tolist()


def part_subgraphs(emb, face_part):
    m = emb.graph.m
    count = np.bincount(emb.face_edges, minlength=m)
    part = np.full((m, 2), -1, dtype=np.int64)
    # face_inc already lists the (at most two) faces of every edge
    first = face_part[emb.face_inc[:, 0]]
    part[:, 0] = first
    has2 = emb.face_inc[:, 1] >= 0
    second = np.where(has2, face_part[np.maximum(emb.face_inc[:, 1], 0)], -1)
    split = has2 & (second != first)
    part[split, 1] = second[split]
    return PartSubgraphs(emb, face_part, count, part)


def build_spanner(emb, partition, tau):
    """Tree (tau+1)-spanner of the embedded block from a tree S-partition.

    Removes every edge interior to a part, leaving one cycle per part, and
    then drops the smallest external edge of each of those cycles.
    """
    inst = reduce_to_spartition(emb, tau + 1)
    bad = verify_spartition(inst, partition)
    if bad is not None:
        raise InvalidPartition(bad)
    face_part, _ = _part_index(inst.k, partition)
    parts = part_subgraphs(emb, face_part)
    keep = ~parts.interior
    chords = np.flatnonzero(keep & ~emb.is_external)
    order = np.asarray(emb.outer_cycle, dtype=np.int64)
    ptr, _, fedges = faces_from_cycle(order, emb.cycle_eids, chords, emb.graph)
    m = emb.graph.m
    cand = np.where(emb.is_external[fedges], fedges, m)
    q = len(ptr) - 1
    drop = np.full(q, m, dtype=np.int64)
    np.minimum.at(drop, np.repeat(np.arange(q), np.diff(ptr)), cand)
    keep[drop] = False
    return SpanningTree.from_edge_ids(emb.graph, np.flatnonzero(keep))


def _tree_adjacency(graph, edge_ids):
    adj = [set() for _ in range(graph.n)]
    for e in edge_ids:
        u, v = graph.edges[e]
        adj[u].add(e)
        adj[v].add(e)
    return adj


def _side(graph, adj, start):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for e in adj[x]:
            u, v = graph.edges[e]
            y = v if u == x else u
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def canonicalize(emb, tree):
    """Swap edges until every E-face misses exactly one external edge.

    E-faces are visited in face-id order.  For an E-face whose external
    edges all lie in the tree, its smallest external edge ``e`` leaves the
    tree and the other face edge crossing the resulting cut enters.
    """
    graph = emb.graph
    in_tree = tree.in_tree.copy()
    adj = _tree_adjacency(graph, tree.edge_ids.tolist())
    changed = False
    for face in emb.faces:
        if not face.external or not all(in_tree[e] for e in face.external):
            continue
        e = min(face.external)
        u, v = graph.edges[e]
        adj[u].discard(e)
        adj[v].discard(e)
        side = _side(graph, adj, u)
        swap = next(
            f
            for f in face.edge_ids
            if f != e and ((graph.edges[f][0] in side) != (graph.edges[f][1] in side))
        )
        a, b = graph.edges[swap]
        adj[a].add(swap)
        adj[b].add(swap)
        in_tree[e] = False
        in_tree[swap] = True
        changed = True
    if not changed:
        return tree
    return SpanningTree.from_edge_ids(graph, np.flatnonzero(in_tree))


@dataclass(frozen=True)
class CanonicalReport:
    p1: bool
    p1_witness: int | None  # face id
    p2: bool
    p2_witness: int | None  # edge id

    @property
    def ok(self):
        return self.p1 and self.p2


def check_canonical(emb, tree):
    """P1: each E-face misses exactly one external edge.
    P2: each missing external edge closes a cycle enclosing one E-face."""
    in_tree = tree.in_tree
    p1_witness = None
    for face in emb.faces:
        if face.external and sum(not in_tree[e] for e in face.external) != 1:
            p1_witness = face.id
            break
    e_face = np.array([bool(f.external) for f in emb.faces])
    p2_witness = None
    ext_nontree = np.flatnonzero(emb.is_external & ~in_tree)
    for e in ext_nontree.tolist():
        u, v = emb.graph.edges[e]
        enc = enclosed_region(emb, tree_path(tree, u, v))
        if int(e_face[enc].sum()) != 1:
            p2_witness = e
            break
    return CanonicalReport(p1_witness is None, p1_witness, p2_witness is None, p2_witness)
