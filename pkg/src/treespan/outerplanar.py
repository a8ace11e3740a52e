"""Outerplane embedding of 2-connected outerplanar graphs and its weak dual.

The embedding is found in two linear passes.  Degree-2 vertices are
eliminated one at a time, each leaving a virtual edge between its two
neighbours; the real edges swallowed along the way form the candidate
outer cycle.  A stack scan over the cycle positions then checks that the
remaining edges are pairwise non-crossing chords and emits the interior
faces.  Either pass failing proves the block is not outerplanar.
"""

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import kernels
from .errors import NotACycle, NotOuterplanar
from .graph import Graph, Tree


class EdgeClass(str, enum.Enum):
    EXTERNAL = "External"
    INTERNAL = "Internal"


class FaceKind(str, enum.Enum):
    E_FACE = "E-face"
    I_FACE = "I-face"


@dataclass(frozen=True)
class Face:
    id: int
    vertices: tuple
    edge_ids: tuple
    external: tuple

    @property
    def kind(self):
        return FaceKind.E_FACE if self.external else FaceKind.I_FACE

    def __len__(self):
        return len(self.edge_ids)


@dataclass(frozen=True, eq=False)
class OuterplaneEmbedding:
    """Outer cycle plus interior faces, stored as CSR arrays.

    ``cycle_eids[i]`` joins ``outer_cycle[i]`` to the next cycle vertex.
    Face ``f`` has vertices ``face_verts[face_ptr[f]:face_ptr[f+1]]`` in
    boundary order; ``face_edges`` is aligned so that its ``k``-th entry
    joins the ``k``-th and ``k+1``-th vertex.  ``face_inc[e]`` holds the one
    or two faces containing edge ``e`` (``-1`` pads).
    """

    graph: Graph
    outer_cycle: tuple
    cycle_eids: np.ndarray
    face_ptr: np.ndarray
    face_verts: np.ndarray
    face_edges: np.ndarray
    face_inc: np.ndarray

    @property
    def num_faces(self):
        return len(self.face_ptr) - 1

    @cached_property
    def face_lengths(self):
        return np.diff(self.face_ptr)

    @cached_property
    def is_external(self):
        return self.face_inc[:, 1] < 0

    @property
    def edge_class(self):
        return tuple(
            EdgeClass.EXTERNAL if x else EdgeClass.INTERNAL
            for x in self.is_external.tolist()
        )

    def face_incidence(self, edge_id):
        return tuple(f for f in self.face_inc[edge_id].tolist() if f >= 0)

    @cached_property
    def faces(self):
        ptr = self.face_ptr.tolist()
        verts = self.face_verts.tolist()
        fedges = self.face_edges.tolist()
        ext = self.is_external.tolist()
        out = []
        for f in range(self.num_faces):
            es = fedges[ptr[f]:ptr[f + 1]]
            out.append(
                Face(
                    f,
                    tuple(verts[ptr[f]:ptr[f + 1]]),
                    tuple(es),
                    tuple(e for e in es if ext[e]),
                )
            )
        return out


def _face_incidence(m, face_ptr, face_edges):
    r = len(face_ptr) - 1
    fid = np.repeat(np.arange(r, dtype=np.int64), np.diff(face_ptr))
    lo = np.full(m, r, dtype=np.int64)
    hi = np.full(m, -1, dtype=np.int64)
    np.minimum.at(lo, face_edges, fid)
    np.maximum.at(hi, face_edges, fid)
    inc = np.full((m, 2), -1, dtype=np.int64)
    inc[:, 0] = np.where(hi >= 0, lo, -1)
    inc[:, 1] = np.where(hi != lo, hi, -1)
    return inc


def faces_from_cycle(order, cycle_eids, chord_ids, graph):
    """Interior faces of ``graph`` restricted to the cycle plus ``chord_ids``.

    Returns ``(face_ptr, face_verts, face_edges)``; raises
    ``NotOuterplanar('CrossingChords')`` if two chords cross.
    """
    eu, ev = graph.arrays
    chord_ids = np.asarray(chord_ids, dtype=np.int64)
    status, ptr, verts, fedges = kernels.chord_faces(
        order, cycle_eids, eu[chord_ids], ev[chord_ids], chord_ids
    )
    if status == kernels.CROSSING:
        raise NotOuterplanar("CrossingChords")
    return ptr, verts, fedges


def outerplane_embed(graph):
    """Unique outerplane embedding of a 2-connected outerplanar graph.

    The outer cycle starts at vertex 0 and continues to its smaller outer
    neighbour.
    """
    n, m = graph.n, graph.m
    if n < 3:
        raise NotOuterplanar("NotBiconnected", f"{n} vertices")
    if m > 2 * n - 3:
        raise NotOuterplanar("TooManyEdges", f"m={m} > 2n-3={2 * n - 3}")
    eu, ev = graph.arrays
    if n == 3:
        if m != 3:
            raise NotOuterplanar("NotBiconnected", "path on 3 vertices")
        e01, e12, e02 = graph.edge_id(0, 1), graph.edge_id(1, 2), graph.edge_id(0, 2)
        order = np.array([0, 1, 2], dtype=np.int64)
        ceids = np.array([e01, e12, e02], dtype=np.int64)
        chords = np.zeros(0, dtype=np.int64)
    else:
        status, order, ceids, outer = kernels.outer_cycle(n, eu, ev)
        if status == kernels.NO_DEGREE2:
            raise NotOuterplanar("NoDegree2Vertex")
        if status == kernels.NOT_HAMILTONIAN:
            raise NotOuterplanar("NotHamiltonian")
        chords = np.flatnonzero(~outer)
    ptr, verts, fedges = faces_from_cycle(order, ceids, chords, graph)
    return OuterplaneEmbedding(
        graph,
        tuple(order.tolist()),
        ceids,
        ptr,
        verts,
        fedges,
        _face_incidence(m, ptr, fedges),
    )


def interior_faces(emb):
    return emb.faces


@dataclass(frozen=True, eq=False)
class WeakDual:
    """Tree with one node per interior face; node ``f`` is face ``f``."""

    tree: Tree
    weights: np.ndarray
    special: np.ndarray  # boolean mask

    @property
    def special_nodes(self):
        return np.flatnonzero(self.special)


def weak_dual(emb):
    internal = np.flatnonzero(~emb.is_external)
    a = np.ascontiguousarray(emb.face_inc[internal, 0])
    b = np.ascontiguousarray(emb.face_inc[internal, 1])
    r = emb.num_faces
    lengths = emb.face_lengths
    degree = np.bincount(np.concatenate([a, b]), minlength=r)
    return WeakDual(Tree(r, a, b), lengths - 2, degree < lengths)


def enclosed_region(emb, cycle):
    """Ids of the interior faces of the subgraph induced by ``cycle``.

    ``cycle`` is a vertex sequence in cyclic order.
    """
    cycle = [int(v) for v in cycle]
    g = emb.graph
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle(f"{cycle} is not a simple cycle")
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not (0 <= a < g.n and 0 <= b < g.n) or (min(a, b), max(a, b)) not in g.edge_index:
            raise NotACycle(f"({a}, {b}) is not an edge")
    inside = np.zeros(g.n, dtype=bool)
    inside[cycle] = True
    fid = np.repeat(np.arange(emb.num_faces), emb.face_lengths)
    bad = np.zeros(emb.num_faces, dtype=bool)
    np.logical_or.at(bad, fid, ~inside[emb.face_verts])
    return np.flatnonzero(~bad).tolist()


def _triangulation_diagonals(n, rng):
    """Diagonals of a random triangulation of the polygon ``0..n-1``."""
    diagonals = []
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        apex = rng.randint(lo + 1, hi - 1)
        if apex - lo > 1:
            diagonals.append((lo, apex))
        if hi - apex > 1:
            diagonals.append((apex, hi))
        stack.append((lo, apex))
        stack.append((apex, hi))
    return diagonals


def random_outerplanar(n, chord_fraction, seed):
    """Cycle ``0..n-1`` plus ``round(chord_fraction * (n-3))`` non-crossing chords.

    Chords are a random subset of the diagonals of a random triangulation
    grown by recursive polygon splitting.  Deterministic per seed.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    frac = Fraction(chord_fraction)
    if not 0 <= frac <= 1:
        raise ValueError("chord_fraction must lie in [0, 1]")
    rng = random.Random(seed)
    diagonals = _triangulation_diagonals(n, rng)
    k = round(frac * (n - 3))
    chosen = rng.sample(diagonals, k)
    cycle = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(cycle + sorted(chosen)))
