import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import D4, FIXTURES, HEX6, cycle, random_block, relabel, to_nx
from treespan.errors import NotACycle, NotOuterplanar
from treespan.graph import build_graph, enumerate_spanning_trees, tree_path
from treespan.outerplanar import (
    EdgeClass,
    FaceKind,
    enclosed_region,
    interior_faces,
    outerplane_embed,
    random_outerplanar,
    weak_dual,
)


def apex_planar(graph):
    """Outerplanarity oracle: G is outerplanar iff G + apex is planar."""
    g = to_nx(graph)
    g.add_edges_from((graph.n, v) for v in range(graph.n))
    return nx.check_planarity(g)[0]


def face_sets(emb):
    return sorted(tuple(sorted(f.vertices)) for f in emb.faces)


def test_d4_embedding():
    emb = outerplane_embed(D4)
    assert emb.outer_cycle == (0, 1, 2, 3)
    assert [D4.edges[e] for e in range(D4.m) if emb.edge_class[e] is EdgeClass.INTERNAL] == [(0, 2)]
    assert face_sets(emb) == [(0, 1, 2), (0, 2, 3)]
    assert apex_planar(D4)


def test_k4_rejected():
    k4 = build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(NotOuterplanar) as info:
        outerplane_embed(k4)
    assert info.value.reason == "TooManyEdges"


def test_k23_rejected():
    k23 = build_graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    with pytest.raises(NotOuterplanar) as info:
        outerplane_embed(k23)
    assert info.value.reason == "NotHamiltonian"


def test_c5_embedding():
    emb = outerplane_embed(cycle(5))
    assert emb.outer_cycle == (0, 1, 2, 3, 4)
    assert emb.num_faces == 1
    (face,) = interior_faces(emb)
    assert len(face) == 5 and face.kind is FaceKind.E_FACE
    assert sorted(face.external) == list(range(5))


def test_hex6_faces():
    emb = outerplane_embed(HEX6)
    assert face_sets(emb) == [(0, 1, 2), (0, 2, 4), (0, 4, 5), (2, 3, 4)]
    kinds = {tuple(sorted(f.vertices)): f.kind for f in emb.faces}
    assert [k for k, v in kinds.items() if v is FaceKind.I_FACE] == [(0, 2, 4)]


def test_hex6_faces_match_cycle_space():
    # faces are a cycle basis: each chordless cycle of HEX6 is a face
    chordless = sorted(tuple(sorted(c)) for c in nx.chordless_cycles(to_nx(HEX6)))
    assert chordless == face_sets(outerplane_embed(HEX6))


def test_d4_face_length_sum():
    emb = outerplane_embed(D4)
    assert all(f.kind is FaceKind.E_FACE for f in emb.faces)
    assert int(emb.face_lengths.sum()) == 6 == 2 * D4.m - D4.n


def test_triangle_closed_form():
    emb = outerplane_embed(cycle(3))
    assert emb.outer_cycle == (0, 1, 2)
    assert emb.num_faces == 1


@pytest.mark.parametrize(
    "graph", [build_graph(2, [(0, 1)]), build_graph(3, [(0, 1), (1, 2)])]
)
def test_not_biconnected(graph):
    with pytest.raises(NotOuterplanar) as info:
        outerplane_embed(graph)
    assert info.value.reason == "NotBiconnected"


def test_crossing_chords_rejected():
    g = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4)])
    with pytest.raises(NotOuterplanar) as info:
        outerplane_embed(g)
    assert info.value.reason in ("CrossingChords", "NotHamiltonian", "NoDegree2Vertex")
    assert not apex_planar(g)


def test_weak_dual_d4():
    wd = weak_dual(outerplane_embed(D4))
    assert wd.tree.n == 2 and wd.tree.edges() == [(0, 1)]
    assert wd.weights.tolist() == [1, 1]
    assert wd.special.tolist() == [True, True]


def test_weak_dual_hex6_star():
    emb = outerplane_embed(HEX6)
    wd = weak_dual(emb)
    centre = next(f.id for f in emb.faces if f.kind is FaceKind.I_FACE)
    degree = np.bincount(np.concatenate([wd.tree.eu, wd.tree.ev]), minlength=4)
    assert degree[centre] == 3 and sorted(degree.tolist()) == [1, 1, 1, 3]
    assert wd.weights.tolist() == [1, 1, 1, 1]
    assert wd.special_nodes.tolist() == sorted(set(range(4)) - {centre})


def test_weak_dual_c5():
    wd = weak_dual(outerplane_embed(cycle(5)))
    assert wd.tree.n == 1 and wd.weights.tolist() == [3] and wd.special.tolist() == [True]


def test_enclosed_region_examples():
    emb = outerplane_embed(D4)
    assert enclosed_region(emb, [0, 1, 2, 3]) == [0, 1]
    f012 = next(f.id for f in emb.faces if sorted(f.vertices) == [0, 1, 2])
    assert enclosed_region(emb, [0, 1, 2]) == [f012]
    hemb = outerplane_embed(HEX6)
    centre = next(f.id for f in hemb.faces if f.kind is FaceKind.I_FACE)
    assert enclosed_region(hemb, [0, 2, 4]) == [centre]


@pytest.mark.parametrize("cyc", [[0, 1], [0, 1, 3], [0, 1, 1, 2], [0, 1, 2, 9]])
def test_enclosed_region_rejects_non_cycles(cyc):
    with pytest.raises(NotACycle):
        enclosed_region(outerplane_embed(D4), cyc)


def test_generator_examples():
    assert random_outerplanar(5, 0, 123).edges == cycle(5).edges
    for n in (3, 4, 9, 30):
        g = random_outerplanar(n, 1, 5)
        assert g.m == 2 * n - 3
    g = random_outerplanar(8, Fraction(1, 2), 42)
    assert g.edges[8:] == ((1, 6), (2, 4))
    outerplane_embed(g)
    assert g.edges == random_outerplanar(8, "1/2", 42).edges


def test_generator_rejects_bad_input():
    with pytest.raises(ValueError):
        random_outerplanar(2, 0, 0)
    with pytest.raises(ValueError):
        random_outerplanar(5, 2, 0)


def check_embedding_invariants(g, emb):
    n, m, r = g.n, g.m, emb.num_faces
    assert sorted(emb.outer_cycle) == list(range(n))
    assert emb.outer_cycle[0] == 0
    assert emb.outer_cycle[1] < emb.outer_cycle[-1]
    cyc = list(emb.outer_cycle)
    for k, (a, b) in enumerate(zip(cyc, cyc[1:] + cyc[:1])):
        assert g.edges[emb.cycle_eids[k]] == (min(a, b), max(a, b))
    assert r == m - n + 1
    assert int(emb.face_lengths.sum()) == 2 * m - n
    assert n == int(emb.face_lengths.sum()) - 2 * (r - 1)
    on_cycle = set(emb.cycle_eids.tolist())
    for e in range(m):
        faces = emb.face_incidence(e)
        assert (len(faces) == 1) == (e in on_cycle) == bool(emb.is_external[e])
        assert len(faces) in (1, 2)
    wd = weak_dual(emb)
    assert wd.tree.is_tree()
    assert (wd.weights >= 1).all()
    degree = np.bincount(np.concatenate([wd.tree.eu, wd.tree.ev]), minlength=r)
    for f in emb.faces:
        assert len(f) >= 3
        assert len(f.external) == len(f) - degree[f.id]
        assert (f.kind is FaceKind.E_FACE) == bool(wd.special[f.id])
        vs = list(f.vertices)
        for k, e in enumerate(f.edge_ids):
            a, b = vs[k], vs[(k + 1) % len(vs)]
            assert g.edges[e] == (min(a, b), max(a, b))


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 60), st.sampled_from([0, "1/3", "1/2", "2/3", 1]), st.integers(0, 10**6))
def test_embedding_invariants(n, frac, seed):
    g = random_outerplanar(n, frac, seed)
    check_embedding_invariants(g, outerplane_embed(g))


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 40), st.integers(0, 10**6))
def test_embedding_invariants_relabelled(n, seed):
    rng = random.Random(seed)
    g = relabel(random_block(rng, n), rng)
    check_embedding_invariants(g, outerplane_embed(g))


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 30), st.integers(0, 10**6))
def test_embedding_ignores_edge_order(n, seed):
    rng = random.Random(seed)
    g = random_block(rng, n)
    pairs = list(g.edges)
    rng.shuffle(pairs)
    h = build_graph(n, pairs)
    a, b = outerplane_embed(g), outerplane_embed(h)
    assert a.outer_cycle == b.outer_cycle
    assert [f.vertices for f in a.faces] == [f.vertices for f in b.faces]
    assert [[g.edges[e] for e in f.edge_ids] for f in a.faces] == [
        [h.edges[e] for e in f.edge_ids] for f in b.faces
    ]


def _random_biconnected(rng, n):
    """Random 2-connected graph with m <= 2n-3: a cycle plus random chords."""
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    extra = rng.randint(0, n - 3)
    while extra:
        a, b = rng.sample(range(n), 2)
        if (a, b) not in pairs and (b, a) not in pairs:
            pairs.append((a, b))
            extra -= 1
    return build_graph(n, pairs)


def test_recognition_matches_apex_planarity():
    rng = random.Random(2024)
    seen = {True: 0, False: 0}
    for _ in range(600):
        g = _random_biconnected(rng, rng.randint(4, 12))
        expected = apex_planar(g)
        try:
            emb = outerplane_embed(g)
        except NotOuterplanar:
            got = False
        else:
            got = True
            check_embedding_invariants(g, emb)
        assert got == expected
        seen[got] += 1
    assert seen[True] > 50 and seen[False] > 50


def test_fundamental_cycles_partition_faces():
    # the enclosed regions of the external fundamental cycles tile the faces
    rng = random.Random(9)
    graphs = [FIXTURES[k] for k in ("C5", "D4", "FAN5", "HEX6")]
    graphs += [random_block(rng, rng.randint(3, 8)) for _ in range(20)]
    for g in graphs:
        emb = outerplane_embed(g)
        for t in enumerate_spanning_trees(g):
            covered = []
            for e in np.flatnonzero(emb.is_external & ~t.in_tree).tolist():
                covered += enclosed_region(emb, tree_path(t, *g.edges[e]))
            assert sorted(covered) == list(range(emb.num_faces))


def _faces_within(emb, verts):
    return sorted(f.id for f in emb.faces if set(f.vertices) <= verts)


def test_face_subset_correspondence():
    # G[V(faces)] is 2-connected with exactly those interior faces iff the
    # faces induce a subtree of the weak dual
    rng = random.Random(5)
    for _ in range(150):
        g = random_block(rng, rng.randint(4, 14))
        emb = outerplane_embed(g)
        dual = nx.Graph()
        dual.add_nodes_from(range(emb.num_faces))
        dual.add_edges_from(weak_dual(emb).tree.edges())
        for _ in range(10):
            subset = rng.sample(range(emb.num_faces), rng.randint(1, emb.num_faces))
            verts = {v for f in subset for v in emb.faces[f].vertices}
            induced = to_nx(g).subgraph(verts)
            lhs = nx.is_biconnected(induced) and _faces_within(emb, verts) == sorted(subset)
            assert lhs == nx.is_tree(dual.subgraph(subset))


def test_connected_dual_subsets_give_biconnected_induced_subgraph():
    rng = random.Random(6)
    for _ in range(150):
        g = random_block(rng, rng.randint(4, 14))
        emb = outerplane_embed(g)
        nbrs = weak_dual(emb).tree.neighbors
        for _ in range(10):
            subset = {rng.randrange(emb.num_faces)}
            for _ in range(rng.randint(0, emb.num_faces)):
                frontier = sorted({w for v in subset for w in nbrs[v]} - subset)
                if frontier:
                    subset.add(rng.choice(frontier))
            verts = {v for f in subset for v in emb.faces[f].vertices}
            assert nx.is_biconnected(to_nx(g).subgraph(verts))
            assert _faces_within(emb, verts) == sorted(subset)
