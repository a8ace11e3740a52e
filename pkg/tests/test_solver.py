import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (
    BOWTIE,
    D4,
    FIXTURE_MIN_STRETCH,
    FIXTURES,
    HEX6,
    bfs_stretch,
    cycle,
    oracle_min_stretch,
    random_connected_outerplanar,
)
from treespan.errors import Disconnected, NotOuterplanar
from treespan.graph import build_graph, stretch
from treespan.solver import min_stretch, solve_block, tree_t_spanner


def test_solve_block_c5():
    assert solve_block(cycle(5), 3) is None
    tree = solve_block(cycle(5), 4)
    assert len(tree.edge_ids) == 4 and stretch(cycle(5), tree).t == 4


def test_solve_block_hex6():
    assert stretch(HEX6, solve_block(HEX6, 3)).t == 3


def test_solve_block_single_edge():
    g = build_graph(2, [(0, 1)])
    assert solve_block(g, 1).edge_ids.tolist() == [0]


def test_bowtie_at_two():
    result = tree_t_spanner(BOWTIE, 2)
    assert result.exists and result.certificate.t == 2
    for tri in ({0, 1, 2}, {2, 3, 4}):
        assert sum(1 for u, v in result.tree_edges if {u, v} <= tri) == 2
    assert [b.vertices for b in result.blocks] == [3, 3]


def test_tree_input_at_one():
    g = build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    result = tree_t_spanner(g, 1)
    assert result.exists and sorted(result.tree_edges) == sorted(g.edges)
    assert result.certificate.t == 1 and result.certificate.witness is None


def test_d4_at_one():
    result = tree_t_spanner(D4, 1)
    assert not result.exists and result.tree is None and result.tree_edges == []


def test_errors():
    with pytest.raises(Disconnected):
        tree_t_spanner(build_graph(4, [(0, 1), (2, 3)]), 3)
    k4 = build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(NotOuterplanar):
        tree_t_spanner(k4, 3)
    with pytest.raises(NotOuterplanar):
        min_stretch(k4)
    with pytest.raises(ValueError):
        tree_t_spanner(D4, 0)


def test_single_vertex():
    g = build_graph(1, [])
    assert tree_t_spanner(g, 1).exists
    assert min_stretch(g)[0] == 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_min_stretch_fixtures(name):
    g = FIXTURES[name]
    t, result = min_stretch(g)
    assert t == FIXTURE_MIN_STRETCH[name] == oracle_min_stretch(g)
    assert result.certificate.t == t == bfs_stretch(g, result.tree)


def test_fixture_table_matches_oracle():
    for name, g in FIXTURES.items():
        assert oracle_min_stretch(g) == FIXTURE_MIN_STRETCH[name]


def test_min_stretch_random_small_against_enumeration():
    rng = random.Random(99)
    for _ in range(120):
        g = random_connected_outerplanar(rng, 9)
        t, result = min_stretch(g)
        assert t == oracle_min_stretch(g)
        assert result.certificate.t == t


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_existence_monotone_and_trees_verify(seed):
    rng = random.Random(seed)
    g = random_connected_outerplanar(rng, 30)
    answers = []
    for t in range(1, g.n + 1):
        result = tree_t_spanner(g, t)
        answers.append(result.exists)
        if result.exists:
            assert result.certificate.t <= t
            assert result.certificate.t == bfs_stretch(g, result.tree)
            assert len(result.tree.edge_ids) == g.n - 1
    assert answers == sorted(answers)
    t, _ = min_stretch(g)
    assert answers.index(True) + 1 == t


def test_blocks_report_tau():
    result = tree_t_spanner(build_graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]), 3)
    assert [(b.vertices, b.edges, b.tau) for b in result.blocks] == [(3, 3, 2), (2, 1, None), (3, 3, 2)]
    assert set(result.timings_ms) == {"blocks", "solve", "certificate", "total"}


def test_min_stretch_reports_per_block_t():
    g = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4), (4, 6)])
    t, result = min_stretch(g)
    assert t == 3
    assert [(b.vertices, b.stretch) for b in result.blocks] == [(4, 3), (2, 1), (4, 2)]
    assert np.all(result.tree.in_tree[[g.edge_id(3, 4)]])
