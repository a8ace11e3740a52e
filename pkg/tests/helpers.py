"""Fixtures and independent oracles shared by the test modules."""

from collections import deque

import networkx as nx
import numpy as np

from treespan.graph import SpanningTree, build_graph, enumerate_spanning_trees, stretch
from treespan.outerplanar import random_outerplanar


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _with_chords(n, chords):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] + list(chords))


D4 = _with_chords(4, [(0, 2)])
FAN5 = _with_chords(5, [(0, 2), (0, 3)])
HEX6 = _with_chords(6, [(0, 2), (2, 4), (0, 4)])
BOWTIE = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])

FIXTURES = {f"C{n}": cycle(n) for n in range(3, 9)}
FIXTURES.update(D4=D4, FAN5=FAN5, HEX6=HEX6, BOWTIE=BOWTIE)

# minimum stretch of every fixture, frozen from the enumeration oracle
FIXTURE_MIN_STRETCH = {f"C{n}": n - 1 for n in range(3, 9)}
FIXTURE_MIN_STRETCH.update(D4=2, FAN5=2, HEX6=3, BOWTIE=2)


def bfs_distance(n, tree_edges, u, v):
    adj = [[] for _ in range(n)]
    for a, b in tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist[v]


def bfs_stretch(graph, tree):
    """Maximum tree distance over non-tree edges, by plain BFS."""
    tree_edges = tree.edges()
    in_tree = set(tree_edges)
    worst = 1
    for e in graph.edges:
        if e not in in_tree:
            worst = max(worst, bfs_distance(graph.n, tree_edges, *e))
    return worst


def oracle_min_stretch(graph):
    return min(stretch(graph, t).t for t in enumerate_spanning_trees(graph))


def kirchhoff_count(graph):
    lap = nx.laplacian_matrix(to_nx(graph), nodelist=range(graph.n)).toarray()
    return int(round(np.linalg.det(lap[1:, 1:].astype(float))))


def to_nx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


def relabel(graph, rng):
    """Same graph under a random vertex permutation and edge order."""
    perm = list(range(graph.n))
    rng.shuffle(perm)
    pairs = [(perm[u], perm[v]) for u, v in graph.edges]
    rng.shuffle(pairs)
    return build_graph(graph.n, pairs)


def random_block(rng, n):
    frac = rng.choice([0, "1/4", "1/2", "3/4", 1])
    return random_outerplanar(n, frac, rng.randrange(10**9))


def random_connected_outerplanar(rng, n_max):
    """Blocks and pendant edges glued at single vertices, randomly relabelled."""
    n_target = rng.randint(2, n_max)
    if n_target >= 3 and rng.random() < 0.4:
        base = random_block(rng, rng.randint(3, n_target))
        pairs, n = list(base.edges), base.n
    else:
        pairs, n = [(0, 1)], 2
    while n < n_target:
        room = n_target - n
        at = rng.randrange(n)
        if room >= 2 and rng.random() < 0.5:
            k = rng.randint(3, min(room + 1, 6))
            blk = random_block(rng, k)
            # block vertex 0 is glued onto ``at``; the rest are new
            ids = [at] + list(range(n, n + k - 1))
            pairs += [(ids[u], ids[v]) for u, v in blk.edges]
            n += k - 1
        else:
            pairs.append((at, n))
            n += 1
    return relabel(build_graph(n, pairs), rng)


def random_spanning_tree(graph, rng):
    """Random spanning tree via Kruskal over a shuffled edge order."""
    ids = list(range(graph.m))
    rng.shuffle(ids)
    root = list(range(graph.n))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    chosen = []
    for e in ids:
        a, b = (find(x) for x in graph.edges[e])
        if a != b:
            root[a] = b
            chosen.append(e)
    return SpanningTree.from_edge_ids(graph, chosen)


def random_tree_edges(rng, k):
    return [(rng.randrange(v), v) for v in range(1, k)]


def random_sd_instance(rng, max_nodes=12, max_value=6):
    from treespan.graph import Tree
    from treespan.sdpartition import SDInstance

    k = rng.randint(1, max_nodes)
    perm = list(range(k))
    rng.shuffle(perm)
    edges = [(perm[a], perm[b]) for a, b in random_tree_edges(rng, k)]
    supply = np.array([rng.random() < 0.3 for _ in range(k)], dtype=bool)
    if not supply.any():
        supply[rng.randrange(k)] = True
    value = np.array([rng.randint(0, max_value) for _ in range(k)], dtype=np.int64)
    return SDInstance(Tree.from_edges(k, edges), supply, value)
