"""Tree S-partition: instances, the reduction from outerplanar blocks,
a verifier and an exhaustive oracle."""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import kernels
from .errors import InstanceTooLarge
from .graph import Tree
from .outerplanar import weak_dual


@dataclass(frozen=True, eq=False)
class SPartitionInstance:
    """Tree with node weights, special nodes and a cost bound ``tau``."""

    tree: Tree
    weights: np.ndarray
    special: np.ndarray  # sorted node ids
    tau: int

    @property
    def k(self):
        return self.tree.n

    @cached_property
    def special_mask(self):
        mask = np.zeros(self.k, dtype=bool)
        mask[self.special] = True
        return mask

    def with_tau(self, tau):
        return SPartitionInstance(self.tree, self.weights, self.special, tau)

    def dumps(self):
        lines = [
            f"{self.k} {self.tau}",
            " ".join(map(str, self.weights.tolist())),
            " ".join(map(str, self.special.tolist())),
        ]
        lines += [f"{u} {v}" for u, v in self.tree.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        k, tau = map(int, lines[0].split())
        weights = np.array(list(map(int, lines[1].split())), dtype=np.int64)
        special = np.array(sorted(map(int, lines[2].split())), dtype=np.int64)
        edges = [tuple(map(int, ln.split())) for ln in lines[3:]]
        if len(weights) != k:
            raise ValueError(f"expected {k} weights, got {len(weights)}")
        if len(special) == 0:
            raise ValueError("no special nodes")
        return cls(Tree.from_edges(k, edges), weights, special, tau)


class Partition:
    """Disjoint node parts.

    Built either from explicit ``parts`` or, via ``from_labels``, from one
    label per node; in the latter case the part tuples are only
    materialized on first access to ``parts``.
    """

    def __init__(self, parts):
        self._parts = tuple(tuple(int(v) for v in p) for p in parts)
        self._index = None

    @classmethod
    def from_labels(cls, labels):
        part = cls.__new__(cls)
        part._parts = None
        labels = np.asarray(labels).reshape(-1)
        if (
            labels.dtype.kind in "iu"
            and len(labels)
            and labels.min() >= 0
            and labels.max() < 4 * len(labels)
        ):
            # dense integer labels: rank them without sorting
            present = np.bincount(labels, minlength=1) > 0
            rank = np.cumsum(present) - 1
            index = rank[labels]
        else:
            _, index = np.unique(labels, return_inverse=True)
        part._index = index.astype(np.int64).reshape(-1)
        return part

    @property
    def parts(self):
        if self._parts is None:
            ptr, order = kernels.group_by(self.num_parts, self._index)
            ptr, order = ptr.tolist(), order.tolist()
            self._parts = tuple(
                tuple(order[ptr[i]:ptr[i + 1]]) for i in range(len(ptr) - 1)
            )
        return self._parts

    @property
    def num_parts(self):
        if self._parts is None:
            return int(self._index.max()) + 1 if len(self._index) else 0
        return len(self._parts)

    def costs(self, weights):
        return [int(sum(weights[v] for v in p)) for p in self.parts]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.parts!r})"


class SPartition(Partition):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    part: int | None = None
    detail: str = ""


def reduce_to_spartition(emb, t):
    """Weak dual with ``w = |E(f)| - 2``, E-faces special, bound ``t - 1``."""
    wd = weak_dual(emb)
    return SPartitionInstance(wd.tree, wd.weights, wd.special_nodes, t - 1)


def _part_index(k, parts):
    idx = parts._index
    if idx is not None:
        if len(idx) != k:
            return None, Violation("NotAPartition", None, f"{len(idx)} labels for {k} nodes")
        return idx, None
    label = np.full(k, -1, dtype=np.int64)
    for i, p in enumerate(parts.parts):
        for v in p:
            if not 0 <= v < k:
                return None, Violation("NotAPartition", i, f"node {v} out of range")
            if label[v] >= 0:
                return None, Violation("NotAPartition", i, f"node {v} repeated")
            label[v] = i
    if (label < 0).any():
        missing = int(np.flatnonzero(label < 0)[0])
        return None, Violation("NotAPartition", None, f"node {missing} uncovered")
    return label, None


def _check_parts(tree, label, nparts, special_mask, load, bound_of,
                 names=("NoSpecial", "TwoSpecials", "CostExceeded")):
    """Shared part checks; ``bound_of[i]`` is the capacity of part ``i``."""
    size = np.bincount(label, minlength=nparts)
    if (size == 0).any():
        return Violation("NotAPartition", int(np.flatnonzero(size == 0)[0]), "empty part")
    same = label[tree.eu] == label[tree.ev]
    inner = np.bincount(label[tree.eu[same]], minlength=nparts)
    bad = np.flatnonzero(inner != size - 1)
    if len(bad):
        return Violation("Disconnected", int(bad[0]))
    count = np.bincount(label[special_mask], minlength=nparts)
    bad = np.flatnonzero(count != 1)
    if len(bad):
        i = int(bad[0])
        kind = names[0] if count[i] == 0 else names[1]
        return Violation(kind, i)
    bad = np.flatnonzero(load > bound_of)
    if len(bad):
        i = int(bad[0])
        return Violation(names[2], i, f"cost {int(load[i])} > {int(bound_of[i])}")
    return None


def verify_spartition(inst, partition):
    """``None`` if ``partition`` is a tree S-partition of cost at most tau."""
    label, err = _part_index(inst.k, partition)
    if err is not None:
        return err
    nparts = partition.num_parts
    load = np.zeros(nparts, dtype=np.int64)
    np.add.at(load, label, inst.weights)
    return _check_parts(
        inst.tree, label, nparts, inst.special_mask, load, np.full(nparts, inst.tau)
    )


def _rooted_order(tree):
    """Parent array and BFS order from node 0."""
    nbrs = tree.neighbors
    parent = [-1] * tree.n
    order = [0]
    seen = [False] * tree.n
    seen[0] = True
    for v in order:
        for w in nbrs[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
    return parent, order


def _edge_cut_partitions(tree, nparts):
    """Every way to split ``tree`` into ``nparts`` connected parts.

    Yields a label per node; cut sets run in lexicographic order of the
    child endpoints of the cut edges (BFS from node 0).
    """
    parent, order = _rooted_order(tree)
    children = order[1:]
    for cut in combinations(range(len(children)), nparts - 1):
        is_cut = [False] * tree.n
        for c in cut:
            is_cut[children[c]] = True
        label = [0] * tree.n
        for v in children:
            label[v] = v if is_cut[v] else label[parent[v]]
        yield label


def brute_force_spartition(inst, cap=15):
    """First valid tree S-partition in cut-set order, or ``None``."""
    k = inst.k
    if k > cap:
        raise InstanceTooLarge(f"{k} nodes exceeds the cap of {cap}")
    weights = inst.weights.tolist()
    special = inst.special_mask.tolist()
    nparts = len(inst.special)
    for label in _edge_cut_partitions(inst.tree, nparts):
        cost = {}
        specials = {}
        for v in range(k):
            cost[label[v]] = cost.get(label[v], 0) + weights[v]
            specials[label[v]] = specials.get(label[v], 0) + special[v]
        if all(c == 1 for c in specials.values()) and max(cost.values()) <= inst.tau:
            return SPartition.from_labels(label)
    return None
