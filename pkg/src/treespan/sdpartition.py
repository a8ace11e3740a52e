"""Supply-demand tree partition.

The solver roots the tree at its lowest-id supply node and makes one
post-order pass.  Each subtree reports either ``Residual(r)`` (its top
part already owns a supply with ``r`` to spare) or ``Pending(p)`` (its
top part still needs ``p`` from a supply above).  A residual subtree can
always be sealed off, so it never hurts the ancestors; a demand node
therefore joins its richest residual child whenever that child can
absorb the node and all its pending children.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import Infeasible, InstanceTooLarge, InvalidPartition, PreconditionViolated
from .graph import Tree
from .spartition import (
    Partition,
    SPartition,
    _check_parts,
    _edge_cut_partitions,
    _part_index,
)


@dataclass(frozen=True, eq=False)
class SDInstance:
    """``value[v]`` is the supply of a supply node, else the demand.

    ``origin[v]`` names the special node a supply was attached to when the
    instance came from :func:`reduce_to_sd` (``-1`` on demand nodes).
    """

    tree: Tree
    supply: np.ndarray  # boolean mask
    value: np.ndarray
    origin: np.ndarray | None = None

    @property
    def n(self):
        return self.tree.n

    @cached_property
    def supply_nodes(self):
        return np.flatnonzero(self.supply)

    def with_supply(self, amount):
        """Same tree and demands, every supply set to ``amount``."""
        value = np.where(self.supply, amount, self.value)
        inst = SDInstance(self.tree, self.supply, value, self.origin)
        inst.__dict__["supply_nodes"] = self.supply_nodes
        return inst

    def dumps(self):
        """``k``, then one line of ``S<value>``/``D<value>`` tags, then edges."""
        tags = " ".join(
            f"{'S' if s else 'D'}{v}"
            for s, v in zip(self.supply.tolist(), self.value.tolist())
        )
        lines = [str(self.n), tags] + [f"{u} {v}" for u, v in self.tree.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n = int(lines[0])
        tags = lines[1].split()
        if len(tags) != n:
            raise ValueError(f"expected {n} node tags, got {len(tags)}")
        if any(t[0] not in "SD" for t in tags):
            raise ValueError("node tags must start with S or D")
        supply = np.array([t[0] == "S" for t in tags], dtype=bool)
        value = np.array([int(t[1:]) for t in tags], dtype=np.int64)
        if not supply.any():
            raise ValueError("no supply node")
        edges = [tuple(map(int, ln.split())) for ln in lines[2:]]
        return cls(Tree.from_edges(n, edges), supply, value)


class SDPartition(Partition):
    pass


def reduce_to_sd(inst):
    """Hang a supply leaf of value tau off every special node."""
    k = inst.k
    q = len(inst.special)
    supplies = np.arange(k, k + q, dtype=np.int64)
    tree = Tree(
        k + q,
        np.concatenate([inst.tree.eu, inst.special]),
        np.concatenate([inst.tree.ev, supplies]),
    )
    supply = np.zeros(k + q, dtype=bool)
    supply[k:] = True
    value = np.concatenate([inst.weights, np.full(q, inst.tau, dtype=np.int64)])
    origin = np.full(k + q, -1, dtype=np.int64)
    origin[k:] = inst.special
    return SDInstance(tree, supply, value.astype(np.int64), origin)


def _solve_labels(inst):
    ptr, adj = inst.tree.csr
    root = int(inst.supply_nodes[0])
    fail, labels = kernels.solve_sd(
        inst.n, ptr, adj, inst.supply.astype(np.int64), inst.value, root
    )
    if fail >= 0:
        raise Infeasible(int(fail))
    return labels


def solve_sd(inst):
    """A supply-demand partition; raises :class:`Infeasible` if none exists.

    Parts are ordered by their supply node.
    """
    return SDPartition.from_labels(_solve_labels(inst))


def sd_feasible(inst):
    try:
        _solve_labels(inst)
    except Infeasible:
        return False
    return True


def verify_sd(inst, partition):
    """``None`` if ``partition`` is a valid supply-demand partition."""
    label, err = _part_index(inst.n, partition)
    if err is not None:
        return err
    nparts = partition.num_parts
    load = np.zeros(nparts, dtype=np.int64)
    demand = ~inst.supply
    np.add.at(load, label[demand], inst.value[demand])
    bound = np.zeros(nparts, dtype=np.int64)
    bound[label[inst.supply]] = inst.value[inst.supply]
    return _check_parts(
        inst.tree,
        label,
        nparts,
        inst.supply,
        load,
        bound,
        names=("NoSupplyInPart", "TwoSupplies", "CapacityExceeded"),
    )


def _check_reduction_shape(inst):
    if inst.origin is None:
        raise PreconditionViolated("instance has no origin map")
    sup = inst.supply_nodes
    if len(sup) == 0:
        raise PreconditionViolated("no supply nodes")
    if not (sup == np.arange(inst.n - len(sup), inst.n)).all():
        raise PreconditionViolated("supply nodes must come after all demand nodes")
    if (inst.value[sup] != inst.value[sup[0]]).any():
        raise PreconditionViolated("supplies are not uniform")
    ptr, adj = inst.tree.csr
    if ((ptr[sup + 1] - ptr[sup]) != 1).any():
        raise PreconditionViolated("a supply node is not a leaf")
    if (adj[ptr[sup]] != inst.origin[sup]).any():
        raise PreconditionViolated("a supply is not attached to its origin")
    if np.bincount(inst.origin[sup]).max() > 1:
        raise PreconditionViolated("a node has two supply neighbours")


def sd_to_spartition(inst, partition):
    """Tree S-partition of the source instance from a supply-demand partition.

    Each part is rooted at its supply.  A supply left alone in its part
    takes over its special neighbour together with that neighbour's
    subtree; dropping the supply nodes then leaves one special per part.
    """
    _check_reduction_shape(inst)
    bad = verify_sd(inst, partition)
    if bad is not None:
        raise InvalidPartition(bad)
    label, _ = _part_index(inst.n, partition)
    sizes = np.bincount(label)
    lone = inst.supply_nodes[sizes[label[inst.supply_nodes]] == 1]
    lift = np.full(inst.n, -1, dtype=np.int64)
    lift[inst.origin[lone]] = lone
    ptr, adj = inst.tree.csr
    owner = kernels.regroup_parts(
        inst.n, ptr, adj, label, inst.supply.astype(np.int64), lift
    )
    k = inst.n - len(inst.supply_nodes)
    return SPartition.from_labels(inst.origin[owner[:k]])


def brute_force_sd(inst, cap=15):
    """First valid partition over all cut sets, or ``None``."""
    n = inst.n
    if n > cap:
        raise InstanceTooLarge(f"{n} nodes exceeds the cap of {cap}")
    supply = inst.supply.tolist()
    value = inst.value.tolist()
    nparts = sum(supply)
    for label in _edge_cut_partitions(inst.tree, nparts):
        cap_of = {}
        load = {}
        ok = True
        for v in range(n):
            p = label[v]
            if supply[v]:
                if p in cap_of:
                    ok = False
                    break
                cap_of[p] = value[v]
            else:
                load[p] = load.get(p, 0) + value[v]
        if not ok or len(cap_of) != nparts:
            continue
        if all(load.get(p, 0) <= c for p, c in cap_of.items()):
            return SDPartition.from_labels(label)
    return None
