"""Pure-Python implementations of the hot loops.

Every function here has a twin of the same name and signature in the
compiled ``_ckernels`` extension.  Inputs are integer numpy arrays (or
anything with ``tolist``); outputs are int64 numpy arrays.
"""

import numpy as np

# status codes shared with the compiled kernels
OK = 0
NO_DEGREE2 = 1
NOT_HAMILTONIAN = 2
CROSSING = 3

BACKEND = "python"


def _lst(a):
    return a.tolist() if hasattr(a, "tolist") else list(a)


def _csr(n, eu, ev):
    deg = [0] * (n + 1)
    for u in eu:
        deg[u + 1] += 1
    for v in ev:
        deg[v + 1] += 1
    for i in range(n):
        deg[i + 1] += deg[i]
    ptr = deg[:]
    fill = deg[:n]
    nbr = [0] * ptr[n]
    eid = [0] * ptr[n]
    for e in range(len(eu)):
        u = eu[e]
        v = ev[e]
        nbr[fill[u]] = v
        eid[fill[u]] = e
        fill[u] += 1
        nbr[fill[v]] = u
        eid[fill[v]] = e
        fill[v] += 1
    return ptr, nbr, eid


def biconnected_edge_labels(n, eu, ev):
    """Label every edge with its block; returns (labels, block_count).

    Blocks are numbered in the order the DFS closes them.
    """
    eu = _lst(eu)
    ev = _lst(ev)
    m = len(eu)
    ptr, nbr, eid = _csr(n, eu, ev)
    disc = [-1] * n
    low = [0] * n
    it = ptr[:n]
    pe = [-1] * n
    label = [-1] * m
    estack = []
    nblocks = 0
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        calls = [root]
        while calls:
            v = calls[-1]
            k = it[v]
            if k < ptr[v + 1]:
                it[v] = k + 1
                e = eid[k]
                if e == pe[v]:
                    continue
                w = nbr[k]
                if disc[w] == -1:
                    estack.append(e)
                    pe[w] = e
                    disc[w] = low[w] = clock
                    clock += 1
                    calls.append(w)
                elif disc[w] < disc[v]:
                    estack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                calls.pop()
                if calls:
                    u = calls[-1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        stop = pe[v]
                        while True:
                            e = estack.pop()
                            label[e] = nblocks
                            if e == stop:
                                break
                        nblocks += 1
    return np.asarray(label, dtype=np.int64), nblocks


def outer_cycle(n, eu, ev):
    """Find the Hamiltonian outer cycle by degree-2 elimination.

    Returns (status, order, cycle_eids, is_outer).  ``order`` starts at
    vertex 0 followed by its smaller outer neighbour; ``cycle_eids[i]``
    joins ``order[i]`` and ``order[i+1 mod n]``.  The cycle is only a
    candidate: the chord scan decides outerplanarity.
    """
    eu = _lst(eu)
    ev = _lst(ev)
    m = len(eu)
    empty = np.zeros(0, dtype=np.int64)
    nbr = [dict() for _ in range(n)]
    for e in range(m):
        nbr[eu[e]][ev[e]] = e
        nbr[ev[e]][eu[e]] = e
    outer = bytearray(m)
    removed = bytearray(n)
    virtual = m
    work = [v for v in range(n - 1, -1, -1) if len(nbr[v]) == 2]
    alive = n
    while alive > 3:
        v = -1
        while work:
            x = work.pop()
            if not removed[x] and len(nbr[x]) == 2:
                v = x
                break
        if v < 0:
            return NO_DEGREE2, empty, empty, empty
        (u, e1), (w, e2) = nbr[v].items()
        removed[v] = 1
        alive -= 1
        nbr[v] = {}
        del nbr[u][v]
        del nbr[w][v]
        if e1 < m:
            outer[e1] = 1
        if e2 < m:
            outer[e2] = 1
        e3 = nbr[u].get(w)
        # an existing u-w edge becomes a chord; a virtual one hides vertices
        if e3 is not None and e3 >= m:
            return NOT_HAMILTONIAN, empty, empty, empty
        nbr[u][w] = virtual
        nbr[w][u] = virtual
        virtual += 1
        if len(nbr[u]) == 2:
            work.append(u)
        if len(nbr[w]) == 2:
            work.append(w)
    for v in range(n):
        if not removed[v]:
            if len(nbr[v]) != 2:
                return NOT_HAMILTONIAN, empty, empty, empty
            for e in nbr[v].values():
                if e < m:
                    outer[e] = 1
    a1 = [-1] * n
    a2 = [-1] * n
    for e in range(m):
        if outer[e]:
            for x in (eu[e], ev[e]):
                if a1[x] < 0:
                    a1[x] = e
                elif a2[x] < 0:
                    a2[x] = e
                else:
                    return NOT_HAMILTONIAN, empty, empty, empty
    for x in range(n):
        if a2[x] < 0:
            return NOT_HAMILTONIAN, empty, empty, empty

    def other(e, x):
        return ev[e] if eu[e] == x else eu[e]

    # start at 0 towards its smaller outer neighbour
    first = a1[0] if other(a1[0], 0) < other(a2[0], 0) else a2[0]
    order = [0] * n
    ceids = [0] * n
    seen = bytearray(n)
    seen[0] = 1
    x, e = 0, first
    for i in range(n):
        order[i] = x
        ceids[i] = e
        y = other(e, x)
        if i == n - 1:
            if y != 0:
                return NOT_HAMILTONIAN, empty, empty, empty
            break
        if seen[y]:
            return NOT_HAMILTONIAN, empty, empty, empty
        seen[y] = 1
        e = a2[y] if a1[y] == e else a1[y]
        x = y
    return (
        OK,
        np.asarray(order, dtype=np.int64),
        np.asarray(ceids, dtype=np.int64),
        np.frombuffer(bytes(outer), dtype=np.uint8).astype(bool),
    )


def chord_faces(order, cycle_eids, cu, cv, ceid):
    """Stack scan over the cycle positions; one face per chord plus the last.

    Returns (status, face_ptr, face_verts, face_edges).  Edge ``k`` of a
    face joins ``verts[k]`` and ``verts[k+1]`` (cyclically).
    """
    order = _lst(order)
    cycle_eids = _lst(cycle_eids)
    cu = _lst(cu)
    cv = _lst(cv)
    ceid = _lst(ceid)
    n = len(order)
    empty = np.zeros(0, dtype=np.int64)
    pos = [0] * n
    for i, x in enumerate(order):
        pos[x] = i
    by_lo = [[] for _ in range(n)]
    for c in range(len(cu)):
        a = pos[cu[c]]
        b = pos[cv[c]]
        if a > b:
            a, b = b, a
        by_lo[a].append(c)
    # inner chords (larger low end) come first at each high end
    by_hi = [[] for _ in range(n)]
    lo_of = [0] * len(cu)
    for j in range(n - 1, -1, -1):
        for c in by_lo[j]:
            lo_of[c] = j
            hi = pos[cu[c]] + pos[cv[c]] - j
            by_hi[hi].append(c)
    on_stack = bytearray(n)
    spos = []
    sedge = []
    ptr = [0]
    fverts = []
    fedges = []
    for i in range(n):
        spos.append(i)
        sedge.append(cycle_eids[i - 1] if i > 0 else -1)
        on_stack[i] = 1
        for c in by_hi[i]:
            j = lo_of[c]
            if not on_stack[j]:
                return CROSSING, empty, empty, empty
            k = len(spos) - 1
            while spos[k] != j:
                k -= 1
            top = len(spos) - 1
            for a in range(k, top + 1):
                fverts.append(order[spos[a]])
            for a in range(k + 1, top + 1):
                fedges.append(sedge[a])
            fedges.append(ceid[c])
            ptr.append(len(fverts))
            for a in range(k + 1, top):
                on_stack[spos[a]] = 0
            del spos[k + 1:top]
            del sedge[k + 1:top]
            sedge[-1] = ceid[c]
    for a in range(len(spos)):
        fverts.append(order[spos[a]])
    for a in range(1, len(spos)):
        fedges.append(sedge[a])
    fedges.append(cycle_eids[n - 1])
    ptr.append(len(fverts))
    return (
        OK,
        np.asarray(ptr, dtype=np.int64),
        np.asarray(fverts, dtype=np.int64),
        np.asarray(fedges, dtype=np.int64),
    )


def solve_sd(n, ptr, adj, supply, value, root):
    """Greedy post-order pass for supply-demand tree partition.

    Returns (fail_node, labels).  ``fail_node`` is -1 on success;
    ``labels[v]`` is the supply node owning ``v``.
    """
    ptr = _lst(ptr)
    adj = _lst(adj)
    supply = _lst(supply)
    value = _lst(value)
    parent = [-1] * n
    parent[root] = root
    order = [root]
    for v in order:
        for k in range(ptr[v], ptr[v + 1]):
            w = adj[k]
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    parent[root] = -1
    residual = bytearray(n)
    amount = [0] * n
    owner = [-1] * n
    for idx in range(len(order) - 1, -1, -1):
        v = order[idx]
        pend = 0
        best = -1
        for k in range(ptr[v], ptr[v + 1]):
            c = adj[k]
            if c == parent[v]:
                continue
            if residual[c]:
                if best < 0 or amount[c] > amount[best] or (
                    amount[c] == amount[best] and c < best
                ):
                    best = c
            else:
                pend += amount[c]
        if supply[v]:
            r = value[v] - pend
            if r < 0:
                return v, np.zeros(0, dtype=np.int64)
            residual[v] = 1
            amount[v] = r
            owner[v] = v
        else:
            p0 = value[v] + pend
            if best >= 0 and amount[best] >= p0:
                residual[v] = 1
                amount[v] = amount[best] - p0
                owner[v] = owner[best]
            else:
                amount[v] = p0
    labels = [-1] * n
    for v in order:
        labels[v] = owner[v] if residual[v] else labels[parent[v]]
    return -1, np.asarray(labels, dtype=np.int64)


def root_tree(n, tu, tv, root):
    """BFS over a tree edge list; returns (parent, parent_edge, depth, reached)."""
    tu = _lst(tu)
    tv = _lst(tv)
    ptr, nbr, eid = _csr(n, tu, tv)
    parent = [-1] * n
    pedge = [-1] * n
    depth = [-1] * n
    depth[root] = 0
    queue = [root]
    for v in queue:
        for k in range(ptr[v], ptr[v + 1]):
            w = nbr[k]
            if depth[w] == -1:
                depth[w] = depth[v] + 1
                parent[w] = v
                pedge[w] = eid[k]
                queue.append(w)
    return (
        np.asarray(parent, dtype=np.int64),
        np.asarray(pedge, dtype=np.int64),
        np.asarray(depth, dtype=np.int64),
        len(queue),
    )


def tree_distances(n, tu, tv, qu, qv):
    """Offline LCA (Tarjan) over a spanning tree; distance per query pair."""
    tu = _lst(tu)
    tv = _lst(tv)
    qu = _lst(qu)
    qv = _lst(qv)
    ptr, nbr, _ = _csr(n, tu, tv)
    q = len(qu)
    qptr, qother, qid = _csr(n, qu, qv)
    dist = [0] * q
    depth = [-1] * n
    uf = list(range(n))
    anc = list(range(n))
    black = bytearray(n)
    parent = [-1] * n
    it = ptr[:n]

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for root in range(n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack[-1]
            k = it[v]
            if k < ptr[v + 1]:
                it[v] = k + 1
                w = nbr[k]
                if depth[w] == -1:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    stack.append(w)
                continue
            stack.pop()
            black[v] = 1
            for k in range(qptr[v], qptr[v + 1]):
                w = qother[k]
                if black[w]:
                    a = anc[find(w)]
                    dist[qid[k]] = depth[v] + depth[w] - 2 * depth[a]
            p = parent[v]
            if p >= 0:
                rp = find(p)
                rv = find(v)
                uf[rv] = rp
                anc[rp] = p
    return np.asarray(dist, dtype=np.int64)


def regroup_parts(n, ptr, adj, labels, supply, lift):
    """Re-root supply-demand parts (reverse reduction, steps 1-2).

    Each part is rooted at its supply.  A node ``u`` with ``lift[u] >= 0``
    is detached, with its part-subtree, into part ``lift[u]``.  Returns
    the new label per node.
    """
    ptr = _lst(ptr)
    adj = _lst(adj)
    labels = _lst(labels)
    supply = _lst(supply)
    lift = _lst(lift)
    new = [-1] * n
    queue = [v for v in range(n) if supply[v]]
    for v in queue:
        new[v] = v
    for v in queue:
        lv = labels[v]
        for k in range(ptr[v], ptr[v + 1]):
            w = adj[k]
            if new[w] == -1 and labels[w] == lv:
                new[w] = lift[w] if lift[w] >= 0 else new[v]
                queue.append(w)
    return np.asarray(new, dtype=np.int64)


def group_by(k, keys):
    """Stable grouping of positions by key in ``0..k-1``: (ptr, order)."""
    keys = np.asarray(keys, dtype=np.int64)
    ptr = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=k), out=ptr[1:])
    return ptr, np.argsort(keys, kind="stable").astype(np.int64)
