# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the functions in ``_pykernels``.

Same names, same signatures, same outputs.  Internal scratch lives in
std::vector of int32 (vertex and edge counts stay below 2**31); results
come back as int64 numpy arrays.
"""

from libcpp.vector cimport vector

import numpy as np

ctypedef long long i64
ctypedef int i32
ctypedef unsigned long long u64

cdef enum:
    OK = 0
    NO_DEGREE2 = 1
    NOT_HAMILTONIAN = 2
    CROSSING = 3

BACKEND = "compiled"


cdef i64[::1] _arr(a):
    return np.ascontiguousarray(a, dtype=np.int64)


cdef void _csr(i64 n, i64[::1] eu, i64[::1] ev, vector[i32]& ptr,
               vector[i32]& nbr, vector[i32]& eid):
    cdef i64 m = eu.shape[0], e, u, v, i
    ptr.assign(n + 1, 0)
    for e in range(m):
        ptr[eu[e] + 1] += 1
        ptr[ev[e] + 1] += 1
    for i in range(n):
        ptr[i + 1] += ptr[i]
    cdef vector[i32] fill = ptr
    nbr.resize(ptr[n])
    eid.resize(ptr[n])
    for e in range(m):
        u = eu[e]
        v = ev[e]
        nbr[fill[u]] = v
        eid[fill[u]] = e
        fill[u] += 1
        nbr[fill[v]] = u
        eid[fill[v]] = e
        fill[v] += 1


def biconnected_edge_labels(i64 n, eu_in, ev_in):
    cdef i64[::1] eu = _arr(eu_in)
    cdef i64[::1] ev = _arr(ev_in)
    cdef i64 m = eu.shape[0]
    cdef vector[i32] ptr, nbr, eid
    _csr(n, eu, ev, ptr, nbr, eid)
    cdef vector[i32] disc, low, it, pe, estack, calls
    disc.assign(n, -1)
    low.assign(n, 0)
    pe.assign(n, -1)
    it.assign(ptr.begin(), ptr.begin() + n)
    out = np.full(m, -1, dtype=np.int64)
    cdef i64[::1] label = out
    cdef i64 nblocks = 0, clock = 0, root, v, k, e, w, u, stop
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = clock
        low[root] = clock
        clock += 1
        calls.push_back(root)
        while calls.size() > 0:
            v = calls.back()
            k = it[v]
            if k < ptr[v + 1]:
                it[v] = k + 1
                e = eid[k]
                if e == pe[v]:
                    continue
                w = nbr[k]
                if disc[w] == -1:
                    estack.push_back(e)
                    pe[w] = e
                    disc[w] = clock
                    low[w] = clock
                    clock += 1
                    calls.push_back(w)
                elif disc[w] < disc[v]:
                    estack.push_back(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                calls.pop_back()
                if calls.size() > 0:
                    u = calls.back()
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        stop = pe[v]
                        while True:
                            e = estack.back()
                            estack.pop_back()
                            label[e] = nblocks
                            if e == stop:
                                break
                        nblocks += 1
    return out, nblocks


cdef inline u64 _hash(i64 a, i64 b, i64 n):
    if a > b:
        a, b = b, a
    cdef u64 h = <u64>(a * n + b)
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL
    return h ^ (h >> 31)


cdef inline i64 _slot(i32[::1] table, i32[::1] ends, i64 a, i64 b, i64 n):
    """Linear-probe slot holding the edge ``{a, b}``, or the empty slot where it goes.

    The table stores edge ids only; keys are read back from ``ends``.
    """
    cdef u64 mask = <u64>table.shape[0] - 1
    cdef u64 i = _hash(a, b, n) & mask
    cdef i64 e
    while True:
        e = table[i]
        if e < 0:
            return <i64>i
        if (ends[2 * e] == a and ends[2 * e + 1] == b) or (ends[2 * e] == b and ends[2 * e + 1] == a):
            return <i64>i
        i = (i + 1) & mask


cdef i32[::1] _grow(i32[::1] table, i32[::1] ends, i64 n):
    out = np.full(2 * table.shape[0], -1, dtype=np.int32)
    cdef i32[::1] bigger = out
    cdef i64 i, e
    for i in range(table.shape[0]):
        e = table[i]
        if e >= 0:
            bigger[_slot(bigger, ends, ends[2 * e], ends[2 * e + 1], n)] = e
    return bigger


# vertices of larger initial degree are heavy; degrees never grow during
# elimination, so a light vertex's incidence list stays this short
cdef enum:
    HEAVY = 8


def outer_cycle(i64 n, eu_in, ev_in):
    cdef i64[::1] eu = _arr(eu_in)
    cdef i64[::1] ev = _arr(ev_in)
    cdef i64 m = eu.shape[0]
    empty = np.zeros(0, dtype=np.int64)
    # current edges (real ids < m, virtual ids >= m); slot 2e+k is the k-th
    # endpoint ends[2e+k] of edge e, linked into that vertex's incidence list
    cdef i64 cap = m + n + 1
    cdef i32[::1] ends = np.empty(2 * cap, dtype=np.int32)
    cdef i32[::1] head = np.full(n, -1, dtype=np.int32)
    cdef i32[::1] nxt = np.full(2 * cap, -1, dtype=np.int32)
    cdef i32[::1] prv = np.full(2 * cap, -1, dtype=np.int32)
    cdef i32[::1] deg = np.zeros(n, dtype=np.int32)
    cdef i64 e, s, x, v, u, w, e1, e2, e3, k, alive, virt, i, y
    for e in range(m):
        ends[2 * e] = eu[e]
        ends[2 * e + 1] = ev[e]
        for k in range(2):
            s = 2 * e + k
            x = ends[s]
            nxt[s] = head[x]
            if head[x] >= 0:
                prv[head[x]] = s
            head[x] = s
            deg[x] += 1
    # a pair with a light end is found by scanning that end's list; pairs of
    # heavy ends go through a hash table of edge ids.  Its entries are never
    # erased: stale ones involve an eliminated vertex, never looked up again
    cdef char[::1] heavy = np.zeros(n, dtype=np.int8)
    for x in range(n):
        heavy[x] = deg[x] > HEAVY
    cdef i64 size = 16, used = 0
    cdef i32[::1] table = np.full(size, -1, dtype=np.int32)
    cdef i64 slot
    for e in range(m):
        if heavy[eu[e]] and heavy[ev[e]]:
            slot = _slot(table, ends, eu[e], ev[e], n)
            table[slot] = e
            used += 1
            if 3 * used >= 2 * table.shape[0]:
                table = _grow(table, ends, n)
    outer_np = np.zeros(m, dtype=bool)
    cdef char[::1] outer = outer_np.view(np.int8)
    cdef char[::1] removed = np.zeros(n, dtype=np.int8)
    cdef vector[i32] work
    for v in range(n - 1, -1, -1):
        if deg[v] == 2:
            work.push_back(v)
    alive = n
    virt = m
    cdef i64 s1, s2
    while alive > 3:
        v = -1
        while work.size() > 0:
            x = work.back()
            work.pop_back()
            if not removed[x] and deg[x] == 2:
                v = x
                break
        if v < 0:
            return NO_DEGREE2, empty, empty, empty
        s1 = head[v]
        s2 = nxt[s1]
        e1 = s1 >> 1
        e2 = s2 >> 1
        u = ends[s1 ^ 1]
        w = ends[s2 ^ 1]
        removed[v] = 1
        alive -= 1
        head[v] = -1
        # unlink the partner slots at u and w
        for k in range(2):
            s = (s1 if k == 0 else s2) ^ 1
            x = ends[s]
            if prv[s] >= 0:
                nxt[prv[s]] = nxt[s]
            else:
                head[x] = nxt[s]
            if nxt[s] >= 0:
                prv[nxt[s]] = prv[s]
            deg[x] -= 1
        if e1 < m:
            outer[e1] = 1
        if e2 < m:
            outer[e2] = 1
        e3 = -1
        slot = -1
        if heavy[u] and heavy[w]:
            slot = _slot(table, ends, u, w, n)
            e3 = table[slot]
        else:
            if heavy[u]:
                x = w
                y = u
            else:
                x = u
                y = w
            s = head[x]
            while s >= 0:
                if ends[s ^ 1] == y:
                    e3 = s >> 1
                    break
                s = nxt[s]
        if e3 >= 0:
            if e3 >= m:
                return NOT_HAMILTONIAN, empty, empty, empty
            # retire the chord; the new virtual edge takes its place
            for k in range(2):
                s = 2 * e3 + k
                x = ends[s]
                if prv[s] >= 0:
                    nxt[prv[s]] = nxt[s]
                else:
                    head[x] = nxt[s]
                if nxt[s] >= 0:
                    prv[nxt[s]] = prv[s]
                deg[x] -= 1
        ends[2 * virt] = u
        ends[2 * virt + 1] = w
        if slot >= 0:
            if table[slot] < 0:
                used += 1
            table[slot] = virt
            if 3 * used >= 2 * table.shape[0]:
                table = _grow(table, ends, n)
        for k in range(2):
            s = 2 * virt + k
            x = u if k == 0 else w
            prv[s] = -1
            nxt[s] = head[x]
            if head[x] >= 0:
                prv[head[x]] = s
            head[x] = s
            deg[x] += 1
        virt += 1
        if deg[u] == 2:
            work.push_back(u)
        if deg[w] == 2:
            work.push_back(w)
    for v in range(n):
        if not removed[v]:
            if deg[v] != 2:
                return NOT_HAMILTONIAN, empty, empty, empty
            s = head[v]
            while s >= 0:
                if (s >> 1) < m:
                    outer[s >> 1] = 1
                s = nxt[s]
    cdef i32[::1] a1 = np.full(n, -1, dtype=np.int32)
    cdef i32[::1] a2 = np.full(n, -1, dtype=np.int32)
    for e in range(m):
        if outer[e]:
            for k in range(2):
                x = eu[e] if k == 0 else ev[e]
                if a1[x] < 0:
                    a1[x] = e
                elif a2[x] < 0:
                    a2[x] = e
                else:
                    return NOT_HAMILTONIAN, empty, empty, empty
    for x in range(n):
        if a2[x] < 0:
            return NOT_HAMILTONIAN, empty, empty, empty
    y = eu[a1[0]] + ev[a1[0]]
    i = eu[a2[0]] + ev[a2[0]]
    first = a1[0] if y < i else a2[0]
    order_np = np.zeros(n, dtype=np.int64)
    ceids_np = np.zeros(n, dtype=np.int64)
    cdef i64[::1] order = order_np
    cdef i64[::1] ceids = ceids_np
    cdef char[::1] seen = np.zeros(n, dtype=np.int8)
    seen[0] = 1
    x = 0
    e = first
    for i in range(n):
        order[i] = x
        ceids[i] = e
        y = ev[e] if eu[e] == x else eu[e]
        if i == n - 1:
            if y != 0:
                return NOT_HAMILTONIAN, empty, empty, empty
            break
        if seen[y]:
            return NOT_HAMILTONIAN, empty, empty, empty
        seen[y] = 1
        e = a2[y] if a1[y] == e else a1[y]
        x = y
    return OK, order_np, ceids_np, outer_np


def chord_faces(order_in, cycle_in, cu_in, cv_in, ceid_in):
    cdef i64[::1] order = _arr(order_in)
    cdef i64[::1] cyc = _arr(cycle_in)
    cdef i64[::1] cu = _arr(cu_in)
    cdef i64[::1] cv = _arr(cv_in)
    cdef i64[::1] ceid = _arr(ceid_in)
    cdef i64 n = order.shape[0], nc = cu.shape[0]
    empty = np.zeros(0, dtype=np.int64)
    cdef vector[i32] pos, lo_ptr, lo_list, hi_ptr, hi_list, lo_of, fill
    pos.resize(n)
    cdef i64 i, c, a, b, j, k, top, t
    for i in range(n):
        pos[order[i]] = i
    lo_of.resize(nc)
    lo_ptr.assign(n + 1, 0)
    hi_ptr.assign(n + 1, 0)
    for c in range(nc):
        a = pos[cu[c]]
        b = pos[cv[c]]
        if a > b:
            a, b = b, a
        lo_of[c] = a
        lo_ptr[a + 1] += 1
        hi_ptr[b + 1] += 1
    for i in range(n):
        lo_ptr[i + 1] += lo_ptr[i]
        hi_ptr[i + 1] += hi_ptr[i]
    lo_list.resize(nc)
    hi_list.resize(nc)
    fill.assign(lo_ptr.begin(), lo_ptr.begin() + n)
    for c in range(nc):
        lo_list[fill[lo_of[c]]] = c
        fill[lo_of[c]] += 1
    fill.assign(hi_ptr.begin(), hi_ptr.begin() + n)
    for j in range(n - 1, -1, -1):
        for k in range(lo_ptr[j], lo_ptr[j + 1]):
            c = lo_list[k]
            b = pos[cu[c]] + pos[cv[c]] - j
            hi_list[fill[b]] = c
            fill[b] += 1
    cdef i64 total = 2 * (n + nc) - n
    ptr_np = np.zeros(nc + 2, dtype=np.int64)
    verts_np = np.zeros(total, dtype=np.int64)
    edges_np = np.zeros(total, dtype=np.int64)
    cdef i64[::1] fptr = ptr_np
    cdef i64[::1] fverts = verts_np
    cdef i64[::1] fedges = edges_np
    cdef vector[char] on_stack
    on_stack.assign(n, 0)
    cdef vector[i32] spos, sedge
    cdef i64 nf = 0, nv = 0, ne = 0
    for i in range(n):
        spos.push_back(i)
        sedge.push_back(cyc[i - 1] if i > 0 else -1)
        on_stack[i] = 1
        for t in range(hi_ptr[i], hi_ptr[i + 1]):
            c = hi_list[t]
            j = lo_of[c]
            if not on_stack[j]:
                return CROSSING, empty, empty, empty
            k = <i64>spos.size() - 1
            while spos[k] != j:
                k -= 1
            top = <i64>spos.size() - 1
            for a in range(k, top + 1):
                fverts[nv] = order[spos[a]]
                nv += 1
            for a in range(k + 1, top + 1):
                fedges[ne] = sedge[a]
                ne += 1
            fedges[ne] = ceid[c]
            ne += 1
            nf += 1
            fptr[nf] = nv
            for a in range(k + 1, top):
                on_stack[spos[a]] = 0
            spos[k + 1] = spos[top]
            spos.resize(k + 2)
            sedge.resize(k + 2)
            sedge[k + 1] = ceid[c]
    for a in range(<i64>spos.size()):
        fverts[nv] = order[spos[a]]
        nv += 1
    for a in range(1, <i64>spos.size()):
        fedges[ne] = sedge[a]
        ne += 1
    fedges[ne] = cyc[n - 1]
    ne += 1
    nf += 1
    fptr[nf] = nv
    return OK, ptr_np[:nf + 1], verts_np[:nv], edges_np[:ne]


def solve_sd(i64 n, ptr_in, adj_in, supply_in, value_in, i64 root):
    cdef i64[::1] ptr = _arr(ptr_in)
    cdef i64[::1] adj = _arr(adj_in)
    cdef i64[::1] supply = _arr(supply_in)
    cdef i64[::1] value = _arr(value_in)
    cdef vector[i32] parent, order, owner
    cdef vector[i64] amount
    cdef vector[char] residual
    parent.assign(n, -1)
    amount.assign(n, 0)
    owner.assign(n, -1)
    residual.assign(n, 0)
    order.reserve(n)
    parent[root] = root
    order.push_back(root)
    cdef i64 h = 0, v, k, w, c, pend, best, r, p0, idx
    while h < <i64>order.size():
        v = order[h]
        h += 1
        for k in range(ptr[v], ptr[v + 1]):
            w = adj[k]
            if parent[w] == -1:
                parent[w] = v
                order.push_back(w)
    parent[root] = -1
    for idx in range(<i64>order.size() - 1, -1, -1):
        v = order[idx]
        pend = 0
        best = -1
        for k in range(ptr[v], ptr[v + 1]):
            c = adj[k]
            if c == parent[v]:
                continue
            if residual[c]:
                if best < 0 or amount[c] > amount[best] or (
                        amount[c] == amount[best] and c < best):
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
    out = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] labels = out
    for idx in range(<i64>order.size()):
        v = order[idx]
        labels[v] = owner[v] if residual[v] else labels[parent[v]]
    return -1, out


def root_tree(i64 n, tu_in, tv_in, i64 root):
    cdef i64[::1] tu = _arr(tu_in)
    cdef i64[::1] tv = _arr(tv_in)
    cdef vector[i32] ptr, nbr, eid, queue
    _csr(n, tu, tv, ptr, nbr, eid)
    parent_np = np.full(n, -1, dtype=np.int64)
    pedge_np = np.full(n, -1, dtype=np.int64)
    depth_np = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] parent = parent_np
    cdef i64[::1] pedge = pedge_np
    cdef i64[::1] depth = depth_np
    depth[root] = 0
    queue.reserve(n)
    queue.push_back(root)
    cdef i64 h = 0, v, k, w
    while h < <i64>queue.size():
        v = queue[h]
        h += 1
        for k in range(ptr[v], ptr[v + 1]):
            w = nbr[k]
            if depth[w] == -1:
                depth[w] = depth[v] + 1
                parent[w] = v
                pedge[w] = eid[k]
                queue.push_back(w)
    return parent_np, pedge_np, depth_np, <i64>queue.size()


cdef inline i64 _find(vector[i32]& uf, i64 x):
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


def tree_distances(i64 n, tu_in, tv_in, qu_in, qv_in):
    cdef i64[::1] tu = _arr(tu_in)
    cdef i64[::1] tv = _arr(tv_in)
    cdef i64[::1] qu = _arr(qu_in)
    cdef i64[::1] qv = _arr(qv_in)
    cdef vector[i32] ptr, nbr, eid, qptr, qother, qid
    _csr(n, tu, tv, ptr, nbr, eid)
    _csr(n, qu, qv, qptr, qother, qid)
    cdef i64 q = qu.shape[0]
    out = np.zeros(q, dtype=np.int64)
    cdef i64[::1] dist = out
    cdef vector[i32] depth, uf, anc, parent, it, stack
    cdef vector[char] black
    depth.assign(n, -1)
    parent.assign(n, -1)
    black.assign(n, 0)
    uf.resize(n)
    anc.resize(n)
    cdef i64 i, root, v, k, w, a, p, rp, rv
    for i in range(n):
        uf[i] = i
        anc[i] = i
    it.assign(ptr.begin(), ptr.begin() + n)
    for root in range(n):
        if depth[root] != -1:
            continue
        depth[root] = 0
        stack.push_back(root)
        while stack.size() > 0:
            v = stack.back()
            k = it[v]
            if k < ptr[v + 1]:
                it[v] = k + 1
                w = nbr[k]
                if depth[w] == -1:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    stack.push_back(w)
                continue
            stack.pop_back()
            black[v] = 1
            for k in range(qptr[v], qptr[v + 1]):
                w = qother[k]
                if black[w]:
                    a = anc[_find(uf, w)]
                    dist[qid[k]] = depth[v] + depth[w] - 2 * depth[a]
            p = parent[v]
            if p >= 0:
                rp = _find(uf, p)
                rv = _find(uf, v)
                uf[rv] = rp
                anc[rp] = p
    return out


def regroup_parts(i64 n, ptr_in, adj_in, labels_in, supply_in, lift_in):
    cdef i64[::1] ptr = _arr(ptr_in)
    cdef i64[::1] adj = _arr(adj_in)
    cdef i64[::1] labels = _arr(labels_in)
    cdef i64[::1] supply = _arr(supply_in)
    cdef i64[::1] lift = _arr(lift_in)
    out = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] new = out
    cdef vector[i32] queue
    queue.reserve(n)
    cdef i64 v, h = 0, k, w, lv
    for v in range(n):
        if supply[v]:
            new[v] = v
            queue.push_back(v)
    while h < <i64>queue.size():
        v = queue[h]
        h += 1
        lv = labels[v]
        for k in range(ptr[v], ptr[v + 1]):
            w = adj[k]
            if new[w] == -1 and labels[w] == lv:
                new[w] = lift[w] if lift[w] >= 0 else new[v]
                queue.push_back(w)
    return out


def group_by(i64 k, keys_in):
    cdef i64[::1] keys = _arr(keys_in)
    cdef i64 m = keys.shape[0]
    ptr_np = np.zeros(k + 1, dtype=np.int64)
    order_np = np.empty(m, dtype=np.int64)
    cdef i64[::1] ptr = ptr_np
    cdef i64[::1] order = order_np
    cdef vector[i32] fill
    cdef i64 i, x
    for i in range(m):
        ptr[keys[i] + 1] += 1
    for x in range(k):
        ptr[x + 1] += ptr[x]
    fill.assign(&ptr[0], &ptr[0] + k)
    for i in range(m):
        x = keys[i]
        order[fill[x]] = i
        fill[x] += 1
    return ptr_np, order_np
