# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled density-witness kernel.

Statement-for-statement mirror of ``kernels.pure``; see that module for the
algorithm description.  Both kernels must produce identical witnesses, so any
change here has to be replicated there (and vice versa).  The only structural
difference is that the recursive blocking-flow walk of the pure kernel is
expressed iteratively; it visits arcs in the same order.
"""

from libc.stdlib cimport free, malloc

NAME = "fast"


cdef struct Work:
    # trial-local flow network buffers, sized once per sweep
    long long *arc_cap
    int *arc_to
    int *arc_tail
    int *adj_off
    int *adj_lst
    int *level
    int *it
    int *bfsq
    int *path_node
    int *path_arc
    char *seen


cdef long long _dinic(Work *w, int num_nodes, int num_arcs, int sink) nogil:
    cdef long long flow = 0, bottleneck
    cdef int i, u, v, a, qh, qt, plen, j
    cdef bint advanced

    while True:
        # BFS level graph from source 0
        for i in range(num_nodes):
            w.level[i] = -1
        w.level[0] = 0
        w.bfsq[0] = 0
        qh = 0
        qt = 1
        while qh < qt:
            u = w.bfsq[qh]
            qh += 1
            for j in range(w.adj_off[u], w.adj_off[u + 1]):
                a = w.adj_lst[j]
                if w.arc_cap[a] > 0 and w.level[w.arc_to[a]] < 0:
                    w.level[w.arc_to[a]] = w.level[u] + 1
                    w.bfsq[qt] = w.arc_to[a]
                    qt += 1
        if w.level[sink] < 0:
            return flow
        for i in range(num_nodes):
            w.it[i] = w.adj_off[i]

        # blocking flow: advance/retreat walk, restarting at the source
        # after each augmentation (same arc order as the recursive form)
        u = 0
        plen = 0
        while True:
            if u == sink:
                bottleneck = -1
                for j in range(plen):
                    a = w.path_arc[j]
                    if bottleneck < 0 or w.arc_cap[a] < bottleneck:
                        bottleneck = w.arc_cap[a]
                for j in range(plen):
                    a = w.path_arc[j]
                    w.arc_cap[a] -= bottleneck
                    w.arc_cap[a ^ 1] += bottleneck
                flow += bottleneck
                u = 0
                plen = 0
                continue
            advanced = False
            while w.it[u] < w.adj_off[u + 1]:
                a = w.adj_lst[w.it[u]]
                v = w.arc_to[a]
                if w.arc_cap[a] > 0 and w.level[v] == w.level[u] + 1:
                    w.path_node[plen] = u
                    w.path_arc[plen] = a
                    plen += 1
                    u = v
                    advanced = True
                    break
                w.it[u] += 1
            if advanced:
                continue
            if u == 0:
                break
            plen -= 1
            u = w.path_node[plen]
            w.it[u] += 1


def sweep(int n, list us, list vs, long long p, long long q):
    """Find source-side vertices of a witness for density > p/q, or None."""
    cdef int m = len(us)
    if n == 0 or m == 0:
        return None

    cdef int *eu = <int *> malloc(m * sizeof(int))
    cdef int *ev = <int *> malloc(m * sizeof(int))
    cdef long long *deg = <long long *> malloc(n * sizeof(long long))
    cdef char *alive = <char *> malloc(n * sizeof(char))
    cdef char *queued = <char *> malloc(n * sizeof(char))
    cdef int *inc_off = <int *> malloc((n + 2) * sizeof(int))
    cdef int *inc_lst = <int *> malloc(2 * m * sizeof(int))
    cdef int *peelq = <int *> malloc(n * sizeof(int))
    cdef int *vidx = <int *> malloc(n * sizeof(int))
    cdef int *elist = <int *> malloc(m * sizeof(int))

    cdef int max_nodes = 2 + n + m
    cdef int max_arcs = 2 * (3 * m + n)
    cdef Work w
    w.arc_cap = <long long *> malloc(max_arcs * sizeof(long long))
    w.arc_to = <int *> malloc(max_arcs * sizeof(int))
    w.arc_tail = <int *> malloc(max_arcs * sizeof(int))
    w.adj_off = <int *> malloc((max_nodes + 1) * sizeof(int))
    w.adj_lst = <int *> malloc(max_arcs * sizeof(int))
    w.level = <int *> malloc(max_nodes * sizeof(int))
    w.it = <int *> malloc(max_nodes * sizeof(int))
    w.bfsq = <int *> malloc(max_nodes * sizeof(int))
    w.path_node = <int *> malloc(max_nodes * sizeof(int))
    w.path_arc = <int *> malloc(max_nodes * sizeof(int))
    w.seen = <char *> malloc(max_nodes * sizeof(char))

    cdef int i, v, r, other, qh, qt
    result = None
    try:
        for i in range(m):
            eu[i] = us[i]
            ev[i] = vs[i]
        for v in range(n):
            deg[v] = 0
            alive[v] = 1
            queued[v] = 0
        for i in range(m):
            deg[eu[i]] += 1
            deg[ev[i]] += 1
        # incidence buckets in edge-id order
        for v in range(n + 2):
            inc_off[v] = 0
        for i in range(m):
            inc_off[eu[i] + 2] += 1
            inc_off[ev[i] + 2] += 1
        for v in range(2, n + 2):
            inc_off[v] += inc_off[v - 1]
        for i in range(m):
            inc_lst[inc_off[eu[i] + 1]] = i
            inc_off[eu[i] + 1] += 1
            inc_lst[inc_off[ev[i] + 1]] = i
            inc_off[ev[i] + 1] += 1

        # initial cascade peel of vertices with degree <= p/q
        qh = 0
        qt = 0
        for v in range(n):
            if q * deg[v] <= p and alive[v] and not queued[v]:
                queued[v] = 1
                peelq[qt] = v
                qt += 1
        _cascade(n, eu, ev, inc_off, inc_lst, deg, alive, queued,
                 peelq, &qh, &qt, p, q)

        if not _have_edges(m, eu, ev, alive):
            return None

        result = _trial(&w, n, m, eu, ev, alive, vidx, elist, p, q, -1)
        if result is not None:
            return result

        for r in range(n):
            if not alive[r]:
                continue
            result = _trial(&w, n, m, eu, ev, alive, vidx, elist, p, q, r)
            if result is not None:
                return result
            alive[r] = 0
            for i in range(inc_off[r], inc_off[r + 1]):
                other = ev[inc_lst[i]] if eu[inc_lst[i]] == r else eu[inc_lst[i]]
                if alive[other]:
                    deg[other] -= 1
                    if q * deg[other] <= p and not queued[other]:
                        queued[other] = 1
                        peelq[qt] = other
                        qt += 1
            _cascade(n, eu, ev, inc_off, inc_lst, deg, alive, queued,
                     peelq, &qh, &qt, p, q)
            if not _have_edges(m, eu, ev, alive):
                return None
        return None
    finally:
        free(eu)
        free(ev)
        free(deg)
        free(alive)
        free(queued)
        free(inc_off)
        free(inc_lst)
        free(peelq)
        free(vidx)
        free(elist)
        free(w.arc_cap)
        free(w.arc_to)
        free(w.arc_tail)
        free(w.adj_off)
        free(w.adj_lst)
        free(w.level)
        free(w.it)
        free(w.bfsq)
        free(w.path_node)
        free(w.path_arc)
        free(w.seen)


cdef void _cascade(
    int n, int *eu, int *ev, int *inc_off, int *inc_lst,
    long long *deg, char *alive, char *queued, int *queue, int *qh, int *qt,
    long long p, long long q,
) nogil:
    cdef int v, i, other
    while qh[0] < qt[0]:
        v = queue[qh[0]]
        qh[0] += 1
        if not alive[v]:
            continue
        alive[v] = 0
        for i in range(inc_off[v], inc_off[v + 1]):
            other = ev[inc_lst[i]] if eu[inc_lst[i]] == v else eu[inc_lst[i]]
            if alive[other]:
                deg[other] -= 1
                if q * deg[other] <= p and not queued[other]:
                    queued[other] = 1
                    queue[qt[0]] = other
                    qt[0] += 1


cdef bint _have_edges(int m, int *eu, int *ev, char *alive) nogil:
    cdef int i
    for i in range(m):
        if alive[eu[i]] and alive[ev[i]]:
            return True
    return False


cdef object _trial(
    Work *w, int n, int m, int *eu, int *ev, char *alive,
    int *vidx, int *elist, long long p, long long q, int root,
):
    cdef int nv = 0, me = 0
    cdef int v, i, j, k, a, enode, num_nodes, num_arcs, sink, qh, qt, u
    cdef long long flow

    for v in range(n):
        if alive[v]:
            vidx[v] = nv
            nv += 1
        else:
            vidx[v] = -1
    for i in range(m):
        if alive[eu[i]] and alive[ev[i]]:
            elist[me] = i
            me += 1
    if me == 0:
        return None

    num_nodes = 1 + nv + me + 1
    sink = num_nodes - 1
    num_arcs = 0

    # arc layout identical to the pure kernel: per live edge the triple
    # s->e, e->u, e->v (each with its zero reverse), then v->t per live vertex
    for j in range(me):
        i = elist[j]
        enode = 1 + nv + j
        _put_arc(w, &num_arcs, 0, enode, q)
        _put_arc(w, &num_arcs, enode, 1 + vidx[eu[i]], q)
        _put_arc(w, &num_arcs, enode, 1 + vidx[ev[i]], q)
    for v in range(n):
        if alive[v]:
            _put_arc(w, &num_arcs, 1 + vidx[v], sink, 0 if v == root else p)

    # stable bucket sort of arcs by tail; preserves insertion order per node
    for v in range(num_nodes + 1):
        w.adj_off[v] = 0
    for a in range(num_arcs):
        w.adj_off[w.arc_tail[a] + 1] += 1
    for v in range(1, num_nodes + 1):
        w.adj_off[v] += w.adj_off[v - 1]
    for a in range(num_arcs):
        w.adj_lst[w.adj_off[w.arc_tail[a]] + 0] = a
        w.adj_off[w.arc_tail[a]] += 1
    for v in range(num_nodes, 0, -1):
        w.adj_off[v] = w.adj_off[v - 1]
    w.adj_off[0] = 0

    flow = _dinic(w, num_nodes, num_arcs, sink)
    if flow >= q * me:
        return None

    for v in range(num_nodes):
        w.seen[v] = 0
    w.seen[0] = 1
    w.bfsq[0] = 0
    qh = 0
    qt = 1
    while qh < qt:
        u = w.bfsq[qh]
        qh += 1
        for j in range(w.adj_off[u], w.adj_off[u + 1]):
            a = w.adj_lst[j]
            if w.arc_cap[a] > 0 and not w.seen[w.arc_to[a]]:
                w.seen[w.arc_to[a]] = 1
                w.bfsq[qt] = w.arc_to[a]
                qt += 1

    out = []
    for v in range(n):
        if alive[v] and w.seen[1 + vidx[v]]:
            out.append(v)
    return out


cdef inline void _put_arc(
    Work *w, int *num_arcs, int a, int b, long long cap
) nogil:
    w.arc_tail[num_arcs[0]] = a
    w.arc_to[num_arcs[0]] = b
    w.arc_cap[num_arcs[0]] = cap
    num_arcs[0] += 1
    w.arc_tail[num_arcs[0]] = b
    w.arc_to[num_arcs[0]] = a
    w.arc_cap[num_arcs[0]] = 0
    num_arcs[0] += 1
