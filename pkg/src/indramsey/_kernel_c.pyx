# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edge-colouring search; same contract as ``_kernel_py.solve``."""
from libc.stdlib cimport malloc, free

cdef enum:
    UNSET = -1


cdef struct State:
    int n_edges
    int n_clauses
    int *colours
    int *want
    int *size
    int *nsat
    int *nfalse
    int *cl_off      # clause -> start in cl_edges
    int *cl_edges
    int *occ_off     # edge -> start in occ
    int *occ
    int *trail
    int trail_len
    int *queue_e
    int *queue_c
    int satisfied


cdef bint _assign(State *s, int e0, int col0) nogil:
    cdef int qn = 0
    cdef int e, col, c, k, f, left
    cdef bint ok = True
    s.queue_e[0] = e0
    s.queue_c[0] = col0
    qn = 1
    while qn > 0:
        qn -= 1
        e = s.queue_e[qn]
        col = s.queue_c[qn]
        if s.colours[e] != UNSET:
            if s.colours[e] != col:
                ok = False
                break
            continue
        s.colours[e] = col
        s.trail[s.trail_len] = e
        s.trail_len += 1
        for k in range(s.occ_off[e], s.occ_off[e + 1]):
            c = s.occ[k]
            if s.want[c] == col:
                if s.nsat[c] == 0:
                    s.satisfied += 1
                s.nsat[c] += 1
            else:
                s.nfalse[c] += 1
                if s.nsat[c] == 0:
                    left = s.size[c] - s.nfalse[c]
                    if left == 0:
                        ok = False
                    elif left == 1:
                        for f in range(s.cl_off[c], s.cl_off[c + 1]):
                            if s.colours[s.cl_edges[f]] == UNSET:
                                s.queue_e[qn] = s.cl_edges[f]
                                s.queue_c[qn] = s.want[c]
                                qn += 1
                                break
        if not ok:
            break
    return ok


cdef void _undo_to(State *s, int mark) nogil:
    cdef int e, col, k, c
    while s.trail_len > mark:
        s.trail_len -= 1
        e = s.trail[s.trail_len]
        col = s.colours[e]
        for k in range(s.occ_off[e], s.occ_off[e + 1]):
            c = s.occ[k]
            if s.want[c] == col:
                s.nsat[c] -= 1
                if s.nsat[c] == 0:
                    s.satisfied -= 1
            else:
                s.nfalse[c] -= 1
        s.colours[e] = UNSET


def solve(int n_edges, clause_want, clause_edges, order, first_colour, int fix_first, long long budget):
    cdef int n_clauses = len(clause_want)
    cdef int i, j, c, e, total, n_order, pos, first, alt, mark, p, sp
    cdef long long nodes = 0
    cdef bint ok, first_decision
    cdef State s
    cdef int *ord_arr
    cdef int *first_arr
    cdef int *st_mark
    cdef int *st_pos
    cdef int *st_edge
    cdef int *st_alt
    cdef int status

    for c in range(n_clauses):
        if len(clause_edges[c]) == 0:
            return 1, [UNSET] * n_edges, 0

    total = 0
    for c in range(n_clauses):
        total += len(clause_edges[c])
    n_order = len(order)

    s.n_edges = n_edges
    s.n_clauses = n_clauses
    s.colours = <int *> malloc((n_edges + 1) * sizeof(int))
    s.want = <int *> malloc((n_clauses + 1) * sizeof(int))
    s.size = <int *> malloc((n_clauses + 1) * sizeof(int))
    s.nsat = <int *> malloc((n_clauses + 1) * sizeof(int))
    s.nfalse = <int *> malloc((n_clauses + 1) * sizeof(int))
    s.cl_off = <int *> malloc((n_clauses + 1) * sizeof(int))
    s.cl_edges = <int *> malloc((total + 1) * sizeof(int))
    s.occ_off = <int *> malloc((n_edges + 1) * sizeof(int))
    s.occ = <int *> malloc((total + 1) * sizeof(int))
    s.trail = <int *> malloc((n_edges + 1) * sizeof(int))
    s.queue_e = <int *> malloc((total + n_edges + 1) * sizeof(int))
    s.queue_c = <int *> malloc((total + n_edges + 1) * sizeof(int))
    ord_arr = <int *> malloc((n_order + 1) * sizeof(int))
    first_arr = <int *> malloc((n_edges + 1) * sizeof(int))
    st_mark = <int *> malloc((n_edges + 1) * sizeof(int))
    st_pos = <int *> malloc((n_edges + 1) * sizeof(int))
    st_edge = <int *> malloc((n_edges + 1) * sizeof(int))
    st_alt = <int *> malloc((n_edges + 1) * sizeof(int))
    try:
        for e in range(n_edges):
            s.colours[e] = UNSET
            s.occ_off[e] = 0
            first_arr[e] = first_colour[e]
        s.occ_off[n_edges] = 0
        j = 0
        for c in range(n_clauses):
            s.want[c] = clause_want[c]
            s.nsat[c] = 0
            s.nfalse[c] = 0
            s.cl_off[c] = j
            for e in clause_edges[c]:
                s.cl_edges[j] = e
                s.occ_off[e + 1] += 1
                j += 1
            s.size[c] = j - s.cl_off[c]
        s.cl_off[n_clauses] = j
        for e in range(n_edges):
            s.occ_off[e + 1] += s.occ_off[e]
        # fill occurrence lists, st_mark serving as a per-edge cursor
        for e in range(n_edges):
            st_mark[e] = s.occ_off[e]
        for c in range(n_clauses):
            for i in range(s.cl_off[c], s.cl_off[c + 1]):
                e = s.cl_edges[i]
                s.occ[st_mark[e]] = c
                st_mark[e] += 1
        for i in range(n_order):
            ord_arr[i] = order[i]
        s.trail_len = 0
        s.satisfied = 0

        ok = True
        for c in range(n_clauses):
            if s.size[c] == 1:
                if not _assign(&s, s.cl_edges[s.cl_off[c]], s.want[c]):
                    ok = False
                    break
        if not ok:
            return 1, [s.colours[e] for e in range(n_edges)], 0

        sp = 0
        pos = 0
        first_decision = True
        with nogil:
            while True:
                if s.satisfied == n_clauses:
                    status = 0
                    break
                while pos < n_order and s.colours[ord_arr[pos]] != UNSET:
                    pos += 1
                if pos == n_order:
                    status = 0
                    break
                if nodes >= budget:
                    status = 2
                    break
                nodes += 1
                e = ord_arr[pos]
                first = first_arr[e]
                alt = 1 - first
                if first_decision and fix_first >= 0:
                    first = fix_first
                    alt = UNSET
                first_decision = False
                mark = s.trail_len
                st_mark[sp] = mark
                st_pos[sp] = pos
                st_edge[sp] = e
                st_alt[sp] = alt
                sp += 1
                ok = _assign(&s, e, first)
                status = -1
                while not ok:
                    while sp > 0 and st_alt[sp - 1] == UNSET:
                        sp -= 1
                        _undo_to(&s, st_mark[sp])
                    if sp == 0:
                        status = 1
                        break
                    sp -= 1
                    mark = st_mark[sp]
                    p = st_pos[sp]
                    e = st_edge[sp]
                    alt = st_alt[sp]
                    _undo_to(&s, mark)
                    pos = p
                    st_alt[sp] = UNSET
                    sp += 1
                    ok = _assign(&s, e, alt)
                if status == 1:
                    break
        if status == 0:
            return 0, [0 if s.colours[e] == UNSET else s.colours[e] for e in range(n_edges)], nodes
        return status, [s.colours[e] for e in range(n_edges)], nodes
    finally:
        free(s.colours); free(s.want); free(s.size); free(s.nsat); free(s.nfalse)
        free(s.cl_off); free(s.cl_edges); free(s.occ_off); free(s.occ); free(s.trail)
        free(s.queue_e); free(s.queue_c); free(ord_arr); free(first_arr)
        free(st_mark); free(st_pos); free(st_edge); free(st_alt)
