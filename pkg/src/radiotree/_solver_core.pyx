# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel for the exact solver.

Behavioural twin of ``_solver_py.solve``: identical exploration order,
pruning, and node accounting, so results are interchangeable byte for byte.
"""

import time

from libc.stdlib cimport free, malloc

cdef long TIME_CHECK_MASK = 0xFFF


cdef struct SearchState:
    int p
    int diam
    long best
    long nodes
    bint timed_out
    double deadline
    bint has_deadline
    int *dist      # p*p, row-major
    int *order
    long *labels
    char *placed
    long *req
    long *saved    # p*p snapshots, one row per depth
    int *best_order


cdef void _extend(SearchState *st, int depth, long span):
    cdef int p = st.p
    cdef int u, v
    cdef long lab, need
    cdef int remaining_after
    cdef long *snap
    cdef int *du_row
    if st.timed_out:
        return
    if depth == p:
        if span < st.best:
            st.best = span
            for v in range(p):
                st.best_order[v] = st.order[v]
        return
    remaining_after = p - depth - 1
    for u in range(p):
        if st.placed[u]:
            continue
        lab = st.req[u]
        if lab + remaining_after >= st.best:
            continue
        st.nodes += 1
        if (st.nodes & TIME_CHECK_MASK) == 0 and st.has_deadline \
                and time.monotonic() > st.deadline:
            st.timed_out = True
            return
        st.order[depth] = u
        st.labels[u] = lab
        st.placed[u] = 1
        snap = st.saved + depth * p
        du_row = st.dist + u * p
        for v in range(p):
            snap[v] = st.req[v]
            if not st.placed[v]:
                need = lab + st.diam + 1 - du_row[v]
                if need > st.req[v]:
                    st.req[v] = need
        _extend(st, depth + 1, lab)
        st.placed[u] = 0
        for v in range(p):
            st.req[v] = snap[v]
        if st.timed_out:
            return


def solve(p, dist, diam, starts, ub, ub_order, deadline):
    """See ``_solver_py.solve`` — same contract, compiled."""
    cdef SearchState st
    cdef int i, j, s, v
    cdef int n = p

    st.p = n
    st.diam = diam
    st.best = ub
    st.nodes = 0
    st.timed_out = False
    st.has_deadline = deadline is not None
    st.deadline = deadline if deadline is not None else 0.0

    st.dist = <int *> malloc(n * n * sizeof(int))
    st.order = <int *> malloc(n * sizeof(int))
    st.labels = <long *> malloc(n * sizeof(long))
    st.placed = <char *> malloc(n * sizeof(char))
    st.req = <long *> malloc(n * sizeof(long))
    st.saved = <long *> malloc(n * n * sizeof(long))
    st.best_order = <int *> malloc(n * sizeof(int))
    if not (st.dist and st.order and st.labels and st.placed and st.req
            and st.saved and st.best_order):
        raise MemoryError()

    try:
        for i in range(n):
            row = dist[i]
            for j in range(n):
                st.dist[i * n + j] = row[j]
        for i in range(n):
            st.best_order[i] = ub_order[i]
            st.placed[i] = 0

        for s in starts:
            if st.timed_out:
                break
            st.nodes += 1
            st.order[0] = s
            st.labels[s] = 0
            st.placed[s] = 1
            for v in range(n):
                st.req[v] = 0 if v == s else st.diam + 1 - st.dist[s * n + v]
            _extend(&st, 1, 0)
            st.placed[s] = 0

        best_order = [st.best_order[i] for i in range(n)]
        return st.best, best_order, st.nodes, not st.timed_out
    finally:
        free(st.dist)
        free(st.order)
        free(st.labels)
        free(st.placed)
        free(st.req)
        free(st.saved)
        free(st.best_order)
