# cython: language_level=3
"""Compiled m-dimer cover search; same search order as ``_pykernels``."""
from libc.stdlib cimport malloc, free


cdef struct State:
    int n_edges
    int *eu
    int *ev
    int *last
    int *cap
    int *mult
    long long count


cdef void _count(State *s, int k) noexcept nogil:
    cdef int u, v, hi, lo, forced, x
    if k == s.n_edges:
        s.count += 1
        return
    u = s.eu[k]
    v = s.ev[k]
    hi = s.cap[u] if s.cap[u] < s.cap[v] else s.cap[v]
    forced = -1
    if s.last[u] == k:
        forced = s.cap[u]
    if s.last[v] == k:
        if forced >= 0 and forced != s.cap[v]:
            return
        forced = s.cap[v]
    if forced > hi:
        return
    lo = 0
    if forced >= 0:
        lo = forced
        hi = forced
    for x in range(lo, hi + 1):
        s.cap[u] -= x
        s.cap[v] -= x
        _count(s, k + 1)
        s.cap[u] += x
        s.cap[v] += x


cdef int _enumerate(State *s, int k, list out) except -1:
    cdef int u, v, hi, lo, forced, x, i
    if k == s.n_edges:
        out.append(tuple([s.mult[i] for i in range(s.n_edges)]))
        return 0
    u = s.eu[k]
    v = s.ev[k]
    hi = s.cap[u] if s.cap[u] < s.cap[v] else s.cap[v]
    forced = -1
    if s.last[u] == k:
        forced = s.cap[u]
    if s.last[v] == k:
        if forced >= 0 and forced != s.cap[v]:
            return 0
        forced = s.cap[v]
    if forced > hi:
        return 0
    lo = 0
    if forced >= 0:
        lo = forced
        hi = forced
    for x in range(lo, hi + 1):
        s.mult[k] = x
        s.cap[u] -= x
        s.cap[v] -= x
        _enumerate(s, k + 1, out)
        s.cap[u] += x
        s.cap[v] += x
    s.mult[k] = 0
    return 0


cdef int _setup(State *s, int n_vertices, eu, ev, int m) except -1:
    cdef int k, n_edges = len(eu)
    s.n_edges = n_edges
    s.count = 0
    s.eu = <int *> malloc(max(n_edges, 1) * sizeof(int))
    s.ev = <int *> malloc(max(n_edges, 1) * sizeof(int))
    s.mult = <int *> malloc(max(n_edges, 1) * sizeof(int))
    s.last = <int *> malloc(max(n_vertices, 1) * sizeof(int))
    s.cap = <int *> malloc(max(n_vertices, 1) * sizeof(int))
    if not (s.eu and s.ev and s.mult and s.last and s.cap):
        _teardown(s)
        raise MemoryError()
    for k in range(n_vertices):
        s.last[k] = -1
        s.cap[k] = m
    for k in range(n_edges):
        s.eu[k] = eu[k]
        s.ev[k] = ev[k]
        s.mult[k] = 0
        s.last[s.eu[k]] = k
        s.last[s.ev[k]] = k
    return 0


cdef void _teardown(State *s) noexcept:
    free(s.eu)
    free(s.ev)
    free(s.mult)
    free(s.last)
    free(s.cap)


cdef bint _has_isolated(State *s, int n_vertices) noexcept:
    cdef int k
    for k in range(n_vertices):
        if s.last[k] < 0:
            return True
    return False


def count_covers(int n_vertices, eu, ev, int m):
    cdef State s
    _setup(&s, n_vertices, eu, ev, m)
    try:
        if m > 0 and _has_isolated(&s, n_vertices):
            return 0
        with nogil:
            _count(&s, 0)
        return s.count
    finally:
        _teardown(&s)


def enumerate_covers(int n_vertices, eu, ev, int m):
    cdef State s
    cdef list out = []
    _setup(&s, n_vertices, eu, ev, m)
    try:
        if m > 0 and _has_isolated(&s, n_vertices):
            return out
        _enumerate(&s, 0, out)
        return out
    finally:
        _teardown(&s)
