"""Pure-Python m-dimer cover search.

Edges are assigned multiplicities in the given order.  Each vertex keeps its
remaining capacity; the last edge incident to a vertex is forced to use up
whatever capacity is left, so every leaf of the search is a cover.
"""


def _last_incident(n_vertices, eu, ev):
    last = [-1] * n_vertices
    for k in range(len(eu)):
        last[eu[k]] = k
        last[ev[k]] = k
    return last


def _search(n_vertices, eu, ev, m, on_leaf):
    n_edges = len(eu)
    last = _last_incident(n_vertices, eu, ev)
    if m > 0 and min(last, default=0) < 0:
        return
    cap = [m] * n_vertices
    mult = [0] * n_edges

    def rec(k):
        if k == n_edges:
            on_leaf(mult)
            return
        u, v = eu[k], ev[k]
        hi = cap[u] if cap[u] < cap[v] else cap[v]
        forced = -1
        if last[u] == k:
            forced = cap[u]
        if last[v] == k:
            if forced >= 0 and forced != cap[v]:
                return
            forced = cap[v]
        if forced > hi:
            return
        lo = 0 if forced < 0 else forced
        if forced >= 0:
            hi = forced
        for x in range(lo, hi + 1):
            mult[k] = x
            cap[u] -= x
            cap[v] -= x
            rec(k + 1)
            cap[u] += x
            cap[v] += x
        mult[k] = 0

    rec(0)


def count_covers(n_vertices, eu, ev, m):
    total = 0

    def leaf(_):
        nonlocal total
        total += 1

    _search(n_vertices, eu, ev, m, leaf)
    return total


def enumerate_covers(n_vertices, eu, ev, m):
    out = []
    _search(n_vertices, eu, ev, m, lambda mult: out.append(tuple(mult)))
    return out
