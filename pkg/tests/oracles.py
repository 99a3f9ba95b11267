"""Independent reference implementations used only by the tests."""
from collections import Counter
from fractions import Fraction
from itertools import product


def naive_covers(vertices, edges, m):
    """All m-dimer covers by trying every multiplicity vector."""
    out = []
    for mult in product(range(m + 1), repeat=len(edges)):
        deg = Counter()
        for (u, v), k in zip(edges, mult):
            deg[u] += k
            deg[v] += k
        if all(deg[v] == m for v in vertices):
            out.append({e: k for e, k in zip(edges, mult) if k})
    return out


def cf_by_recursion(parts):
    """a1 + 1/(a2 + 1/(...)) evaluated from the back."""
    value = Fraction(parts[-1])
    for a in reversed(parts[:-1]):
        value = a + 1 / value
    return value


def gaussian_binomial_product(n, k):
    """Coefficients of prod (1-q^{n-i}) / (1-q^{i+1}) for i < k, by exact division."""
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def one_minus_q(e):
        return [1] + [0] * (e - 1) + [-1]

    num, den = [1], [1]
    for i in range(k):
        num = mul(num, one_minus_q(n - i))
        den = mul(den, one_minus_q(i + 1))
    quot = [0] * (len(num) - len(den) + 1)
    rem = num[:]
    for s in range(len(quot) - 1, -1, -1):
        c = rem[s + len(den) - 1] // den[-1]
        quot[s] = c
        for j, d in enumerate(den):
            rem[s + j] -= c * d
    assert not any(rem)
    while quot and quot[-1] == 0:
        quot.pop()
    return quot


def perfect_matchings_count(vertices, edges):
    """Count perfect matchings by removing the smallest vertex each time."""
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def rec(left):
        if not left:
            return 1
        v = min(left)
        return sum(rec(left - {v, w}) for w in adj[v] if w in left)

    return rec(frozenset(vertices))
