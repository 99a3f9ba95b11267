"""Generating functions for P-partitions of fence posets.

``stanley_U`` counts order-reversing maps ``P -> {0..m}`` by size through
linear extensions and Gaussian binomials; ``stanley_F`` packages all ``m`` at
once as ``sum q^maj x^des / (x; q)_{p+1}``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .enumeration import enumerate_m_lattice_paths, path_to_rpp
from .linalg import BigMatrix
from .qpoly import QPolynomial, QXRational, rational_series
from .snake import Poset, SnakeGraph, all_cfs, build_snake, dual_snake, fence_poset_of


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial by the q-Pascal rule."""
    if k < 0 or n < 0 or k > n:
        return QPolynomial()
    if k == 0 or k == n:
        return QPolynomial.one()
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


@dataclass(frozen=True)
class LinearExtensionStats:
    extension: tuple[int, ...]
    word: tuple[int, ...]
    des: int
    maj: int


def linear_extensions(poset: Poset) -> list[tuple[int, ...]]:
    """All linear extensions, lexicographic in element labels."""
    below = {y: {x for x, z in poset.less_than if z == y} for y in range(1, poset.size + 1)}
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []
    used: set[int] = set()

    def rec():
        if len(chosen) == poset.size:
            out.append(tuple(chosen))
            return
        for e in range(1, poset.size + 1):
            if e not in used and below[e] <= used:
                used.add(e)
                chosen.append(e)
                rec()
                chosen.pop()
                used.discard(e)

    rec()
    return out


def descent_stats(word: Sequence[int]) -> tuple[int, int]:
    """``(des, maj)`` of a permutation word, positions counted from 1."""
    descents = [i for i in range(1, len(word)) if word[i - 1] > word[i]]
    return len(descents), sum(descents)


def linear_extensions_with_stats(poset: Poset, reference: Sequence[int] | None = None) -> list[LinearExtensionStats]:
    """Each extension read as a permutation of the labels given by ``reference``.

    ``reference`` defaults to the lexicographically least linear extension;
    the element in position k of the reference receives label k.
    """
    exts = linear_extensions(poset)
    if reference is None:
        reference = exts[0] if exts else ()
    elif tuple(reference) not in set(exts):
        raise ValueError("reference must be a linear extension")
    label = {e: k + 1 for k, e in enumerate(reference)}
    stats = []
    for ext in exts:
        word = tuple(label[e] for e in ext)
        des, maj = descent_stats(word)
        stats.append(LinearExtensionStats(ext, word, des, maj))
    return stats


def descent_polynomials(poset: Poset, reference: Sequence[int] | None = None) -> list[QPolynomial]:
    """``W_i(q) = sum of q^maj`` over extensions with ``i`` descents."""
    by_des: dict[int, list[int]] = {}
    for s in linear_extensions_with_stats(poset, reference):
        by_des.setdefault(s.des, []).append(s.maj)
    top = max(by_des, default=0)
    return [QPolynomial.from_exponents(by_des.get(i, [])) for i in range(top + 1)]


def stanley_U(poset: Poset, m: int, reference: Sequence[int] | None = None) -> QPolynomial:
    if m < 0:
        raise ValueError("m must be >= 0")
    p = poset.size
    if p == 0:
        return QPolynomial.one()
    total = QPolynomial()
    for i, w in enumerate(descent_polynomials(poset, reference)):
        total = total + q_binomial(p + m - i, p) * w
    return total


def stanley_F(poset: Poset, reference: Sequence[int] | None = None) -> QXRational:
    numerator = descent_polynomials(poset, reference) if poset.size else [QPolynomial.one()]
    return QXRational(tuple(numerator), poset.size + 1)


def series_in_x(F: QXRational, order: int) -> list[QPolynomial]:
    return F.series(order)


def F_at_q1(poset: Poset) -> tuple[list[int], int]:
    """``(c, N)`` with the generating function equal to ``sum c_j x^j / (1-x)^N``."""
    return stanley_F(poset).at_q1()


def q_fibonacci(k: int) -> QPolynomial:
    """Rank polynomial of the 1-dimer covers of the straight snake with ``k`` tiles."""
    if k < 1:
        raise ValueError("k must be >= 1")
    zigzag = build_snake([k + 1])
    return stanley_U(fence_poset_of(zigzag), 1)


Monomial = tuple[int, ...]


def quasi_sym_poly(snake: SnakeGraph, m: int) -> dict[Monomial, int]:
    """``{(e_0, ..., e_m): coefficient}``; ``e_i`` counts tiles labelled ``i``."""
    poly: Counter = Counter()
    for path in enumerate_m_lattice_paths(snake, m):
        labels = path_to_rpp(snake, path, m).labels
        counts = Counter(labels)
        poly[tuple(counts.get(i, 0) for i in range(m + 1))] += 1
    return dict(sorted(poly.items(), reverse=True))


def principal_specialization(poly: dict[Monomial, int]) -> QPolynomial:
    """Substitute ``x_i = q**i``."""
    total = QPolynomial()
    for mono, c in poly.items():
        total = total + QPolynomial.monomial(sum(i * e for i, e in enumerate(mono)), c)
    return total


def format_monomial(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def unimodality_report(poly: QPolynomial) -> bool:
    return poly.is_unimodal()


@dataclass(frozen=True)
class UnimodalityScan:
    checked: int
    counterexamples: tuple[tuple[tuple[int, ...], int, QPolynomial], ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def unimodality_scan(max_total: int, max_m: int) -> UnimodalityScan:
    """Check ``stanley_U`` of the dual fence for every snake and level up to the bounds."""
    bad = []
    checked = 0
    for cf in all_cfs(max_total):
        poset = fence_poset_of(dual_snake(build_snake(cf)))
        for m in range(1, max_m + 1):
            checked += 1
            u = stanley_U(poset, m)
            if not u.is_unimodal():
                bad.append((cf.parts, m, u))
    return UnimodalityScan(checked, tuple(bad))


def _det_one_minus_x(matrix: BigMatrix) -> list[int]:
    """Coefficients of ``det(I - x M)`` from the constant term up.

    These are the characteristic polynomial's coefficients read from the top.
    """
    return list(matrix.charpoly())


def transfer_series(matrix: BigMatrix) -> tuple[list[int], list[int]]:
    """``(N, D)`` with ``N(x)/D(x) = sum_k (M^{k+1})_{11} x^k``.

    ``(I - xM)^{-1}`` has (1,1)-entry ``C(x)/D(x)`` where ``C`` comes from the
    minor with the first row and column removed; subtracting the ``k = 0``
    term and dividing by ``x`` gives the shifted series.
    """
    n = matrix.size
    d = _det_one_minus_x(matrix)
    if n == 1:
        c = [1]
    else:
        minor = BigMatrix([row[1:] for row in matrix.rows[1:]])
        c = _det_one_minus_x(minor)
    c = c + [0] * (len(d) - len(c))
    diff = [a - b for a, b in zip(c, d)]
    num = diff[1:]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num, d


def transfer_series_terms(matrix: BigMatrix, order: int) -> list[int]:
    num, den = transfer_series(matrix)
    return rational_series(num, den, order)

