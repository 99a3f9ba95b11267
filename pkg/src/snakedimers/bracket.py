"""Weighted brackets over straight snake graphs.

The straight snake with ``n`` vertical edges ``e_1..e_n`` is drawn as a
horizontal ladder.  An m-dimer cover ``p`` gets weight
``prod multichoose(a_i, p(e_i))``; summing weights gives the bracket.  The
bordered variant fixes ``p(e_1) = i`` and ``p(e_n) = j`` on the word padded
with a 1 at each end.

Three evaluation routes are offered: weighted enumeration (the oracle), the
column recurrence, and the Lambda-matrix product.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import kernels
from .linalg import BigMatrix, lambda_product, multichoose
from .snake import CFLike, ContinuedFraction, Graph

MODES = ("enum", "recur", "matrix")

Grid = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def straight_ladder(n: int) -> Graph:
    """Ladder with rungs ``e_1..e_n``; rung ``k`` is edge index ``3k``."""
    if n < 1:
        raise ValueError("need at least one rung")
    edges = []
    for k in range(n):
        edges.append(((k, 0), (k, 1)))
        if k + 1 < n:
            edges.append(((k, 0), (k + 1, 0)))
            edges.append(((k, 1), (k + 1, 1)))
    vertices = tuple((k, y) for k in range(n) for y in (0, 1))
    return Graph(vertices, tuple(edges))


def _rung_multiplicities(n: int, m: int) -> list[tuple[int, ...]]:
    g = straight_ladder(n)
    pos = {v: i for i, v in enumerate(g.vertices)}
    eu = [pos[u] for u, _ in g.edges]
    ev = [pos[v] for _, v in g.edges]
    return [tuple(c[3 * k] for k in range(n)) for c in kernels.enumerate_covers(len(pos), eu, ev, m)]


def bordered_grid_enum(word: Sequence[int], m: int) -> Grid:
    """Weighted sums grouped by ``(p(e_1), p(e_n))`` over covers of the ladder for ``word``."""
    word = tuple(word)
    grid = [[0] * (m + 1) for _ in range(m + 1)]
    for rungs in _rung_multiplicities(len(word), m):
        w = 1
        for a, k in zip(word, rungs):
            w *= multichoose(a, k)
        grid[rungs[0]][rungs[-1]] += w
    return tuple(tuple(r) for r in grid)


def bracket_recurrence_step(grid: Sequence[Sequence[int]], a: int, m: int) -> Grid:
    """Grid for the padded word with ``a`` appended, from the grid without it."""
    new = []
    for i in range(m + 1):
        row = []
        for j in range(m + 1):
            row.append(sum(grid[i][r + m - j] * multichoose(a, r) for r in range(j + 1)))
        new.append(tuple(row))
    return tuple(new)


def recurrence_grid(cf: CFLike, m: int) -> Grid:
    """Bordered grid of ``(1, a_1, ..., a_n, 1)`` built column by column from ``(1, 1)``."""
    grid: Grid = tuple(tuple(int(i == j) for j in range(m + 1)) for i in range(m + 1))
    for a in ContinuedFraction.of(cf).parts:
        grid = bracket_recurrence_step(grid, a, m)
    return grid


def grid_to_matrix(grid: Sequence[Sequence[int]]) -> BigMatrix:
    """Reverse rows and columns: grid entry ``(i, j)`` sits at ``(m-i, m-j)``."""
    return BigMatrix([list(reversed(r)) for r in reversed(grid)])


def matrix_to_grid(x: BigMatrix) -> Grid:
    return tuple(tuple(reversed(r)) for r in reversed(x.rows))


def bordered_grid(cf: CFLike, m: int, mode: str = "matrix") -> Grid:
    parts = ContinuedFraction.of(cf).parts
    if mode == "enum":
        return bordered_grid_enum((1,) + parts + (1,), m)
    if mode == "recur":
        return recurrence_grid(parts, m)
    if mode == "matrix":
        return matrix_to_grid(lambda_product(parts, m))
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def bordered_bracket(i: int, cf: CFLike, j: int, m: int, mode: str = "enum") -> int:
    if m < 0:
        raise ValueError("m must be >= 0")
    if not (0 <= i <= m and 0 <= j <= m):
        raise ValueError(f"border multiplicities must lie in 0..{m}, got {i}, {j}")
    return bordered_grid(cf, m, mode)[i][j]


def bracket_enum(cf: CFLike, m: int) -> int:
    parts = ContinuedFraction.of(cf).parts
    total = 0
    for rungs in _rung_multiplicities(len(parts), m):
        w = 1
        for a, k in zip(parts, rungs):
            w *= multichoose(a, k)
        total += w
    return total


def bracket(cf: CFLike, m: int, mode: str = "matrix") -> int:
    if m < 0:
        raise ValueError("m must be >= 0")
    if mode == "enum":
        return bracket_enum(cf, m)
    if mode == "recur":
        return recurrence_grid(cf, m)[m][m]
    if mode == "matrix":
        return lambda_product(cf, m)[0, 0]
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def prepend_one(cf: CFLike) -> ContinuedFraction:
    """``[a1, ...] -> [1, a1 - 1, ...]`` (requires ``a1 > 1``)."""
    p = ContinuedFraction.of(cf).parts
    if p[0] < 2:
        raise ValueError("first part must exceed 1")
    return ContinuedFraction((1, p[0] - 1) + p[1:])


def append_one(cf: CFLike) -> ContinuedFraction:
    """``[..., an] -> [..., an - 1, 1]`` (requires ``an > 1``)."""
    p = ContinuedFraction.of(cf).parts
    if p[-1] < 2:
        raise ValueError("last part must exceed 1")
    return ContinuedFraction(p[:-1] + (p[-1] - 1, 1))


def normalize_cf_for_bracket(cf: CFLike) -> ContinuedFraction:
    """Rewrite so the word starts and ends with 1; the bracket value is unchanged."""
    cf = ContinuedFraction.of(cf)
    if cf.parts[0] > 1:
        cf = prepend_one(cf)
    if cf.parts[-1] > 1:
        cf = append_one(cf)
    return cf
