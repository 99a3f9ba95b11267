"""Brute-force enumeration of m-dimer covers and m-lattice paths.

Covers of an arbitrary finite graph come from the cover-search kernel.
Lattice paths of a snake graph are sums of ``m`` north-east paths; two
multipaths with the same edge multiset are the same object here.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from . import kernels
from .qpoly import QPolynomial
from .snake import Edge, Graph, SnakeGraph, Vertex, dual_snake, make_edge


@dataclass(frozen=True)
class EdgeMultiset:
    """Edges with positive multiplicities, kept sorted so equality is identity."""

    items: tuple[tuple[Edge, int], ...] = ()

    @classmethod
    def from_mapping(cls, mult: Mapping[Edge, int]) -> "EdgeMultiset":
        for k in mult.values():
            if k < 0:
                raise ValueError("multiplicities must be non-negative")
        return cls(tuple(sorted((e, k) for e, k in mult.items() if k)))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "EdgeMultiset":
        return cls.from_mapping(Counter(edges))

    def as_dict(self) -> dict[Edge, int]:
        return dict(self.items)

    def mult(self, edge: Edge) -> int:
        return self.as_dict().get(edge, 0)

    @property
    def total(self) -> int:
        return sum(k for _, k in self.items)

    def degree(self, v: Vertex) -> int:
        return sum(k for e, k in self.items if v in e)

    def __add__(self, other: "EdgeMultiset") -> "EdgeMultiset":
        c = Counter(self.as_dict())
        c.update(other.as_dict())
        return EdgeMultiset.from_mapping(c)

    def __len__(self):
        return len(self.items)

    def to_json(self) -> list[dict]:
        return [{"edge": [list(e[0]), list(e[1])], "mult": k} for e, k in self.items]


@dataclass(frozen=True)
class RppLabeling:
    """Labels of the tiles of a snake, listed in tile order."""

    tiles: tuple[Vertex, ...]
    labels: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.labels)

    def label(self, tile: Vertex) -> int:
        return self.labels[self.tiles.index(tile)]

    def is_reverse_plane_partition(self) -> bool:
        """Weakly increasing going down and going right between adjacent tiles."""
        lab = dict(zip(self.tiles, self.labels))
        for (x, y), v in lab.items():
            below = lab.get((x, y - 1))
            right = lab.get((x + 1, y))
            if below is not None and below < v:
                return False
            if right is not None and right < v:
                return False
        return True


def _index(graph) -> tuple[list[Vertex], list[Edge], list[int], list[int]]:
    vertices = list(graph.vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    edges = list(graph.edges)
    eu = [pos[u] for u, _ in edges]
    ev = [pos[v] for _, v in edges]
    return vertices, edges, eu, ev


def count_m_dimers(graph: Graph | SnakeGraph, m: int) -> int:
    if m < 0:
        raise ValueError("m must be >= 0")
    vertices, _, eu, ev = _index(graph)
    return kernels.count_covers(len(vertices), eu, ev, m)


def enumerate_m_dimers(graph: Graph | SnakeGraph, m: int) -> list[EdgeMultiset]:
    """Every m-dimer cover of ``graph``, in the kernel's search order."""
    if m < 0:
        raise ValueError("m must be >= 0")
    vertices, edges, eu, ev = _index(graph)
    covers = kernels.enumerate_covers(len(vertices), eu, ev, m)
    return [EdgeMultiset(tuple(sorted((edges[k], x) for k, x in enumerate(c) if x))) for c in covers]


def is_m_dimer_cover(graph: Graph | SnakeGraph, cover: EdgeMultiset, m: int) -> bool:
    edge_set = set(graph.edges)
    if any(e not in edge_set for e, _ in cover.items):
        return False
    deg = Counter()
    for (u, v), k in cover.items:
        deg[u] += k
        deg[v] += k
    return all(deg[v] == m for v in graph.vertices)


def lattice_paths(snake: SnakeGraph) -> list[tuple[Edge, ...]]:
    """All single north-east paths from the start to the end corner."""
    edge_set = snake.edge_set
    goal = snake.end
    out: list[tuple[Edge, ...]] = []
    path: list[Edge] = []

    def walk(v: Vertex):
        if v == goal:
            out.append(tuple(path))
            return
        x, y = v
        for w in ((x + 1, y), (x, y + 1)):
            e = (v, w)
            if e in edge_set:
                path.append(e)
                walk(w)
                path.pop()

    walk(snake.start)
    return out


def _path_key(snake: SnakeGraph, ms: EdgeMultiset) -> tuple[int, ...]:
    d = ms.as_dict()
    return tuple(d.get(e, 0) for e in snake.edges)


def enumerate_m_lattice_paths(snake: SnakeGraph, m: int) -> list[EdgeMultiset]:
    """One edge multiset per class of m-multipaths, sorted by multiplicity vector."""
    if m < 0:
        raise ValueError("m must be >= 0")
    singles = [EdgeMultiset.from_edges(p) for p in lattice_paths(snake)]
    found = set()
    for combo in combinations_with_replacement(range(len(singles)), m):
        acc = Counter()
        for k in combo:
            acc.update(singles[k].as_dict())
        found.add(EdgeMultiset.from_mapping(acc))
    return sorted(found, key=lambda ms: _path_key(snake, ms), reverse=True)


def is_m_lattice_path(snake: SnakeGraph, path: EdgeMultiset, m: int) -> bool:
    """Flow check: ``m`` units leave the start, arrive at the end, none are lost.

    On a grid graph with only east and north steps every such flow splits
    into ``m`` monotone paths.
    """
    edge_set = snake.edge_set
    net = Counter()
    for (u, v), k in path.items:
        if (u, v) not in edge_set:
            return False
        net[u] += k
        net[v] -= k
    if m == 0:
        return not path.items
    start, end = snake.start, snake.end
    for v in set(net) | {start, end}:
        want = m if v == start else -m if v == end else 0
        if net[v] != want:
            return False
    return True


def path_to_rpp(snake: SnakeGraph, path: EdgeMultiset, m: int) -> RppLabeling:
    """Label each tile by the number of paths passing above it."""
    if not is_m_lattice_path(snake, path, m):
        raise ValueError("not an m-lattice path of this snake graph")
    above = Counter()
    for ((x1, y1), (x2, y2)), k in path.items:
        if y1 == y2:
            above[(x1, y1)] += k
    labels = []
    for tx, ty in snake.tiles:
        labels.append(sum(k for (x, y), k in above.items() if x == tx and y > ty))
    return RppLabeling(snake.tiles, tuple(labels))


def _reflect(v: Vertex, sx: int, sy: int) -> Vertex:
    x, y = v
    return (sx + y - sy, sy + x - sx)


def dimer_to_lattice_path(snake: SnakeGraph, cover: EdgeMultiset) -> EdgeMultiset:
    """Map an m-dimer cover of a snake graph to an m-lattice path of its dual.

    For each tile in turn, everything strictly beyond the tile's anti-diagonal
    is reflected across the diagonal through its south-west corner.
    """
    m = cover.degree(snake.start) if cover.items else 0
    if not is_m_dimer_cover(snake, cover, m):
        raise ValueError("not an m-dimer cover of this snake graph")
    tiles = list(snake.tiles)
    mult = cover.as_dict()
    for i in range(len(tiles)):
        sx, sy = tiles[i]
        level = 2 * (sx + sy + 1)
        moved: dict[Edge, int] = {}
        for (u, v), k in mult.items():
            if u[0] + u[1] + v[0] + v[1] > level:
                moved[make_edge(_reflect(u, sx, sy), _reflect(v, sx, sy))] = k
            else:
                moved[(u, v)] = k
        mult = moved
        for j in range(i + 1, len(tiles)):
            tiles[j] = _reflect(tiles[j], sx, sy)
    dual = dual_snake(snake)
    if tuple(tiles) != dual.tiles:
        raise AssertionError("reflected tiles do not match the dual snake graph")
    return EdgeMultiset.from_mapping(mult)


def rank_generating_function(snake: SnakeGraph, m: int) -> QPolynomial:
    """Sum of ``q**rank`` over m-dimer covers, rank being the size of the dual labeling."""
    dual = dual_snake(snake)
    ranks = []
    for cover in enumerate_m_dimers(snake, m):
        path = dimer_to_lattice_path(snake, cover)
        ranks.append(path_to_rpp(dual, path, m).size)
    return QPolynomial.from_exponents(ranks)


def lattice_path_rank_polynomial(snake: SnakeGraph, m: int) -> QPolynomial:
    """Sum of ``q**size`` over the m-lattice paths of ``snake`` itself."""
    return QPolynomial.from_exponents(path_to_rpp(snake, p, m).size for p in enumerate_m_lattice_paths(snake, m))
