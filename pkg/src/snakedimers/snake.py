"""Snake graphs built from continued fractions.

A continued fraction ``[a1, ..., an]`` expands to a sign sequence with blocks
of constant sign of lengths ``a1, ..., an``.  Reading that sequence edge by
edge places ``d = a1 + ... + an - 1`` unit tiles on the integer lattice: a
sign change between consecutive edges continues the snake straight, equal
signs make it turn.

Coordinates: tile 1 has its south-west corner at the origin, tiles are keyed
by their south-west corner, vertices are integer points and an edge is the
sorted pair of its endpoints.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Sequence

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]

MINUS, PLUS = "-", "+"
RIGHT, UP = "R", "U"


class PrecisionExhausted(ArithmeticError):
    """Raised when the working precision cannot certify the next partial quotient.

    ``terms`` holds the partial quotients that were certified before giving up.
    """

    def __init__(self, message: str, terms: Sequence[int]):
        super().__init__(message)
        self.terms = tuple(terms)


def make_edge(u: Vertex, v: Vertex) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class ContinuedFraction:
    """A finite regular continued fraction with positive integer parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if not parts:
            raise ValueError("a continued fraction needs at least one part")
        if any(a < 1 for a in parts):
            raise ValueError(f"all parts must be >= 1, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        """Parse the comma separated form, e.g. ``"2,4,1,2"``."""
        try:
            parts = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"malformed continued fraction {text!r}") from None
        return cls(parts)

    @classmethod
    def of(cls, cf: "CFLike") -> "ContinuedFraction":
        if isinstance(cf, ContinuedFraction):
            return cf
        if isinstance(cf, str):
            return cls.parse(cf)
        return cls(tuple(cf))

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def tiles(self) -> int:
        return self.total - 1


CFLike = ContinuedFraction | Sequence[int] | str


@dataclass(frozen=True)
class SignSequence:
    """Signs ``f(e_0), ..., f(e_d)`` along the edges that thread a snake."""

    signs: str

    def __post_init__(self):
        if not self.signs or set(self.signs) - {MINUS, PLUS}:
            raise ValueError(f"bad sign sequence {self.signs!r}")
        if self.signs[0] != MINUS:
            raise ValueError("sign sequences start with '-'")

    @classmethod
    def from_cf(cls, cf: CFLike) -> "SignSequence":
        cf = ContinuedFraction.of(cf)
        chunks = []
        for i, a in enumerate(cf.parts):
            chunks.append((MINUS if i % 2 == 0 else PLUS) * a)
        return cls("".join(chunks))

    @property
    def block_lengths(self) -> tuple[int, ...]:
        lengths = [1]
        for prev, cur in zip(self.signs, self.signs[1:]):
            if cur == prev:
                lengths[-1] += 1
            else:
                lengths.append(1)
        return tuple(lengths)

    @property
    def block_ends(self) -> tuple[int, ...]:
        """Positions ``l_i = a_1 + ... + a_i`` (1-based) where each block ends."""
        ends, acc = [], 0
        for a in self.block_lengths:
            acc += a
            ends.append(acc)
        return tuple(ends)

    def to_cf(self) -> ContinuedFraction:
        return ContinuedFraction(self.block_lengths)

    def __str__(self):
        return self.signs

    def __len__(self):
        return len(self.signs)


def cf_to_sign_sequence(cf: CFLike) -> SignSequence:
    return SignSequence.from_cf(cf)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph with an explicit edge order."""

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]


def _tile_edges(x: int, y: int) -> dict[str, Edge]:
    return {
        "S": ((x, y), (x + 1, y)),
        "W": ((x, y), (x, y + 1)),
        "E": ((x + 1, y), (x + 1, y + 1)),
        "N": ((x, y + 1), (x + 1, y + 1)),
    }


@dataclass(frozen=True)
class SnakeGraph:
    """Tile-level description of the snake graph of a continued fraction.

    ``direction_word`` has one letter per tile after the first: ``R`` if the
    tile sits east of its predecessor, ``U`` if north.  ``threading_edges``
    are ``e_0, ..., e_d``: the south edge of tile 1, the shared interior edges
    and the exit edge of the last tile chosen by the final sign.
    """

    cf: ContinuedFraction
    signs: SignSequence
    direction_word: str
    tiles: tuple[Vertex, ...]
    threading_edges: tuple[Edge, ...]
    edges: tuple[Edge, ...] = field(repr=False)
    vertices: tuple[Vertex, ...] = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.tiles)

    @property
    def interior_edges(self) -> tuple[Edge, ...]:
        return self.threading_edges[1:-1]

    @property
    def start(self) -> Vertex:
        return (0, 0)

    @property
    def end(self) -> Vertex:
        if not self.tiles:
            return (1, 0)
        x, y = self.tiles[-1]
        return (x + 1, y + 1)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def tile_index(self) -> dict[Vertex, int]:
        return {t: i for i, t in enumerate(self.tiles)}

    def is_straight(self) -> bool:
        return len(set(self.direction_word)) <= 1

    def is_zigzag(self) -> bool:
        w = self.direction_word
        return all(p != c for p, c in zip(w, w[1:]))

    def as_graph(self) -> Graph:
        return Graph(self.vertices, self.edges)

    def to_dict(self) -> dict:
        return {
            "cf": list(self.cf.parts),
            "tiles": [list(t) for t in self.tiles],
            "direction_word": self.direction_word,
            "sign_sequence": self.signs.signs,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def same_graph(self, other: "SnakeGraph") -> bool:
        """Equality as edge-labelled graphs (the generating cf may differ in e_d)."""
        return (
            self.tiles == other.tiles
            and self.edges == other.edges
            and self.interior_edges == other.interior_edges
        )


def snake_from_signs(signs: SignSequence | str) -> SnakeGraph:
    if isinstance(signs, str):
        signs = SignSequence(signs)
    s = signs.signs
    d = len(s) - 1
    cf = signs.to_cf()
    if d == 0:
        e = ((0, 0), (1, 0))
        return SnakeGraph(cf, signs, "", (), (e,), (e,), e)

    tiles: list[Vertex] = [(0, 0)]
    word: list[str] = []
    threading: list[Edge] = [_tile_edges(0, 0)["S"]]
    entry = "S"
    for i in range(1, d + 1):
        x, y = tiles[-1]
        straight = s[i] != s[i - 1]
        if entry == "S":
            exit_side = "N" if straight else "E"
        else:
            exit_side = "E" if straight else "N"
        threading.append(_tile_edges(x, y)[exit_side])
        if i == d:
            break
        if exit_side == "N":
            tiles.append((x, y + 1))
            word.append(UP)
            entry = "S"
        else:
            tiles.append((x + 1, y))
            word.append(RIGHT)
            entry = "W"

    edges: list[Edge] = []
    seen: set[Edge] = set()
    for x, y in tiles:
        for side in "SWEN":
            e = _tile_edges(x, y)[side]
            if e not in seen:
                seen.add(e)
                edges.append(e)
    vertices = sorted({v for e in edges for v in e})
    return SnakeGraph(
        cf,
        signs,
        "".join(word),
        tuple(tiles),
        tuple(threading),
        tuple(edges),
        tuple(vertices),
    )


def build_snake(cf: CFLike) -> SnakeGraph:
    """The snake graph with ``sum(cf) - 1`` tiles determined by ``cf``."""
    return snake_from_signs(SignSequence.from_cf(cf))


def dual_cf(cf: CFLike) -> ContinuedFraction:
    """Expand each part into ones, then swap ``+`` and ``,`` between them."""
    cf = ContinuedFraction.of(cf)
    seps = []
    for i, a in enumerate(cf.parts):
        seps.extend("+" * (a - 1))
        if i < len(cf) - 1:
            seps.append(",")
    swapped = ["," if c == "+" else "+" for c in seps]
    parts = [1]
    for c in swapped:
        if c == "+":
            parts[-1] += 1
        else:
            parts.append(1)
    return ContinuedFraction(tuple(parts))


def dual_snake(snake: SnakeGraph) -> SnakeGraph:
    return build_snake(dual_cf(snake.cf))


def convergent_matrix(cf: CFLike) -> tuple[tuple[int, int], tuple[int, int]]:
    """``((p_n, p_{n-1}), (q_n, q_{n-1}))`` from the product of ``((a,1),(1,0))``."""
    cf = ContinuedFraction.of(cf)
    p, pp, q, qq = 1, 0, 0, 1
    for a in cf.parts:
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
    return ((p, pp), (q, qq))


def cf_value(cf: CFLike) -> Fraction:
    (p, _), (q, _) = convergent_matrix(cf)
    return Fraction(p, q)


def _euclid(num: int, den: int, max_terms: int | None) -> list[int]:
    terms = []
    while den and (max_terms is None or len(terms) < max_terms):
        a, r = divmod(num, den)
        terms.append(a)
        num, den = den, r
    return terms


def real_to_cf(x, max_terms: int | None = None, digits: int = 50) -> ContinuedFraction:
    """Simple continued fraction of a real ``x >= 1``, truncated to ``max_terms``.

    Rationals (``int``, ``Fraction``, ``"13/5"``, ``"1.25"``) are expanded exactly.
    ``Decimal`` and ``float`` inputs are treated as approximations of a real
    number: the expansion runs at ``digits`` significant digits (53 bits for
    floats) while tracking the propagated rounding error.  It stops when the
    remainder is within twice the unit roundoff of an integer, and raises
    :class:`PrecisionExhausted` if a partial quotient cannot be certified
    before ``max_terms`` is reached.
    """
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Rational):
        x = Fraction(x)
        if x < 1:
            raise ValueError(f"expected x >= 1, got {x}")
        return ContinuedFraction(tuple(_euclid(x.numerator, x.denominator, max_terms)))
    if isinstance(x, float):
        value, unit = Decimal(x), Decimal(2) ** -53
        digits = max(digits, 40)
    elif isinstance(x, Decimal):
        value, unit = x, Decimal(10) ** (1 - digits) / 2
    else:
        raise TypeError(f"unsupported real type {type(x).__name__}")
    if value < 1:
        raise ValueError(f"expected x >= 1, got {value}")

    terms: list[int] = []
    with localcontext() as ctx:
        ctx.prec = digits + 10
        err = abs(value) * unit
        while max_terms is None or len(terms) < max_terms:
            a = int(value)  # value > 0, so this is floor
            frac = value - a
            roundoff = 2 * unit * abs(value)
            if frac <= roundoff:
                terms.append(a)
                return ContinuedFraction(tuple(terms))
            if 1 - frac <= roundoff:
                terms.append(a + 1)
                return ContinuedFraction(tuple(terms))
            if frac <= err or 1 - frac <= err:
                raise PrecisionExhausted(
                    f"partial quotient {len(terms) + 1} not certified at {digits} digits",
                    terms,
                )
            terms.append(a)
            value = 1 / frac
            # |d(1/f)| <= df / (f (f - df))
            err = err / (frac * (frac - err)) + abs(value) * unit
    return ContinuedFraction(tuple(terms))


@dataclass(frozen=True)
class Poset:
    """Finite poset on ``1..size`` given by cover relations ``(lower, upper)``."""

    size: int
    covers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for lo, hi in self.covers:
            if not (1 <= lo <= self.size and 1 <= hi <= self.size) or lo == hi:
                raise ValueError(f"bad relation {lo} < {hi}")

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n)

    @classmethod
    def fence(cls, n: int) -> "Poset":
        """``b1 < b2 > b3 < b4 ...``"""
        rel = []
        for i in range(1, n):
            rel.append((i, i + 1) if i % 2 == 1 else (i + 1, i))
        return cls(n, tuple(rel))

    @cached_property
    def less_than(self) -> frozenset[tuple[int, int]]:
        """Transitive closure of the cover relations."""
        up: dict[int, set[int]] = {i: set() for i in range(1, self.size + 1)}
        for lo, hi in self.covers:
            up[lo].add(hi)
        closure = set()
        for start in up:
            stack = list(up[start])
            seen = set()
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                stack.extend(up[v])
            closure.update((start, v) for v in seen)
        if any((v, v) in closure for v in up):
            raise ValueError("relations contain a cycle")
        return frozenset(closure)

    def lt(self, x: int, y: int) -> bool:
        return (x, y) in self.less_than

    def is_fence(self) -> bool:
        """Hasse diagram is a disjoint union of paths."""
        degree = [0] * (self.size + 1)
        for lo, hi in self.covers:
            degree[lo] += 1
            degree[hi] += 1
        return all(k <= 2 for k in degree)


FencePoset = Poset


def fence_poset_of(snake: SnakeGraph) -> Poset:
    """Tiles ordered by ``x < y`` iff tile x lies directly below or right of tile y."""
    rel = []
    for i, step in enumerate(snake.direction_word, start=1):
        rel.append((i, i + 1) if step == UP else (i + 1, i))
    return Poset(snake.d, tuple(rel))


def compositions(total: int) -> Iterable[ContinuedFraction]:
    """All continued fractions whose parts sum to ``total``, in lexicographic order."""
    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    for parts in rec(total):
        yield ContinuedFraction(parts)


def all_cfs(max_total: int) -> list[ContinuedFraction]:
    return [cf for n in range(1, max_total + 1) for cf in compositions(n)]
