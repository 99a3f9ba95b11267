"""Exact integer matrices and the Lambda / L / R / W calculus."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .snake import CFLike, ContinuedFraction


class BigMatrix:
    """Immutable square matrix of Python integers (or Fractions)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("BigMatrix must be square and non-empty")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "BigMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def first_column(self) -> tuple:
        return self.column(0)

    @property
    def T(self) -> "BigMatrix":
        return BigMatrix(zip(*self.rows))

    def __eq__(self, other):
        if isinstance(other, BigMatrix):
            return self.rows == other.rows
        if isinstance(other, (tuple, list)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "BigMatrix") -> "BigMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        cols = other.T.rows
        return BigMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def __pow__(self, k: int) -> "BigMatrix":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = BigMatrix.identity(self.size)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __sub__(self, other: "BigMatrix") -> "BigMatrix":
        return BigMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.size
        a = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                    a[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def charpoly(self) -> list:
        """Coefficients of ``det(x I - M)``, highest degree first (monic)."""
        n = self.size
        coeffs = [Fraction(1)]
        mk = BigMatrix([[Fraction(0)] * n for _ in range(n)])
        for k in range(1, n + 1):
            shifted = BigMatrix([[mk[i, j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)])
            mk = self @ shifted
            c = -sum(mk[i, i] for i in range(n)) / k
            coeffs.append(c)
        return [int(c) if c.denominator == 1 else c for c in coeffs]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"BigMatrix({[list(r) for r in self.rows]})"


def multichoose(a: int, k: int) -> int:
    """Number of ``k``-multisets from ``a`` elements, ``C(a+k-1, k)``."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if k < 0:
        return 0
    return comb(a + k - 1, k)


def lambda_matrix(a: int, m: int) -> BigMatrix:
    """Entry ``(i, j)`` (1-based) is ``multichoose(a, m+2-i-j)``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return BigMatrix([[multichoose(a, m - i - j) for j in range(m + 1)] for i in range(m + 1)])


def R_matrix(m: int) -> BigMatrix:
    """Upper unitriangular all-ones matrix."""
    return BigMatrix([[int(j >= i) for j in range(m + 1)] for i in range(m + 1)])


def L_matrix(m: int) -> BigMatrix:
    """Lower unitriangular all-ones matrix."""
    return R_matrix(m).T


def W_matrix(m: int) -> BigMatrix:
    """Anti-diagonal permutation matrix."""
    return BigMatrix([[int(i + j == m) for j in range(m + 1)] for i in range(m + 1)])


def r_power(a: int, m: int) -> BigMatrix:
    """Closed form of ``R^a``: entry ``(i, i+k)`` is ``multichoose(a, k)``."""
    if a < 1:
        raise ValueError("a must be >= 1")
    return BigMatrix([[multichoose(a, j - i) if j >= i else 0 for j in range(m + 1)] for i in range(m + 1)])


def lambda_product(cf: CFLike, m: int) -> BigMatrix:
    parts = ContinuedFraction.of(cf).parts
    x = lambda_matrix(parts[0], m)
    for a in parts[1:]:
        x = x @ lambda_matrix(a, m)
    return x


def lr_word_product(cf: CFLike, m: int) -> BigMatrix:
    """``R^{a1} L^{a2} R^{a3} ...`` followed by ``W`` when the length is odd.

    Powers are taken by repeated multiplication, independent of ``r_power``.
    """
    parts = ContinuedFraction.of(cf).parts
    r, l = R_matrix(m), L_matrix(m)
    x = BigMatrix.identity(m + 1)
    for k, a in enumerate(parts):
        step = r if k % 2 == 0 else l
        for _ in range(a):
            x = x @ step
    if len(parts) % 2:
        x = x @ W_matrix(m)
    return x


def is_monotone(x: BigMatrix) -> bool:
    """Entries weakly decrease along every row and every column."""
    n = x.size
    rows_ok = all(x[i, j] >= x[i, j + 1] for i in range(n) for j in range(n - 1))
    cols_ok = all(x[i, j] >= x[i + 1, j] for i in range(n - 1) for j in range(n))
    return rows_ok and cols_ok


def from_json(data: Sequence[Sequence[str]]) -> BigMatrix:
    return BigMatrix([[int(v) for v in r] for r in data])
