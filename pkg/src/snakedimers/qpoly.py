"""Dense integer polynomials in ``q`` and rational functions over Pochhammer symbols."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPolynomial:
    """Polynomial ``c0 + c1 q + c2 q^2 + ...`` with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, degree: int, coef: int = 1) -> "QPolynomial":
        return cls([0] * degree + [coef])

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls([1])

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPolynomial":
        """Sum of ``q**e`` over the given exponents."""
        c: list[int] = []
        for e in exponents:
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += 1
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return QPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return QPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = QPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by ``q**k``."""
        return QPolynomial([0] * k + list(self.coeffs)) if self else self

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient when ``other`` divides ``self`` over the integers."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        quot = [0] * max(len(rem) - len(other) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[k + len(other) - 1], lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return QPolynomial(quot)

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def is_palindromic(self) -> bool:
        c = self.coeffs
        lo = next((k for k, v in enumerate(c) if v), 0)
        core = c[lo:]
        return core == core[::-1]

    def is_unimodal(self) -> bool:
        """Coefficients weakly rise, then weakly fall."""
        c = self.coeffs
        k = 0
        while k + 1 < len(c) and c[k] <= c[k + 1]:
            k += 1
        while k + 1 < len(c) and c[k] >= c[k + 1]:
            k += 1
        return k + 1 >= len(c)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "QPolynomial":
        return cls(int(c) for c in data)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                mono = str(c)
            else:
                var = "q" if k == 1 else f"q^{k}"
                mono = var if c == 1 else f"-{var}" if c == -1 else f"{c}{var}"
            terms.append(mono)
        return " + ".join(terms).replace("+ -", "- ")


def pochhammer(k: int) -> list[QPolynomial]:
    """``(x;q)_k = (1-x)(1-qx)...(1-q^{k-1}x)`` as coefficients of ``x^j``."""
    poly = [QPolynomial.one()]
    for i in range(k):
        shifted = [QPolynomial()] + [-c.shift(i) for c in poly]
        poly = [a + b for a, b in zip(poly + [QPolynomial()], shifted)]
    return poly


def series_inverse(coeffs: Sequence[QPolynomial], order: int) -> list[QPolynomial]:
    """Power series inverse in ``x`` of a polynomial with constant term 1."""
    if not coeffs or coeffs[0] != QPolynomial.one():
        raise ValueError("constant term must be 1")
    inv = [QPolynomial.one()]
    for n in range(1, order + 1):
        acc = QPolynomial()
        for j in range(1, min(n, len(coeffs) - 1) + 1):
            acc = acc + coeffs[j] * inv[n - j]
        inv.append(-acc)
    return inv[: order + 1]


@dataclass(frozen=True)
class QXRational:
    """``numerator(q, x) / (x; q)_pochhammer``.

    ``numerator[j]`` is the q-polynomial coefficient of ``x**j``.
    """

    numerator: tuple[QPolynomial, ...]
    pochhammer: int

    def series(self, order: int) -> list[QPolynomial]:
        """Coefficients of ``x^0 .. x^order`` of the expansion."""
        inv = series_inverse(pochhammer(self.pochhammer), order)
        out = []
        for n in range(order + 1):
            acc = QPolynomial()
            for j, c in enumerate(self.numerator[: n + 1]):
                acc = acc + c * inv[n - j]
            out.append(acc)
        return out

    def at_q1(self) -> tuple[list[int], int]:
        """``(numerator coefficients in x, N)`` meaning ``num(x) / (1-x)^N``."""
        return [c(1) for c in self.numerator], self.pochhammer

    def to_json(self) -> dict:
        terms = []
        for xdeg, c in enumerate(self.numerator):
            for qdeg, coef in enumerate(c.coeffs):
                if coef:
                    terms.append([str(coef), qdeg, xdeg])
        return {"numerator": terms, "pochhammer": self.pochhammer}


def rational_series(numerator: Sequence[int], denominator: Sequence[int], order: int) -> list[int]:
    """Integer power series of ``numerator(x) / denominator(x)`` with ``denominator[0] == 1``."""
    if not denominator or denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list[int] = []
    for n in range(order + 1):
        acc = numerator[n] if n < len(numerator) else 0
        for j in range(1, min(n, len(denominator) - 1) + 1):
            acc -= denominator[j] * out[n - j]
        out.append(acc)
    return out
