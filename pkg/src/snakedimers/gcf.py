"""Generalised (m-dimensional) continued fractions.

A word ``a_1, a_2, ...`` gives the product ``X = Lambda(a_1) Lambda(a_2) ...``
of ``(m+1) x (m+1)`` Lambda-matrices.  Its first column, scaled so the last
entry is 1, is the vector ``(r_m, r_{m-1}, ..., r_1, 1)``.

For an infinite word the first column of every longer product lies in the
cone spanned by the columns of ``X``; projecting the columns to the chart
"last coordinate = 1" gives a certified interval for each limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, count, cycle, islice
from typing import Iterable, Iterator, Sequence

from .linalg import BigMatrix, lambda_matrix, lambda_product, multichoose
from .snake import PrecisionExhausted, CFLike, ContinuedFraction, real_to_cf

DEFAULT_MAX_FACTORS = 10_000


@dataclass(frozen=True)
class CfVector:
    """``(r_{m,m}, ..., r_{1,m}, r_{0,m})`` as exact rationals."""

    entries: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return len(self.entries) - 1

    def r(self, i: int) -> Fraction:
        return self.entries[self.m - i]

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in self.entries]


def format_rational(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _recursive(parts: tuple[int, ...], m: int) -> list[Fraction]:
    # r[k] = r_{k,m}
    a = parts[-1]
    r = [Fraction(multichoose(a, k)) for k in range(m + 1)]
    for a in reversed(parts[:-1]):
        tail = r
        r = [
            sum((multichoose(a, i) * tail[m - k + i] for i in range(k + 1)), Fraction(0)) / tail[m]
            for k in range(m + 1)
        ]
    return r


def cf_vector_recursive(cf: CFLike, m: int) -> CfVector:
    r = _recursive(ContinuedFraction.of(cf).parts, m)
    return CfVector(tuple(reversed(r)))


def cf_vector_matrix(cf: CFLike, m: int) -> CfVector:
    col = lambda_product(cf, m).first_column
    return CfVector(tuple(Fraction(v, col[m]) for v in col))


def r_value(cf: CFLike, m: int, i: int | None = None) -> Fraction:
    """``r_{i,m}`` of a finite word (``i`` defaults to ``m``)."""
    i = m if i is None else i
    if not 0 <= i <= m:
        raise ValueError(f"i must lie in 0..{m}")
    col = lambda_product(cf, m).first_column
    return Fraction(col[m - i], col[m])


@dataclass(frozen=True)
class Word:
    """Eventually periodic word ``prefix + period + period + ...``.

    An empty period means the word is just the finite prefix.
    """

    prefix: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self):
        if any(a < 1 for a in self.prefix + self.period):
            raise ValueError("word letters must be positive")
        if not self.prefix and not self.period:
            raise ValueError("empty word")

    @classmethod
    def parse(cls, prefix: str | None = None, period: str | None = None) -> "Word":
        def ints(s):
            return tuple(int(t) for t in s.split(",") if t.strip()) if s else ()

        return cls(ints(prefix), ints(period))

    @property
    def is_finite(self) -> bool:
        return not self.period

    def __iter__(self) -> Iterator[int]:
        return chain(self.prefix, cycle(self.period)) if self.period else iter(self.prefix)

    def take(self, n: int) -> tuple[int, ...]:
        return tuple(islice(self, n))


@dataclass(frozen=True)
class LimitEnclosure:
    """Interval known to contain the limit; ``upper is None`` means unbounded."""

    lower: Fraction
    upper: Fraction | None
    converged: bool
    factors: int
    widths: tuple[float, ...] = field(default=(), repr=False)

    @property
    def width(self) -> Fraction | None:
        return None if self.upper is None else self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        if self.upper is None:
            raise ValueError("unbounded enclosure has no midpoint")
        return (self.lower + self.upper) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lower <= x and (self.upper is None or x <= self.upper)

    def to_json(self, as_float: bool = False) -> dict:
        def fmt(v):
            if v is None:
                return None
            return float(v) if as_float else format_rational(v)

        return {
            "lower": fmt(self.lower),
            "upper": fmt(self.upper),
            "width": fmt(self.width),
            "converged": self.converged,
            "factors": self.factors,
        }


def column_enclosure(x: BigMatrix, i: int, m: int) -> tuple[Fraction, Fraction | None]:
    """Min and max over the columns of ``x[m-i, j] / x[m, j]``."""
    lo = hi = None
    unbounded = False
    for j in range(m + 1):
        den = x[m, j]
        num = x[m - i, j]
        if den == 0:
            if num > 0:
                unbounded = True
            continue
        v = Fraction(num, den)
        lo = v if lo is None or v < lo else lo
        hi = v if hi is None or v > hi else hi
    if lo is None:
        raise ArithmeticError("no column has a positive last entry")
    return lo, (None if unbounded else hi)


def _width(lo, hi) -> float:
    return math.inf if hi is None else float(hi - lo)


def _as_word(word_source) -> Word | Iterable[int]:
    if isinstance(word_source, Word):
        return word_source
    if isinstance(word_source, (ContinuedFraction, tuple, list, str)):
        return Word(ContinuedFraction.of(word_source).parts)
    return word_source


def r_limit(word_source, i: int, m: int, tol=Fraction(1, 10**12), max_factors: int = DEFAULT_MAX_FACTORS) -> LimitEnclosure:
    """Certified enclosure of ``lim r_{i,m}(a_1..a_n)`` of width at most ``tol``.

    Periodic words are advanced by squaring the period block, so the
    checked prefixes have lengths ``len(prefix) + len(period) * (2**s - 1)``.
    Other words are consumed one letter at a time.  If ``max_factors`` is
    reached first the best enclosure is returned with ``converged=False``.
    """
    if m < 1 or not 0 <= i <= m:
        raise ValueError("need m >= 1 and 0 <= i <= m")
    tol = Fraction(tol) if not isinstance(tol, float) else Fraction(str(tol))
    if tol <= 0:
        raise ValueError("tol must be positive")
    word = _as_word(word_source)
    widths: list[float] = []

    def done(x, n, last=False):
        lo, hi = column_enclosure(x, i, m)
        widths.append(_width(lo, hi))
        ok = hi is not None and hi - lo <= tol
        if ok or last:
            return LimitEnclosure(lo, hi, ok, n, tuple(widths))
        return None

    if isinstance(word, Word) and word.period:
        x = lambda_product(word.prefix, m) if word.prefix else BigMatrix.identity(m + 1)
        n = len(word.prefix)
        block, blen = lambda_product(word.period, m), len(word.period)
        while True:
            x = x @ block
            n += blen
            block, blen = block @ block, 2 * blen
            res = done(x, n, n + blen > max_factors)
            if res:
                return res

    x = None
    n = 0
    for a in word:
        f = lambda_matrix(a, m)
        x = f if x is None else x @ f
        n += 1
        res = done(x, n, n >= max_factors)
        if res:
            return res
    if x is None:
        raise ValueError("empty word")
    lo, hi = column_enclosure(x, i, m)
    return LimitEnclosure(lo, hi, hi is not None and hi - lo <= tol, n, tuple(widths))


def polygon_diagonal(m: int, i: int) -> float:
    """``sin((i+1) pi / (2m+3)) / sin(pi / (2m+3))``: the ``i``-th diagonal of the unit regular ``(2m+3)``-gon."""
    if m < 1 or not 1 <= i <= m:
        raise ValueError("need m >= 1 and 1 <= i <= m")
    n = 2 * m + 3
    return math.sin((i + 1) * math.pi / n) / math.sin(math.pi / n)


# Polynomials over Q as coefficient lists, constant term first.

Poly = list


def _trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def _pscale(a: Poly, c) -> Poly:
    return _trim([c * v for v in a])


def _psub(a: Poly, b: Poly) -> Poly:
    return _padd(a, _pscale(b, -1))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(v) for v in _trim(a)]
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        c = rem[-1] / b[-1]
        k = len(rem) - len(b)
        quot[k] = c
        for j, v in enumerate(b):
            rem[k + j] -= c * v
        rem = _trim(rem)
    return _trim(quot), rem


def _peval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pderiv(p: Poly) -> Poly:
    return _trim([k * p[k] for k in range(1, len(p))])


def _pgcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pscale(a, Fraction(1) / a[-1]) if a else a


def _inverse_mod(a: Poly, p: Poly) -> Poly:
    """``a^{-1}`` in ``Q[x]/(p)``; requires ``gcd(a, p) = 1``."""
    r0, r1 = _trim(p), _pdivmod(a, p)[1]
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo the polynomial")
    return _pdivmod(_pscale(s0, Fraction(1) / r0[0]), p)[1]


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [_trim([Fraction(c) for c in p])]
    seq.append(_pderiv(seq[0]))
    while seq[-1]:
        r = _pdivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(_pscale(r, -1))
    return [s for s in seq if s]


def _sign_changes(seq: list[Poly], x) -> int:
    signs = [v for v in (_peval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(seq: list[Poly], a, b) -> int:
    """Distinct real roots in ``(a, b]``."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def largest_real_root(p: Poly, width=Fraction(1, 10**30)) -> tuple[Fraction, Fraction]:
    """Interval ``(lo, hi]`` of width at most ``width`` holding the largest real root."""
    p = _trim([Fraction(c) for c in p])
    bound = 1 + max(abs(c / p[-1]) for c in p[:-1])
    seq = sturm_sequence(p)
    lo, hi = -bound, bound
    if count_real_roots(seq, lo, hi) == 0:
        raise ValueError("polynomial has no real root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_real_roots(seq, mid, hi) > 0:
            lo = mid
        elif _peval(p, mid) == 0:
            return mid, mid
        else:
            hi = mid
    return lo, hi


def _interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Range bound of ``p`` on ``[lo, hi]`` for ``0 <= lo``."""
    if lo < 0:
        raise ValueError("interval evaluation assumes a non-negative interval")
    a = b = Fraction(0)
    for k, c in enumerate(p):
        ends = (c * lo**k, c * hi**k)
        a += min(ends)
        b += max(ends)
    return a, b


@dataclass(frozen=True)
class CubicData:
    """Characteristic data of a period block for ``m = 2``.

    ``alpha`` and ``beta`` are coefficient lists (constant term first) of
    polynomials in ``lambda`` of degree below that of ``modulus``, a factor
    of the characteristic polynomial vanishing at the largest root.
    """

    period: tuple[int, ...]
    charpoly: tuple[int, ...]
    lambda_lower: Fraction
    lambda_upper: Fraction
    modulus: tuple[Fraction, ...]
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    @property
    def lambda_value(self) -> float:
        return float((self.lambda_lower + self.lambda_upper) / 2)

    def alpha_enclosure(self) -> tuple[Fraction, Fraction]:
        return _interval_eval(list(self.alpha), self.lambda_lower, self.lambda_upper)

    def beta_enclosure(self) -> tuple[Fraction, Fraction]:
        return _interval_eval(list(self.beta), self.lambda_lower, self.lambda_upper)

    def to_json(self, as_float: bool = False) -> dict:
        def fmt(v):
            return float(v) if as_float else format_rational(v)

        return {
            "period": list(self.period),
            "charpoly": [str(c) for c in self.charpoly],
            "lambda": [fmt(self.lambda_lower), fmt(self.lambda_upper)],
            "alpha": [fmt(c) for c in self.alpha],
            "beta": [fmt(c) for c in self.beta],
            "alpha_value": self.alpha_value,
            "beta_value": self.beta_value,
        }

    @property
    def alpha_value(self) -> float:
        lo, hi = self.alpha_enclosure()
        return float((lo + hi) / 2)

    @property
    def beta_value(self) -> float:
        lo, hi = self.beta_enclosure()
        return float((lo + hi) / 2)


def _reduce_modulus(d: Poly, p: Poly, lo: Fraction, hi: Fraction) -> Poly | None:
    """Factor of ``p`` keeping its root in ``[lo, hi]`` and coprime to ``d``; None if ``d`` vanishes there."""
    q = p
    while True:
        g = _pgcd(d, q)
        if len(g) <= 1:
            return q
        if _root_in(g, lo, hi):
            return None
        q = _pdivmod(q, g)[0]


def _root_in(p: Poly, lo: Fraction, hi: Fraction) -> bool:
    if _peval(p, lo) == 0:
        return True
    return lo != hi and count_real_roots(sturm_sequence(p), lo, hi) > 0


def periodic_cubic(period: CFLike, width=Fraction(1, 10**30)) -> CubicData:
    """Perron root and eigenvector data of ``Lambda^2(a_1) ... Lambda^2(a_k)``.

    The eigenvector ``(alpha, beta, 1)`` is found by Cramer's rule on two rows
    of ``X - lambda I``; the resulting rational functions of ``lambda`` are
    reduced to polynomials modulo the characteristic polynomial.
    """
    parts = ContinuedFraction.of(period).parts
    x = lambda_product(parts, 2)
    charpoly = tuple(x.charpoly())
    p = [Fraction(c) for c in reversed(charpoly)]
    lo, hi = largest_real_root(p, Fraction(width))

    def entry(r, c):
        # entry of X - lambda I as a polynomial in lambda
        return _trim([Fraction(x[r, c]), Fraction(-1)]) if r == c else _trim([Fraction(x[r, c])])

    for r, s in ((0, 1), (0, 2), (1, 2)):
        a, b, c = entry(r, 0), entry(r, 1), entry(r, 2)
        d_, e, f = entry(s, 0), entry(s, 1), entry(s, 2)
        det = _psub(_pmul(a, e), _pmul(b, d_))
        if not det:
            continue
        modulus = _reduce_modulus(det, p, lo, hi)
        if modulus is None:
            continue
        inv = _inverse_mod(det, modulus)
        # a*alpha + b*beta = -c ; d*alpha + e*beta = -f
        num_alpha = _psub(_pmul(b, f), _pmul(c, e))
        num_beta = _psub(_pmul(c, d_), _pmul(a, f))
        alpha = _pdivmod(_pmul(num_alpha, inv), modulus)[1]
        beta = _pdivmod(_pmul(num_beta, inv), modulus)[1]
        return CubicData(parts, charpoly, lo, hi, tuple(modulus), tuple(alpha), tuple(beta))
    raise ArithmeticError("eigenvector could not be isolated from any pair of rows")


def r_real(x, m: int, tol=Fraction(1, 10**12), i: int | None = None, digits: int = 50) -> LimitEnclosure:
    """``r_{i,m}`` at a real ``x >= 1``.

    Rationals are evaluated exactly on their Euclidean expansion.  For
    ``float``/``Decimal`` input the certified partial quotients form a prefix
    whose cone gives the enclosure; if that is wider than ``tol`` the
    :class:`PrecisionExhausted` from the expansion is re-raised.
    """
    i = m if i is None else i
    try:
        cf = real_to_cf(x, digits=digits)
    except PrecisionExhausted as exc:
        if not exc.terms:
            raise
        lo, hi = column_enclosure(lambda_product(exc.terms, m), i, m)
        if hi is None or hi - lo > Fraction(tol):
            raise
        return LimitEnclosure(lo, hi, True, len(exc.terms))
    v = r_value(cf, m, i)
    return LimitEnclosure(v, v, True, len(cf))


def frange(lo, hi, step) -> list[Fraction]:
    """Exact grid ``lo, lo + step, ...`` up to and including ``hi``."""
    lo, hi, step = (Fraction(str(v)) if isinstance(v, float) else Fraction(v) for v in (lo, hi, step))
    if step <= 0:
        raise ValueError("step must be positive")
    out = []
    for k in count():
        v = lo + k * step
        if v > hi:
            break
        out.append(v)
    return out


def sample_r_curve(m: int, lo, hi, step, i: int | None = None) -> list[tuple[Fraction, Fraction]]:
    """``(x, r_{i,m}(x))`` on an exact rational grid; values are exact."""
    xs = frange(lo, hi, step)
    if xs and xs[0] < 1:
        raise ValueError("the curve is defined for x >= 1")
    return [(x, r_value(real_to_cf(x), m, i)) for x in xs]


@dataclass(frozen=True)
class MonotonicityReport:
    samples: int
    violations: tuple[tuple[Fraction, Fraction, Fraction, Fraction], ...]

    @property
    def increasing(self) -> bool:
        return not self.violations


def monotonicity_report(samples: Sequence[tuple[Fraction, Fraction]]) -> MonotonicityReport:
    """Pairs of consecutive samples where the value fails to increase strictly."""
    bad = tuple(
        (x0, x1, y0, y1) for (x0, y0), (x1, y1) in zip(samples, samples[1:]) if not y0 < y1
    )
    return MonotonicityReport(len(samples), bad)


def invert_r_m(target, m: int, max_len: int, max_part: int) -> ContinuedFraction | None:
    """Shortest (then lexicographically least) word with ``r_m`` exactly ``target``.

    Prefixes are pruned only when ``target`` falls outside the cone enclosure
    of the prefix product, which holds for every extension of the prefix.
    """
    target = Fraction(target)
    if target < 1:
        raise ValueError("target must be >= 1")
    factors = {a: lambda_matrix(a, m) for a in range(1, max_part + 1)}

    def search(x: BigMatrix | None, parts: list[int], length: int):
        for a in range(1, max_part + 1):
            y = factors[a] if x is None else x @ factors[a]
            parts.append(a)
            if len(parts) == length:
                col = y.first_column
                if Fraction(col[0], col[m]) == target:
                    return tuple(parts)
            else:
                lo, hi = column_enclosure(y, m, m)
                if lo <= target and (hi is None or target <= hi):
                    found = search(y, parts, length)
                    if found:
                        return found
            parts.pop()
        return None

    for length in range(1, max_len + 1):
        found = search(None, [], length)
        if found:
            return ContinuedFraction(found)
    return None
