import math
from decimal import Decimal, localcontext
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from snakedimers.gcf import (
    CfVector,
    LimitEnclosure,
    Word,
    cf_vector_matrix,
    cf_vector_recursive,
    column_enclosure,
    count_real_roots,
    frange,
    invert_r_m,
    largest_real_root,
    monotonicity_report,
    periodic_cubic,
    polygon_diagonal,
    r_limit,
    r_real,
    r_value,
    sample_r_curve,
    sturm_sequence,
)
from snakedimers.linalg import lambda_product
from snakedimers.snake import PrecisionExhausted, cf_value, real_to_cf

TIGHT = F(1, 10**9)
parts_st = st.lists(st.integers(1, 5), min_size=1, max_size=6)


def test_vector_examples():
    for parts in ([1, 2, 3, 4], [2, 4, 1, 2], [5]):
        assert cf_vector_recursive(parts, 1).r(1) == cf_value(parts)
    for k in range(1, 8):
        v = cf_vector_recursive([k], 2)
        assert v.r(2) == k * (k + 1) // 2 and v.r(1) == k
    v = cf_vector_recursive([1, 1], 2)
    assert v.entries == (3, 2, 1) == cf_vector_matrix([1, 1], 2).entries
    assert cf_vector_matrix([1] * 5, 2).r(2) == F(31, 14)
    assert cf_vector_matrix([1, 2, 3, 4], 1).r(1) == F(43, 30)
    assert cf_vector_matrix([2], 3).entries == (4, 3, 2, 1)


def test_vector_json():
    assert cf_vector_matrix([1] * 5, 2).to_json() == ["31/14", "25/14", "1/1"]


@given(parts_st, st.integers(1, 4))
def test_vector_routes_agree(parts, m):
    a, b = cf_vector_recursive(parts, m), cf_vector_matrix(parts, m)
    assert a == b
    assert a.entries[-1] == 1
    assert all(x >= y for x, y in zip(a.entries, a.entries[1:]))
    assert all(x >= 1 for x in a.entries)


@given(parts_st, st.integers(1, 3))
def test_vector_invariant_under_append(parts, m):
    if parts[-1] > 1:
        rewritten = parts[:-1] + [parts[-1] - 1, 1]
        assert cf_vector_matrix(parts, m) == cf_vector_matrix(rewritten, m)


@pytest.mark.parametrize("m", range(1, 7))
def test_all_ones_limits(m):
    enc = r_limit(Word(period=(1,)), m, m, TIGHT)
    assert enc.converged and enc.width <= TIGHT
    assert abs(float(enc.midpoint) - polygon_diagonal(m, m)) < 1e-9
    assert all(a >= b for a, b in zip(enc.widths, enc.widths[1:]))


@pytest.mark.parametrize("i,m,value", [(1, 2, 1.80194), (1, 3, 1.87939), (2, 3, 2.53209)])
def test_off_diagonal_limits(i, m, value):
    enc = r_limit(Word(period=(1,)), i, m, TIGHT)
    assert abs(float(enc.midpoint) - value) < 1e-5


def test_polygon_diagonal_values():
    assert abs(polygon_diagonal(2, 2) - 2.24697) < 1e-5
    assert abs(polygon_diagonal(6, 6) - 4.78338) < 1e-5
    assert abs(polygon_diagonal(3, 2) - 2.53209) < 1e-5
    assert abs(polygon_diagonal(1, 1) - (1 + math.sqrt(5)) / 2) < 1e-12
    assert abs(polygon_diagonal(2, 2) - (4 * math.cos(math.pi / 7) ** 2 - 1)) < 1e-12
    with pytest.raises(ValueError):
        polygon_diagonal(2, 3)


def test_limit_contains_finite_values():
    word = Word(prefix=(3,), period=(1, 2))
    enc = r_limit(word, 2, 2, TIGHT)
    for n in (20, 40):
        assert abs(r_value(word.take(n), 2) - enc.midpoint) < F(1, 10**6)


def test_limit_generic_iterable():
    def ones():
        while True:
            yield 1

    enc = r_limit(ones(), 1, 1, F(1, 10**6))
    assert enc.converged and enc.contains(F(161803398875, 10**11))


def test_limit_cap_reports_failure():
    enc = r_limit(Word(period=(1,)), 2, 2, F(1, 10**40), max_factors=8)
    assert not enc.converged and enc.factors <= 8
    assert enc.contains(F(224697960371747, 10**14))


def test_limit_finite_word():
    enc = r_limit([1, 2, 3, 4], 1, 1, TIGHT)
    assert enc.contains(F(43, 30))


def test_limit_argument_errors():
    with pytest.raises(ValueError):
        r_limit(Word(period=(1,)), 3, 2)
    with pytest.raises(ValueError):
        r_limit(Word(period=(1,)), 1, 1, tol=0)
    with pytest.raises(ValueError):
        Word()


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(1, 3))
def test_enclosures_nest(parts, m):
    encs = [column_enclosure(lambda_product(parts * k, m), m, m) for k in (1, 2, 3)]
    for (lo0, hi0), (lo1, hi1) in zip(encs, encs[1:]):
        assert lo0 <= lo1
        assert hi0 is None or (hi1 is not None and hi1 <= hi0)


def test_sturm_helpers():
    p = [F(-2), F(0), F(1)]  # x^2 - 2
    seq = sturm_sequence(p)
    assert count_real_roots(seq, F(-10), F(10)) == 2
    lo, hi = largest_real_root(p, F(1, 10**20))
    assert lo <= F(14142135623730950488, 10**19) <= hi


@pytest.mark.parametrize("a", range(1, 11))
def test_cubic_charpoly(a):
    c = periodic_cubic([a])
    assert c.charpoly == (1, -(math.comb(a + 1, 2) + 1), -(math.comb(a, 2) + 1), 1)
    assert c.alpha == (0, 1)


def test_cubic_golden_heptagon():
    c = periodic_cubic([1])
    assert abs(c.lambda_value - (4 * math.cos(math.pi / 7) ** 2 - 1)) < 1e-10
    assert c.lambda_upper - c.lambda_lower <= F(1, 10**30)


@pytest.mark.parametrize("period", [(1,), (2,), (1, 2), (3, 1, 1)])
def test_cubic_matches_limits(period):
    c = periodic_cubic(period)
    for i, interval in ((2, c.alpha_enclosure()), (1, c.beta_enclosure())):
        enc = r_limit(Word(period=period), i, 2, F(1, 10**15))
        assert enc.lower <= interval[1] and interval[0] <= enc.upper


def test_cubic_period_two():
    c = periodic_cubic([2])
    silver = 1 + math.sqrt(2)
    # alpha = lambda_1 is the limit along 2,2,2,...
    assert c.charpoly == (1, -4, -2, 1)
    enc = r_limit(Word(period=(2,)), 2, 2, TIGHT)
    assert abs(float(enc.midpoint) - c.lambda_value) < 1e-9
    assert abs(r_real(Decimal(silver), 2, F(1, 10**6)).lower - F(c.lambda_value)) < F(1, 10**6)


SEVEN = [(F(1), 1), (F(3, 2), 2), (F(2), 3), (F(16, 7), 4), (F(13, 5), 5), (F(3), 6),
         (F(118, 37), 7), (F(41, 12), 8), (F(11, 3), 9), (F(4), 10)]


@pytest.mark.parametrize("x,r", SEVEN)
def test_r2_table(x, r):
    enc = r_real(x, 2)
    assert enc.lower == enc.upper == r


@pytest.mark.parametrize("x,r", SEVEN)
def test_invert_table(x, r):
    found = invert_r_m(F(r), 2, 8, 12)
    assert found is not None and cf_value(found) == x


def test_invert_examples():
    assert invert_r_m(5, 2, 8, 12).parts == (2, 1, 1, 2)
    for k in range(1, 8):
        assert invert_r_m(k * (k + 1) // 2, 2, 4, 12).parts == (k,)
    assert invert_r_m(F(43, 30), 1, 6, 6).parts == (1, 2, 3, 4)
    assert invert_r_m(F(10**9 + 7, 3), 2, 2, 3) is None
    with pytest.raises(ValueError):
        invert_r_m(F(1, 2), 2, 3, 3)


def test_invert_is_shortest_exhaustively():
    target = F(16, 7)
    r4 = invert_r_m(4, 2, 8, 12)
    from itertools import product

    for n in range(1, len(r4)):
        for parts in product(range(1, 13), repeat=n):
            assert r_value(parts, 2) != 4
    assert cf_value(r4) == target


def test_r_real_irrational():
    with localcontext() as ctx:
        ctx.prec = 80
        phi = (1 + Decimal(5).sqrt()) / 2
    enc = r_real(phi, 1, F(1, 10**20), digits=70)
    assert enc.contains(F(161803398874989484820, 10**20) + F(1, 2 * 10**20)) or enc.width < F(1, 10**20)
    with pytest.raises(PrecisionExhausted):
        r_real(phi, 1, F(1, 10**200), digits=30)


def test_r_real_invariant_under_rewriting():
    for x in (F(16, 7), F(118, 37), F(41, 12)):
        cf = real_to_cf(x).parts
        alt = cf[:-1] + (cf[-1] - 1, 1)
        assert r_value(alt, 2) == r_value(cf, 2)


def test_curve_and_report():
    samples = sample_r_curve(2, 1, 2, F(1, 4))
    assert samples == [(F(1), 1), (F(5, 4), F(3, 2)), (F(3, 2), 2), (F(7, 4), F(5, 2)), (F(2), 3)]
    rep = monotonicity_report(samples)
    assert rep.increasing and rep.samples == 5
    bad = monotonicity_report([(1, 2), (2, 1)])
    assert not bad.increasing and len(bad.violations) == 1


def test_frange_exact():
    xs = frange(1, 6, 0.01)
    assert len(xs) == 501 and xs[-1] == 6
    with pytest.raises(ValueError):
        frange(1, 2, 0)


def test_enclosure_json():
    enc = LimitEnclosure(F(1), F(3, 2), True, 4)
    assert enc.to_json() == {"lower": "1/1", "upper": "3/2", "width": "1/2", "converged": True, "factors": 4}
    assert enc.to_json(as_float=True)["upper"] == 1.5
