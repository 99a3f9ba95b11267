"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (also collected in the
terminal summary).  Criteria 2 and 4 sweep every composition up to the stated
bound and take tens of seconds; the rest finish in a few seconds.
"""
import functools
import math
import random
import time
from fractions import Fraction as F

import pytest

import conftest
from snakedimers.bracket import append_one, bordered_grid, bracket, prepend_one
from snakedimers.enumeration import (
    count_m_dimers,
    enumerate_m_lattice_paths,
    rank_generating_function,
)
from snakedimers.gcf import (
    Word,
    cf_vector_matrix,
    cf_vector_recursive,
    invert_r_m,
    monotonicity_report,
    periodic_cubic,
    r_limit,
    r_real,
    sample_r_curve,
)
from snakedimers.genfun import (
    F_at_q1,
    linear_extensions,
    q_binomial,
    q_fibonacci,
    series_in_x,
    stanley_F,
    stanley_U,
    transfer_series,
    transfer_series_terms,
    unimodality_scan,
)
from snakedimers.linalg import BigMatrix, is_monotone, lambda_matrix, lambda_product
from snakedimers.qpoly import QPolynomial as Q, rational_series
from snakedimers.snake import Poset, all_cfs, build_snake, cf_value, dual_cf, dual_snake, fence_poset_of


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}{': ' + detail if detail else ''}"
        conftest.ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok

    return emit


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_1_exact_counts(report):
    def checks():
        return {
            "tile m=2": count_m_dimers(build_snake([2]), 2) == 3,
            "[1,1,1,1] m=2": count_m_dimers(build_snake([1, 1, 1, 1]), 2) == 14,
            "paths on [4] m=2": len(enumerate_m_lattice_paths(build_snake([4]), 2)) == 14,
            "product [1,2,3,4]": lambda_product([1, 2, 3, 4], 1) == ((43, 10), (30, 7)),
            "[2,4,1,2]": cf_value([2, 4, 1, 2]) == F(31, 14),
            "dual": cf_value(dual_cf([2, 4, 1, 2])) == F(32, 23) and dual_cf([2, 4, 1, 2]).parts == (1, 2, 1, 1, 3, 1),
        }

    results, secs = timed(checks)
    failed = [k for k, v in results.items() if not v]
    ok = not failed and secs < 1
    assert report(1, ok, f"{len(results)} counts exact in {secs:.2f}s {failed or ''}".strip())


def test_criterion_2_oracle_sweep(report):
    bad = []
    cfs = all_cfs(8)
    for cf in cfs:
        snake, dual = build_snake(cf), dual_snake(build_snake(cf))
        for m in (1, 2, 3):
            values = {
                count_m_dimers(snake, m),
                lambda_product(cf, m)[0, 0],
                bracket(cf, m, "enum"),
                bracket(cf, m, "recur"),
                len(enumerate_m_lattice_paths(dual, m)),
            }
            if len(values) != 1:
                bad.append((cf.parts, m, values))
    rng = random.Random(20261016)
    sample = [(rng.choice(cfs), rng.randint(1, 3)) for _ in range(50)]
    for cf, m in sample:
        grid = bordered_grid(cf, m, "enum")
        if not (grid == bordered_grid(cf, m, "matrix") == bordered_grid(cf, m, "recur")):
            bad.append(("grid", cf.parts, m))
    assert report(2, not bad, f"{len(cfs)} cfs x m=1..3 and 50 bordered grids, mismatches={len(bad)}")


def test_criterion_3_generating_functions(report):
    fence4 = Poset.fence(4)
    num, n = F_at_q1(fence4)
    fence_series = rational_series(num, [(-1) ** k * math.comb(n, k) for k in range(n + 1)], 4)
    fib_want = {
        1: [1, 1], 2: [1, 1, 1], 3: [1, 1, 2, 1], 4: [1, 2, 2, 2, 1],
        5: [1, 2, 3, 3, 3, 1], 6: [1, 3, 4, 5, 4, 3, 1],
    }
    checks = {
        "resolvent": transfer_series(lambda_matrix(1, 2)) == ([1, 1, -1], [1, -2, -1, 1])
        and transfer_series_terms(lambda_matrix(1, 2), 4) == [1, 3, 6, 14, 31],
        "fence q=1": (num, n) == ([1, 3, 1], 5) and fence_series == [1, 8, 31, 85, 190],
        "fence x-coefficients": series_in_x(stanley_F(fence4), 2)[1:]
        == [Q([1, 2, 2, 2, 1]), Q([1, 2, 4, 5, 7, 5, 4, 2, 1])],
        "q-fibonacci": all(q_fibonacci(k) == Q(c) for k, c in fib_want.items()),
        "chain": all(
            stanley_U(Poset.chain(p), m) == q_binomial(p + m, m) for p in range(1, 7) for m in range(5)
        ),
    }
    failed = [k for k, v in checks.items() if not v]
    assert report(3, not failed, f"{len(checks)} reproductions {failed or 'exact'}")


def test_criterion_4_stanley_vs_oracle(report):
    bad = []
    cfs = all_cfs(7)
    for cf in cfs:
        snake = build_snake(cf)
        poset = fence_poset_of(dual_snake(snake))
        for m in (1, 2, 3):
            if stanley_U(poset, m) != rank_generating_function(snake, m):
                bad.append((cf.parts, m))
    posets = 0
    for cf in all_cfs(7):
        poset = fence_poset_of(dual_snake(build_snake(cf)))
        if poset.size > 6:
            continue
        posets += 1
        base = stanley_F(poset).numerator
        for ref in linear_extensions(poset):
            if stanley_F(poset, ref).numerator != base:
                bad.append(("reference", cf.parts, ref))
    assert report(4, not bad, f"{len(cfs)} snakes x m=1..3, {posets} posets all references, mismatches={len(bad)}")


def test_criterion_5_limits(report):
    table = [1.61803, 2.24697, 2.87938, 3.51333, 4.14811, 4.78338]
    off = {(1, 2): 1.80194, (1, 3): 1.87939, (2, 3): 2.53209}
    tol = F(1, 10**9)
    errors = []
    worst = F(0)
    cases = [((m, m), v) for m, v in enumerate(table, start=1)] + list(off.items())
    for (i, m), value in cases:
        enc = r_limit(Word(period=(1,)), i, m, tol)
        worst = max(worst, enc.width)
        err = abs(float(enc.midpoint) - value)
        if not enc.converged or enc.width > tol or err > 1e-5:
            errors.append((i, m, err))
    assert report(5, not errors, f"{len(cases)} limits, max width {float(worst):.1e}, failures={errors}")


def test_criterion_6_periodic_cubics(report):
    bad = []
    for a in range(1, 11):
        want = (1, -(math.comb(a + 1, 2) + 1), -(math.comb(a, 2) + 1), 1)
        if periodic_cubic([a]).charpoly != want:
            bad.append(("charpoly", a))
    lam = periodic_cubic([1]).lambda_value
    if abs(lam - (4 * math.cos(math.pi / 7) ** 2 - 1)) > 1e-10:
        bad.append(("lambda", lam))
    for period in ((1,), (2,), (1, 2)):
        c = periodic_cubic(period)
        lo, hi = c.alpha_enclosure()
        enc = r_limit(Word(period=period), 2, 2, F(1, 10**12))
        if not (enc.lower <= hi and lo <= enc.upper):
            bad.append(("alpha", period))
    assert report(6, not bad, f"charpolys a=1..10, lambda_1 and 3 alpha checks, failures={bad}")


def test_criterion_7_r2_table(report):
    rows = [(F(1), 1), (F(3, 2), 2), (F(2), 3), (F(16, 7), 4), (F(13, 5), 5), (F(3), 6),
            (F(118, 37), 7), (F(41, 12), 8), (F(11, 3), 9), (F(4), 10)]

    def run():
        bad = []
        for x, r in rows:
            enc = r_real(x, 2)
            if not (enc.lower == enc.upper == r):
                bad.append(("r2", x))
            found = invert_r_m(F(r), 2, 8, 12)
            if found is None or cf_value(found) != x:
                bad.append(("invert", r, found))
        return bad

    bad, secs = timed(run)
    assert report(7, not bad and secs < 60, f"10 rows both directions in {secs:.2f}s, failures={bad}")


def random_cf(rng, max_len=6, max_part=5):
    return [rng.randint(1, max_part) for _ in range(rng.randint(1, max_len))]


@functools.lru_cache(maxsize=None)
def property_suites():
    """Subcheck name -> (passed, note) for the property-suite criterion."""
    rng = random.Random(8)
    out = {}

    mono = all(is_monotone(lambda_product(random_cf(rng), rng.randint(1, 4))) for _ in range(200))
    out["monotone"] = (mono, f"monotone products {'ok' if mono else 'FAILED'}")

    for name, rewrite, fix in (("append", append_one, -1), ("prepend", prepend_one, 0)):
        bad = 0
        for _ in range(200):
            cf = random_cf(rng)
            if cf[fix] == 1:
                cf[fix] = 2
            m = rng.randint(1, 4)
            if lambda_product(cf, m).first_column != lambda_product(rewrite(cf), m).first_column:
                bad += 1
        out[name] = (bad == 0, f"{name} first column mismatches={bad}/200")

    vec_bad = sum(
        cf_vector_recursive(cf, m) != cf_vector_matrix(cf, m) for cf in all_cfs(10) for m in range(1, 5)
    )
    out["vectors"] = (vec_bad == 0, f"recursive vs matrix vectors mismatches={vec_bad}")

    scan = unimodality_scan(8, 3)
    out["unimodal"] = (scan.ok, f"unimodality {scan.checked} polys counterexamples={len(scan.counterexamples)}")

    curve = monotonicity_report(sample_r_curve(2, 1, 6, F(1, 100)))
    # a conjecture check: reported, never assumed
    out["curve"] = (True, f"r2 curve {curve.samples} samples increasing={curve.increasing}")
    return out


@pytest.mark.xfail(
    strict=True,
    raises=AssertionError,
    reason="prepending 1 keeps the first row of the product, not the first column: m=1, [3] vs [1,2]",
)
def test_criterion_8_property_suites(report):
    results = property_suites()
    ok = all(passed for passed, _ in results.values())
    report(8, ok, "; ".join(note for _, note in results.values()))
    assert ok


def test_criterion_8_attainable_subchecks():
    results = property_suites()
    assert all(results[k][0] for k in ("monotone", "append", "vectors", "unimodal", "curve"))
    assert not results["prepend"][0]


def test_prepend_preserves_first_row():
    rng = random.Random(81)
    for _ in range(200):
        cf = random_cf(rng)
        if cf[0] == 1:
            cf[0] = 2
        m = rng.randint(1, 4)
        assert lambda_product(cf, m).row(0) == lambda_product(prepend_one(cf), m).row(0)
