import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from snakedimers.bracket import (
    append_one,
    bordered_bracket,
    bordered_grid,
    bordered_grid_enum,
    bracket,
    bracket_recurrence_step,
    grid_to_matrix,
    normalize_cf_for_bracket,
    prepend_one,
    recurrence_grid,
)
from snakedimers.enumeration import count_m_dimers
from snakedimers.linalg import lambda_matrix, lambda_product, multichoose
from snakedimers.snake import build_snake, cf_value

small = st.lists(st.integers(1, 4), min_size=1, max_size=4).filter(lambda p: sum(p) <= 8)


def test_bracket_examples():
    for a in range(1, 6):
        for m in range(4):
            assert bracket([a], m, "enum") == multichoose(a, m)
    assert bracket([1, 1, 1, 1], 2, "enum") == 14
    assert bracket([2, 4, 1, 2], 1, "enum") == 31


def test_bordered_examples():
    for cf in ([2], [2, 3], [1, 2, 1]):
        for m in (1, 2):
            assert bordered_bracket(m, cf, m, m) == bracket(cf, m, "enum")
    grid = bordered_grid_enum((1, 2, 3, 1), 2)
    assert grid_to_matrix(grid) == lambda_matrix(2, 2) @ lambda_matrix(3, 2)


def test_bordered_forced_cases():
    # both ends empty forces the two outer tiles to be covered horizontally,
    # which leaves the last rung's vertices uncovered
    assert bordered_bracket(0, [1], 0, 1) == 0
    assert bordered_bracket(1, [1], 1, 1) == 1


def test_bordered_out_of_range():
    with pytest.raises(ValueError):
        bordered_bracket(3, [1, 2], 0, 2)
    with pytest.raises(ValueError):
        bordered_bracket(0, [1, 2], -1, 2)


def test_recurrence_examples():
    assert grid_to_matrix(recurrence_grid([1, 2, 3, 4], 1)) == ((43, 10), (30, 7))
    for a in range(1, 5):
        for m in range(1, 4):
            assert grid_to_matrix(recurrence_grid([a], m)) == lambda_matrix(a, m)


def test_append_one_keeps_first_column():
    for cf, m in (([2, 3], 2), ([1, 4], 3), ([2, 2, 2], 2)):
        g0 = recurrence_grid(cf, m)
        g1 = recurrence_grid(append_one(cf), m)
        assert grid_to_matrix(g0).first_column == grid_to_matrix(g1).first_column


def test_normalize():
    assert normalize_cf_for_bracket([2, 4, 1, 2]).parts == (1, 1, 4, 1, 1, 1)
    assert normalize_cf_for_bracket([1, 3, 1]).parts == (1, 3, 1)
    assert normalize_cf_for_bracket([2]).parts == (1, 1)
    v = bracket([2, 4, 1, 2], 2, "enum")
    assert v == bracket([1, 1, 4, 1, 2], 2, "enum") == bracket([2, 4, 1, 1, 1], 2, "enum")
    assert bracket([2], 3, "enum") == bracket([1, 1], 3, "enum") == 4


def test_rewrite_preconditions():
    with pytest.raises(ValueError):
        prepend_one([1, 2])
    with pytest.raises(ValueError):
        append_one([2, 1])


def test_unknown_mode():
    with pytest.raises(ValueError):
        bracket([1], 1, "fast")


def test_random_grid_sample():
    rng = random.Random(7)
    for _ in range(10):
        cf = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
        m = rng.randint(1, 3)
        assert grid_to_matrix(bordered_grid(cf, m, "enum")) == lambda_product(cf, m)


@given(small, st.integers(0, 3))
def test_three_routes_agree(parts, m):
    b = bracket(parts, m, "enum")
    assert b == bracket(parts, m, "recur") == bracket(parts, m, "matrix")
    assert b == count_m_dimers(build_snake(parts), m)


@given(small, st.integers(1, 3))
def test_recurrence_matches_enumeration(parts, m):
    assert recurrence_grid(parts, m) == bordered_grid(parts, m, "enum")


@given(small)
def test_m1_ratio_is_cf_value(parts):
    if len(parts) == 1:
        return
    assert Fraction(bracket(parts, 1), bracket(parts[1:], 1)) == cf_value(parts)


@given(small, st.integers(1, 3))
def test_palindrome_grid_symmetric(parts, m):
    word = parts + parts[::-1]
    g = bordered_grid(word, m, "recur")
    assert g == tuple(zip(*g))


@given(small, st.integers(1, 3), st.integers(1, 5))
def test_step_is_linear_update(parts, m, a):
    g = recurrence_grid(parts, m)
    assert bracket_recurrence_step(g, a, m) == recurrence_grid(parts + [a], m)
