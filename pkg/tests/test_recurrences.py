"""Recurrence tables, iterates and closed forms against pinned values."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoflab.recurrences import (
    FTable,
    build_f_table,
    delta_f,
    f_closed_form,
    f_iter,
)

# First 31 values of F_3, F_4, F_5 — frozen reference rows, double-checked
# against the naive recursion below.
PINNED_F3 = [0, 1, 1, 2, 3, 4, 4, 5, 5, 6, 7, 7, 8, 9, 10, 10, 11, 12, 13,
             13, 14, 14, 15, 16, 17, 17, 18, 18, 19, 20, 20]
PINNED_F4 = [0, 1, 1, 2, 3, 4, 5, 5, 6, 6, 7, 8, 8, 9, 10, 11, 11, 12, 13,
             14, 15, 15, 16, 17, 18, 19, 19, 20, 20, 21, 22]
PINNED_F5 = [0, 1, 1, 2, 3, 4, 5, 6, 6, 7, 7, 8, 9, 9, 10, 11, 12, 12, 13,
             14, 15, 16, 16, 17, 18, 19, 20, 21, 21, 22, 23]


def naive_f(k: int, n_max: int) -> list[int]:
    """Transliteration of the defining recurrence, used as an oracle."""
    memo = [0]
    for n in range(1, n_max + 1):
        v = n - 1
        for _ in range(k):
            v = memo[v]
        memo.append(n - v)
    return memo


@pytest.mark.parametrize("k,pinned", [(3, PINNED_F3), (4, PINNED_F4),
                                      (5, PINNED_F5)])
def test_pinned_small_tables(k, pinned):
    table = build_f_table(k, 30)
    assert table.values.tolist() == pinned


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8])
def test_table_matches_naive_recursion(k):
    assert build_f_table(k, 500).values.tolist() == naive_f(k, 500)


def test_closed_form_k1():
    table = build_f_table(1, 200)
    for n in range(201):
        assert f_closed_form(1, n) == table[n] == (n + 1) // 2


def test_closed_form_k2_golden_ratio_floor():
    table = build_f_table(2, 5000)
    for n in range(5001):
        assert f_closed_form(2, n) == table[n]


def test_closed_form_rejects_other_k():
    with pytest.raises(ValueError):
        f_closed_form(3, 10)


def test_table_bounds_and_immutability():
    table = build_f_table(2, 10)
    assert len(table) == 11
    assert table.n_max == 10
    with pytest.raises(IndexError):
        table[11]
    with pytest.raises(IndexError):
        table[-1]
    with pytest.raises(ValueError):
        table.values[0] = 99


def test_build_rejects_bad_args():
    with pytest.raises(ValueError):
        build_f_table(0, 10)
    with pytest.raises(ValueError):
        build_f_table(2, -1)


def test_iterates_compose():
    table = build_f_table(3, 300)
    for n in (0, 1, 17, 300):
        assert f_iter(table, 0, n) == n
        assert f_iter(table, 2, n) == table[table[n]]
        assert f_iter(table, 5, n) == f_iter(table, 2, f_iter(table, 3, n))


def test_iterate_of_k1_halves():
    table = build_f_table(1, 64)
    for j in range(7):
        for n in range(65):
            assert f_iter(table, j, n) == -(-n // (1 << j))  # ceil(n / 2^j)


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1,
                                                          max_value=300))
@settings(max_examples=60, deadline=None)
def test_steps_are_zero_or_one(k, n):
    table = build_f_table(k, n)
    steps = np.diff(table.values)
    assert set(np.unique(steps)) <= {0, 1}
    assert delta_f(table, 1, n - 1) in (0, 1)


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=2,
                                                          max_value=200))
@settings(max_examples=40, deadline=None)
def test_no_two_flat_steps_and_run_cap(k, n_max):
    steps = np.diff(build_f_table(k, n_max).values)
    flat = np.flatnonzero(steps == 0)
    assert not np.any(np.diff(flat) == 1), "two consecutive flat steps"
    run = best = 0
    for s in steps:
        run = run + 1 if s == 1 else 0
        best = max(best, run)
    assert best <= k


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1,
                                                          max_value=120))
@settings(max_examples=40, deadline=None)
def test_depth_n_iterate_is_flat_at_n(k, n):
    # F_k^n(n+1) - F_k^n(n) == 0 for every n >= 1: iterates this deep
    # have already flattened by the time they reach their own depth.
    table = build_f_table(k, n + 1)
    assert delta_f(table, n, n) == 0


def test_ftable_is_frozen_dataclass():
    table = build_f_table(2, 5)
    with pytest.raises(AttributeError):
        table.k = 3
    assert isinstance(table, FTable)
