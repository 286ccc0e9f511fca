"""Letter counting, count/recurrence identities, and preimage counts."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoflab.counts import (
    build_count_table,
    count_eq,
    count_gt,
    freq_estimate,
    iter_letter_counts,
    unique_antecedents,
    unique_antecedents_by_scan,
)
from hoflab.recurrences import build_f_table, f_iter
from hoflab.words import word_prefix


def test_pinned_counts_for_k2():
    table = build_count_table(2, 50)
    assert count_eq(table, 1, 10) == 4
    assert count_eq(table, 2, 10) == 6
    assert count_gt(table, 1, 10) == 6
    assert count_gt(table, 0, 10) == 10
    assert count_gt(table, 2, 10) == 0


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_counts_agree_with_direct_tally(k):
    n_max = 300
    table = build_count_table(k, n_max)
    letters = word_prefix(k, n_max)
    for n in (0, 1, 13, 157, n_max):
        tally = np.bincount(letters[:n], minlength=k + 1)
        for i in range(1, k + 1):
            assert count_eq(table, i, n) == tally[i]
        for j in range(k + 1):
            assert count_gt(table, j, n) == tally[j + 1:].sum()


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_tail_counts_are_recurrence_iterates(k):
    n_max = 400
    ctable = build_count_table(k, n_max)
    ftable = build_f_table(k, n_max)
    for n in range(n_max + 1):
        for j in range(1, k):
            assert count_gt(ctable, j, n) == f_iter(ftable, j, n)
        assert count_eq(ctable, k, n) == f_iter(ftable, k - 1, n)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_single_letter_counts_from_iterate_differences(k):
    n_max = 300
    ctable = build_count_table(k, n_max)
    ftable = build_f_table(k, n_max)
    for n in range(n_max + 1):
        for j in range(1, k):
            assert (count_eq(ctable, j, n)
                    == f_iter(ftable, j - 1, n) - f_iter(ftable, j, n))
    for i in range(1, k):
        for n in range(n_max + 1 - i):
            assert (count_eq(ctable, i, n + i)
                    == f_iter(ftable, k + i - 1, n))


def test_counts_reject_out_of_range():
    table = build_count_table(2, 20)
    with pytest.raises(ValueError):
        count_eq(table, 0, 5)
    with pytest.raises(ValueError):
        count_eq(table, 3, 5)
    with pytest.raises(ValueError):
        count_gt(table, 3, 5)
    with pytest.raises(IndexError):
        count_eq(table, 1, 21)


def test_frequency_estimates_are_exact_fractions():
    table = build_count_table(2, 50)
    est = freq_estimate(table, 1, 10)
    assert est == Fraction(2, 5)
    assert isinstance(est, Fraction)
    with pytest.raises(ValueError):
        freq_estimate(table, 1, 0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_unique_preimage_count_two_ways(k):
    ftable = build_f_table(k, 800)
    for n in (1, 2, 17, 350, 401):
        assert (unique_antecedents(ftable, n)
                == unique_antecedents_by_scan(ftable, n))


def test_scan_needs_enough_table():
    ftable = build_f_table(3, 100)
    with pytest.raises(IndexError):
        unique_antecedents_by_scan(ftable, 80)


def test_streaming_tallies_match_table():
    k, n_max = 3, 257
    table = build_count_table(k, n_max)
    for n, counts in iter_letter_counts(k, n_max, stride=64):
        for i in range(1, k + 1):
            assert counts[i] == count_eq(table, i, n)
    assert n == n_max  # final snapshot lands exactly on n_max


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1,
                                                          max_value=400))
@settings(max_examples=50, deadline=None)
def test_counts_total_to_prefix_length(k, n):
    table = build_count_table(k, n)
    assert sum(count_eq(table, i, n) for i in range(1, k + 1)) == n
    # count_gt telescopes: C^{(>j)} - C^{(>j+1)} = C^{(=j+1)}
    for j in range(k):
        assert (count_gt(table, j, n) - count_gt(table, j + 1, n)
                == count_eq(table, j + 1, n))
