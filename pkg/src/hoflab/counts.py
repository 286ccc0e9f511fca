"""Letter statistics of x_k: occurrence counts, frequencies, antecedents.

C_k^{(=i)}(n) counts occurrences of letter i among the first n letters
of x_k, and C_k^{(>j)}(n) counts letters strictly above j.  These tie
back to the recurrences: C^{(>j)}(n) = F_k^j(n) for j < k, which the
verifier sweeps exercise; here the counts are computed directly from
the word so the two routes stay independent.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator

import numpy as np

from .recurrences import FTable, f_iter
from .words import WordStream, word_prefix

__all__ = [
    "CountTable",
    "build_count_table",
    "count_eq",
    "count_gt",
    "freq_estimate",
    "unique_antecedents",
    "unique_antecedents_by_scan",
    "iter_letter_counts",
]


@dataclass(frozen=True)
class CountTable:
    """Cumulative per-letter counts over prefixes of x_k.

    cum[i][n] = C_k^{(=i)}(n) for letters 1 <= i <= k and 0 <= n <= n_max;
    row 0 is unused padding so the letter is the row index.
    """

    k: int
    cum: np.ndarray

    @property
    def n_max(self) -> int:
        return self.cum.shape[1] - 1


def build_count_table(k: int, n_max: int, mem_cap: int | None = None) -> CountTable:
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    letters = word_prefix(k, n_max, mem_cap=mem_cap)
    cum = np.zeros((k + 1, n_max + 1), dtype=np.int64)
    for i in range(1, k + 1):
        np.cumsum(letters == i, out=cum[i, 1:])
    cum.setflags(write=False)
    return CountTable(k=k, cum=cum)


def _check_n(table: CountTable, n: int) -> None:
    if not 0 <= n <= table.n_max:
        raise IndexError(f"n={n} outside table range 0..{table.n_max}")


def count_eq(table: CountTable, i: int, n: int) -> int:
    """C_k^{(=i)}(n), occurrences of letter i in the length-n prefix."""
    _check_n(table, n)
    if not 1 <= i <= table.k:
        raise ValueError(f"letter {i} outside alphabet 1..{table.k}")
    return int(table.cum[i, n])


def count_gt(table: CountTable, j: int, n: int) -> int:
    """C_k^{(>j)}(n), occurrences of letters above j; j may be 0..k."""
    _check_n(table, n)
    if not 0 <= j <= table.k:
        raise ValueError(f"threshold {j} outside 0..{table.k}")
    return int(table.cum[j + 1 :, n].sum())


def freq_estimate(table: CountTable, i: int, n: int) -> Fraction:
    """Exact rational C_k^{(=i)}(n) / n."""
    if n < 1:
        raise ValueError(f"need n >= 1 for a frequency, got {n}")
    return Fraction(count_eq(table, i, n), n)


def unique_antecedents(table: FTable, n: int) -> int:
    """U_k(n): how many values j < n have exactly one F_k-preimage.

    Closed form n - F_k^{k-1}(n-1); cross-check it with
    unique_antecedents_by_scan.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return n - f_iter(table, table.k - 1, n - 1)


def unique_antecedents_by_scan(table: FTable, n: int) -> int:
    """U_k(n) by brute force: bucket every table value and count.

    Needs the table to extend past all preimages of n-1, i.e.
    n_max >= 2n - 2, else the tally could miss one.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if table.n_max < 2 * n - 2:
        raise IndexError(f"scan needs n_max >= {2 * n - 2}, have {table.n_max}")
    hits = np.bincount(table.values, minlength=n)
    return int(np.count_nonzero(hits[:n] == 1))


def iter_letter_counts(
    k: int, n_max: int, stride: int = 1 << 16, mem_cap: int | None = None
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (n, counts) snapshots every `stride` positions, plus at n_max.

    counts[i] = C_k^{(=i)}(n) with row 0 unused.  Consumes a WordStream
    chunk by chunk, so no length-n_max array is ever allocated (the
    stream keeps a pending-block queue proportional to n_max, nothing
    more).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    counts = np.zeros(k + 1, dtype=np.int64)
    if n_max == 0:
        yield 0, counts.copy()
        return
    stream = WordStream(k, mem_cap=mem_cap)
    done = 0
    while done < n_max:
        step = min(stride, n_max - done)
        block = np.fromiter(islice(stream, step), dtype=np.int64, count=step)
        counts[1:] += np.bincount(block, minlength=k + 1)[1:]
        done += step
        yield done, counts.copy()
