"""Nested recurrences F_k(n) = n - F_k^k(n-1) and their iterates.

For each k >= 1 the sequence is pinned by F_k(0) = 0 and the nested rule
above, where F_k^k means k-fold self-composition.  k = 1 gives ceil(n/2)
and k = 2 gives the classic floor((n+1)/phi) sequence; larger k have no
elementary closed form, so everything here works from a memoized table
filled bottom-up.
"""
from __future__ import annotations

import math
from array import array
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FTable",
    "build_f_table",
    "f_iter",
    "delta_f",
    "f_closed_form",
]


@dataclass(frozen=True)
class FTable:
    """Values F_k(0..n_max) for one recursion depth k.

    Immutable after construction; safe to share across threads.  The
    underlying array is int64, which is ample since F_k(n) <= n.
    """

    k: int
    values: np.ndarray

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range 0..{self.n_max}")
        return int(self.values[n])

    def __len__(self) -> int:
        return len(self.values)


def build_f_table(k: int, n_max: int) -> FTable:
    """Fill F_k(0..n_max) bottom-up.

    Each step chases the k-fold composition through already-computed
    entries, so the whole table costs O(k * n_max) int operations and
    never recurses.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    # array('q') keeps the fill loop near list speed at 8 bytes per entry,
    # which matters for the multi-million-entry tables the sweeps need
    vals = array("q", bytes(8 * (n_max + 1)))
    for n in range(1, n_max + 1):
        m = n - 1
        for _ in range(k):
            m = vals[m]
        vals[n] = n - m
    arr = np.frombuffer(vals, dtype=np.int64)
    arr.setflags(write=False)
    return FTable(k=k, values=arr)


def f_iter(table: FTable, j: int, n: int) -> int:
    """j-fold composition F_k^j(n); j = 0 is the identity.

    Iterates never leave [0, n], so only n itself must be in range.
    """
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if not 0 <= n <= table.n_max:
        raise IndexError(f"n={n} outside table range 0..{table.n_max}")
    vals = table.values
    m = n
    for _ in range(j):
        m = int(vals[m])
        if m == 0:
            break
    return m


def delta_f(table: FTable, j: int, n: int) -> int:
    """Forward difference F_k^j(n+1) - F_k^j(n); always 0 or 1."""
    return f_iter(table, j, n + 1) - f_iter(table, j, n)


def f_closed_form(k: int, n: int) -> int:
    """Exact closed form, available for k = 1 and k = 2 only.

    k = 1: ceil(n/2).  k = 2: floor((n+1)/phi), evaluated in integer
    arithmetic as (isqrt(5 m^2) - m) // 2 with m = n + 1, so there is
    no float rounding at any n.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k == 1:
        return (n + 1) // 2
    if k == 2:
        m = n + 1
        return (math.isqrt(5 * m * m) - m) // 2
    raise ValueError(f"no closed form for k={k}; build a table instead")
