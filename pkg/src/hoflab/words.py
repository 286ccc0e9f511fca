"""Substitutions tau_k, their fixed-point words x_k, and prefix lengths.

tau_k maps letter i to i+1 for i < k, and letter k to the pair (k, 1).
Its unique fixed point starting with k is the infinite word x_k over the
alphabet {1, .., k}; x_1 degenerates to the constant word 1 1 1 ...

Positions in x_k are 1-based throughout: x_k(1) = k is the first letter.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .recurrences import FTable, delta_f

__all__ = [
    "MemoryCapError",
    "DEFAULT_LETTER_CAP",
    "LETTER_CAP_ENV",
    "substitute",
    "substitute_pow_k",
    "BlockLengthTable",
    "build_block_lengths",
    "WordStream",
    "stream_next",
    "word_prefix",
    "letter_at_via_delta",
    "l_iter",
    "word_text",
]

# Hard ceiling on letters materialized per call, overridable via env var
# or per-call argument.  2^30 letters is ~1 GiB of uint8 buffer.
DEFAULT_LETTER_CAP = 1 << 30
LETTER_CAP_ENV = "HOFLAB_MEM_CAP"


class MemoryCapError(RuntimeError):
    """A word operation would materialize more letters than allowed."""


def _letter_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return int(explicit)
    return int(os.environ.get(LETTER_CAP_ENV, DEFAULT_LETTER_CAP))


def _check_alphabet(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def substitute(k: int, word: Iterable[int]) -> list[int]:
    """Apply tau_k to a finite word, one pass, left to right."""
    _check_alphabet(k)
    out: list[int] = []
    for a in word:
        if not 1 <= a <= k:
            raise ValueError(f"letter {a} outside alphabet 1..{k}")
        if a == k:
            out.append(k)
            out.append(1)
        else:
            out.append(a + 1)
    return out


@dataclass(frozen=True)
class BlockLengthTable:
    """Lengths S[j] = |tau_k^j(k)|, exact Python ints.

    S[j] = j + 1 for j <= k, then S[j] = S[j-1] + S[j-k].  These are
    also the prefix lengths L_k^j(1).
    """

    k: int
    lengths: tuple[int, ...]

    @property
    def j_max(self) -> int:
        return len(self.lengths) - 1

    def __getitem__(self, j: int) -> int:
        if not 0 <= j <= self.j_max:
            raise IndexError(f"j={j} outside table range 0..{self.j_max}")
        return self.lengths[j]

    def block_weight(self, letter: int, j: int) -> int:
        """|tau_k^j(letter)|: 1 while the letter is still climbing to k."""
        if letter + j < self.k:
            return 1
        return self.lengths[letter + j - self.k]


def build_block_lengths(k: int, j_max: int) -> BlockLengthTable:
    _check_alphabet(k)
    if j_max < 0:
        raise ValueError(f"j_max must be >= 0, got {j_max}")
    s = [j + 1 for j in range(min(k, j_max) + 1)]
    for j in range(len(s), j_max + 1):
        s.append(s[j - 1] + s[j - k])
    return BlockLengthTable(k=k, lengths=tuple(s))


def substitute_pow_k(k: int, j: int, mem_cap: int | None = None) -> list[int]:
    """The word tau_k^j(k), built from the concatenation recurrence.

    tau_k^j(k) = k 1 2 .. j for j <= k, and for j >= k it is
    tau_k^{j-1}(k) followed by tau_k^{j-k}(k).
    """
    _check_alphabet(k)
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    cap = _letter_cap(mem_cap)
    table = build_block_lengths(k, j)
    if table[j] > cap:
        raise MemoryCapError(
            f"tau_{k}^{j}(k) has {table[j]} letters, over the cap of {cap}"
        )
    words = [[k] + list(range(1, jj + 1)) for jj in range(min(j, k) + 1)]
    for jj in range(len(words), j + 1):
        words.append(words[jj - 1] + words[jj - k])
    return words[j]


class WordStream:
    """Lazy left-to-right generator of x_k with a position cursor.

    Works by self-reading: x_k is its own image under tau_k^{k-1}, whose
    blocks are tau_k^{k-1}(i) = k 1 2 .. i-1 of length i, so each consumed
    letter schedules one future block.  Single-owner; give each thread
    its own stream.
    """

    def __init__(self, k: int, mem_cap: int | None = None):
        _check_alphabet(k)
        self.k = k
        self.cursor = 0  # letters emitted so far
        self._cap = _letter_cap(mem_cap)
        self._pending: deque[int] = deque()
        if k > 1:
            first = [k] + list(range(1, k))
            self._pending.extend(first)
            self._out: deque[int] = deque(first)
            # position 1 (the seed letter k) is already expanded
            self._pending.popleft()
        else:
            self._out = deque()

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        if self.cursor >= self._cap:
            raise MemoryCapError(
                f"stream for k={self.k} passed the cap of {self._cap} letters"
            )
        if self.k == 1:
            self.cursor += 1
            return 1
        if not self._out:
            i = self._pending.popleft()
            block = [self.k] + list(range(1, i))
            self._pending.extend(block)
            self._out.extend(block)
        self.cursor += 1
        return self._out.popleft()

    def take(self, n: int) -> list[int]:
        """Next n letters as a list."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return [next(self) for _ in range(n)]


def stream_next(stream: WordStream) -> int:
    """Advance the stream one letter and return it."""
    return next(stream)


def word_prefix(k: int, n: int, mem_cap: int | None = None) -> np.ndarray:
    """First n letters of x_k as a numpy array (uint8 for k < 256).

    Built from the block concatenation recurrence rather than the
    stream, so bulk prefixes cost a handful of array copies.
    """
    _check_alphabet(k)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    cap = _letter_cap(mem_cap)
    if n > cap:
        raise MemoryCapError(f"prefix of {n} letters is over the cap of {cap}")
    dtype = np.uint8 if k < 256 else np.int64
    if k == 1:
        return np.ones(n, dtype=dtype)
    if n == 0:
        return np.zeros(0, dtype=dtype)
    # grow tau^j(k) until it covers n, keeping only the last k words
    j = 0
    while True:
        table = build_block_lengths(k, j)
        if table[j] >= n:
            break
        j += 1
    words: list[np.ndarray] = []
    for jj in range(j + 1):
        if jj <= k:
            w = np.concatenate(
                [np.array([k], dtype=dtype), np.arange(1, jj + 1, dtype=dtype)]
            )
        else:
            w = np.concatenate([words[jj - 1], words[jj - k]])
        words.append(w)
        if jj >= k:
            words[jj - k] = words[jj - k][:0]  # drop payload, keep slot
    return words[j][:n].copy()


def letter_at_via_delta(table: FTable, n: int) -> int:
    """Letter x_k(n) recovered from forward differences of the iterates.

    The sequence (F_k^j(n) - F_k^j(n-1))_j starts at 1 and once it drops
    to 0 it stays there; the letter is the first j where it is 0, and k
    when no j < k qualifies.  Needs table entries up to n.
    """
    if n < 1:
        raise ValueError(f"positions are 1-based, got n={n}")
    if n > table.n_max:
        raise IndexError(f"n={n} outside table range 0..{table.n_max}")
    k = table.k
    vals = table.values
    hi, lo = n, n - 1
    for j in range(1, k):
        hi, lo = int(vals[hi]), int(vals[lo])
        if hi == lo:
            return j
    return k


def l_iter(k: int, j: int, n: int, mem_cap: int | None = None) -> int:
    """Length L_k^j(n) = |tau_k^j(x_k(1) .. x_k(n))|, an exact int.

    Summed letter by letter with block weights, so it is the scalar
    counterpart of the array pipeline the sweep checks use.
    """
    _check_alphabet(k)
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 0
    if j == 0:
        return n
    table = build_block_lengths(k, j)
    if k == 1:
        return table[j] * n  # every letter expands to tau^j(1), length 2^j
    if n == 1:
        return table[j]
    stream = WordStream(k, mem_cap=mem_cap)
    return sum(table.block_weight(a, j) for a in stream.take(n))


def word_text(letters: Iterable[int]) -> str:
    """Render letters as a compact string; multi-digit letters bracketed.

    word_text([3, 1, 2]) == "312" and word_text([12, 1]) == "[12]1".
    """
    parts = []
    for a in letters:
        a = int(a)
        parts.append(str(a) if 0 <= a <= 9 else f"[{a}]")
    return "".join(parts)
