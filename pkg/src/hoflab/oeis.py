"""Parse, emit and cross-check OEIS-style b-files.

A b-file is the plain-text term listing used by the OEIS: one
``index value`` pair per line, indices consecutive, with ``#`` comment
lines and blank lines allowed.  Published sequences follow one of two
conventions relative to the nested recurrence ``F_k`` computed here:

* direct:  ``a(i) = F_k(i + s)`` for a small fixed shift ``s``;
* shifted: ``a(i) = F_k(i + s + 1) - 1`` (the variant whose recurrence
  subtracts before iterating instead of after).

Nothing assumes which convention or shift a file uses; the diff tries
every candidate and reports what actually matched.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .recurrences import build_f_table

__all__ = [
    "BFile",
    "parse_bfile",
    "emit_bfile",
    "load_bfile",
    "diff_bfile",
]

# Shifts tried when detecting how a published sequence indexes F_k.
SHIFT_RANGE = range(-3, 4)

_LINE_RE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")
_SEQ_FROM_NAME = re.compile(r"b(\d{6})(?:\.txt)?$")


@dataclass(frozen=True)
class BFile:
    """A parsed b-file: values at consecutive indices ``start..start+len-1``."""

    seq_id: str
    start: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.int64)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.start + len(self), dtype=np.int64)


def parse_bfile(text: str, seq_id: str = "") -> BFile:
    """Parse b-file text; raises ValueError on malformed or gapped input."""
    indices: list[int] = []
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE_RE.match(line)
        if m is None:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        idx, val = int(m.group(1)), int(m.group(2))
        if indices and idx != indices[-1] + 1:
            raise ValueError(
                f"line {lineno}: index {idx} does not follow {indices[-1]}"
            )
        indices.append(idx)
        values.append(val)
    if not indices:
        raise ValueError("no data lines found")
    return BFile(seq_id=seq_id, start=indices[0],
                 values=np.array(values, dtype=np.int64))


def emit_bfile(bfile: BFile) -> str:
    """Render a BFile back to text (data lines only, trailing newline)."""
    lines = [f"{i} {v}" for i, v in zip(bfile.indices, bfile.values)]
    return "\n".join(lines) + "\n"


def load_bfile(path: str, seq_id: str = "") -> BFile:
    """Read a b-file from disk, inferring the A-number from bNNNNNN names."""
    if not seq_id:
        m = _SEQ_FROM_NAME.search(path)
        if m:
            seq_id = "A" + m.group(1)
    with open(path, encoding="utf-8") as fh:
        return parse_bfile(fh.read(), seq_id=seq_id)


def _candidate(kind: str, shift: int, bfile: BFile, fvals: np.ndarray) -> dict:
    """Compare bfile against one (convention, shift) candidate."""
    idx = bfile.indices
    if kind == "direct":
        n = idx + shift
    else:  # shifted: a(i) = F_k(i + s + 1) - 1
        n = idx + shift + 1
    ok = (n >= 0) & (n <= len(fvals) - 1)
    expected = np.zeros_like(idx)
    expected[ok] = fvals[n[ok]]
    if kind == "shifted":
        expected[ok] -= 1
    agree = ok & (expected == bfile.values)
    checked = int(np.count_nonzero(ok))
    mismatches = checked - int(np.count_nonzero(agree))
    first_mismatch = None
    bad = ok & ~agree
    if mismatches:
        pos = int(np.argmax(bad))
        first_mismatch = {
            "index": int(idx[pos]),
            "file_value": int(bfile.values[pos]),
            "computed": int(expected[pos]),
        }
    return {
        "kind": kind,
        "shift": shift,
        "checked": checked,
        "mismatches": mismatches,
        "first_mismatch": first_mismatch,
    }


def diff_bfile(bfile: BFile, k: int, min_checked: int = 5) -> dict:
    """Cross-check a b-file against F_k under every candidate convention.

    Returns a dict with ``match`` set to the candidate that agreed on
    every comparable term (None when no candidate does), plus the full
    ranked candidate table so a near-miss is visible rather than silent.
    A candidate needs at least ``min_checked`` comparable terms to count
    as a match; tiny overlaps match too easily to mean anything.
    """
    if len(bfile) == 0:
        raise ValueError("empty b-file")
    max_n = int(bfile.indices[-1]) + max(SHIFT_RANGE) + 1
    fvals = build_f_table(k, max(max_n, 1)).values
    candidates = [
        _candidate(kind, s, bfile, fvals)
        for kind in ("direct", "shifted")
        for s in SHIFT_RANGE
    ]
    candidates.sort(key=lambda c: (c["mismatches"], -c["checked"],
                                   c["kind"] != "direct", abs(c["shift"])))
    match = next(
        (c for c in candidates
         if c["mismatches"] == 0 and c["checked"] >= min(min_checked, len(bfile))),
        None,
    )
    return {
        "seq_id": bfile.seq_id,
        "k": k,
        "terms": len(bfile),
        "match": match,
        "candidates": candidates,
    }
