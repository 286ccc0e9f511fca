"""Nested recurrences F_k, their fixed-point words x_k, and a verifier.

The package computes the family of recurrences F_k(n) = n - F_k^k(n-1)
and everything that hangs off them: iterates, the morphic words x_k
fixed by the substitutions tau_k, substituted-prefix lengths L_k^j,
letter counts, the algebraic constants alpha_k / beta_k with certified
enclosures, and a sweep engine that machine-checks the identities and
conjectured comparisons relating all of the above.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .algebraic import (
    RootResult,
    find_alpha,
    find_beta,
    freq_exact,
    freq_interval,
    slope,
    slope_interval,
)
from .counts import (
    CountTable,
    build_count_table,
    count_eq,
    count_gt,
    freq_estimate,
    iter_letter_counts,
    unique_antecedents,
    unique_antecedents_by_scan,
)
from .oeis import BFile, diff_bfile, emit_bfile, load_bfile, parse_bfile
from .recurrences import FTable, build_f_table, delta_f, f_closed_form, f_iter
from .verifier import (
    CHECKS,
    CheckReport,
    SweepConfig,
    reverify_counterexample,
    run_checks,
)
from .words import (
    BlockLengthTable,
    MemoryCapError,
    WordStream,
    build_block_lengths,
    l_iter,
    letter_at_via_delta,
    stream_next,
    substitute,
    substitute_pow_k,
    word_prefix,
    word_text,
)

__all__ = [
    "__version__",
    # recurrences
    "FTable", "build_f_table", "f_iter", "delta_f", "f_closed_form",
    # words
    "BlockLengthTable", "MemoryCapError", "WordStream",
    "build_block_lengths", "l_iter", "letter_at_via_delta", "stream_next",
    "substitute", "substitute_pow_k", "word_prefix", "word_text",
    # counts
    "CountTable", "build_count_table", "count_eq", "count_gt",
    "freq_estimate", "iter_letter_counts", "unique_antecedents",
    "unique_antecedents_by_scan",
    # algebraic
    "RootResult", "find_alpha", "find_beta", "freq_exact", "freq_interval",
    "slope", "slope_interval",
    # verifier
    "CHECKS", "CheckReport", "SweepConfig", "reverify_counterexample",
    "run_checks",
    # oeis
    "BFile", "parse_bfile", "emit_bfile", "load_bfile", "diff_bfile",
]
