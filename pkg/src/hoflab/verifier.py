"""Sweep checks tying the recurrences, words, counts, and roots together.

Every check sweeps a configurable (k, j, n) box, compares quantities
computed along two independent routes (recurrence tables vs word prefix
lengths vs letter counts vs algebraic roots), and returns a CheckReport.
Statuses: "pass" for identities verified exhaustively on the box,
"exhausted" for open-ended scans that found nothing, "fail" with a
re-verifiable first counterexample otherwise.

Counterexamples are recorded as little expression trees over named
scalar atoms ("f", "l", "ceq", ...) so reverify_counterexample can
recompute both sides from scratch through the plain scalar API, far
from the vectorized sweep code that produced them.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from .algebraic import MIN_TOL, find_alpha, find_beta, freq_exact, slope
from .counts import (
    build_count_table,
    count_eq,
    count_gt,
    unique_antecedents,
    unique_antecedents_by_scan,
)
from .recurrences import build_f_table, f_iter
from .words import (
    WordStream,
    build_block_lengths,
    l_iter,
    letter_at_via_delta,
    word_prefix,
)

__all__ = [
    "SweepConfig",
    "CheckReport",
    "CHECKS",
    "run_checks",
    "reverify_counterexample",
    "check_bracketing",
    "check_galois",
    "check_count_identities",
    "check_monotone_f",
    "check_monotone_l",
    "check_prefix_gaps",
    "find_incomparability_witnesses",
    "scan_last_equality",
    "scan_iterate_crossover",
    "check_counts_and_letters",
    "check_eventual_comparisons",
    "check_limits",
    "check_stream_delta",
]


@dataclass(frozen=True)
class SweepConfig:
    """Ranges for one verification run.

    The iterate depth swept for each k is j_coeff * k + j_const, so the
    default covers j up to 3k+2.  threads > 1 runs the per-k workers in
    a thread pool; table building holds the GIL, so the win is modest
    and the merge order stays deterministic either way.
    """

    k_min: int = 1
    k_max: int = 8
    n_max: int = 100_000
    j_coeff: int = 3
    j_const: int = 2
    threads: int = 1
    tol: float = 1e-14
    n_small: int = 1000
    limit_tol: float = 1e-3
    freq_tol: float = 1e-3
    u_tol: float = 1e-2

    def __post_init__(self):
        if self.k_min < 1:
            raise ValueError(f"k_min must be >= 1, got {self.k_min}")
        if self.k_max < self.k_min:
            raise ValueError(f"k_max must be >= k_min, got {self.k_max}")
        if self.n_max < 2:
            raise ValueError(f"n_max must be >= 2, got {self.n_max}")
        if self.j_coeff < 0 or self.j_const < 0:
            raise ValueError("j_coeff and j_const must be >= 0")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if not 1 <= self.n_small <= self.n_max:
            raise ValueError(
                f"n_small must be in 1..n_max, got {self.n_small}"
            )
        if self.tol < MIN_TOL:
            raise ValueError(
                f"tol={self.tol} below achievable precision {MIN_TOL}"
            )
        for name in ("limit_tol", "freq_tol", "u_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")

    def j_max(self, k: int) -> int:
        return self.j_coeff * k + self.j_const

    def ks(self) -> list[int]:
        return list(range(self.k_min, self.k_max + 1))


@dataclass
class CheckReport:
    name: str
    status: str  # "pass" | "fail" | "exhausted"
    ranges: dict[str, Any]
    first_counterexample: dict | None = None
    elapsed: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return _jsonsafe(
            {
                "name": self.name,
                "status": self.status,
                "ranges": self.ranges,
                "first_counterexample": self.first_counterexample,
                "elapsed": self.elapsed,
                "details": self.details,
            }
        )

    def render_text(self) -> str:
        tag = "FAIL" if self.status == "fail" else "PASS"
        rng = " ".join(f"{key}={val}" for key, val in self.ranges.items())
        line = f"[{tag}] {self.name}: {self.status} ({rng}) [{self.elapsed:.2f}s]"
        if self.first_counterexample is not None:
            line += f"\n       first counterexample: {self.first_counterexample}"
        return line


def _jsonsafe(obj):
    if isinstance(obj, dict):
        return {str(key): _jsonsafe(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonsafe(val) for val in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonsafe(val) for val in obj.tolist()]
    return obj


# ---------------------------------------------------------------------------
# counterexample expressions


def _eval_expr(expr):
    op = expr[0]
    if op == "const":
        return int(expr[1])
    if op == "const_f":
        return float(expr[1])
    if op == "slope":
        _, k, j = expr
        return slope(int(k), int(j))
    if op == "f":
        _, k, j, n = expr
        return f_iter(build_f_table(int(k), int(n)), int(j), int(n))
    if op == "l":
        _, k, j, n = expr
        return l_iter(int(k), int(j), int(n))
    if op == "ceq":
        _, k, i, n = expr
        return count_eq(build_count_table(int(k), int(n)), int(i), int(n))
    if op == "cgt":
        _, k, j, n = expr
        return count_gt(build_count_table(int(k), int(n)), int(j), int(n))
    if op == "s":
        _, k, j = expr
        return build_block_lengths(int(k), int(j))[int(j)]
    if op == "u":
        _, k, n = expr
        return unique_antecedents(build_f_table(int(k), int(n)), int(n))
    if op == "uscan":
        _, k, n = expr
        return unique_antecedents_by_scan(
            build_f_table(int(k), max(0, 2 * int(n) - 2)), int(n)
        )
    if op == "letter":
        _, k, n = expr
        return WordStream(int(k)).take(int(n))[-1]
    if op == "letter_delta":
        _, k, n = expr
        return letter_at_via_delta(build_f_table(int(k), int(n)), int(n))
    if op == "add":
        return _eval_expr(expr[1]) + _eval_expr(expr[2])
    if op == "sub":
        return _eval_expr(expr[1]) - _eval_expr(expr[2])
    raise ValueError(f"unknown expression head {op!r}")


_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}


def _num(value):
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(value)


def _cx(op: str, lhs, lhs_value, rhs, rhs_value, **context) -> dict:
    cx = {
        "op": op,
        "lhs": _jsonsafe(list(lhs)),
        "lhs_value": _num(lhs_value),
        "rhs": _jsonsafe(list(rhs)),
        "rhs_value": _num(rhs_value),
    }
    cx.update(_jsonsafe(context))
    return cx


def reverify_counterexample(cx: dict) -> dict:
    """Recompute both sides of a recorded counterexample via scalar code.

    Returns the recomputed values, whether they match what the sweep
    recorded, and whether the claimed violation really holds.  The ops
    "within" / "within_strict" compare |lhs - rhs| against the recorded
    absolute tolerance instead of the two sides directly.
    """
    lhs = _eval_expr(cx["lhs"])
    rhs = _eval_expr(cx["rhs"])
    if cx["op"] in ("within", "within_strict"):
        gap = abs(lhs - rhs)
        tol = cx["tol_abs"]
        holds = gap < tol if cx["op"] == "within_strict" else gap <= tol
    else:
        holds = _RELATIONS[cx["op"]](lhs, rhs)
    return {
        "lhs_recomputed": lhs,
        "rhs_recomputed": rhs,
        "matches_recorded": lhs == cx["lhs_value"] and rhs == cx["rhs_value"],
        "violation_confirmed": not holds,
    }


# ---------------------------------------------------------------------------
# shared array plumbing


def _l_array(k: int, j: int, letters: np.ndarray, table) -> np.ndarray:
    """L_k^j over n = 0..len(letters), via block weights and a cumsum."""
    n = len(letters)
    wt = np.ones(k + 1, dtype=np.int64)
    for i in range(1, k + 1):
        if i + j >= k:
            w = table[i + j - k]
            if w * (n + 1) >= 2**62:
                raise OverflowError(
                    f"L_{k}^{j} values would not fit in int64 at n={n}"
                )
            wt[i] = w
    out = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(wt[letters], out=out[1:])
    return out


def _compose_step(fvals: np.ndarray, cur: np.ndarray, buf: np.ndarray) -> tuple:
    """One composition step cur -> F[cur] using a swap buffer."""
    np.take(fvals, cur, out=buf)
    return buf, cur


def _first_bad(mask: np.ndarray) -> int | None:
    bad = np.flatnonzero(~mask)
    return int(bad[0]) if bad.size else None


def _run_over_k(worker, ks: list[int], threads: int) -> list[dict]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(worker, ks))
    return [worker(k) for k in ks]


def _sweep(
    name: str,
    cfg: SweepConfig,
    worker,
    ranges: dict,
    clean_status: str = "pass",
    ks: list[int] | None = None,
) -> CheckReport:
    t0 = time.perf_counter()
    ks = cfg.ks() if ks is None else ks
    rows = _run_over_k(worker, ks, cfg.threads)
    cx = None
    details: dict[str, Any] = {}
    for k, row in zip(ks, rows):
        if row.get("details"):
            details[f"k={k}"] = row["details"]
        if cx is None and row.get("cx") is not None:
            cx = row["cx"]
    return CheckReport(
        name=name,
        status="fail" if cx is not None else clean_status,
        ranges=ranges,
        first_counterexample=cx,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def _ranges(cfg: SweepConfig, **extra) -> dict:
    base = {"k": f"{cfg.k_min}..{cfg.k_max}", "n": f"0..{cfg.n_max}"}
    base.update(extra)
    return base


# ---------------------------------------------------------------------------
# checks


def check_bracketing(cfg: SweepConfig) -> CheckReport:
    """L^j(F^j(m) - 1) < m <= L^j(F^j(m)), and F^j(L^j(n)) = n.

    Exhaustive over 1 <= m <= n_max, 0 <= n <= n_max, 0 <= j <= j_max(k).
    The F table extends to L^{j_max}(n_max) so the insertion identity is
    evaluated directly, not assumed.
    """

    def worker(k: int) -> dict:
        jmax = cfg.j_max(k)
        stable = build_block_lengths(k, jmax)
        letters = word_prefix(k, cfg.n_max)
        top = _l_array(k, jmax, letters, stable)
        m_top = int(top[cfg.n_max]) + 1
        fvals = build_f_table(k, m_top).values
        cur = np.arange(m_top + 1, dtype=np.int64)
        buf = np.empty_like(cur)
        marr = np.arange(1, cfg.n_max + 1, dtype=np.int64)
        narr = np.arange(cfg.n_max + 1, dtype=np.int64)
        for j in range(jmax + 1):
            larr = _l_array(k, j, letters, stable)
            fm = cur[1 : cfg.n_max + 1]
            bad = _first_bad(larr[fm - 1] < marr)
            if bad is not None:
                m = bad + 1
                return {
                    "cx": _cx(
                        "<",
                        ("l", k, j, int(fm[bad]) - 1),
                        larr[fm[bad] - 1],
                        ("const", m),
                        m,
                        k=k,
                        j=j,
                        m=m,
                        relation="prefix bracketing, lower",
                    )
                }
            bad = _first_bad(marr <= larr[fm])
            if bad is not None:
                m = bad + 1
                return {
                    "cx": _cx(
                        "<=",
                        ("const", m),
                        m,
                        ("l", k, j, int(fm[bad])),
                        larr[fm[bad]],
                        k=k,
                        j=j,
                        m=m,
                        relation="prefix bracketing, upper",
                    )
                }
            bad = _first_bad(cur[larr] == narr)
            if bad is not None:
                return {
                    "cx": _cx(
                        "==",
                        ("f", k, j, int(larr[bad])),
                        cur[larr[bad]],
                        ("const", bad),
                        bad,
                        k=k,
                        j=j,
                        n=bad,
                        relation="insertion F^j(L^j(n)) = n",
                    )
                }
            cur, buf = _compose_step(fvals, cur, buf)
        return {"details": {"f_table_top": m_top}}

    return _sweep(
        "bracketing",
        cfg,
        worker,
        _ranges(cfg, j=f"0..{cfg.j_coeff}k+{cfg.j_const}", m=f"1..{cfg.n_max}"),
    )


def check_galois(cfg: SweepConfig) -> CheckReport:
    """Adjunction facts for the pair (F^j, L^j).

    Verified per j: F^j is monotone with steps in {0, 1}; the boundary
    F^j(L^j(n)) <= n < F^j(L^j(n) + 1) (with monotonicity this is
    equivalent to the full pairwise adjunction F^j(m) <= n iff
    m <= L^j(n)); the characterizations F^j(m) = min{n : L^j(n) >= m}
    and L^j(n) = max{m : F^j(m) <= n}; L^j(F^j(m)) = m exactly when
    m is a value of L^j; and the depth-1 round trip L(F(m)) - m always
    lands in {0, 1}.
    """

    def worker(k: int) -> dict:
        jmax = cfg.j_max(k)
        stable = build_block_lengths(k, jmax)
        letters = word_prefix(k, cfg.n_max)
        top = _l_array(k, jmax, letters, stable)
        m_top = int(top[cfg.n_max]) + 1
        fvals = build_f_table(k, m_top).values
        cur = np.arange(m_top + 1, dtype=np.int64)
        buf = np.empty_like(cur)
        marr = np.arange(1, cfg.n_max + 1, dtype=np.int64)
        narr = np.arange(cfg.n_max + 1, dtype=np.int64)
        for j in range(jmax + 1):
            larr = _l_array(k, j, letters, stable)
            steps = np.diff(cur)
            bad = _first_bad((steps >= 0) & (steps <= 1))
            if bad is not None:
                return {
                    "cx": _cx(
                        "==",
                        ("sub", ("f", k, j, bad + 1), ("f", k, j, bad)),
                        int(steps[bad]),
                        ("const", 0 if steps[bad] < 0 else 1),
                        0 if steps[bad] < 0 else 1,
                        k=k,
                        j=j,
                        n=bad,
                        relation="F^j steps must be 0 or 1",
                    )
                }
            low = cur[larr] <= narr
            high = narr < cur[larr + 1]
            for mask, rel, op in ((low, "adjunction lower", "<="),
                                  (high, "adjunction upper", ">")):
                bad = _first_bad(mask)
                if bad is not None:
                    arg = int(larr[bad]) + (0 if op == "<=" else 1)
                    return {
                        "cx": _cx(
                            op if op == "<=" else ">",
                            ("f", k, j, arg),
                            cur[arg],
                            ("const", bad),
                            bad,
                            k=k,
                            j=j,
                            n=bad,
                            relation=rel,
                        )
                    }
            mins = np.searchsorted(larr, marr, side="left")
            bad = _first_bad(cur[1 : cfg.n_max + 1] == mins)
            if bad is not None:
                m = bad + 1
                return {
                    "cx": _cx(
                        "==",
                        ("f", k, j, m),
                        cur[m],
                        ("const", int(mins[bad])),
                        mins[bad],
                        k=k,
                        j=j,
                        m=m,
                        relation="F^j(m) = min{n : L^j(n) >= m}",
                    )
                }
            maxs = np.searchsorted(cur, narr, side="right") - 1
            bad = _first_bad(larr == maxs)
            if bad is not None:
                return {
                    "cx": _cx(
                        "==",
                        ("l", k, j, bad),
                        larr[bad],
                        ("const", int(maxs[bad])),
                        maxs[bad],
                        k=k,
                        j=j,
                        n=bad,
                        relation="L^j(n) = max{m : F^j(m) <= n}",
                    )
                }
            fm = cur[1 : cfg.n_max + 1]
            if j == 1:
                drift = larr[fm] - marr
                bad = _first_bad((drift >= 0) & (drift <= 1))
                if bad is not None:
                    m = bad + 1
                    low_side = bool(drift[bad] < 0)
                    return {
                        "cx": _cx(
                            ">=" if low_side else "<=",
                            ("sub", ("l", k, j, int(fm[bad])), ("const", m)),
                            int(drift[bad]),
                            ("const", 0 if low_side else 1),
                            0 if low_side else 1,
                            k=k,
                            j=j,
                            m=m,
                            relation="L(F(m)) - m must lie in {0, 1}",
                        )
                    }
            eq = larr[fm] == marr
            img = np.zeros(cfg.n_max + 1, dtype=bool)
            within = larr[larr <= cfg.n_max]
            img[within] = True
            bad = _first_bad(eq == img[1 : cfg.n_max + 1])
            if bad is not None:
                m = bad + 1
                return {
                    "cx": _cx(
                        "==" if img[m] else "!=",
                        ("l", k, j, int(fm[bad])),
                        larr[fm[bad]],
                        ("const", m),
                        m,
                        k=k,
                        j=j,
                        m=m,
                        relation="L^j(F^j(m)) = m exactly on the image of L^j",
                    )
                }
            cur, buf = _compose_step(fvals, cur, buf)
        return {}

    return _sweep(
        "galois",
        cfg,
        worker,
        _ranges(cfg, j=f"0..{cfg.j_coeff}k+{cfg.j_const}"),
    )


def check_count_identities(cfg: SweepConfig) -> CheckReport:
    """Count/recurrence identities on prefixes of x_k.

    Per k, exhaustive to n_max: C^{(>j)}(n) = F^j(n) for j < k;
    C^{(=k)}(n) = F^{k-1}(n); C^{(=j)} = F^{j-1} - F^j for j < k;
    C^{(=i)}(n+i) = F^{k+i-1}(n) for i < k; F(n) = n - C^{(=1)}(n) for
    k >= 2; L(n) = n + C^{(=k)}(n) computed three ways; the antecedent
    count n - F^{k-1}(n-1) against a brute-force scan; and the shape of
    the difference sequences (steps in {0,1}, no adjacent zero steps,
    at most k consecutive ones, nested steps nonincreasing in j, and
    the j-fold difference at n vanishing once j reaches n).
    """

    def worker(k: int) -> dict:
        n_max = cfg.n_max
        m2 = n_max + k
        letters = word_prefix(k, m2)
        cum = np.zeros((k + 1, m2 + 1), dtype=np.int64)
        for i in range(1, k + 1):
            np.cumsum(letters == i, out=cum[i, 1:])
        fvals = build_f_table(k, m2).values
        narr = np.arange(n_max + 1, dtype=np.int64)
        stable = build_block_lengths(k, 1)

        if k >= 2:
            bad = _first_bad(fvals[: n_max + 1] == narr - cum[1, : n_max + 1])
            if bad is not None:
                return {
                    "cx": _cx(
                        "==",
                        ("f", k, 1, bad),
                        fvals[bad],
                        ("sub", ("const", bad), ("ceq", k, 1, bad)),
                        bad - cum[1, bad],
                        k=k,
                        n=bad,
                        relation="F(n) = n - (count of letter 1)",
                    )
                }

        # L(n) three ways: word weights, n + count of k, n + F^{k-1}(n)
        larr = _l_array(k, 1, letters[:n_max], stable)
        bad = _first_bad(larr == narr + cum[k, : n_max + 1])
        if bad is not None:
            return {
                "cx": _cx(
                    "==",
                    ("l", k, 1, bad),
                    larr[bad],
                    ("add", ("const", bad), ("ceq", k, k, bad)),
                    bad + cum[k, bad],
                    k=k,
                    n=bad,
                    relation="L(n) = n + (count of letter k)",
                )
            }

        cur = np.arange(m2 + 1, dtype=np.int64)
        buf = np.empty_like(cur)
        prev_steps = None
        fkm1 = None
        for j in range(2 * k - 1):
            if j < k:
                cgt = narr - np.add.reduce(cum[1 : j + 1, : n_max + 1], axis=0) \
                    if j else narr
                bad = _first_bad(cur[: n_max + 1] == cgt)
                if bad is not None:
                    return {
                        "cx": _cx(
                            "==",
                            ("f", k, j, bad),
                            cur[bad],
                            ("cgt", k, j, bad),
                            cgt[bad],
                            k=k,
                            j=j,
                            n=bad,
                            relation="F^j(n) = (count of letters > j)",
                        )
                    }
            if j == k - 1:
                fkm1 = cur.copy()
                bad = _first_bad(cur[: n_max + 1] == cum[k, : n_max + 1])
                if bad is not None:
                    return {
                        "cx": _cx(
                            "==",
                            ("f", k, k - 1, bad),
                            cur[bad],
                            ("ceq", k, k, bad),
                            cum[k, bad],
                            k=k,
                            n=bad,
                            relation="F^{k-1}(n) = (count of letter k)",
                        )
                    }
            if j >= k:
                i = j - k + 1  # letter index for the shifted identity
                shifted = cum[i, i : n_max + i + 1]
                bad = _first_bad(cur[: n_max + 1] == shifted)
                if bad is not None:
                    return {
                        "cx": _cx(
                            "==",
                            ("f", k, j, bad),
                            cur[bad],
                            ("ceq", k, i, bad + i),
                            shifted[bad],
                            k=k,
                            j=j,
                            n=bad,
                            relation="F^{k+i-1}(n) = (count of letter i up to n+i)",
                        )
                    }
            steps = np.diff(cur[: n_max + 2])
            if j >= 1:
                decomp = prev_cur[: n_max + 1] - cur[: n_max + 1] if j <= k - 1 else None
                if decomp is not None:
                    bad = _first_bad(decomp == cum[j, : n_max + 1])
                    if bad is not None:
                        return {
                            "cx": _cx(
                                "==",
                                ("sub", ("f", k, j - 1, bad), ("f", k, j, bad)),
                                decomp[bad],
                                ("ceq", k, j, bad),
                                cum[j, bad],
                                k=k,
                                j=j,
                                n=bad,
                                relation="F^{j-1} - F^j = (count of letter j)",
                            )
                        }
                bad = _first_bad(steps <= prev_steps)
                if bad is not None:
                    return {
                        "cx": _cx(
                            "<=",
                            ("sub", ("f", k, j, bad + 1), ("f", k, j, bad)),
                            steps[bad],
                            ("sub", ("f", k, j - 1, bad + 1), ("f", k, j - 1, bad)),
                            prev_steps[bad],
                            k=k,
                            j=j,
                            n=bad,
                            relation="difference sequences nonincreasing in j",
                        )
                    }
            prev_steps = steps
            prev_cur = cur.copy()
            cur, buf = _compose_step(fvals, cur, buf)

        # the loop always reaches j = k-1, so fkm1 is populated here
        assert fkm1 is not None
        bad = _first_bad(larr == narr + fkm1[: n_max + 1])
        if bad is not None:
            return {
                "cx": _cx(
                    "==",
                    ("l", k, 1, bad),
                    larr[bad],
                    ("add", ("const", bad), ("f", k, k - 1, bad)),
                    bad + fkm1[bad],
                    k=k,
                    n=bad,
                    relation="L(n) = n + F^{k-1}(n)",
                )
            }

        # antecedent counts: closed form vs brute-force bucket scan
        hits = np.bincount(fvals, minlength=m2 + 1)
        uscan = np.cumsum(hits == 1)
        n_hi = m2 // 2 + 1
        ncheck = np.arange(1, n_hi + 1, dtype=np.int64)
        uform = ncheck - fkm1[ncheck - 1]
        bad = _first_bad(uscan[ncheck - 1] == uform)
        if bad is not None:
            n = bad + 1
            return {
                "cx": _cx(
                    "==",
                    ("uscan", k, n),
                    uscan[n - 1],
                    ("u", k, n),
                    uform[bad],
                    k=k,
                    n=n,
                    relation="antecedent count: scan vs closed form",
                )
            }

        # shape of the first difference sequence
        d = np.diff(fvals[: n_max + 1])
        if d.size:
            if d[0] != 1:
                return {
                    "cx": _cx(
                        "==",
                        ("sub", ("f", k, 1, 1), ("f", k, 1, 0)),
                        int(d[0]),
                        ("const", 1),
                        1,
                        k=k,
                        n=0,
                        relation="first step is 1",
                    )
                }
            double_zero = np.flatnonzero((d[:-1] == 0) & (d[1:] == 0))
            if double_zero.size:
                n = int(double_zero[0])
                return {
                    "cx": _cx(
                        "!=",
                        ("sub", ("f", k, 1, n + 2), ("f", k, 1, n)),
                        int(fvals[n + 2] - fvals[n]),
                        ("const", 0),
                        0,
                        k=k,
                        n=n,
                        relation="no two consecutive zero steps",
                    )
                }
            zpos = np.flatnonzero(d == 0)
            runs = np.diff(np.concatenate(([-1], zpos, [d.size]))) - 1
            if runs.size and int(runs.max()) > k:
                where = int(np.argmax(runs))
                start = int(zpos[where - 1]) + 1 if where else 0
                return {
                    "cx": _cx(
                        "<=",
                        ("sub", ("f", k, 1, start + k + 1), ("f", k, 1, start)),
                        int(fvals[start + k + 1] - fvals[start]),
                        ("const", k),
                        k,
                        k=k,
                        n=start,
                        relation="at most k consecutive unit steps",
                    )
                }

        # the j-fold difference at n is 0 once j reaches n
        table = build_f_table(k, 80)
        for n in range(1, 64):
            if f_iter(table, n, n + 1) != f_iter(table, n, n):
                return {
                    "cx": _cx(
                        "==",
                        ("f", k, n, n + 1),
                        f_iter(table, n, n + 1),
                        ("f", k, n, n),
                        f_iter(table, n, n),
                        k=k,
                        n=n,
                        relation="j-fold difference vanishes at j = n",
                    )
                }
        return {"details": {"antecedent_scan_to": n_hi}}

    return _sweep("count-identities", cfg, worker, _ranges(cfg))


def check_monotone_f(cfg: SweepConfig) -> CheckReport:
    """F_k^j(n) <= F_{k+1}^j(n) for all j, and >= F_{k+1}^{j+1}(n) for j <= k."""

    def worker(k: int) -> dict:
        jmax = cfg.j_max(k)
        fk = build_f_table(k, cfg.n_max).values
        fk1 = build_f_table(k + 1, cfg.n_max).values
        a = np.arange(cfg.n_max + 1, dtype=np.int64)
        b = a.copy()
        abuf, bbuf = np.empty_like(a), np.empty_like(b)
        for j in range(jmax + 1):
            bad = _first_bad(a <= b)
            if bad is not None:
                return {
                    "cx": _cx(
                        "<=",
                        ("f", k, j, bad),
                        a[bad],
                        ("f", k + 1, j, bad),
                        b[bad],
                        k=k,
                        j=j,
                        n=bad,
                        relation="F_k^j <= F_{k+1}^j",
                    )
                }
            if j <= k:
                bnext = fk1[b]
                bad = _first_bad(a >= bnext)
                if bad is not None:
                    return {
                        "cx": _cx(
                            ">=",
                            ("f", k, j, bad),
                            a[bad],
                            ("f", k + 1, j + 1, bad),
                            bnext[bad],
                            k=k,
                            j=j,
                            n=bad,
                            relation="F_k^j >= F_{k+1}^{j+1} for j <= k",
                        )
                    }
            a, abuf = _compose_step(fk, a, abuf)
            b, bbuf = _compose_step(fk1, b, bbuf)
        return {}

    return _sweep(
        "monotone-f",
        cfg,
        worker,
        _ranges(cfg, j=f"0..{cfg.j_coeff}k+{cfg.j_const}", pairs="(k, k+1)"),
    )


def check_monotone_l(cfg: SweepConfig) -> CheckReport:
    """Prefix-length comparisons between consecutive alphabet sizes.

    L_k^j(n) >= L_{k+1}^j(n) for every j (j = 1 is the plain length
    comparison); strictly L_k^j(n) < L_{k+1}^{j+1}(n) for j <= k and
    n >= 1; the cross-difference L_{k+1}^{k+1} - L_k^k = L_{k+1}^k -
    L_k^{k-1}; and L_k^k(n) = L_k^{k-1}(n) + n.
    """

    def worker(k: int) -> dict:
        jmax = cfg.j_max(k)
        lk_letters = word_prefix(k, cfg.n_max)
        lk1_letters = word_prefix(k + 1, cfg.n_max)
        # the cross-difference block needs depth k+1 even if jmax is smaller
        sk = build_block_lengths(k, max(jmax, k) + 1)
        sk1 = build_block_lengths(k + 1, max(jmax, k) + 2)
        narr = np.arange(cfg.n_max + 1, dtype=np.int64)
        lk_cache: dict[int, np.ndarray] = {}
        lk1_cache: dict[int, np.ndarray] = {}

        def lk(j: int) -> np.ndarray:
            if j not in lk_cache:
                lk_cache.clear()
                lk_cache[j] = _l_array(k, j, lk_letters, sk)
            return lk_cache[j]

        def lk1(j: int) -> np.ndarray:
            if j not in lk1_cache:
                if len(lk1_cache) > 1:
                    lk1_cache.pop(min(lk1_cache))
                lk1_cache[j] = _l_array(k + 1, j, lk1_letters, sk1)
            return lk1_cache[j]

        for j in range(jmax + 1):
            bad = _first_bad(lk(j) >= lk1(j))
            if bad is not None:
                return {
                    "cx": _cx(
                        ">=",
                        ("l", k, j, bad),
                        lk(j)[bad],
                        ("l", k + 1, j, bad),
                        lk1(j)[bad],
                        k=k,
                        j=j,
                        n=bad,
                        relation="L_k^j >= L_{k+1}^j",
                    )
                }
            if j <= k:
                bad = _first_bad(lk(j)[1:] < lk1(j + 1)[1:])
                if bad is not None:
                    n = bad + 1
                    return {
                        "cx": _cx(
                            "<",
                            ("l", k, j, n),
                            lk(j)[n],
                            ("l", k + 1, j + 1, n),
                            lk1(j + 1)[n],
                            k=k,
                            j=j,
                            n=n,
                            relation="L_k^j < L_{k+1}^{j+1} for j <= k, n >= 1",
                        )
                    }

        a = _l_array(k + 1, k + 1, lk1_letters, sk1) - _l_array(k, k, lk_letters, sk)
        b = _l_array(k + 1, k, lk1_letters, sk1) - _l_array(k, k - 1, lk_letters, sk)
        bad = _first_bad(a == b)
        if bad is not None:
            return {
                "cx": _cx(
                    "==",
                    ("sub", ("l", k + 1, k + 1, bad), ("l", k, k, bad)),
                    a[bad],
                    ("sub", ("l", k + 1, k, bad), ("l", k, k - 1, bad)),
                    b[bad],
                    k=k,
                    n=bad,
                    relation="cross-difference identity at j = k",
                )
            }
        diag = _l_array(k, k, lk_letters, sk) - _l_array(k, k - 1, lk_letters, sk)
        bad = _first_bad(diag == narr)
        if bad is not None:
            return {
                "cx": _cx(
                    "==",
                    ("sub", ("l", k, k, bad), ("l", k, k - 1, bad)),
                    diag[bad],
                    ("const", bad),
                    bad,
                    k=k,
                    n=bad,
                    relation="L^k(n) = L^{k-1}(n) + n",
                )
            }
        return {}

    return _sweep(
        "monotone-l",
        cfg,
        worker,
        _ranges(cfg, j=f"0..{cfg.j_coeff}k+{cfg.j_const}", pairs="(k, k+1)"),
    )


def check_prefix_gaps(cfg: SweepConfig) -> CheckReport:
    """The gap D(j) = L_{k+1}^{j+1}(1) - L_k^j(1), in exact integers.

    D(j) = 1 for 0 <= j <= 2k; D(j) = -(j-2k-1)(j-2k+2)/2 for
    2k <= j <= 3k (so 0 at j = 2k+1); D(j) < 0 for j >= 2k+2, checked
    to 5k.  Witness points n_j = 2k+3-j for k+2 <= j <= 2k+2 satisfy
    L_k^j(n_j) = L_k^{2k+2}(1) and push below the j <= k comparison:
    L_{k+1}^{j+1}(n_j) < L_k^j(n_j); for j > 2k+2 the witness is n = 1.
    """

    def worker(k: int) -> dict:
        jtop = 5 * k
        sk = build_block_lengths(k, jtop)
        sk1 = build_block_lengths(k + 1, jtop + 1)
        witnesses = []
        for j in range(jtop + 1):
            gap = sk1[j + 1] - sk[j]
            if j <= 2 * k and gap != 1:
                return {
                    "cx": _cx(
                        "==",
                        ("sub", ("s", k + 1, j + 1), ("s", k, j)),
                        gap,
                        ("const", 1),
                        1,
                        k=k,
                        j=j,
                        relation="unit gap for j <= 2k",
                    )
                }
            if 2 * k <= j <= 3 * k:
                want = -(j - 2 * k - 1) * (j - 2 * k + 2) // 2
                if gap != want:
                    return {
                        "cx": _cx(
                            "==",
                            ("sub", ("s", k + 1, j + 1), ("s", k, j)),
                            gap,
                            ("const", want),
                            want,
                            k=k,
                            j=j,
                            relation="quadratic gap formula on 2k..3k",
                        )
                    }
            if j >= 2 * k + 2 and gap >= 0:
                return {
                    "cx": _cx(
                        "<",
                        ("sub", ("s", k + 1, j + 1), ("s", k, j)),
                        gap,
                        ("const", 0),
                        0,
                        k=k,
                        j=j,
                        relation="negative gap for j >= 2k+2",
                    )
                }
        anchor = sk[2 * k + 2]
        for j in range(k + 2, 3 * k + 1):
            n_j = 2 * k + 3 - j if j <= 2 * k + 2 else 1
            left = l_iter(k, j, n_j)
            right = l_iter(k + 1, j + 1, n_j)
            if j <= 2 * k + 2 and left != anchor:
                return {
                    "cx": _cx(
                        "==",
                        ("l", k, j, n_j),
                        left,
                        ("s", k, 2 * k + 2),
                        anchor,
                        k=k,
                        j=j,
                        n=n_j,
                        relation="witness lands on L_k^{2k+2}(1)",
                    )
                }
            if not right < left:
                return {
                    "cx": _cx(
                        "<",
                        ("l", k + 1, j + 1, n_j),
                        right,
                        ("l", k, j, n_j),
                        left,
                        k=k,
                        j=j,
                        n=n_j,
                        relation="reversal witness for j >= k+2",
                    )
                }
            witnesses.append({"j": j, "n": n_j, "lhs": right, "rhs": left})
        return {"details": {"reversal_witnesses": witnesses}}

    return _sweep(
        "prefix-gaps",
        cfg,
        worker,
        {"k": f"{cfg.k_min}..{cfg.k_max}", "j": "0..5k"},
    )


def find_incomparability_witnesses(cfg: SweepConfig) -> CheckReport:
    """Witness pairs showing pointwise incomparability.

    Pinned instances: F_3^3(5) = 2 > 1 = F_5^4(5) against
    F_3^3(9) = 3 < 4 = F_5^4(9), and the letter-4 counts of x_5 vs x_6
    at n = 49 (5 < 6) and n = 20 (2 > 1).  Then the general family: for
    3 <= i < k, the letter-i counts of x_k and x_{k+1} disagree in both
    directions, at n = i + L_k^{2k+2}(1) and n = i + L_{k+1}^{k+i}(1).
    """
    t0 = time.perf_counter()
    details: dict[str, Any] = {}
    cx = None

    t3 = build_f_table(3, 16)
    t5 = build_f_table(5, 16)
    pinned = [
        ("f", (3, 3, 5), f_iter(t3, 3, 5), ">", (5, 4, 5), f_iter(t5, 4, 5), 2, 1),
        ("f", (3, 3, 9), f_iter(t3, 3, 9), "<", (5, 4, 9), f_iter(t5, 4, 9), 3, 4),
    ]
    for _, largs, lval, op, rargs, rval, lexp, rexp in pinned:
        if not (lval == lexp and rval == rexp and _RELATIONS[op](lval, rval)):
            cx = _cx(op, ("f",) + largs, lval, ("f",) + rargs, rval,
                     relation="pinned iterate witness")
            break
    # the printed instance pairs 3 with 4 only when both sides sit at 9;
    # evaluated verbatim at mismatched points it reads 3 < 1, which fails
    details["iterate_pair"] = {
        "at_5": [f_iter(t3, 3, 5), f_iter(t5, 4, 5)],
        "at_9": [f_iter(t3, 3, 9), f_iter(t5, 4, 9)],
        "verbatim_reading_holds": f_iter(t3, 3, 9) < f_iter(t5, 4, 5),
        "matched_reading_holds": f_iter(t3, 3, 9) < f_iter(t5, 4, 9),
    }

    if cx is None:
        c5 = build_count_table(5, 49)
        c6 = build_count_table(6, 49)
        vals = (
            count_eq(c5, 4, 49), count_eq(c6, 4, 49),
            count_eq(c5, 4, 20), count_eq(c6, 4, 20),
        )
        if vals != (5, 6, 2, 1):
            cx = _cx("==", ("ceq", 5, 4, 49), vals[0], ("const", 5), 5,
                     relation="pinned count witness")
        details["count_pair_19"] = {"n=49": vals[:2], "n=20": vals[2:]}

    if cx is None:
        family = []
        for k in range(max(cfg.k_min, 4), cfg.k_max + 1):
            sk = build_block_lengths(k, 2 * k + 2)
            sk1 = build_block_lengths(k + 1, 2 * k + 2)
            for i in range(3, k):
                n1 = i + sk[2 * k + 2]
                n2 = i + sk1[k + i]
                top = max(n1, n2)
                ca = build_count_table(k, top)
                cb = build_count_table(k + 1, top)
                lo1, hi1 = count_eq(ca, i, n1), count_eq(cb, i, n1)
                hi2, lo2 = count_eq(ca, i, n2), count_eq(cb, i, n2)
                if not lo1 < hi1:
                    cx = _cx("<", ("ceq", k, i, n1), lo1,
                             ("ceq", k + 1, i, n1), hi1,
                             k=k, i=i, n=n1, relation="family witness, first direction")
                    break
                if not hi2 > lo2:
                    cx = _cx(">", ("ceq", k, i, n2), hi2,
                             ("ceq", k + 1, i, n2), lo2,
                             k=k, i=i, n=n2, relation="family witness, second direction")
                    break
                family.append({"k": k, "i": i, "n_first": n1, "n_second": n2})
            if cx is not None:
                break
        details["family"] = family

    return CheckReport(
        name="incomparability",
        status="fail" if cx is not None else "pass",
        ranges={"k": f"{max(cfg.k_min, 4)}..{cfg.k_max}", "i": "3..k-1"},
        first_counterexample=cx,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def scan_last_equality(cfg: SweepConfig) -> CheckReport:
    """The meeting points N_k = (k+1)(k+6)/2 of consecutive sequences.

    Verified per k: N_{k+1} = N_k + (k+4); F_k(N_k) = F_{k+1}(N_k);
    L_{k+1}(N_k) = L_{k+2}(N_k).  Then an open-ended scan: no n in
    (N_k, n_max] has F_k(n) = F_{k+1}(n), so the scan reports
    "exhausted", never "pass".
    """

    def worker(k: int) -> dict:
        nk = (k + 1) * (k + 6) // 2
        nk_next = (k + 2) * (k + 7) // 2
        if nk_next != nk + (k + 4):
            return {
                "cx": _cx("==", ("const", nk_next), nk_next,
                          ("const", nk + k + 4), nk + k + 4,
                          k=k, relation="meeting point recurrence")
            }
        top = max(cfg.n_max, nk + 1)
        fk = build_f_table(k, top).values
        fk1 = build_f_table(k + 1, top).values
        if fk[nk] != fk1[nk]:
            return {
                "cx": _cx("==", ("f", k, 1, nk), fk[nk],
                          ("f", k + 1, 1, nk), fk1[nk],
                          k=k, n=nk, relation="F values meet at N_k")
            }
        left = l_iter(k + 1, 1, nk)
        right = l_iter(k + 2, 1, nk)
        if left != right:
            return {
                "cx": _cx("==", ("l", k + 1, 1, nk), left,
                          ("l", k + 2, 1, nk), right,
                          k=k, n=nk, relation="L values meet at N_k")
            }
        eqs = np.flatnonzero(fk[1 : cfg.n_max + 1] == fk1[1 : cfg.n_max + 1]) + 1
        beyond = eqs[eqs > nk]
        if beyond.size:
            n = int(beyond[0])
            return {
                "cx": _cx("!=", ("f", k, 1, n), fk[n],
                          ("f", k + 1, 1, n), fk1[n],
                          k=k, n=n, relation="equality past N_k"),
                "details": {"N_k": nk},
            }
        return {
            "details": {
                "N_k": nk,
                "equalities_up_to_N_k": int((eqs <= nk).sum()),
                "scanned_to": cfg.n_max,
            }
        }

    return _sweep(
        "last-equality",
        cfg,
        worker,
        _ranges(cfg),
        clean_status="exhausted",
    )


def scan_iterate_crossover(cfg: SweepConfig) -> CheckReport:
    """Does F_k^{k+1} still dominate F_{k+1}^{k+2}?

    For j <= k dominance is proved (and swept by monotone-f); here the
    scan asserts it persists at j = k+1, with equality reached at
    n = k+1 where both prefix lengths equal L_k^{2k+1}(1).  Each j in
    k+2..2k is then classified from data (expected: neither order).
    Open-ended, so clean runs are "exhausted".
    """

    def worker(k: int) -> dict:
        fk = build_f_table(k, cfg.n_max).values
        fk1 = build_f_table(k + 1, cfg.n_max).values
        a = np.arange(cfg.n_max + 1, dtype=np.int64)
        b = a.copy()
        abuf, bbuf = np.empty_like(a), np.empty_like(b)
        classified = {}
        for j in range(2 * k + 1):
            bnext = fk1[b]
            if j == k + 1:
                bad = _first_bad(a >= bnext)
                if bad is not None:
                    return {
                        "cx": _cx(">=", ("f", k, j, bad), a[bad],
                                  ("f", k + 1, j + 1, bad), bnext[bad],
                                  k=k, j=j, n=bad,
                                  relation="dominance still holds at j = k+1")
                    }
                if k + 1 <= cfg.n_max and a[k + 1] != bnext[k + 1]:
                    return {
                        "cx": _cx("==", ("f", k, j, k + 1), a[k + 1],
                                  ("f", k + 1, j + 1, k + 1), bnext[k + 1],
                                  k=k, j=j, n=k + 1,
                                  relation="equality at n = k+1")
                    }
                sk = build_block_lengths(k, 2 * k + 1)
                sk1 = build_block_lengths(k + 1, 2 * k + 2)
                if sk[2 * k + 1] != sk1[2 * k + 2]:
                    return {
                        "cx": _cx("==", ("s", k, 2 * k + 1), sk[2 * k + 1],
                                  ("s", k + 1, 2 * k + 2), sk1[2 * k + 2],
                                  k=k, j=j,
                                  relation="prefix lengths agree under the equality")
                    }
            elif k + 1 < j:
                ge = bool(np.all(a >= bnext))
                le = bool(np.all(a <= bnext))
                classified[f"j={j}"] = ">=" if ge and not le else \
                    "<=" if le and not ge else "==" if ge and le else "mixed"
            a, abuf = _compose_step(fk, a, abuf)
            b, bbuf = _compose_step(fk1, b, bbuf)
        return {"details": {"middle_range": classified}}

    return _sweep(
        "iterate-crossover",
        cfg,
        worker,
        _ranges(cfg, j="k+1..2k", pairs="(k, k+1)"),
        clean_status="exhausted",
    )


def scan_iterate_flip(cfg: SweepConfig) -> CheckReport:
    """Scan the claim F_k^j <= F_{k+1}^{j+1} for j > 2k.

    The first violating (j, n) halts that k with a witness.  The
    boundary depth j = 2k+1 does get violated (k = 4 at n = 132 is the
    smallest case), while depths j >= 2k+2 have survived every range
    tried, so the per-k details keep the two regimes apart.
    """

    def worker(k: int) -> dict:
        jmax = cfg.j_max(k)
        fk = build_f_table(k, cfg.n_max).values
        fk1 = build_f_table(k + 1, cfg.n_max).values
        a = np.arange(cfg.n_max + 1, dtype=np.int64)
        b = a.copy()
        abuf, bbuf = np.empty_like(a), np.empty_like(b)
        clean_from = None
        for j in range(jmax + 1):
            if j > 2 * k:
                bnext = fk1[b]
                bad = _first_bad(a <= bnext)
                if bad is not None:
                    return {
                        "cx": _cx("<=", ("f", k, j, bad), a[bad],
                                  ("f", k + 1, j + 1, bad), bnext[bad],
                                  k=k, j=j, n=bad,
                                  relation="reversed dominance for j > 2k"),
                        "details": {"halted_at_j": j},
                    }
                if clean_from is None:
                    clean_from = j
            a, abuf = _compose_step(fk, a, abuf)
            b, bbuf = _compose_step(fk1, b, bbuf)
        return {"details": {"clean_for_j": f"{clean_from}..{jmax}" if clean_from else None}}

    return _sweep(
        "iterate-flip",
        cfg,
        worker,
        _ranges(cfg, j=f"2k+1..{cfg.j_coeff}k+{cfg.j_const}", pairs="(k, k+1)"),
        clean_status="exhausted",
    )


def check_counts_and_letters(cfg: SweepConfig) -> CheckReport:
    """Low-letter counts fall as the alphabet grows, plus word structure.

    C_k^{(=1)}(n) >= C_{k+1}^{(=1)}(n) for every n, likewise for
    letter 2; the k = 2 case goes through the chain C_2^{(=2)} >=
    C_3^{(=3)} >= C_3^{(=2)}; every occurrence of letter 2 in x_3 sits
    inside the factor 312; and the number of distinct length-m factors
    of x_k is (k-1)m + 1.
    """

    def worker(k: int) -> dict:
        n_max = cfg.n_max
        wa = word_prefix(k, n_max)
        wb = word_prefix(k + 1, n_max)
        for i in (1, 2):
            if i > k:
                continue
            ca = np.cumsum(wa == i)
            cb = np.cumsum(wb == i)
            bad = _first_bad(ca >= cb)
            if bad is not None:
                n = bad + 1
                return {
                    "cx": _cx(">=", ("ceq", k, i, n), ca[bad],
                              ("ceq", k + 1, i, n), cb[bad],
                              k=k, i=i, n=n,
                              relation="letter count falls as alphabet grows")
                }
        if k == 2:
            c22 = np.cumsum(wa == 2)
            c33 = np.cumsum(wb == 3)
            c32 = np.cumsum(wb == 2)
            bad = _first_bad(c22 >= c33)
            if bad is not None:
                n = bad + 1
                return {
                    "cx": _cx(">=", ("ceq", 2, 2, n), c22[bad],
                              ("ceq", 3, 3, n), c33[bad],
                              n=n, relation="chain, first link")
                }
            bad = _first_bad(c33 >= c32)
            if bad is not None:
                n = bad + 1
                return {
                    "cx": _cx(">=", ("ceq", 3, 3, n), c33[bad],
                              ("ceq", 3, 2, n), c32[bad],
                              n=n, relation="chain, second link")
                }
        if k == 3:
            pos = np.flatnonzero(wa == 2)
            ok = (pos >= 2) & (wa[np.maximum(pos - 1, 0)] == 1) \
                & (wa[np.maximum(pos - 2, 0)] == 3)
            bad = _first_bad(ok)
            if bad is not None:
                n = int(pos[bad]) + 1
                return {
                    "cx": _cx("==", ("letter", 3, n), 2, ("const", 2), 2,
                              n=n, relation="a letter 2 outside the factor 312")
                }
        factor_counts = {}
        if n_max >= 10_000:
            raw = wa.tobytes()
            for m in range(1, 9):
                found = len({raw[p : p + m] for p in range(len(raw) - m + 1)})
                factor_counts[f"m={m}"] = found
                if found != (k - 1) * m + 1:
                    return {
                        "cx": _cx("==", ("const", found), found,
                                  ("const", (k - 1) * m + 1), (k - 1) * m + 1,
                                  k=k, m=m,
                                  relation="distinct factor count (k-1)m+1"),
                    }
        return {"details": {"factors": factor_counts}}

    return _sweep("counts-letters", cfg, worker, _ranges(cfg, i="1..2", m="1..8"))


def check_eventual_comparisons(cfg: SweepConfig) -> CheckReport:
    """Slope-certified eventual orderings, with data as a footnote.

    With a = alpha_k and j >= 1: if a >= j/(j+1) then a^{k+j} exceeds
    alpha_{k+1}^{k+j+1}, so F_k^{k+j} eventually dominates
    F_{k+1}^{k+j+1}; if alpha_{k+1} <= j/(j+1) the order is reversed.
    Both are certified here through root enclosures, never point
    floats.  The letter-5 counts of x_6 and x_7 get the same treatment
    (slopes alpha_6^10 < alpha_7^11), plus observed counts at n_max.
    """
    t0 = time.perf_counter()
    cx = None
    rows = []
    for j in (1, 2, 3):
        thr = Fraction(j, j + 1)
        for k in cfg.ks():
            ra = find_alpha(k, cfg.tol)
            rb = find_alpha(k + 1, cfg.tol)
            a_lo = ra.exact if ra.exact is not None else ra.lo
            b_hi = rb.exact if rb.exact is not None else rb.hi
            lo_pow, hi_pow = ra.power_interval(k + j)
            lo1_pow, hi1_pow = rb.power_interval(k + j + 1)
            if a_lo >= thr:
                verdict = "F_k eventually above"
                ok = lo_pow > hi1_pow
            elif b_hi <= thr:
                verdict = "F_k eventually below"
                ok = hi_pow < lo1_pow
            else:
                verdict = "threshold not met"
                ok = True
            rows.append({"k": k, "j": j, "verdict": verdict})
            if not ok:
                cx = {
                    "op": ">",
                    "lhs": ["slope", k, k + j],
                    "lhs_value": 0.5 * (lo_pow + hi_pow),
                    "rhs": ["slope", k + 1, k + j + 1],
                    "rhs_value": 0.5 * (lo1_pow + hi1_pow),
                    "k": k,
                    "j": j,
                    "relation": "slope enclosures failed to separate",
                }
                break
        if cx is not None:
            break

    details: dict[str, Any] = {"threshold_rule": rows}
    if cx is None:
        r6 = find_alpha(6, cfg.tol)
        r7 = find_alpha(7, cfg.tol)
        lo6, hi6 = r6.power_interval(10)
        lo7, hi7 = r7.power_interval(11)
        if not hi6 < lo7:
            cx = {
                "op": "<",
                "lhs": ["slope", 6, 10],
                "lhs_value": 0.5 * (lo6 + hi6),
                "rhs": ["slope", 7, 11],
                "rhs_value": 0.5 * (lo7 + hi7),
                "relation": "letter-5 count slopes failed to separate",
            }
        n_obs = cfg.n_max
        c6 = int(np.count_nonzero(word_prefix(6, n_obs) == 5))
        c7 = int(np.count_nonzero(word_prefix(7, n_obs) == 5))
        details["letter5_counts"] = {
            "slope_x6": 0.5 * (lo6 + hi6),
            "slope_x7": 0.5 * (lo7 + hi7),
            "asymptotic_order": "x6 below x7",
            "observed_at_n_max": [c6, c7],
            "observed_matches_asymptotic": c6 < c7,
        }

    return CheckReport(
        name="eventual",
        status="fail" if cx is not None else "pass",
        ranges={"k": f"{cfg.k_min}..{cfg.k_max}", "j": "1..3"},
        first_counterexample=cx,
        elapsed=time.perf_counter() - t0,
        details=details,
    )


def check_limits(cfg: SweepConfig) -> CheckReport:
    """Slopes of the data against the algebraic constants.

    At n_max: |F^j(n)/n - alpha^j| <= limit_tol for j <= k, and closer
    than at n_small; |L(n)/n - beta| <= limit_tol; letter frequencies
    within freq_tol of their exact values; the unique-antecedent ratio
    within u_tol of 2 - beta.
    """

    def worker(k: int) -> dict:
        n_big, n_small = cfg.n_max, min(cfg.n_small, cfg.n_max // 10 or 1)
        alpha = find_alpha(k, cfg.tol).value
        beta = find_beta(k, cfg.tol).value
        fvals = build_f_table(k, n_big).values
        cb, cs = n_big, n_small
        devs = {}
        for j in range(1, k + 1):
            cb, cs = int(fvals[cb]), int(fvals[cs])
            dev_big = abs(cb / n_big - alpha**j)
            dev_small = abs(cs / n_small - alpha**j)
            devs[f"j={j}"] = dev_big
            if dev_big > cfg.limit_tol:
                return {
                    "cx": _cx("within", ("f", k, j, n_big), cb,
                              ("const_f", alpha**j * n_big), alpha**j * n_big,
                              tol_abs=cfg.limit_tol * n_big, k=k, j=j,
                              relation=f"slope off by {dev_big:.2e} > {cfg.limit_tol}")
                }
            if dev_big >= dev_small and dev_small > 0:
                return {
                    "cx": _cx("within_strict", ("f", k, j, n_big), cb,
                              ("const_f", alpha**j * n_big), alpha**j * n_big,
                              tol_abs=dev_small * n_big, k=k, j=j,
                              relation="deviation did not shrink with n"),
                }
        letters = word_prefix(k, n_big)
        stable = build_block_lengths(k, 1)
        wt = np.ones(k + 1, dtype=np.int64)
        for i in range(1, k + 1):
            if i + 1 >= k:
                wt[i] = stable[i + 1 - k]
        l_big = int(wt[letters].sum())
        l_dev = abs(l_big / n_big - beta)
        if l_dev > cfg.limit_tol:
            return {
                "cx": _cx("within", ("l", k, 1, n_big), l_big,
                          ("const_f", beta * n_big), beta * n_big,
                          tol_abs=cfg.limit_tol * n_big, k=k,
                          relation=f"L slope off by {l_dev:.2e}")
            }
        freq_devs = {}
        counts = np.bincount(letters, minlength=k + 1)
        for i in range(1, k + 1):
            target = freq_exact(k, i, cfg.tol) * n_big
            dev = abs(counts[i] / n_big - freq_exact(k, i, cfg.tol))
            freq_devs[f"letter={i}"] = dev
            if dev > cfg.freq_tol:
                return {
                    "cx": _cx("within", ("ceq", k, i, n_big), int(counts[i]),
                              ("const_f", target), target,
                              tol_abs=cfg.freq_tol * n_big, k=k, i=i,
                              relation=f"frequency off by {dev:.2e}")
                }
        u_big = n_big - int(_compose_scalar(fvals, k - 1, n_big - 1))
        u_dev = abs(u_big / n_big - (2 - beta))
        if u_dev > cfg.u_tol:
            return {
                "cx": _cx("within", ("u", k, n_big), u_big,
                          ("const_f", (2 - beta) * n_big), (2 - beta) * n_big,
                          tol_abs=cfg.u_tol * n_big, k=k,
                          relation=f"antecedent ratio off by {u_dev:.2e}")
            }
        return {
            "details": {
                "f_slope_dev": devs,
                "l_slope_dev": l_dev,
                "freq_dev": freq_devs,
                "antecedent_ratio": u_big / n_big,
                "two_minus_beta": 2 - beta,
            }
        }

    return _sweep("limits", cfg, worker, _ranges(cfg, n_small=cfg.n_small))


def _compose_scalar(fvals: np.ndarray, j: int, n: int) -> int:
    m = n
    for _ in range(j):
        m = int(fvals[m])
    return m


def check_stream_delta(cfg: SweepConfig) -> CheckReport:
    """Three independent word routes agree letter for letter.

    The block-recurrence prefix, the self-reading stream, and the
    letters recovered from difference sequences of the F iterates must
    match on 1..n_max; l_iter is spot-checked against the array route.
    """

    def worker(k: int) -> dict:
        n_max = cfg.n_max
        bulk = word_prefix(k, n_max)
        streamed = np.fromiter(WordStream(k), dtype=np.int64, count=n_max)
        bad = _first_bad(bulk == streamed)
        if bad is not None:
            return {
                "cx": _cx("==", ("letter", k, bad + 1), int(streamed[bad]),
                          ("const", int(bulk[bad])), int(bulk[bad]),
                          k=k, n=bad + 1, relation="stream vs block prefix")
            }
        fvals = build_f_table(k, n_max).values
        acc = np.zeros(n_max, dtype=np.int64)
        cur = np.arange(n_max + 1, dtype=np.int64)
        for _ in range(1, k):
            cur = fvals[cur]
            acc += np.diff(cur)
        from_delta = 1 + acc
        bad = _first_bad(bulk == from_delta)
        if bad is not None:
            return {
                "cx": _cx("==", ("letter_delta", k, bad + 1), int(from_delta[bad]),
                          ("letter", k, bad + 1), int(bulk[bad]),
                          k=k, n=bad + 1, relation="delta letters vs word")
            }
        table = build_f_table(k, n_max)
        for n in range(1, min(n_max, 257)):
            got = letter_at_via_delta(table, n)
            if got != int(bulk[n - 1]):
                return {
                    "cx": _cx("==", ("letter_delta", k, n), got,
                              ("letter", k, n), int(bulk[n - 1]),
                              k=k, n=n, relation="scalar delta letter")
                }
        stable = build_block_lengths(k, min(cfg.j_max(k), k + 2))
        for j in range(stable.j_max + 1):
            larr = _l_array(k, j, bulk[: min(n_max, 4096)], stable)
            for n in (1, 2, len(larr) - 1):
                if l_iter(k, j, n) != int(larr[n]):
                    return {
                        "cx": _cx("==", ("l", k, j, n), l_iter(k, j, n),
                                  ("const", int(larr[n])), int(larr[n]),
                                  k=k, j=j, n=n, relation="l_iter vs array route")
                    }
        return {}

    return _sweep("stream-delta", cfg, worker, _ranges(cfg))


CHECKS: dict[str, Callable[[SweepConfig], CheckReport]] = {
    "bracketing": check_bracketing,
    "galois": check_galois,
    "count-identities": check_count_identities,
    "monotone-f": check_monotone_f,
    "monotone-l": check_monotone_l,
    "prefix-gaps": check_prefix_gaps,
    "incomparability": find_incomparability_witnesses,
    "last-equality": scan_last_equality,
    "iterate-crossover": scan_iterate_crossover,
    "iterate-flip": scan_iterate_flip,
    "counts-letters": check_counts_and_letters,
    "eventual": check_eventual_comparisons,
    "limits": check_limits,
    "stream-delta": check_stream_delta,
}


def run_checks(names: list[str], cfg: SweepConfig) -> list[CheckReport]:
    """Run the named checks (or all of them) and return their reports."""
    if names in ([], ["all"]):
        names = list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        known = ", ".join(CHECKS)
        raise ValueError(f"unknown check(s) {unknown}; known: {known}")
    return [CHECKS[name](cfg) for name in names]
