"""Command-line front end.

Subcommands cover sequence generation (``seq``), word export (``word``),
letter counts (``counts``), root enclosures (``roots``), verifier sweeps
(``check``), b-file cross-validation (``oeis-diff``), plain data export
for external plotting (``plot-data``) and launching the HTTP service
(``serve``).

Exit codes: 0 success / all checks pass; 1 a check failed or a b-file
did not match; 2 usage or I/O error.  Output is deterministic given the
flags.  The CLI itself is single-threaded; ``check --threads`` forwards
worker parallelism to the sweep engine.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .algebraic import find_alpha, find_beta
from .oeis import diff_bfile, load_bfile
from .recurrences import build_f_table
from .verifier import CHECKS, SweepConfig, run_checks
from .words import MemoryCapError, word_prefix

__all__ = ["main", "build_parser"]


def _print_records(records: list[dict], fmt: str, *, text_key: str | None = None,
                   bfile_keys: tuple[str, str] | None = None) -> None:
    """Write records (list of flat dicts, shared keys) in the chosen format."""
    if fmt == "json":
        print(json.dumps(records, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]) if records else [])
        writer.writeheader()
        writer.writerows(records)
        print(buf.getvalue(), end="")
    elif fmt == "bfile":
        if bfile_keys is None:
            raise ValueError("bfile format is not available for this command")
        ikey, vkey = bfile_keys
        for rec in records:
            print(f"{rec[ikey]} {rec[vkey]}")
    else:  # text
        if text_key is None:
            raise ValueError("text format is not available for this command")
        print(",".join(str(rec[text_key]) for rec in records))


def _cmd_seq(args: argparse.Namespace) -> int:
    n_max = args.nmax if args.nmax is not None else args.n
    if n_max is None:
        raise ValueError("seq requires --n or --nmax")
    table = build_f_table(args.k, n_max)
    cur = np.arange(n_max + 1, dtype=np.int64)
    for _ in range(args.j):
        cur = table.values[cur]
    records = [{"n": int(n), "value": int(v)} for n, v in enumerate(cur)]
    _print_records(records, args.format, text_key="value",
                   bfile_keys=("n", "value"))
    return 0


def _cmd_word(args: argparse.Namespace) -> int:
    n = args.nmax if args.nmax is not None else args.n
    if n is None:
        raise ValueError("word requires --n or --nmax")
    letters = word_prefix(args.k, n)
    records = [{"position": i + 1, "letter": int(a)}
               for i, a in enumerate(letters)]
    _print_records(records, args.format, text_key="letter",
                   bfile_keys=("position", "letter"))
    return 0


def _cmd_counts(args: argparse.Namespace) -> int:
    n = args.nmax if args.nmax is not None else args.n
    if n is None:
        raise ValueError("counts requires --n or --nmax")
    letters = word_prefix(args.k, n)
    tally = np.bincount(letters, minlength=args.k + 1)
    records = []
    for i in range(1, args.k + 1):
        rec = {"letter": i, "count": int(tally[i])}
        if n:
            rec["ratio"] = round(int(tally[i]) / n, 10)
        records.append(rec)
    if args.format == "text":
        for rec in records:
            ratio = f"  ratio={rec['ratio']:.10f}" if "ratio" in rec else ""
            print(f"letter {rec['letter']}: {rec['count']}{ratio}")
        return 0
    _print_records(records, args.format, bfile_keys=("letter", "count"))
    return 0


def _cmd_roots(args: argparse.Namespace) -> int:
    ks = [args.k] if args.k is not None else list(range(1, args.kmax + 1))
    records = []
    for k in ks:
        alpha = find_alpha(k, args.tol)
        beta = find_beta(k, args.tol)
        records.append({
            "k": k,
            "alpha": f"{alpha.value:.13f}",
            "beta": f"{beta.value:.13f}",
        })
    if args.format == "text":
        print(f"{'k':>3} {'alpha':>16} {'beta':>16}")
        for rec in records:
            print(f"{rec['k']:>3} {rec['alpha']:>16} {rec['beta']:>16}")
        return 0
    _print_records(records, args.format)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        k_min=args.kmin,
        k_max=args.kmax,
        n_max=args.nmax,
        j_coeff=args.jcoeff,
        j_const=args.jconst,
        threads=args.threads,
        tol=args.tol,
        n_small=min(args.nsmall, args.nmax),
        limit_tol=args.limit_tol,
        freq_tol=args.freq_tol,
        u_tol=args.u_tol,
    )
    reports = run_checks(args.names or ["all"], cfg)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for rep in reports:
            print(rep.render_text())
    failed = [r for r in reports if r.status == "fail"]
    return 1 if failed else 0


def _cmd_oeis_diff(args: argparse.Namespace) -> int:
    bfile = load_bfile(args.path, seq_id=args.seq_id)
    result = diff_bfile(bfile, args.k)
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        label = result["seq_id"] or args.path
        if result["match"]:
            m = result["match"]
            print(f"{label}: MATCH against F_{args.k} "
                  f"({m['kind']}, shift {m['shift']:+d}, "
                  f"{m['checked']} terms checked)")
        else:
            best = result["candidates"][0]
            print(f"{label}: NO MATCH against F_{args.k}; closest candidate "
                  f"{best['kind']} shift {best['shift']:+d} has "
                  f"{best['mismatches']} mismatches over {best['checked']} terms")
            if best["first_mismatch"]:
                fm = best["first_mismatch"]
                print(f"  first mismatch at index {fm['index']}: "
                      f"file has {fm['file_value']}, computed {fm['computed']}")
    return 0 if result["match"] else 1


def _cmd_plot_data(args: argparse.Namespace) -> int:
    ks = list(range(args.kmin, args.kmax + 1))
    tables = {k: build_f_table(k, args.nmax) for k in ks}
    records = [
        {"n": n, **{f"F_{k}": int(tables[k].values[n]) for k in ks}}
        for n in range(args.nmax + 1)
    ]
    fmt = "csv" if args.format == "text" else args.format
    _print_records(records, fmt)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common(p: argparse.ArgumentParser, *, k_required: bool = True,
                with_j: bool = False) -> None:
    p.add_argument("--k", type=int, required=k_required,
                   help="recurrence order / alphabet size")
    if with_j:
        p.add_argument("--j", type=int, default=1, help="iteration depth")
    p.add_argument("--n", type=int, default=None,
                   help="largest index (seq) or letter count (word/counts)")
    p.add_argument("--nmax", type=int, default=None, help="alias for --n")
    p.add_argument("--format", choices=["text", "csv", "json", "bfile"],
                   default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hoflab",
        description="Nested recurrences, their morphic words, and a "
                    "sweep-based verifier for the identities tying them "
                    "together.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="values of F_k^j on 0..n")
    _add_common(p, with_j=True)
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("word", help="first n letters of the word x_k")
    _add_common(p)
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("counts", help="letter tallies over a prefix of x_k")
    _add_common(p)
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("roots", help="certified enclosures of alpha_k, beta_k")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("check", help="run verifier sweeps")
    p.add_argument("names", nargs="*", metavar="CHECK",
                   help=f"one of: {', '.join(sorted(CHECKS))}, or 'all'")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--nmax", type=int, default=100_000)
    p.add_argument("--jcoeff", type=int, default=3)
    p.add_argument("--jconst", type=int, default=2)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--nsmall", type=int, default=1000)
    p.add_argument("--limit-tol", type=float, default=1e-3)
    p.add_argument("--freq-tol", type=float, default=1e-3)
    p.add_argument("--u-tol", type=float, default=1e-2)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("oeis-diff", help="cross-check a local b-file against F_k")
    p.add_argument("path", help="path to the b-file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seq-id", default="")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_oeis_diff)

    p = sub.add_parser("plot-data",
                       help="(n, F_k(n)) tuples for a range of k, for "
                            "external plotting")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--format", choices=["text", "csv", "json"], default="csv")
    p.set_defaults(func=_cmd_plot_data)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, OverflowError, MemoryCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
