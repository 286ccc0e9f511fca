"""HTTP service wrapping the core library.

Every endpoint is a thin adapter: pydantic models validate and bound the
request, the core package does the work, and the response mirrors what
the CLI prints.  Request bounds keep a single call from materializing
unreasonable JSON payloads; raise them by constructing bigger sweeps via
the CLI instead, which streams nothing back over HTTP.

Checks run synchronously in the request thread — a deliberate choice:
sweep configurations accepted here are bounded small enough to answer
interactively, and anything larger belongs in the CLI.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .algebraic import find_alpha, find_beta, freq_exact
from .oeis import diff_bfile, parse_bfile
from .recurrences import build_f_table
from .verifier import CHECKS, SweepConfig, run_checks
from .words import MemoryCapError, word_prefix, word_text

__all__ = ["app", "create_app"]

# Request ceilings: large enough for interactive exploration, small
# enough that a single JSON response stays in the tens of megabytes.
MAX_SEQ_N = 1_000_000
MAX_WORD_N = 1_000_000
MAX_CHECK_N = 2_000_000
MAX_K = 64
MAX_BFILE_BYTES = 8 * 1024 * 1024


class SequenceRequest(BaseModel):
    k: int = Field(ge=1, le=MAX_K)
    j: int = Field(default=1, ge=0, le=512)
    n_max: int = Field(ge=0, le=MAX_SEQ_N)


class SequenceResponse(BaseModel):
    k: int
    j: int
    values: list[int]


class WordRequest(BaseModel):
    k: int = Field(ge=1, le=MAX_K)
    n: int = Field(ge=0, le=MAX_WORD_N)


class WordResponse(BaseModel):
    k: int
    n: int
    letters: list[int]
    text: str


class CountsRequest(BaseModel):
    k: int = Field(ge=1, le=MAX_K)
    n: int = Field(ge=0, le=MAX_WORD_N)


class CountsResponse(BaseModel):
    k: int
    n: int
    counts: dict[int, int]
    ratios: dict[int, float]


class RootsRequest(BaseModel):
    k_min: int = Field(default=1, ge=1, le=MAX_K)
    k_max: int = Field(default=6, ge=1, le=MAX_K)
    tol: float = Field(default=1e-14, gt=0)


class RootEnclosure(BaseModel):
    lo: float
    hi: float
    value: float


class RootsEntry(BaseModel):
    k: int
    alpha: RootEnclosure
    beta: RootEnclosure


class RootsResponse(BaseModel):
    roots: list[RootsEntry]


class FrequenciesRequest(BaseModel):
    k: int = Field(ge=1, le=MAX_K)
    tol: float = Field(default=1e-14, gt=0)


class FrequenciesResponse(BaseModel):
    k: int
    frequencies: dict[int, float]


class CheckRequest(BaseModel):
    k_min: int = Field(default=1, ge=1, le=16)
    k_max: int = Field(default=6, ge=1, le=16)
    n_max: int = Field(default=10_000, ge=10, le=MAX_CHECK_N)
    j_coeff: int = Field(default=3, ge=1, le=5)
    j_const: int = Field(default=2, ge=0, le=8)
    threads: int = Field(default=1, ge=1, le=16)
    tol: float = Field(default=1e-14, gt=0)
    n_small: int = Field(default=1000, ge=1)
    limit_tol: float = Field(default=1e-3, gt=0)
    freq_tol: float = Field(default=1e-3, gt=0)
    u_tol: float = Field(default=1e-2, gt=0)


class CheckResponse(BaseModel):
    name: str
    status: Literal["pass", "exhausted", "fail"]
    ranges: dict
    first_counterexample: dict | None
    elapsed: float
    details: dict


class OeisDiffRequest(BaseModel):
    k: int = Field(ge=1, le=MAX_K)
    text: str = Field(max_length=MAX_BFILE_BYTES)
    seq_id: str = ""


def _sweep_config(req: CheckRequest) -> SweepConfig:
    try:
        return SweepConfig(
            k_min=req.k_min, k_max=req.k_max, n_max=req.n_max,
            j_coeff=req.j_coeff, j_const=req.j_const, threads=req.threads,
            tol=req.tol, n_small=req.n_small, limit_tol=req.limit_tol,
            freq_tol=req.freq_tol, u_tol=req.u_tol,
        )
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="hoflab",
        version=__version__,
        description="Nested recurrences, their fixed-point words, and "
                    "machine checks of the identities relating them.",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/sequence", response_model=SequenceResponse)
    def sequence(req: SequenceRequest) -> SequenceResponse:
        table = build_f_table(req.k, req.n_max)
        cur = np.arange(req.n_max + 1, dtype=np.int64)
        for _ in range(req.j):
            cur = table.values[cur]
        return SequenceResponse(k=req.k, j=req.j, values=cur.tolist())

    @app.post("/word", response_model=WordResponse)
    def word(req: WordRequest) -> WordResponse:
        try:
            letters = word_prefix(req.k, req.n)
        except MemoryCapError as exc:
            raise HTTPException(status_code=413, detail=str(exc)) from exc
        return WordResponse(k=req.k, n=req.n, letters=letters.tolist(),
                            text=word_text(letters))

    @app.post("/counts", response_model=CountsResponse)
    def counts(req: CountsRequest) -> CountsResponse:
        try:
            letters = word_prefix(req.k, req.n)
        except MemoryCapError as exc:
            raise HTTPException(status_code=413, detail=str(exc)) from exc
        tally = np.bincount(letters, minlength=req.k + 1)
        counts = {i: int(tally[i]) for i in range(1, req.k + 1)}
        ratios = {i: (counts[i] / req.n if req.n else 0.0)
                  for i in range(1, req.k + 1)}
        return CountsResponse(k=req.k, n=req.n, counts=counts, ratios=ratios)

    @app.post("/roots", response_model=RootsResponse)
    def roots(req: RootsRequest) -> RootsResponse:
        if req.k_min > req.k_max:
            raise HTTPException(status_code=422, detail="k_min > k_max")
        entries = []
        for k in range(req.k_min, req.k_max + 1):
            a, b = find_alpha(k, req.tol), find_beta(k, req.tol)
            entries.append(RootsEntry(
                k=k,
                alpha=RootEnclosure(lo=a.lo, hi=a.hi, value=a.value),
                beta=RootEnclosure(lo=b.lo, hi=b.hi, value=b.value),
            ))
        return RootsResponse(roots=entries)

    @app.post("/frequencies", response_model=FrequenciesResponse)
    def frequencies(req: FrequenciesRequest) -> FrequenciesResponse:
        freqs = {i: freq_exact(req.k, i, req.tol)
                 for i in range(1, req.k + 1)}
        return FrequenciesResponse(k=req.k, frequencies=freqs)

    @app.get("/checks")
    def list_checks() -> dict:
        return {"checks": sorted(CHECKS)}

    @app.post("/checks/{name}", response_model=list[CheckResponse])
    def run_check(name: str, req: CheckRequest) -> list[CheckResponse]:
        if name != "all" and name not in CHECKS:
            raise HTTPException(status_code=404,
                                detail=f"unknown check: {name}")
        cfg = _sweep_config(req)
        reports = run_checks([name], cfg)
        return [CheckResponse(**r.to_dict()) for r in reports]

    @app.post("/oeis/diff")
    def oeis_diff(req: OeisDiffRequest) -> dict:
        try:
            bfile = parse_bfile(req.text, seq_id=req.seq_id)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return diff_bfile(bfile, req.k)

    return app


app = create_app()
