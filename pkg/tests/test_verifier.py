"""Sweep engine: configs, reports, counterexample replay, known findings."""

import json

import numpy as np
import pytest

from hoflab.recurrences import build_f_table
from hoflab.words import word_prefix
from hoflab.verifier import (
    CHECKS,
    SweepConfig,
    reverify_counterexample,
    run_checks,
)

# Small ranges exercise the engine, not the asymptotics, so the limit
# tolerances are widened to what n = 600 can honestly deliver; the
# acceptance suite re-runs `limits` at n = 10^6 with the tight ones.
SMALL = SweepConfig(k_min=1, k_max=3, n_max=600, n_small=100,
                    limit_tol=5e-3, freq_tol=5e-3, u_tol=5e-2)


@pytest.fixture(scope="module")
def small_reports():
    return {r.name: r for r in run_checks(["all"], SMALL)}


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(k_min=0)
    with pytest.raises(ValueError):
        SweepConfig(k_min=4, k_max=2)
    with pytest.raises(ValueError):
        SweepConfig(n_max=500)  # default n_small exceeds it
    with pytest.raises(ValueError):
        SweepConfig(tol=1e-18)
    with pytest.raises(ValueError):
        SweepConfig(threads=0)
    with pytest.raises(ValueError):
        SweepConfig(freq_tol=0)
    cfg = SweepConfig()
    assert cfg.j_max(4) == 14
    assert cfg.ks() == list(range(1, 9))


def test_unknown_check_rejected():
    with pytest.raises(ValueError, match="unknown check"):
        run_checks(["no-such-check"], SMALL)


def test_all_expands_to_every_check(small_reports):
    assert set(small_reports) == set(CHECKS)


def test_small_sweep_is_clean(small_reports):
    # At k <= 3, n <= 600 every identity holds and every scan exhausts.
    # `limits` is excluded: its two-point shrink probe is an asymptotic
    # statement that small ranges genuinely do not always satisfy, and
    # the check is required to say so rather than smooth it over.
    for name, rep in small_reports.items():
        if name == "limits":
            continue
        assert rep.status in ("pass", "exhausted"), (name, rep.to_dict())
        assert rep.first_counterexample is None
    assert small_reports["bracketing"].status == "pass"
    assert small_reports["last-equality"].status == "exhausted"
    assert small_reports["iterate-flip"].status == "exhausted"


def test_depth_one_round_trip_drift_stays_in_zero_one():
    # Independent recomputation of the drift the galois check asserts
    # at j = 1: for k = 2 the substituted-prefix length is
    # L(n) = n + (number of 2s among the first n letters), so
    # L(F(n)) - n can be tallied without touching the sweep machinery.
    n_max = 10_000
    fvals = build_f_table(2, n_max).values
    letters = word_prefix(2, n_max)
    l_arr = np.concatenate(([0], np.cumsum(np.where(letters == 2, 2, 1))))
    drift = l_arr[fvals[1:]] - np.arange(1, n_max + 1)
    assert set(np.unique(drift).tolist()) == {0, 1}


def test_limits_pass_at_adequate_scale():
    cfg = SweepConfig(k_min=1, k_max=4, n_max=100_000, n_small=1000)
    rep = run_checks(["limits"], cfg)[0]
    assert rep.status == "pass", rep.to_dict()


def test_reports_serialize_and_render(small_reports):
    for rep in small_reports.values():
        blob = json.dumps(rep.to_dict())
        parsed = json.loads(blob)
        assert parsed["name"] == rep.name
        line = rep.render_text()
        assert rep.name in line
        assert line.startswith(("[PASS]", "[FAIL]"))


def test_threads_do_not_change_results():
    cfg1 = SweepConfig(k_min=1, k_max=4, n_max=800, n_small=100, threads=1)
    cfg2 = SweepConfig(k_min=1, k_max=4, n_max=800, n_small=100, threads=3)
    for name in ("bracketing", "monotone-l", "count-identities"):
        a = run_checks([name], cfg1)[0].to_dict()
        b = run_checks([name], cfg2)[0].to_dict()
        a.pop("elapsed"), b.pop("elapsed")
        assert a == b


def test_deep_iterate_flip_has_a_real_counterexample():
    # The conjectured comparison F_k^j <= F_{k+1}^{j+1} for j > 2k fails
    # at the boundary depth j = 2k+1; the smallest witness is k=4, n=132.
    cfg = SweepConfig(k_min=4, k_max=4, n_max=300, n_small=50)
    rep = run_checks(["iterate-flip"], cfg)[0]
    assert rep.status == "fail"
    cx = rep.first_counterexample
    assert (cx["k"], cx["j"], cx["n"]) == (4, 9, 132)
    assert cx["lhs_value"] == 8 and cx["rhs_value"] == 7
    replay = reverify_counterexample(cx)
    assert replay["matches_recorded"]
    assert replay["violation_confirmed"]
    assert rep.render_text().startswith("[FAIL]")


def test_flip_counterexamples_merge_smallest_k_first():
    cfg = SweepConfig(k_min=1, k_max=5, n_max=300, n_small=50)
    rep = run_checks(["iterate-flip"], cfg)[0]
    assert rep.first_counterexample["k"] == 4  # k=5 also fails, at n=186
    assert rep.details["k=4"] == {"halted_at_j": 9}
    assert rep.details["k=5"] == {"halted_at_j": 11}
    # smaller k survive their whole depth range
    assert rep.details["k=3"]["clean_for_j"] == "7..11"


def test_crossover_stays_clean_despite_the_flip():
    # Dominance at j = k+1 is a separate claim and holds on this range.
    cfg = SweepConfig(k_min=1, k_max=5, n_max=2000, n_small=100)
    rep = run_checks(["iterate-crossover"], cfg)[0]
    assert rep.status == "exhausted"
    assert rep.first_counterexample is None


def test_reverify_rejects_fudged_values():
    cx = {"op": "<=", "lhs": ["f", 4, 9, 132], "lhs_value": 8,
          "rhs": ["f", 5, 10, 132], "rhs_value": 9}
    replay = reverify_counterexample(cx)
    assert not replay["matches_recorded"]  # rhs really recomputes to 7
    assert replay["rhs_recomputed"] == 7


def test_reverify_simple_relations():
    true_violation = {"op": "==", "lhs": ["f", 2, 1, 5], "lhs_value": 3,
                      "rhs": ["const", 4], "rhs_value": 4}
    replay = reverify_counterexample(true_violation)
    assert replay["matches_recorded"] and replay["violation_confirmed"]

    not_a_violation = {"op": "==", "lhs": ["f", 2, 1, 5], "lhs_value": 3,
                       "rhs": ["const", 3], "rhs_value": 3}
    replay = reverify_counterexample(not_a_violation)
    assert replay["matches_recorded"] and not replay["violation_confirmed"]


def test_reverify_within_tolerance_ops():
    cx = {"op": "within", "lhs": ["const_f", 0.5], "lhs_value": 0.5,
          "rhs": ["const_f", 0.75], "rhs_value": 0.75, "tol_abs": 0.1}
    replay = reverify_counterexample(cx)
    assert replay["violation_confirmed"]  # |0.5 - 0.75| > 0.1

    cx["tol_abs"] = 0.5
    assert not reverify_counterexample(cx)["violation_confirmed"]


def test_single_check_by_name():
    reports = run_checks(["prefix-gaps"], SMALL)
    assert len(reports) == 1
    assert reports[0].name == "prefix-gaps"
    assert reports[0].status == "pass"
    assert "k=3" in reports[0].details
