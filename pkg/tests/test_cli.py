"""Command-line behaviors: formats, exit codes, determinism."""

import csv
import io
import json
from pathlib import Path

import pytest

from hoflab.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_text(capsys):
    code, out, _ = run(capsys, "seq", "--k", "2", "--n", "5")
    assert code == 0
    assert out.strip() == "0,1,1,2,3,3"


def test_seq_deep_iterate_of_k1(capsys):
    code, out, _ = run(capsys, "seq", "--k", "1", "--j", "3", "--n", "8")
    assert code == 0
    assert out.strip() == "0,1,1,1,1,1,1,1,1"


def test_seq_formats_agree(capsys):
    _, text, _ = run(capsys, "seq", "--k", "3", "--n", "12")
    _, js, _ = run(capsys, "seq", "--k", "3", "--n", "12", "--format", "json")
    _, cs, _ = run(capsys, "seq", "--k", "3", "--n", "12", "--format", "csv")
    _, bf, _ = run(capsys, "seq", "--k", "3", "--n", "12", "--format", "bfile")
    values = [int(v) for v in text.strip().split(",")]
    assert [r["value"] for r in json.loads(js)] == values
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert [int(r["value"]) for r in rows] == values
    assert [int(line.split()[1]) for line in bf.strip().splitlines()] == values


def test_seq_requires_a_range(capsys):
    code, _, err = run(capsys, "seq", "--k", "2")
    assert code == 2
    assert "requires --n" in err


def test_word_text_and_positions(capsys):
    code, out, _ = run(capsys, "word", "--k", "3", "--n", "12")
    assert code == 0
    assert out.strip() == "3,1,2,3,3,1,3,1,2,3,1,2"
    _, bf, _ = run(capsys, "word", "--k", "3", "--n", "3", "--format", "bfile")
    assert bf.splitlines() == ["1 3", "2 1", "3 2"]  # positions are 1-based


def test_counts_text(capsys):
    code, out, _ = run(capsys, "counts", "--k", "2", "--n", "10")
    assert code == 0
    assert "letter 1: 4" in out
    assert "letter 2: 6" in out


def test_roots_table(capsys):
    code, out, _ = run(capsys, "roots", "--kmax", "2")
    assert code == 0
    assert "0.6180339887499" in out
    assert "1.6180339887499" in out
    code, js, _ = run(capsys, "roots", "--k", "3", "--format", "json")
    rec = json.loads(js)[0]
    assert rec["alpha"] == "0.6823278038280"


def test_plot_data_csv(capsys):
    code, out, _ = run(capsys, "plot-data", "--kmin", "3", "--kmax", "5",
                       "--nmax", "30")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 31
    assert rows[30] == {"n": "30", "F_3": "20", "F_4": "22", "F_5": "23"}


def test_check_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "check", "bracketing", "prefix-gaps",
                       "--kmax", "3", "--nmax", "400", "--nsmall", "100")
    assert code == 0
    assert out.count("[PASS]") == 2


def test_check_failure_exit_one(capsys):
    code, out, _ = run(capsys, "check", "iterate-flip",
                       "--kmin", "4", "--kmax", "4", "--nmax", "300",
                       "--nsmall", "50")
    assert code == 1
    assert "[FAIL]" in out
    assert "counterexample" in out


def test_check_json_format(capsys):
    code, out, _ = run(capsys, "check", "galois", "--kmax", "2",
                       "--nmax", "200", "--nsmall", "50", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["name"] == "galois"
    assert reports[0]["status"] == "pass"


def test_check_unknown_name(capsys):
    code, _, err = run(capsys, "check", "bogus")
    assert code == 2
    assert "unknown check" in err


def test_oeis_diff_match(capsys):
    code, out, _ = run(capsys, "oeis-diff", str(DATA / "b005206.txt"),
                       "--k", "2")
    assert code == 0
    assert "MATCH" in out
    assert "direct" in out and "shift +0" in out


def test_oeis_diff_mismatch(capsys):
    code, out, _ = run(capsys, "oeis-diff", str(DATA / "b005206.txt"),
                       "--k", "4")
    assert code == 1
    assert "NO MATCH" in out
    assert "first mismatch" in out


def test_oeis_diff_missing_file(capsys):
    code, _, err = run(capsys, "oeis-diff", "/no/such/file", "--k", "2")
    assert code == 2
    assert "error:" in err


def test_oeis_diff_round_trip_through_emit(tmp_path, capsys):
    _, bf, _ = run(capsys, "seq", "--k", "5", "--n", "150",
                   "--format", "bfile")
    path = tmp_path / "b_local.txt"
    path.write_text(bf)
    code, out, _ = run(capsys, "oeis-diff", str(path), "--k", "5")
    assert code == 0
    assert "MATCH" in out


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["seq"])  # missing required --k
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "seq", "--k", "4", "--n", "100", "--format", "json")
    b = run(capsys, "seq", "--k", "4", "--n", "100", "--format", "json")
    assert a == b
