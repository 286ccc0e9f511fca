"""b-file parsing, emission, and offset-convention detection."""

import math
from pathlib import Path

import numpy as np
import pytest

from hoflab.oeis import BFile, diff_bfile, emit_bfile, load_bfile, parse_bfile
from hoflab.recurrences import build_f_table

DATA = Path(__file__).parent / "data"

# Local term files for the OEIS catalog entries, generated from
# independent implementations (closed form for k=2, naive memoized
# recursion for the rest).  Each pairs with the k it should match.
CATALOG = [
    ("b005206.txt", 2),
    ("b005374.txt", 3),
    ("b005375.txt", 4),
    ("b005376.txt", 5),
    ("b100721.txt", 6),
]


def g_closed(n: int) -> int:
    m = n + 1
    return (math.isqrt(5 * m * m) - m) // 2


def test_parse_skips_comments_and_blanks():
    bf = parse_bfile("# header\n\n0 0\n1 1\n2 1\n\n# tail\n3 2\n", "A005206")
    assert bf.seq_id == "A005206"
    assert bf.start == 0
    assert bf.values.tolist() == [0, 1, 1, 2]
    assert bf.indices.tolist() == [0, 1, 2, 3]
    assert len(bf) == 4


def test_parse_rejects_malformed_input():
    with pytest.raises(ValueError, match="does not follow"):
        parse_bfile("0 0\n2 1\n")
    with pytest.raises(ValueError, match="expected 'index value'"):
        parse_bfile("zero zero\n")
    with pytest.raises(ValueError, match="no data lines"):
        parse_bfile("# only comments\n")


def test_emit_parse_round_trip():
    bf = parse_bfile("5 10\n6 11\n7 13\n")
    text = emit_bfile(bf)
    assert text == "5 10\n6 11\n7 13\n"
    again = parse_bfile(text)
    assert again.start == bf.start
    assert again.values.tolist() == bf.values.tolist()


def test_values_are_read_only():
    bf = parse_bfile("0 0\n1 1\n")
    with pytest.raises(ValueError):
        bf.values[0] = 9


def test_load_infers_sequence_id(tmp_path):
    path = tmp_path / "b005206.txt"
    path.write_text("0 0\n1 1\n2 1\n3 2\n4 3\n5 3\n")
    bf = load_bfile(str(path))
    assert bf.seq_id == "A005206"


@pytest.mark.parametrize("fname,k", CATALOG)
def test_catalog_files_match_directly(fname, k):
    bf = load_bfile(str(DATA / fname))
    result = diff_bfile(bf, k)
    assert result["match"] is not None
    assert result["match"]["kind"] == "direct"
    assert result["match"]["shift"] == 0
    assert result["match"]["mismatches"] == 0
    assert result["match"]["checked"] == len(bf)


def test_catalog_k2_file_agrees_with_closed_form():
    bf = load_bfile(str(DATA / "b005206.txt"))
    for i, v in zip(bf.indices, bf.values):
        assert v == g_closed(int(i))


def test_detects_shifted_convention():
    fvals = build_f_table(3, 300).values
    shifted = np.array([fvals[i + 1] - 1 for i in range(250)])
    result = diff_bfile(BFile("", 0, shifted), 3)
    assert result["match"]["kind"] == "shifted"
    assert result["match"]["shift"] == 0


def test_detects_index_offset():
    # Same values but indexed from 1: a(i) = F_2(i-1).
    text = "".join(f"{i} {g_closed(i - 1)}\n" for i in range(1, 120))
    result = diff_bfile(parse_bfile(text), 2)
    assert result["match"]["kind"] == "direct"
    assert result["match"]["shift"] == -1


def test_mismatch_is_reported_not_shifted_away():
    vals = np.array([g_closed(i) for i in range(100)])
    vals[50] += 1
    result = diff_bfile(BFile("", 0, vals), 2)
    assert result["match"] is None
    best = result["candidates"][0]
    assert best["mismatches"] == 1
    assert best["first_mismatch"]["index"] == 50
    assert best["first_mismatch"]["file_value"] == best["first_mismatch"]["computed"] + 1


def test_wrong_k_does_not_match():
    bf = load_bfile(str(DATA / "b005206.txt"))
    assert diff_bfile(bf, 3)["match"] is None


def test_short_files_match_but_report_their_scrutiny():
    # A two-term file can only ever be checked on two terms; the match is
    # allowed (the whole file agrees) but "checked" exposes how little
    # evidence that is.
    bf = parse_bfile("0 0\n1 1\n")
    result = diff_bfile(bf, 2, min_checked=5)
    assert result["match"] is not None
    assert result["match"]["checked"] == 2


def test_empty_bfile_rejected():
    with pytest.raises(ValueError):
        diff_bfile(BFile("", 0, np.zeros(0, dtype=np.int64)), 2)
