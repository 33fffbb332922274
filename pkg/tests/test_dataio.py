import numpy as np
import pytest

from portdiv.analysis import batch_indicators
from portdiv.dataio import (
    OUTPUT_COLUMNS,
    OutputTable,
    format_number,
    load_labels,
    load_matrix,
    load_similarity,
    read_output,
    write_matrix,
    write_output,
)
from portdiv.errors import DiversityError, ParseError, ShapeError
from portdiv.measures import indicator_record


def write(tmp_path, name, text, newline="\n"):
    p = tmp_path / name
    p.write_bytes(text.replace("\n", newline).encode())
    return p


def test_load_single_line(tmp_path):
    m = load_matrix(write(tmp_path, "m.csv", "1,2,3"))
    assert m.shape == (1, 3)
    np.testing.assert_array_equal(m.values, [[1, 2, 3]])


def test_load_ragged(tmp_path):
    with pytest.raises(ParseError, match="line 2"):
        load_matrix(write(tmp_path, "m.csv", "1,2\n3\n"))


def test_load_negative_names_line_and_column(tmp_path):
    with pytest.raises(ParseError, match="line 2, column 3"):
        load_matrix(write(tmp_path, "m.csv", "1,2,3\n4,5,-6\n"))


def test_load_non_numeric(tmp_path):
    with pytest.raises(ParseError, match="line 1, column 2"):
        load_matrix(write(tmp_path, "m.csv", "1,x\n"))


def test_load_rejects_header_row(tmp_path):
    with pytest.raises(ParseError, match="line 1"):
        load_matrix(write(tmp_path, "m.csv", "a,b\n1,2\n"))


def test_load_empty(tmp_path):
    with pytest.raises(ParseError, match="empty"):
        load_matrix(write(tmp_path, "m.csv", ""))


@pytest.mark.parametrize("newline", ["\n", "\r\n"])
@pytest.mark.parametrize("trailing", ["", "\n"])
def test_line_endings(tmp_path, newline, trailing):
    m = load_matrix(write(tmp_path, "m.csv", "1,2\n3,4" + trailing, newline))
    np.testing.assert_array_equal(m.values, [[1, 2], [3, 4]])


def test_sample_matrix_corrected(data_dir):
    m = load_matrix(data_dir / "sample_matrix_corrected.csv")
    assert m.shape == (11, 5)
    assert m.values[1].tolist() == [2, 1, 0, 0, 5]


def test_sample_matrix_verbatim_rejected(data_dir):
    with pytest.raises(ParseError, match="line 5 has 4 fields, expected 5"):
        load_matrix(data_dir / "sample_matrix_verbatim.csv")


def test_load_similarity_sample(data_dir):
    s = load_similarity(data_dir / "sample_sim.csv")
    assert s.shape == (5, 5)
    assert s[1, 0] == 0.627 and s[1, 4] == 0.219


def test_load_similarity_non_square(tmp_path):
    p = write(tmp_path, "s.csv", "1,0,0,0\n0,1,0,0\n0,0,1,0\n")
    with pytest.raises(ShapeError):
        load_similarity(p)


def test_load_similarity_identity(tmp_path):
    s = load_similarity(write(tmp_path, "s.csv", "1,0\n0,1\n"))
    np.testing.assert_array_equal(s, np.eye(2))


def test_labels(tmp_path):
    p = write(tmp_path, "l.txt", "Paris\nBoston\n", "\r\n")
    assert load_labels(p, 2) == ["Paris", "Boston"]
    with pytest.raises(ParseError):
        load_labels(p, 3)
    m = write(tmp_path, "m.csv", "1,2\n")
    assert load_matrix(m, labels=p).labels == ["Paris", "Boston"]


def test_format_number():
    assert format_number(0.1) == "0.1"
    assert format_number(-0.0) == "0.0"
    assert format_number(7) == "7"
    assert format_number(None) == ""
    assert float(format_number(1 / 3)) == 1 / 3


def test_matrix_round_trip(tmp_path, rng):
    a = rng.uniform(0, 1e3, (12, 7)) * (rng.uniform(size=(12, 7)) < 0.6)
    a[0, 0] = 1e-300
    a[1, 1] = 123456789.123456789
    write_matrix(a, tmp_path / "a.csv")
    np.testing.assert_array_equal(load_matrix(tmp_path / "a.csv").values, a)


def test_write_output_fixture(tmp_path, d4):
    table = OutputTable([indicator_record(1, [3, 1, 0, 0], d4)])
    write_output(table, tmp_path / "out.csv")
    lines = (tmp_path / "out.csv").read_text().splitlines()
    assert lines[0] == ",".join(OUTPUT_COLUMNS)
    assert lines[1].startswith("1,,0.1875,0.0625,0.25,0.375,")
    assert lines[1].endswith(",2.0,0.5,4,2,0.5")


def test_write_output_empty(tmp_path):
    with pytest.raises(DiversityError, match="no columns analyzed"):
        write_output(OutputTable([]), tmp_path / "out.csv")
    assert not (tmp_path / "out.csv").exists()


def test_write_output_two_columns_and_round_trip(tmp_path, d4):
    m = np.array([[3, 0], [1, 0], [0, 0], [0, 0]], dtype=float)
    table = batch_indicators(m, d4, labels=["a", "b,c"])
    write_output(table, tmp_path / "out.csv")
    lines = (tmp_path / "out.csv").read_text().splitlines()
    assert [line.split(",")[0] for line in lines[1:]] == ["1", "2"]
    back = read_output(tmp_path / "out.csv")
    assert back.records == table.records
    assert back.labels == ["a", "b,c"]
    assert back.records[1].coeff_variation is None


def test_write_output_deterministic(tmp_path, d4, rng):
    m = rng.integers(0, 5, (4, 6)).astype(float)
    table = batch_indicators(m, d4)
    write_output(table, tmp_path / "a.csv")
    write_output(batch_indicators(m.copy(), d4.copy()), tmp_path / "b.csv")
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_read_output_bad_header(tmp_path):
    with pytest.raises(ParseError, match="header"):
        read_output(write(tmp_path, "x.csv", "a,b\n1,2\n"))
