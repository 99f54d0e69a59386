import csv
import io
import json

import pytest

from bjacobsthal.cli import OUTPUT_DIR_ENV, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seq_integer_rows(capsys):
    code, out, _ = run(capsys, "seq", "--abc", "1", "2", "3", "--range", "0", "2", "--x", "2")
    assert code == 0
    assert [row["components"] for row in json.loads(out)] == [[0, 1, 1, 2], [1, 1, 2, 5], [1, 2, 5, 9]]


def test_seq_symbolic_initial_value(capsys):
    code, out, _ = run(capsys, "seq", "--range", "0", "0")
    assert code == 0
    assert json.loads(out) == [{"n": 0, "components": [[], [1], [-1, 1], [0, -1, 1]]}]


def test_seq_at_one_is_allowed(capsys):
    code, out, _ = run(capsys, "seq", "--range", "5", "5", "--x", "1")
    assert code == 0
    assert json.loads(out)[0]["n"] == 5


def test_seq_negative_index_and_fraction(capsys):
    code, out, _ = run(capsys, "seq", "--range", "-2", "-2", "--x", "1/2")
    assert code == 0
    # BJ(-2) = (1/x, 0, 0, 1) for (1,2,3)
    assert json.loads(out)[0]["components"] == [2, 0, 0, 1]


def test_seq_csv(capsys):
    code, out, _ = run(capsys, "seq", "--range", "0", "1", "--x", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "w", "j1", "j2", "j3"]
    assert rows[2] == ["1", "1", "1", "2", "5"]
    code, out, _ = run(capsys, "seq", "--range", "0", "0", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["n", "component", "den"]
    assert rows[3] == ["0", "j2", "1", "-1", "1", "0"]


@pytest.mark.parametrize(
    "argv",
    [
        ("seq", "--range", "3", "1"),
        ("seq", "--abc", "0", "2", "3"),
        ("eval", "--object", "partial_sum", "--n", "3", "--x", "1"),
        ("eval", "--object", "partial_sum_scalar", "--n", "3", "--x", "1"),
        ("eval", "--object", "T", "--n", "0", "--x", "2"),
        ("matrix", "--n", "-1"),
        ("series", "--N", "-1"),
    ],
)
def test_usage_and_domain_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


@pytest.mark.parametrize("bad", ["0.5", "1e3", "abc", "1/0"])
def test_non_exact_x_rejected(capsys, bad):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "--x", bad])
    assert exc.value.code == 2


def test_verify_single_cassini(capsys):
    code, out, _ = run(capsys, "verify", "--only", "cassini", "--n", "1", "--abc", "1", "2", "3")
    assert code == 0
    summary = json.loads(out)["summary"]
    assert summary["total"] == 1 and summary["passed"] == 1


def test_verify_printed_denominator_fails(capsys):
    code, out, _ = run(capsys, "verify", "--only", "genfunc", "--printed-denominator", "--abc", "1", "2", "3")
    assert code == 1
    first = json.loads(out)["summary"]["first_failure"]
    assert first["identity"] == "genfunc"
    assert first["detail"] == "first mismatching coefficient: t^2"


def test_verify_full_reports(capsys):
    code, out, _ = run(
        capsys, "verify", "--only", "vajda", "--n", "2", "--p", "1", "--q", "2", "--abc", "1", "2", "3", "--full"
    )
    assert code == 0
    reports = json.loads(out)["reports"]
    assert [r["identity"] for r in reports] == ["vajda_bj", "vajda_z"]
    assert all("lhs" in r for r in reports)


def test_series_matches_seq(capsys):
    _, series_out, _ = run(capsys, "series", "--N", "5", "--abc", "1", "2", "3", "--x", "2")
    _, seq_out, _ = run(capsys, "seq", "--range", "0", "5", "--abc", "1", "2", "3", "--x", "2")
    assert json.loads(series_out) == [row["components"] for row in json.loads(seq_out)]
    _, series_sym, _ = run(capsys, "series", "--N", "4", "--abc", "2", "1", "3")
    _, seq_sym, _ = run(capsys, "seq", "--range", "0", "4", "--abc", "2", "1", "3")
    assert json.loads(series_sym) == [row["components"] for row in json.loads(seq_sym)]


def test_matrix_zero_power(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "0")
    assert code == 0
    data = json.loads(out)
    assert data["Q_pow"] == [[[1], [], []], [[], [1], []], [[], [], [1]]]
    assert data["column_relation"] is None
    assert data["matrix_identity"]["equal"] is True


def test_matrix_at_two(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "1", "--x", "2")
    assert code == 0
    data = json.loads(out)
    assert data["Q_pow"] == [[1, 1, 2], [1, 0, 0], [0, 1, 0]]
    assert data["column_relation"]["equal"] is True


def test_eval_objects(capsys):
    code, out, _ = run(capsys, "eval", "--object", "partial_sum", "--n", "3", "--x", "2")
    assert code == 0
    assert json.loads(out)["value"] == [4, 9, 17, 34]
    _, out, _ = run(capsys, "eval", "--object", "J", "--n", "8", "--x", "2")
    assert json.loads(out)["value"] == 73
    _, out, _ = run(capsys, "eval", "--object", "T", "--n", "3", "--x", "2")
    assert json.loads(out)["value"] == [1, 3, 4, 9]
    _, out, _ = run(capsys, "eval", "--object", "J", "--n", "-2", "--x", "1/3")
    assert json.loads(out)["value"] == 3
    _, out, _ = run(capsys, "eval", "--object", "partial_sum_scalar", "--n", "8", "--x", "2")
    assert json.loads(out)["value"] == 0 + 1 + 1 + 2 + 5 + 9 + 18 + 37 + 73


def test_deterministic_output(capsys):
    argv = ("verify", "--only", "docagne", "catalan", "--n", "3", "--abc", "2", "1", "3", "--full")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_out_path_uses_env_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "seq", "--range", "0", "1", "--out", "sub/seq.json")
    assert code == 0 and out == ""
    data = json.loads((tmp_path / "sub" / "seq.json").read_text())
    assert [row["n"] for row in data] == [0, 1]
    absolute = tmp_path / "abs.json"
    main(["series", "--N", "1", "--out", str(absolute)])
    assert json.loads(absolute.read_text())[0] == [[], [1], [-1, 1], [0, -1, 1]]
