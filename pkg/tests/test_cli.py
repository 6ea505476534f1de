import csv
import io
import json

import pytest

from qsync.cli import UsageError, build_parser, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("1,3,7") == [1, 3, 7]
    assert parse_range("1:5") == [1, 2, 3, 4, 5]
    assert parse_range("1:9:2,3") == [1, 3, 5, 7, 9]
    for bad in ("", "a", "1:2:0", "1:2:3:4"):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_parser_shape():
    args = build_parser().parse_args(["enumerate", "bch", "--n", "31", "--a", "1", "--b", "3", "--budget", "20"])
    assert (args.command, args.family, args.n, args.budget) == ("enumerate", "bch", "31", 20)


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "14")
    assert code == 0
    assert out.splitlines()[1:] == ["  (x+1)^2    hex 3", "  (x^3+x+1)^2    hex b", "  (x^3+x^2+1)^2    hex d"]
    code, out, _ = run(capsys, "factor", "14", "--format", "json")
    assert json.loads(out)["factors"]["1"]["multiplicity"] == 2


def test_order(capsys):
    assert run(capsys, "order", "b") == (0, "x^3+x+1\t7\n", "")
    code, out, _ = run(capsys, "order", "x^6+x^2+1", "--format", "json")
    assert json.loads(out) == {"poly": "x^6+x^2+1", "hex": "45", "order": 14}


def test_order_bad_input(capsys):
    code, _, err = run(capsys, "order", "y^2")
    assert code == 2 and "cannot parse polynomial" in err
    assert run(capsys, "order", "0")[0] == 2


def test_cosets(capsys):
    assert run(capsys, "cosets", "1") == (0, "n = 1:\n  {0}\n", "")
    assert run(capsys, "cosets", "8")[0] == 2


def test_enumerate_bch_text(capsys):
    code, out, _ = run(capsys, "enumerate", "bch", "--n", "31", "--a", "1", "--b", "3", "--format", "text")
    assert code == 0
    assert out.startswith("bch") and "[[31+al+ar, 11]]" in out and "a_l+a_r < 5" in out


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "rr-duadic", "--m", "7", "--i", "1:2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["n"] for r in rows] == ["14", "28"]
    assert rows[0]["k_stated"] == "6" and rows[0]["certificate"] == "PASS"


def test_enumerate_is_deterministic(capsys):
    argv = ("enumerate", "pair", "--n", "7,15")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert len(json.loads(first[1])) > 3


def test_emit_then_verify(tmp_path, capsys):
    path = tmp_path / "recs.json"
    for argv in (
        ("enumerate", "bch", "--n", "31,63", "--a", "1,3", "--b", "3,5"),
        ("enumerate", "rr4n", "--n", "7"),
        ("enumerate", "duadic", "--m", "7,23", "--corollary"),
        ("enumerate", "product", "--n", "7", "--n-star", "9", "--g1", "17", "--g2", "1", "--g3", "db", "--g4", "1"),
    ):
        code, _, _ = run(capsys, *argv, "--out", str(path))
        assert code == 0
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0, out
        assert out.strip().endswith("records verified")


def test_verify_tampered(tmp_path, capsys):
    path = tmp_path / "recs.json"
    run(capsys, "enumerate", "bch", "--n", "31", "--a", "1", "--b", "3", "--out", str(path))
    recs = json.loads(path.read_text())
    recs[0]["gD_hex"] = format(int(recs[0]["gD_hex"], 16) ^ 2, "x")
    path.write_text(json.dumps(recs))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "FAIL" in out and "divides_xn1(D)" in out


def test_verify_missing_file(tmp_path, capsys):
    assert run(capsys, "verify", str(tmp_path / "nope.json"))[0] == 2


def test_hypothesis_failure_exit(capsys):
    code, _, err = run(capsys, "enumerate", "bch", "--n", "15", "--a", "1", "--b", "3")
    assert code == 1 and "b < r = 3" in err


def test_partial_grid_skips(capsys):
    code, out, err = run(capsys, "enumerate", "bch", "--n", "31", "--a", "1:5", "--b", "3:5")
    assert code == 0 and "skipped" in err
    assert len(json.loads(out)) == 3  # (1,3), (1,5), (3,5)
    code, _, _ = run(capsys, "enumerate", "bch", "--n", "31", "--a", "1:5", "--b", "3:5", "--strict")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("enumerate", "nope"),
        ("enumerate", "sum", "--n", "7"),
        ("enumerate", "bch", "--n", "31"),
        ("enumerate", "rr4n"),
        ("table1", "--budget", "-1"),
        (),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_table1_cli(capsys):
    code, out, _ = run(capsys, "table1", "--format", "json", "--budget", "26")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 9
    assert all(r["status"] == "PASS" for r in rows)
    assert [r["d_source"] for r in rows].count("claimed") == 3
