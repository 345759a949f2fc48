import csv
import io
import json
import subprocess
import sys

import pytest
from conftest import FIXTURES

from thresholdkit.cli import main


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return json.loads(text)


def test_convert_graph_to_all():
    assert run("convert", "--from", "graph", "--n", "5", "--sigma", "1,2,4", "--to", "all") == (
        0,
        '{"n":5,"sigma":[1,2,4],"betti":[7,11,6,1,0],"alhc":[1,2,3,1,0]}\n',
    )


def test_convert_examples():
    assert run_json("convert", "--from", "alhc", "--values", "1,2,2", "--to", "betti") == {"betti": [5, 6, 2]}
    assert run_json("convert", "--from", "betti", "--values", "2,1", "--to", "graph") == {"n": 2, "sigma": [2]}
    assert run_json("convert", "--from", "betti", "--values", "7,11,6,1,0", "--to", "alhc") == {
        "alhc": [1, 2, 3, 1, 0],
        "t": 1,
    }
    assert run_json("convert", "--from", "graph", "--n", "3", "--sigma", "", "--to", "graph") == {"n": 3, "sigma": []}


@pytest.mark.parametrize(
    "argv",
    [
        ("convert", "--from", "betti", "--values", "2,2"),
        ("convert", "--from", "alhc", "--values", "2,1"),
        ("convert", "--from", "alhc", "--values", "1,0,1"),
    ],
)
def test_convert_semantic_failures_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("convert", "--from", "betti", "--values", "a,b"),
        ("convert", "--from", "betti", "--values", ""),
        ("convert", "--from", "graph", "--n", "3", "--sigma", "0,1"),
        ("convert", "--from", "graph", "--sigma", "1"),
        ("convert", "--from", "nowhere", "--values", "1"),
    ],
)
def test_convert_malformed_exit_1(argv):
    assert run(*argv)[0] == 1


def _table_rows(n):
    return json.loads(run("enumerate", "--n", str(n), "--format", "json")[1])["rows"]


def test_enumerate_table_1_csv():
    code, text = run("enumerate", "--n", "3", "--format", "csv")
    assert code == 0
    assert text == (FIXTURES / "table1.csv").read_text()


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_enumerate_csv_and_json_agree(n):
    rows = _table_rows(n)
    assert len(rows) == 2**n
    parsed = list(csv.DictReader(io.StringIO(run("enumerate", "--n", str(n), "--format", "csv")[1])))

    def split(cell):
        return [int(x) for x in cell.split(";")] if cell else []

    assert [
        {"sigma": split(r["sigma"]), "betti": split(r["betti"]), "alhc": split(r["alhc"])} for r in parsed
    ] == rows
    assert all(r["n"] == str(n) for r in parsed)


def test_enumerate_table_2_leaves():
    table = json.loads((FIXTURES / "table2.json").read_text())
    rows = _table_rows(4)
    assert sorted(r["betti"] for r in rows) == sorted(table["betti"]["4"])
    assert sorted(r["alhc"] for r in rows) == sorted(table["alhc"]["4"])


def test_enumerate_budget():
    assert run("enumerate", "--n", "17")[0] == 1
    assert run("enumerate", "--n", "0")[0] == 1


def test_cli_round_trip_over_fixtures():
    for n in range(1, 5):
        for row in _table_rows(n):
            sigma = ",".join(map(str, row["sigma"]))
            betti = run_json("convert", "--from", "graph", "--n", str(n), "--sigma", sigma, "--to", "betti")["betti"]
            back = run_json("convert", "--from", "betti", "--values", ",".join(map(str, betti)), "--to", "graph")
            assert back == {"n": n, "sigma": row["sigma"]}


def test_expect_examples():
    assert run_json("expect", "--n", "4", "--p", "1/2", "--stat", "betti", "--method", "closed")["values"] == [
        "5", "15/2", "35/8", "15/16"
    ]
    report = run_json("expect", "--n", "3", "--p", "1/2", "--stat", "alhc", "--method", "enumerate")
    assert report == {"statistic": "alhc", "method": "enumerate", "n": 3, "p": "1/2", "values": ["7/8", "5/4", "7/8"]}
    assert run_json("expect", "--n", "5", "--p", "0", "--stat", "projdim", "--method", "closed")["values"] == ["0"]
    assert run_json("expect", "--n", "4", "--p", "2/4", "--stat", "alhc", "--method", "recurrence")["p"] == "1/2"


def test_expect_mc():
    argv = ("expect", "--n", "8", "--p", "0.3", "--stat", "betti", "--method", "mc", "--samples", "2000", "--seed", "42")
    first = run_json(*argv)
    assert first["samples"] == 2000 and first["seed"] == 42 and first["p"] == 0.3
    assert len(first["values"]) == 8
    assert run_json(*argv) == first
    assert run_json("--threads", "3", *argv) == first


@pytest.mark.parametrize(
    "argv",
    [
        ("expect", "--n", "3", "--p", "0.5", "--stat", "betti", "--method", "closed"),
        ("expect", "--n", "3", "--p", "1/2", "--stat", "betti", "--method", "mc", "--samples", "10"),
        ("expect", "--n", "3", "--p", "0.5", "--stat", "betti", "--method", "mc"),
        ("expect", "--n", "17", "--p", "1/2", "--stat", "betti", "--method", "enumerate"),
        ("expect", "--n", "3", "--p", "3/2", "--stat", "betti"),
        ("expect", "--n", "3", "--p", "1/0", "--stat", "betti"),
    ],
)
def test_expect_rejections_exit_1(argv):
    assert run(*argv)[0] == 1


def test_oracle_check():
    assert run("oracle-check", "--max-n", "1") == (0, "2 graphs checked, 0 mismatches\n")
    assert run("oracle-check", "--max-n", "8") == (0, "510 graphs checked, 0 mismatches\n")
    assert run("oracle-check", "--max-n", "13")[0] == 1


def test_oracle_check_reports_mismatch(monkeypatch):
    import thresholdkit.cli as cli

    monkeypatch.setattr(cli, "betti_oracle", lambda T: (0,) * T.n)
    code, text = run("oracle-check", "--max-n", "3")
    assert code == 3
    assert "mismatch at n=1 sigma=[1]" in text


def test_ideal():
    assert run("ideal", "--n", "3", "--sigma", "3", "--format", "plain") == (0, "x0*x3, x1*x3, x2*x3\n")
    assert run("ideal", "--n", "3", "--sigma", "3", "--format", "cas") == (0, "x_0*x_3, x_1*x_3, x_2*x_3\n")
    assert run("ideal", "--n", "3", "--sigma", "") == (0, "")
    code, text = run("ideal", "--n", "5", "--sigma", "1,2,4")
    assert len(text.strip().split(", ")) == 7
    assert run("ideal", "--n", "3", "--sigma", "4")[0] == 1


def test_recognize():
    assert run_json("recognize", "--m", "3", "--edges", "0-1,0-2,0-3,1-2,1-3,2-3") == {"n": 3, "sigma": []}
    edges = "0-3,1-3,2-3,0-5,1-5,2-5,3-5,4-5"
    assert run_json("recognize", "--m", "5", "--edges", edges) == {"n": 5, "sigma": [1, 2, 4]}
    assert run("recognize", "--m", "3", "--edges", "0-3,0-1,1-2")[0] == 2
    assert run("recognize", "--m", "3", "--edges", "0-9")[0] == 1
    assert run("recognize", "--m", "3", "--edges", "2-2")[0] == 1
    assert run_json("recognize", "--m", "2", "--edges", "") == {"n": 2, "sigma": [1, 2]}


def test_alhc_enumerate():
    report = run_json("alhc-enumerate", "--n", "2", "--t", "2")
    assert report["count"] == 9 and len(report["alhc"]) == 9
    code, text = run("alhc-enumerate", "--n", "3", "--format", "csv")
    assert text.splitlines()[0] == "alhc" and len(text.splitlines()) == 9
    assert run("alhc-enumerate", "--n", "30", "--t", "3")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "thresholdkit", "convert", "--from", "alhc", "--values", "1,2,2", "--to", "betti"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"betti":[5,6,2]}\n'
    bad = subprocess.run([sys.executable, "-m", "thresholdkit", "frobnicate"], capture_output=True, text=True)
    assert bad.returncode == 1
