import csv

import pytest

from dynmwis.cli import main


@pytest.fixture
def path_graph(tmp_path):
    p = tmp_path / "p5.graph"
    p.write_text("5 4\n2\n1 3\n2 4\n3 5\n4\n")
    return p


@pytest.fixture
def tiny_seq(tmp_path):
    p = tmp_path / "tiny.seq"
    p.write_text("n 4\ni 0 1\ni 1 2\ni 2 3\ni 3 0\nd 1 2\ni 1 1\n")
    return p


def test_run_prints_summary(path_graph, capsys):
    assert main(["run", "--input", str(path_graph), "--algo", "one-strong", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "cardinality=3" in out and "total_time=" in out and "mean_time=" in out


def test_run_sequence_and_csv(tiny_seq, tmp_path, capsys):
    csv_path = tmp_path / "rows.csv"
    assert main(["run", "--input", str(tiny_seq), "--algo", "deggreedy", "--csv", str(csv_path)]) == 0
    rows = list(csv.DictReader(csv_path.open()))
    assert len(rows) == 5
    assert list(rows[0]) == ["update_index", "kind", "greedy_added", "solved", "solver_optimal", "weight",
                             "cardinality", "elapsed_ns"]
    assert "obsolete=1" in capsys.readouterr().out


def test_csv_is_reproducible(tiny_seq, tmp_path):
    def rows(name):
        p = tmp_path / name
        main(["run", "--input", str(tiny_seq), "--weighted", "--weight-seed", "3", "--csv", str(p)])
        return [r[:-1] for r in csv.reader(p.open())]

    assert rows("a.csv") == rows("b.csv")


def test_custom_algorithm_and_trace(path_graph, capsys):
    args = ["run", "--input", str(path_graph), "--algo", "one-custom", "--d", "4", "--numax", "2500",
            "--no-pinch", "--rare-x", "2", "--trace", "--tlimit", "0", "--repeat", "2"]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert out.count("instance=p5") == 2 and "update_index=1" in out


def test_weighted_file_weights(tmp_path, capsys):
    p = tmp_path / "w.graph"
    p.write_text("3 2 10\n1 2\n5 1 3\n1 2\n")
    assert main(["run", "--input", str(p), "--weighted", "--algo", "one-strong"]) == 0
    assert "weight=5" in capsys.readouterr().out


def test_verify(tiny_seq, capsys):
    assert main(["verify", "--input", str(tiny_seq), "--every", "1", "--algo", "one-fast"]) == 0
    assert capsys.readouterr().out.startswith("OK tiny")


def test_oracle(tiny_seq, capsys):
    assert main(["oracle", "--input", str(tiny_seq)]) == 0
    assert capsys.readouterr().out.strip() == "alpha=2 size=2 set=0 2"


@pytest.mark.parametrize(
    "extra",
    [
        ["--weight-seed", "3"],
        ["--d", "3"],
        ["--csv", "x.csv", "--repeat", "2"],
    ],
)
def test_conflicting_flags(path_graph, extra, capsys):
    assert main(["run", "--input", str(path_graph), *extra]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["run", "--input", "/nonexistent/file.graph"]) == 2
    assert "not found" in capsys.readouterr().err


def test_malformed_file(tmp_path, capsys):
    p = tmp_path / "bad.graph"
    p.write_text("2 1\n3\n1\n")
    assert main(["run", "--input", str(p)]) == 1
    assert "bad.graph:2" in capsys.readouterr().err


def test_oracle_refuses_large_inputs(tmp_path, capsys):
    p = tmp_path / "big.seq"
    p.write_text("n 40\ni 0 1\n")
    assert main(["oracle", "--input", str(p)]) == 2
