"""Command-line interface: exit codes, report shapes, determinism.

All invocations go through ``kstlab.cli.main`` in-process; byte-identity
checks write reports through ``--out`` and compare file contents.
"""

from __future__ import annotations

import json

import pytest

from kstlab import cycle, complete_bipartite, petersen, serialize, uniform_lists
from kstlab.cli import main
from kstlab.graph import to_edge_list


@pytest.fixture()
def paths(tmp_path):
    c4 = tmp_path / "c4.txt"
    c4.write_text(to_edge_list(cycle(4)))
    k33 = tmp_path / "k33.json"
    k33.write_text(serialize(complete_bipartite(3, 3), "json"))
    pet = tmp_path / "petersen.txt"
    pet.write_text(to_edge_list(petersen()))
    big = tmp_path / "big.txt"
    big.write_text("n=10 m=0\n")
    lists2 = tmp_path / "lists2.json"
    lists2.write_text(uniform_lists(4, [0, 1]).to_json())
    return tmp_path


# --- exit codes -------------------------------------------------------------


def test_check_minor_exit_codes(paths, capsys):
    assert main(["check-minor", str(paths / "c4.txt"), "--s", "2", "--t", "2"]) == 0
    assert main(["check-minor", str(paths / "c4.txt"), "--s", "3", "--t", "3"]) == 1
    assert main(["check-minor", str(paths / "petersen.txt"),
                 "--s", "3", "--t", "3", "--budget", "5"]) == 2
    capsys.readouterr()


def test_check_lcolor_exit_codes(paths, capsys):
    assert main(["check-lcolor", str(paths / "c4.txt"),
                 str(paths / "lists2.json")]) == 0
    # inline JSON lists, too few colors for an odd structure
    assert main(["check-lcolor", str(paths / "k33.json"),
                 '{"lists": [[0], [0], [0], [0], [0], [0]]}']) == 1
    capsys.readouterr()


def test_check_choosable_exit_codes(paths, capsys):
    assert main(["check-choosable", str(paths / "c4.txt"), "--k", "2"]) == 0
    assert main(["check-choosable", str(paths / "k33.json"), "--k", "2"]) == 1
    # cap refusal: 10 vertices over the default 8-vertex cap
    assert main(["check-choosable", str(paths / "big.txt"), "--k", "2"]) == 2
    capsys.readouterr()


def test_build_h_exit_codes(tmp_path, capsys):
    ok = main(["build-h", "--n", "6", "--m", "8", "--eps", "5/6", "--C", "4/3",
               "--delta", "2/3", "--seed", "11", "--mode", "exhaustive"])
    assert ok == 0
    gave_up = main(["build-h", "--n", "6", "--m", "8", "--eps", "5/26",
                    "--C", "3/2", "--delta", "1/2", "--seed", "1",
                    "--max-retries", "4", "--mode", "exhaustive"])
    assert gave_up == 1
    capsys.readouterr()


def test_build_counterexample_exit_codes(tmp_path, capsys):
    assert main(["build-counterexample", "--fixture", "tiny",
                 "--out", str(tmp_path / "ce.json"), "--format", "json"]) == 0
    # cap refusal
    assert main(["build-counterexample", "--fixture", "tiny",
                 "--max-vertices", "5"]) == 2
    # neither --graph nor --fixture
    assert main(["build-counterexample"]) == 3
    capsys.readouterr()


def test_usage_errors_exit_above_two(paths, capsys):
    assert main(["check-minor", "/does/not/exist", "--s", "2", "--t", "2"]) == 3
    assert main(["check-minor", str(paths / "c4.txt"), "--s", "0", "--t", "2"]) == 3
    assert main(["no-such-command"]) == 3
    assert main(["check-minor"]) == 3  # missing required args
    assert main(["bounds", "--eps", "nonsense", "--C", "1", "--n", "5"]) == 3
    # csv unsupported outside experiment
    assert main(["bounds", "--eps", "1/2", "--C", "1", "--n", "5",
                 "--format", "csv"]) == 3
    capsys.readouterr()


# --- report shapes -----------------------------------------------------------


def test_json_report_shape(paths, capsys):
    assert main(["check-minor", str(paths / "c4.txt"), "--s", "2", "--t", "2",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format_version"] == 1
    assert doc["command"] == "check-minor"
    assert doc["result"]["status"] == "found"
    assert doc["result"]["model"] == {"side1": [[0], [2]], "side2": [[1], [3]]}
    # execution-resource flags stay out of the config echo
    assert "threads" not in doc["config"]
    assert "deterministic" not in doc["config"]
    assert doc["config"]["s"] == 2 and doc["config"]["t"] == 2


def test_choosable_json_carries_witness(paths, capsys):
    assert main(["check-choosable", str(paths / "k33.json"), "--k", "2",
                 "--format", "json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["choosable"] is False
    lists = doc["result"]["witness"]["lists"]
    assert len(lists) == 6 and all(len(l) == 2 for l in lists)


def test_bounds_json_values(capsys):
    assert main(["bounds", "--eps", "1/2", "--C", "1", "--n", "10",
                 "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["block_failure_exponent"] == pytest.approx(46.8319,
                                                                    abs=1e-3)
    assert doc["result"]["max_block_size"] == 2
    assert doc["result"]["delta"] == "1/16"


def test_build_counterexample_verification_record(tmp_path):
    out = tmp_path / "ce.json"
    assert main(["build-counterexample", "--fixture", "tiny",
                 "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["result"]["vertices"] == 20
    assert doc["result"]["copies"] == 9
    ver = doc["result"]["verification"]
    assert ver["list_coloring_found"] is None
    assert ver["pigeonhole"] == {"proper_b_colorings": 6, "all_blocked": True}


def test_experiment_csv_shape(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["experiment", "--n", "16,32", "--trials", "4", "--seed", "7",
                 "--delta", "1/2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# config:")
    assert lines[1] == "n,seed,p,max_degree,degree_pass,block_status,block_failures,trials"
    assert len(lines) == 2 + 8
    assert [row.split(",")[0] for row in lines[2:]] == ["16"] * 4 + ["32"] * 4


# --- determinism -------------------------------------------------------------


def _run_to_file(argv, path):
    code = main(argv + ["--out", str(path)])
    return code, path.read_bytes()


def test_reports_byte_identical_across_runs_and_threads(tmp_path):
    base = ["experiment", "--n", "16,32", "--trials", "6", "--seed", "123",
            "--delta", "1/2"]
    c1, b1 = _run_to_file(base + ["--threads", "1", "--deterministic"],
                          tmp_path / "a.csv")
    c2, b2 = _run_to_file(base + ["--threads", "8", "--deterministic"],
                          tmp_path / "b.csv")
    c3, b3 = _run_to_file(base, tmp_path / "c.csv")
    assert c1 == c2 == c3 == 0
    assert b1 == b2 == b3


def test_build_h_byte_identical(tmp_path):
    base = ["build-h", "--n", "6", "--m", "8", "--eps", "5/6", "--C", "4/3",
            "--delta", "2/3", "--seed", "11", "--mode", "exhaustive",
            "--format", "json"]
    _, b1 = _run_to_file(base + ["--threads", "1"], tmp_path / "h1.json")
    _, b2 = _run_to_file(base + ["--threads", "8"], tmp_path / "h2.json")
    assert b1 == b2


def test_python_dash_m_entry_point(paths):
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "kstlab", "check-minor", str(paths / "c4.txt"),
         "--s", "2", "--t", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "found" in proc.stdout
