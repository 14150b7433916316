"""End-to-end CLI behavior: formats, exit codes, error mapping."""

import json
import subprocess
import sys

import pytest

from dlstar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_distance_table(capsys):
    code, out, _ = run(capsys, "distance", "0:|0:|0:", "0:0|2:1,0|2:1")
    assert code == 0
    assert "distance: 5" in out
    assert "formula_verified: True" in out


def test_distance_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "distance", "0:|0:|0:", "1:1|0:|0:")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "distance"
    assert doc["params"] == {"d": 3, "q": 2}
    assert doc["result"]["distance"] == 2
    assert "passed" not in doc


def test_distance_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "distance", "0:|0:|0:", "1:1|0:|0:")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "distance,formula_verified"
    assert lines[1] == "2,True"


def test_unverified_config_advisory(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "--d", "4", "--q", "3",
        "distance", "0:|0:|0:|0:", "0:|0:|0:|0:",
    )
    assert code == 0
    assert json.loads(out)["result"]["formula_verified"] is False


def test_bad_literal_exits_2(capsys):
    code, _, err = run(capsys, "distance", "bogus", "0:|0:|0:")
    assert code == 2
    assert "error:" in err


def test_imbalanced_literal_exits_2(capsys):
    code, _, err = run(capsys, "distance", "0:1|0:|0:", "0:|0:|0:")
    assert code == 2
    assert "sum to 0" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["distance", "--nope", "a", "b"])
    assert e.value.code == 2


def test_neighbors_count(capsys):
    code, out, _ = run(capsys, "--format", "json", "neighbors", "0:|0:|0:")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["count"] == 12
    assert len(doc["result"]["rows"]) == 12


def test_ball_rows(capsys):
    code, out, _ = run(capsys, "--format", "csv", "ball", "--radius", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "vertex,distance"
    assert len(lines) == 14  # header + identity + 12 neighbors
    code, out, _ = run(capsys, "ball", "--radius", "1")
    assert "size: 13" in out


def test_bfs_cap(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "bfs", "0:|0:|0:", "5:1,1,1,1,1|0:|0:",
        "--cap", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["distance"] is None
    assert doc["result"]["within_cap"] is False


def test_beta_match(capsys):
    code, out, _ = run(capsys, "--format", "json", "beta", "1:1|0:|0:")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["closed_form"] == 1
    assert doc["result"]["limit"] == 1
    assert doc["passed"] is True


def test_horolimit_families(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "horolimit", "0:|1:1|0:", "--family", "alpha"
    )
    assert code == 0
    assert json.loads(out)["result"]["value"] == 0
    code, out, _ = run(
        capsys, "--format", "json", "horolimit", "0:|1:1|0:", "--family", "gamma:1,3"
    )
    assert code == 0
    assert json.loads(out)["result"]["family"] == "gamma:1,3"
    code, _, err = run(capsys, "horolimit", "0:|1:1|0:", "--family", "nope")
    assert code == 2 and "family" in err


def test_table_betandist(capsys):
    code, out, _ = run(
        capsys, "--format", "json", "table-betandist", "1:1|0:|0:",
        "--n1", "10", "--n2", "17",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["shift"] == 1
    assert len(doc["result"]["rows"]) == 6
    assert all(r["max_slope"] == 2 for r in doc["result"]["rows"])
    code, _, err = run(capsys, "table-betandist", "1:1|0:|0:", "--n1", "1", "--n2", "9")
    assert code == 2


def test_probes_sets(capsys):
    code, out, _ = run(capsys, "--format", "json", "probes", "0:1|1:|0:")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["disagrees"] is True
    assert doc["result"]["witness"] is not None
    code, out, _ = run(
        capsys, "--format", "json", "probes", "0:|0:|3:1,1,1", "--set", "printed"
    )
    assert json.loads(out)["result"]["disagrees"] is False


def test_star_witness_exit_codes(capsys):
    code, out, _ = run(capsys, "star-witness", "--a", "beta", "--b", "alpha", "--nmax", "6")
    assert code == 0
    assert "holds_for_all: True" in out
    code, out, _ = run(capsys, "star-witness", "--a", "alpha", "--b", "beta", "--nmax", "6")
    assert code == 1
    assert "first_failure: 1" in out


def test_separation_exit_codes(capsys):
    code, out, _ = run(
        capsys, "separation", "--family", "alpha", "--k", "1", "--nmax", "4",
        "--depth", "2",
    )
    assert code == 0
    assert "min_slack: 0" in out
    code, _, err = run(
        capsys, "separation", "--family", "beta", "--k", "1", "--nmax", "4",
        "--depth", "2",
    )
    assert code == 2  # wrong limiting profile is a usage error


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "--suite", "horofn")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["all_passed"] is True
    names = [r["check"] for r in doc["result"]["rows"]]
    assert names == ["beta-closed-form", "growth-table"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dlstar", "--format", "json", "distance",
         "0:|0:|0:", "0:0|2:1,0|2:1"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["distance"] == 5
