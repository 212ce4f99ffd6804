import json
import subprocess
import sys
from pathlib import Path

import pytest

from stokes_grassmann import formats
from stokes_grassmann.cli import main
from stokes_grassmann.partitions import BoxContext

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_stokes_projective(capsys):
    code, out = run(capsys, "stokes", "--r", "1", "--n", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["matrix"] == [["1", "0", "0"], ["3", "1", "0"], ["6", "3", "1"]]
    assert doc["order"] == [[1], [2], [3]]


def test_stokes_gr24_golden(capsys):
    _, out = run(capsys, "stokes", "--r", "2", "--n", "4")
    assert out == (GOLDEN / "gr24_stokes.json").read_text()


def test_euler_gr24_golden(capsys):
    _, out = run(capsys, "euler", "--r", "2", "--n", "4")
    assert out == (GOLDEN / "gr24_euler.json").read_text()
    doc = json.loads(out)
    row = doc["partitions"].index([0, 0])
    col = doc["partitions"].index([1, 1])
    assert doc["matrix"][row][col] == "6"
    assert all(doc["matrix"][i][i] == "1" for i in range(6))


def test_euler_projective_first_row(capsys):
    _, out = run(capsys, "euler", "--r", "1", "--n", "4", "--format", "csv")
    _, matrix = formats.matrix_from_csv(out)
    assert matrix[0] == [1, 4, 10, 20]


def test_bad_box_is_usage_error(capsys):
    assert usage_error(capsys, "stokes", "--r", "4", "--n", "4") == 2


def test_cap(capsys, monkeypatch):
    assert usage_error(capsys, "stokes", "--r", "1", "--n", "13") == 2
    assert usage_error(capsys, "euler", "--r", "1", "--n", "5", "--cap", "4") == 2
    monkeypatch.setenv("STOKES_GRASSMANN_CAP", "3")
    assert usage_error(capsys, "verify", "--r", "1", "--n", "4") == 2
    monkeypatch.setenv("STOKES_GRASSMANN_CAP", "13")
    code, _ = run(capsys, "stokes", "--r", "1", "--n", "13")
    assert code == 0


@pytest.mark.parametrize("r,n,pairs", [(2, 4, 36), (1, 6, 36), (3, 6, 400)])
def test_verify(capsys, r, n, pairs):
    code, out = run(capsys, "verify", "--r", str(r), "--n", str(n))
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "pass" and doc["pairs_checked"] == pairs and doc["mismatches"] == []


def test_verify_failure_exit_code(capsys, monkeypatch):
    import importlib

    v = importlib.import_module("stokes_grassmann.verify")

    real = v.skew_schur_spec
    monkeypatch.setattr(v, "skew_schur_spec", lambda mu, lam, n: real(mu, lam, n) + (mu == (1, 0)))
    code, out = run(capsys, "verify", "--r", "2", "--n", "4")
    doc = json.loads(out)
    assert code == 1 and doc["verdict"] == "fail" and doc["mismatches"]


def test_verify_all_csv(capsys):
    code, out = run(capsys, "verify-all", "--max-n", "5", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 1 + sum(n - 1 for n in range(2, 6))
    assert all(line.endswith(",pass") for line in lines[1:])


def test_canonical(capsys):
    _, out = run(capsys, "canonical", "--r", "1", "--n", "2", "--t", "0", "--phi", "0", "--format", "json")
    doc = json.loads(out)
    assert doc["admissible"] and doc["order"] == [[2], [1]]
    assert sorted(round(p["re"], 12) for p in doc["points"]) == [-2, 2]

    _, out = run(capsys, "canonical", "--r", "2", "--n", "4", "--t", "0", "--phi", "0.3")
    assert "degenerate" in out and "admissible: no" in out

    _, out = run(capsys, "canonical", "--r", "1", "--n", "4", "--t", "1.0", "--phi", "0.785",
                 "--format", "json")
    import math
    doc = json.loads(out)
    assert len(doc["points"]) == 4
    assert all(abs(p["abs"] - 4 * math.exp(0.25)) < 1e-12 for p in doc["points"])

    _, out = run(capsys, "canonical", "--r", "1", "--n", "3", "--t-re", "0.5", "--t-im", "-1",
                 "--format", "json")
    assert json.loads(out)["t"] == [0.5, -1.0]


def test_skew_lr_mutate(capsys):
    assert run(capsys, "skew", "--lambda", "2,1", "--mu", "1,0", "--n", "4") == (0, "16\n")
    _, out = run(capsys, "lr", "--mu", "2,1", "--nu", "2,1")
    assert "3,2,1: 2" in out.splitlines()
    _, out = run(capsys, "mutate", "--n", "2", "--matrix", "1,2;0,1", "--word", "b1")
    assert out == "1,-2;0,1\n"
    _, out = run(capsys, "mutate", "--n", "3", "--matrix", "1,3,6;0,1,3;0,0,1", "--word", "b1 b2",
                 "--target", "1,3,6;0,1,3;0,0,1", "--depth", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["search"]["witness"] is not None
    _, out = run(capsys, "mutate", "--n", "4", "--seed", "3", "--format", "json")
    assert len(json.loads(out)["matrix"]) == 4


def test_malformed_inputs(capsys):
    assert usage_error(capsys, "skew", "--lambda", "1,2", "--mu", "0", "--n", "3") == 2
    assert usage_error(capsys, "lr", "--mu", "a", "--nu", "1") == 2
    assert usage_error(capsys, "mutate", "--n", "2", "--matrix", "1,x;0,1") == 2
    assert usage_error(capsys, "mutate", "--n", "2", "--matrix", "1,2;0,1", "--word", "b2") == 2
    assert usage_error(capsys, "mutate", "--n", "2", "--matrix", "1,2;3,1") == 2


def test_json_deterministic_and_round_trip(capsys, tmp_path):
    _, first = run(capsys, "euler", "--r", "3", "--n", "7")
    _, second = run(capsys, "euler", "--r", "3", "--n", "7")
    assert first == second
    ctx, order, matrix = formats.matrix_from_json(first)
    assert ctx == BoxContext(3, 7) and len(order) == 35

    out = tmp_path / "s.csv"
    run(capsys, "stokes", "--r", "3", "--n", "7", "--format", "csv", "--out", str(out))
    order_csv, matrix_csv = formats.matrix_from_csv(out.read_text())
    assert order_csv == order
    assert [list(c) for c in zip(*matrix_csv)] == matrix


def test_big_entries_are_strings(capsys):
    _, out = run(capsys, "stokes", "--r", "1", "--n", "12")
    doc = json.loads(out)
    assert all(isinstance(x, str) for row in doc["matrix"] for x in row)
    assert doc["matrix"][11][0] == "705432"  # C(22, 11)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stokes_grassmann", "skew", "--lambda", "2,2",
                           "--mu", "", "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "20\n"
