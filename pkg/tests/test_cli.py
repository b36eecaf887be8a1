import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from tetrabox.cli import main

SCHEMA = json.loads((Path(__file__).resolve().parent.parent / "schema" / "cli-output.schema.json").read_text())


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "x12", "x03")
    assert code == 0
    assert out.strip() == "x⊗(2) + y⊗(2*t) + z⊗(-2*t + 2)"


def test_coords_text_and_json(capsys):
    code, out, _ = run(capsys, "coords", "--basis", "xyz", "a2")
    assert code == 0 and out.strip() == "X[1]=1, Y[0]=1, Z[0]=-1"
    code, data = run_json(capsys, "coords", "--basis", "xyz", "a2")
    assert data == {"basis": "xyz", "prime_level": 0, "entries": [["X", 1, "1"], ["Y", 0, "1"], ["Z", 0, "-1"]]}


def test_coords_outside_subalgebra(capsys):
    code, out, err = run(capsys, "coords", "y")
    assert code == 1 and "X23∩O'" in err and out == ""


def test_coords_primed(capsys):
    code, data = run_json(capsys, "coords", "--basis", "delta", "--prime", "1", "x01")
    assert code == 0
    assert data["entries"] == [["Y", 0, "1"], ["Z", 0, "-1"]] and data["prime_level"] == 1


def test_prime(capsys):
    code, out, _ = run(capsys, "prime", "t")
    assert (code, out.strip()) == (0, "(t - 1)/(t^1)")
    code, data = run_json(capsys, "prime", "--prime", "2", "x")
    assert data == {"f": "0", "g": "0", "h": "1"}


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "x*t''")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 9
    assert lines[2] == "X12 ∩ O'': x⊗((-1)/((t-1)^1)) + y⊗(0) + z⊗(0)"
    code, data = run_json(capsys, "decompose", "x/t + z*t")
    assert data["cells"][0][1]["f"] == "(1)/(t^1)"


def test_like(capsys):
    code, data = run_json(capsys, "like", "12", "x*(t^3-5)")
    assert code == 0 and data == {"pair": "x12", "structural": True, "definitional": True}
    code, out, _ = run(capsys, "like", "x12", "y")
    assert code == 1 and "no" in out
    code, _, err = run(capsys, "like", "11", "y")
    assert code == 2 and "error" in err


def test_eval_and_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "eval", "-", stdin="[x12, x03]'\n", monkeypatch=monkeypatch)
    assert code == 0 and out.strip() == "x⊗((2)/(t^1)) + y⊗(2) + z⊗((2*t - 2)/(t^1))"
    code, data = run_json(capsys, "eval", "1/t + 1/(t-1)")
    assert data == {"value": "(2*t - 1)/(t^1*(t-1)^1)"}


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "x +"],
        ["eval", "x / (t^2 - 4)"],
        ["eval", "x*y"],
        ["bracket", "t", "x"],
        ["verify", "--max", "1"],
        ["nonsense"],
        ["coords", "--basis", "qq", "x"],
    ],
)
def test_usage_and_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tetra")
    assert code == 0 and out.strip().endswith("checks passed")
    code, data = run_json(capsys, "verify", "--suite", "delta-table", "--max", "6")
    assert code == 0 and data["failed"] == 0 and data["pair_depth"] == 3
    assert all(c["status"] == "pass" for c in data["checks"])


def test_json_is_byte_stable(capsys):
    outs = [run(capsys, "verify", "--suite", "grid", "--max", "6", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "decompose", "--format", "json", "x/t + y*t'")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_console_script_full_verification():
    proc = subprocess.run(
        [sys.executable, "-m", "tetrabox", "verify", "--suite", "all", "--max", "16"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert all(line.endswith("checks passed") for line in proc.stdout.splitlines() if line)
