import json
import random
import subprocess
import sys

import jsonschema
import pytest

from copperscope import poly
from copperscope.arith import iroot
from copperscope.cli import load_schema, main
from copperscope.coppersmith import stereotyped_instance

SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(["--json" if a == "JSON" else a for a in argv])
    out = capsys.readouterr()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json", "--no-timings")
    doc = json.loads(out.out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["exit_code"] == code
    return code, doc


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_solve_trivial(capsys):
    code, doc = run_json(capsys, "solve", "--poly", "0,1", "--modulus", "4", "--radius", "1")
    assert code == 0
    assert doc["outputs"]["roots"] == [0]
    assert doc["command"] == "solve"


def test_solve_planted_file(capsys, tmp_path):
    f, N, X, r = stereotyped_instance(48, random.Random(2))
    path = tmp_path / "f.txt"
    path.write_text("\n".join(str(c) for c in f))
    code, doc = run_json(capsys, "solve", "--poly", f"@{path}", "--modulus", str(N), "--radius", str(X))
    assert code == 0 and doc["outputs"]["roots"] == [r]


def test_solve_input_errors(capsys):
    code, out = run(capsys, "solve", "--poly", "1,2", "--modulus", "10", "--radius", "1")
    assert code == 1 and "error" in out.err and len(out.err.strip().splitlines()) == 1
    code, out = run(capsys, "solve", "--poly", "1,x", "--modulus", "10", "--radius", "1")
    assert code == 1
    code, out = run(capsys, "solve", "--poly", "@/nonexistent/f", "--modulus", "10", "--radius", "1")
    assert code == 1
    with pytest.raises(SystemExit) as info:
        main(["solve", "--modulus", "10"])
    assert info.value.code == 1
    capsys.readouterr()


def test_solve_input_error_json(capsys):
    code, out = run(capsys, "solve", "--poly", "1,2", "--modulus", "10", "--radius", "1", "--json")
    assert code == 1
    jsonschema.validate(json.loads(out.out), SCHEMA)


def test_solve_uncertified(capsys):
    N = 1000003 * 1000033
    X = iroot(N, 3) * 8
    code, doc = run_json(capsys, "solve", "--poly", "5,7,11,1", "--modulus", str(N), "--radius", str(X), "--m", "2")
    assert code == 2
    assert 0 < doc["outputs"]["certified_X"] < X


def test_capacity_commands(capsys):
    N = str(10**40 + 121)
    _, doc = run_json(capsys, "capacity", "--modulus", N, "--degree", "3", "--radius-exp", "1/3")
    assert doc["outputs"]["verdict"] == "Boundary" and doc["outputs"]["capacity"] == {}
    _, doc = run_json(capsys, "capacity", "--modulus", N, "--degree", "3", "--radius-exp", "103/300")
    assert doc["outputs"]["verdict"] == "NotExists"
    # interval: N^(3/100) = 10^1.2 < 2^3 = 8? 15.8 > 8, so NotExists; tiny N flips it
    _, doc = run_json(capsys, "capacity", "--modulus", N, "--degree", "3", "--radius-exp", "103/300", "--arch", "interval")
    assert doc["outputs"]["verdict"] == "NotExists"
    _, doc = run_json(capsys, "capacity", "--modulus", "1000003", "--degree", "3", "--radius-exp", "103/300", "--arch", "interval")
    assert doc["outputs"]["verdict"] == "Exists"  # 1000003^(3/100) < 8
    code, _ = run(capsys, "capacity", "--modulus", N, "--degree", "0", "--radius-exp", "1/3")
    assert code == 1
    code, _ = run(capsys, "capacity", "--modulus", N, "--degree", "3", "--radius-exp", "abc")
    assert code == 1


def test_binomial_commands(capsys):
    _, doc = run_json(capsys, "binomial", "q0")
    assert abs(doc["outputs"]["q0"] - 3.80572) < 1e-5
    _, doc = run_json(capsys, "binomial", "construct", "--t", "1", "--radius", "0.5")
    assert doc["outputs"]["supnorm"] == "5/48" and doc["outputs"]["bounded"] is True
    _, doc = run_json(capsys, "binomial", "supnorm", "--t", "200", "--radius", "100")
    assert doc["outputs"]["bounded"] is True
    _, doc = run_json(capsys, "binomial", "minkowski", "--r", "100", "--c", "3")
    assert doc["outputs"]["m"] == 453 and doc["outputs"]["margin"] >= 0
    assert doc["warnings"]  # 453 > 3 * 100
    _, doc = run_json(capsys, "binomial", "cutoff", "--delta-logn", "1.0")
    assert doc["outputs"]["cutoff"] == 3 and doc["outputs"]["exact"] is True
    code, _ = run(capsys, "binomial", "cutoff", "--delta-logn", "-1")
    assert code == 1


def test_negative_commands(capsys):
    N = str(1000003 * 1000033 * 1000037 * 1000039)
    _, doc = run_json(capsys, "negative", "--modulus", N, "--degree", "3", "--epsilon", "1/10", "--M", "319")
    assert doc["outputs"]["verdict"] == "ForcesSmallFactor"
    _, doc = run_json(capsys, "negative", "--modulus", str(2 * (2**61 - 1)), "--degree", "3", "--epsilon", "1/10", "--M", "319")
    assert doc["outputs"]["verdict"] == "SmallFactorFound" and doc["outputs"]["small_factor"] == 2
    _, doc = run_json(capsys, "negative", "--modulus", N, "--degree", "3", "--epsilon", "1/1000000", "--M", "319")
    assert doc["outputs"]["verdict"] == "Inconclusive"
    code, _ = run(capsys, "negative", "--modulus", N, "--degree", "3", "--epsilon", "0", "--M", "319")
    assert code == 1


def test_demo_command(capsys):
    _, doc = run_json(capsys, "demo", "--bits", "40", "--seed", "7")
    assert doc["outputs"]["success"] is True


def test_deterministic_output(capsys):
    args = ("demo", "--bits", "40", "--seed", "7", "--json", "--no-timings")
    _, a = run(capsys, *args)
    _, b = run(capsys, *args)
    assert a.out == b.out
    keys = list(json.loads(a.out))
    assert keys == sorted(keys)


def test_timings_present_by_default(capsys):
    _, out = run(capsys, "binomial", "q0", "--json")
    doc = json.loads(out.out)
    jsonschema.validate(doc, SCHEMA)
    assert "total" in doc["timings_ms"]


def test_human_output(capsys):
    code, out = run(capsys, "solve", "--poly", "0,1", "--modulus", "4", "--radius", "1")
    assert code == 0 and "roots: [0]" in out.out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "copperscope.cli", "solve", "--poly=-4,0,1", "--modulus", "10007", "--radius", "20", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["roots"] == [-2, 2]
