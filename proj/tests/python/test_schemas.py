import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("SYMMONO_CLI", "symmono")
SCHEMAS = Path(os.environ.get("SYMMONO_SCHEMAS", Path(__file__).resolve().parents[2] / "schemas"))


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


@pytest.mark.parametrize(
    "args",
    [
        ["--state", "ghz:2,3", "--alpha", "0.5", "--n-max", "3"],
        ["--state", "unit:3,2", "--alpha", "0.25,limit1", "--n-max", "2"],
        ["--state", "random:2,2,2", "--alpha", "0.75", "--n-max", "2", "--lower-budget", "3"],
        ["--state", "w:3", "--bipartitions", "all", "--alpha", "0.3", "--n-max", "2"],
    ],
)
def test_compute_output_matches_schema(args):
    r = run("compute", *args)
    assert r.returncode == 0, r.stderr
    jsonschema.validate(json.loads(r.stdout), schema("compute"))


def test_convergence_output_matches_schema():
    r = run("convergence", "--state", "schmidt:0.3,0.7", "--alpha", "0.5", "--n-max", "6", "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema("convergence"))
    gaps = [row["gap"] for row in doc["rows"]]
    assert all(g >= 0 for g in gaps)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_verify_output_matches_schema():
    r = run("verify", "--suite", "coefficients,gmean")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema("verify"))
    assert doc["all_pass"]


def test_fault_injection_fails_o3():
    r = run("verify", "--suite", "axioms", "--fault", "flip-entropy-sign")
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, schema("verify"))
    o3 = [c for c in doc["checks"] if " O3 " in c["name"] and not c["pass"]]
    assert o3
    assert all(c["margin"] < 0 for c in o3)


def test_named_state_file(tmp_path):
    f = tmp_path / "state.json"
    f.write_text(json.dumps({"name": "random", "params": {"dims": [2, 2]}, "seed": 4}))
    a = run("compute", "--state", str(f), "--n-max", "2")
    b = run("compute", "--state", "random:2,2", "--seed", "4", "--n-max", "2")
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout


def test_malformed_inputs_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("compute", "--state", str(bad)).returncode == 2
    assert run("compute", "--state", "random:2,0").returncode == 2
    assert run("verify", "--suite", "").returncode == 2
    assert run("compute", "--state", "ghz:2,3", "--n-max", "20").returncode == 3
