import json
import os
import shutil
import subprocess

import pytest

CLI = os.environ.get("HOOKRATIO_CLI") or shutil.which("hookratio")
pytestmark = pytest.mark.skipif(CLI is None, reason="hookratio executable not found")

CHEB = ["--gamma", "30,1", "--delta", "2,3,5"]


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("HOOKRATIO_MAX_SIZE", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=120)


def test_hooks_text():
    r = run("hooks", "--partition", "3,1")
    assert r.returncode == 0
    assert "4" in r.stdout


def test_decompose_golden():
    r = run("decompose", "--partition", "9,7,5,3,3,2,1", "--p", "3")
    assert r.returncode == 0
    assert "core:" in r.stdout
    assert "charges:" in r.stdout


def test_check_exit_codes():
    assert run("check", *CHEB, "--bound", "30").returncode == 1
    assert run("check", "--gamma", "1", "--delta", "2,2").returncode == 0
    assert run("check", "--gamma", "1,1", "--delta", "2,2,2,2", "--bound", "8").returncode == 2


def test_usage_errors():
    assert run("no-such-verb").returncode == 64
    assert run("hooks", "--partition", "3,x").returncode == 64
    assert run("f-table", "--gamma", "1,1", "--delta", "2").returncode == 64


def test_ratio_exit_codes():
    assert run("ratio", "--partition", "66^55", *CHEB).returncode == 1
    assert run("ratio", "--partition", "", "--gamma", "1", "--delta", "2,2").returncode == 0


CHECK_SCHEMA = {
    "type": "object",
    "required": ["status", "gamma", "delta", "witness", "bound", "reason"],
    "properties": {
        "status": {"enum": ["Integral-Certified", "Fails", "Unknown-UpToBound"]},
        "gamma": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "delta": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["mu", "p", "lambda"],
                    "properties": {
                        "mu": {"type": "string"},
                        "p": {"type": "integer", "minimum": 2},
                        "lambda": {"type": "string"},
                    },
                },
            ]
        },
        "reason": {"type": "string"},
    },
}


def test_check_json_schema_and_witness():
    jsonschema = pytest.importorskip("jsonschema")
    r = run("check", *CHEB, "--bound", "30", "--json")
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, CHECK_SCHEMA)
    assert doc["status"] == "Fails"
    assert doc["witness"]["mu"] == "11,1^25"
    assert doc["witness"]["p"] == 37
    assert doc["valuation_at_p"] == -37


@pytest.mark.parametrize(
    "args",
    [
        ("check", *CHEB, "--bound", "30", "--json"),
        ("search-mu", *CHEB, "--bound", "30"),
        ("height1", *CHEB, "--json"),
        ("decompose", "--partition", "12,9,9,4,1", "--p", "4"),
    ],
)
def test_output_is_deterministic(args):
    outputs = set()
    for workers in ("1", "3"):
        for seed in ("1", "99"):
            r = run(*args, "--workers", workers, "--seed", seed)
            outputs.add((r.returncode, r.stdout))
    assert len(outputs) == 1


def test_size_cap_is_reported():
    r = run("search-mu", "--gamma", "1,1", "--delta", "2,2,2,2", "--bound", "30", env={"HOOKRATIO_MAX_SIZE": "6"})
    assert r.returncode == 2
    assert r.stderr
