import json

import pytest

from gembed.cli import COMMANDS, JobSpec, run
from gembed.cones import contains
from gembed.serialize import cone_from_doc, cone_to_doc, dumps
from helpers import GOLDEN_CASES, golden_result, run_cli

GL2 = {"gl": "2"}
ORTHANT = {"generators": [["1", "0"], ["0", "1"]]}


def job(command, cone=ORTHANT, **extra):
    return JobSpec.from_doc({"command": command, "group": GL2, "cone": cone, **extra})


@pytest.mark.parametrize("stem", sorted(GOLDEN_CASES))
def test_golden(stem):
    exit_ok, output_ok = golden_result(stem)
    assert exit_ok and output_ok


def test_golden_contents():
    doc, code = run(job("resolve", {"generators": [["1", "0"], ["1", "1"]]}))
    assert code == 0
    assert doc["resolution"]["generators"] == [["1", "1"]]
    assert doc["witness"]["verified"] and doc["biequivariant"]
    doc, code = run(job("validate", {"generators": [["1", "0"], ["-1", "0"]]}))
    assert code == 2 and doc["error"]["reason"] == "strong convexity violated: contains γ and γ⁻¹"


def test_parse_errors_exit_1():
    proc = run_cli(stdin="{not json")
    assert proc.returncode == 1 and json.loads(proc.stdout)["error"]["kind"] == "parse"
    proc = run_cli(stdin=json.dumps({"command": "nope"}))
    assert proc.returncode == 1
    proc = run_cli(stdin=json.dumps({"command": "dual", "cone": {"generators": [[1.5, 0]]}}))
    assert proc.returncode == 1


def test_resource_limit_exit_3():
    proc = run_cli("--command", "weyl-order", "--cap-weyl", "5",
                   stdin=json.dumps({"group": {"family": "A", "semisimple_rank": "3"}}))
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["error"]["kind"] == "resource-limit"
    proc = run_cli("--cap-enum", "10", stdin=json.dumps({"command": "hilbert", "cone": {"generators": [[1, 0], [1, 40]]}}))
    assert proc.returncode == 3


def test_input_flag_and_command_override(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps({"command": "validate", "group": GL2, "cone": ORTHANT}))
    proc = run_cli("--input", str(path), "--command", "dual")
    assert proc.returncode == 0 and json.loads(proc.stdout)["command"] == "dual"


def test_every_command_runs():
    extra = {
        "mu": {"state": {"chars": [["1", "0"], ["0", "1"]]}, "params": {"gamma": ["1", "3"]}},
        "dual-set": {"state": {"chars": [["1", "0"]]}},
        "saturate": {"state": {"chars": [["1", "0"]]}},
        "morphism": {"params": {"target": ORTHANT}},
        "universal-check": {"params": {"y": {"generators": [["1", "1"]]}}},
        "dominant": {"params": {"gamma": ["0", "2"]}},
        "parabolic-type": {"params": {"gamma": ["2", "1"]}},
    }
    for name in COMMANDS:
        if name == "selftest":
            continue
        doc, code = run(job(name, **extra.get(name, {})))
        assert code == 0, (name, doc)
        assert doc["command"] == name


def test_command_outputs():
    assert run(job("mu", state={"chars": [["2", "-1"], ["0", "1"]]}, params={"gamma": ["1", "1"]}))[0]["mu"] == "1"
    assert run(job("weyl-order"))[0]["order"] == "2"
    doc = run(job("dominant", params={"gamma": ["0", "2"]}))[0]
    assert doc["dominant"] == ["2", "0"] and doc["weyl_element"]["word"] == ["0"]
    doc = run(job("divisor-classes"))[0]
    assert doc["torus_count"] == "2" and doc["weyl_orbit_count"] == "1" and doc["genericity_flag"]
    assert len(run(job("slice-complex"))[0]["cells"]) == 3
    doc = run(job("morphism", cone={"generators": [["-1", "0"]]}, params={"target": ORTHANT}))[0]
    assert doc == {"command": "morphism", "exists": False, "witness": None}


def test_large_numerals_round_trip():
    big = "123456789012345678901234567890"
    doc, code = run(JobSpec.from_doc({"command": "dual", "cone": {"generators": [[big, "1"]]}}))
    assert code == 0
    out = cone_from_doc(doc["cone"])
    b = int(big)
    assert contains(out, (1, -b)) and contains(out, (-1, b)) and contains(out, (0, 1))
    assert not contains(out, (0, -1))
    assert doc["cone"]["generators"] == cone_to_doc(out)["generators"]


def test_cone_documents_round_trip():
    for command in ("dual", "validate", "resolve"):
        doc, _ = run(job(command, {"generators": [["1", "0"], ["1", "2"]]}))
        cone_doc = doc.get("cone") or doc.get("resolution")
        assert cone_to_doc(cone_from_doc(cone_doc)) == cone_doc


def test_byte_identical_output():
    payload = json.dumps({"command": "slice-complex", "group": GL2, "cone": ORTHANT})
    first = run_cli(stdin=payload)
    second = run_cli(stdin=payload)
    assert first.stdout == second.stdout
    assert dumps(run(JobSpec.from_doc(json.loads(payload)))[0]) == first.stdout


def test_selftest_deterministic():
    a, code_a = run(JobSpec.from_doc({"command": "selftest", "params": {"scale": "small"}}))
    b, code_b = run(JobSpec.from_doc({"command": "selftest", "params": {"scale": "small"}}))
    assert code_a == code_b == 0 and dumps(a) == dumps(b)
