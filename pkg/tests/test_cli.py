import json
import subprocess
import sys

import pytest

from cutalg.cli import main, output_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_ideal_text(capsys):
    code, out, _ = run(capsys, "ideal", "P3")
    assert code == 0
    assert "q_0*q_2 - q_3*q_23" in out and "minimal generators by degree: 2: 1" in out


def test_ideal_json_and_check_prime(capsys):
    code, data = run_json(capsys, "ideal", "K4", "--check-prime")
    assert code == 0 and data["schema"] == 1
    assert data["minimal_generators"] == {"4": 1}
    assert data["check_prime"] == {"p": 101, "agree": True}


def test_ideal_elimination_method(capsys):
    code, data = run_json(capsys, "ideal", "C4", "--method", "elimination")
    assert code == 0 and data["height"] == data["height_formula"] == 3


def test_betti(capsys):
    code, data = run_json(capsys, "betti", "K2#K1#K3")
    assert code == 0
    assert data["betti"] == [[0, 2, 6], [1, 3, 8], [2, 4, 3]]
    assert data["reg"] == 2 and data["projdim"] == 2


def test_betti_five_vertices_truncated(capsys):
    code, data = run_json(capsys, "betti", "C5")
    assert code == 0 and data["truncated"]
    assert data["cm_projdim"] == 9 and data["cm_reg"] == 4


def test_polytope(capsys):
    code, data = run_json(capsys, "polytope", "P3")
    assert (data["dim"], data["n_vertices"], data["n_facets"]) == (2, 4, 4)
    code, data = run_json(capsys, "polytope", "C4")
    assert (data["dim"], data["n_vertices"], data["n_facets"]) == (4, 8, 16)
    assert data["two_face_sizes"] == {"3": 32} and data["all_two_faces_triangles"]


def test_retracts(capsys):
    code, data = run_json(capsys, "retracts", "C4")
    assert code == 0 and {"P3", "K3", "K2"} <= set(data["retracts"])
    assert {"W": [1, 2, 3], "witness": 2} in data["neighborhood_minors"]


def test_classify(capsys):
    code, data = run_json(capsys, "classify", "C4")
    assert code == 0 and data["all_agree"]
    names = {r["theorem"] for r in data["reports"]}
    assert {"betti_monotonicity", "neighborhood_retract", "unicyclic_reg_bounds"} <= names


def test_table1_small(capsys):
    code, data = run_json(capsys, "table1", "--max-n", "3")
    assert code == 0 and data["diffs"] == 0
    assert [r["graph"] for r in data["rows"]] == ["P3"]


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "ohsugi")
    assert code == 0 and "verdict: not-a-face" in out
    code, data = run_json(capsys, "certify", "face-map", "K4-e", "--edge", "2-3")
    assert code == 0 and data["passed"] and data["contracted"] == "P3"


@pytest.mark.parametrize("argv,code", [
    (["ideal", "nonsense"], 2),
    (["ideal", "n=3; 1-5"], 2),
    (["--prime", "15", "ideal", "P3"], 2),
    (["--check-prime", "32003", "ideal", "P3"], 2),
    (["certify", "face-map", "C4", "--edge", "1-3"], 2),
    (["--max-vars", "4", "ideal", "K4"], 3),
    (["--max-dim", "3", "polytope", "C4"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert "cutalg:" in capsys.readouterr().err


def test_parse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_timeout_exit_code():
    proc = subprocess.run([sys.executable, "-m", "cutalg.cli", "--timeout", "0.5", "betti", "C5",
                           "--method", "multigraded"], capture_output=True, text=True)
    assert proc.returncode == 4 and "timeout" in proc.stderr



SCHEMA_CASES = [
    ["ideal", "K4"], ["ideal", "C4", "--method", "elimination"], ["betti", "C4"], ["betti", "C5"],
    ["polytope", "C4"], ["retracts", "K2#K1#K3"], ["classify", "C4"], ["table1", "--max-n", "4"],
    ["certify", "ohsugi"], ["certify", "face-map", "K4-e", "--edge", "2-3"],
]


@pytest.mark.parametrize("argv", SCHEMA_CASES, ids=lambda a: "_".join(a))
def test_json_output_validates_against_shipped_schema(capsys, argv):
    jsonschema = pytest.importorskip("jsonschema")
    assert main(["--format", "json"] + argv) == 0
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, output_schema(argv[0]))


def test_identical_invocations_are_byte_identical():
    argv = [sys.executable, "-m", "cutalg.cli", "--format", "json", "--seed", "7", "betti", "C5"]
    first = subprocess.run(argv, capture_output=True, timeout=300).stdout
    second = subprocess.run(argv, capture_output=True, timeout=300).stdout
    assert first and first == second
