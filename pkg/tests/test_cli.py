import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from apseq.cli import (
    EXIT_INCONCLUSIVE,
    EXIT_INPUT,
    EXIT_PASS,
    EXIT_VIOLATED,
    THEOREMS,
    canonical_json,
    main,
    run,
)
from apseq.exactnum import parse_rational
from apseq.powerclass import PROPER, PowerClassification

FIX = Path(__file__).parent / "fixtures"
CANDIDATES = ["--candidates", "1/2,1,2"]


def f(name: str) -> str:
    return str(FIX / name)


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


# (argv, expected exit code): pass / violate / inconclusive / malformed per command
MATRIX = [
    (["analyze", f("example1.csv"), "--exact"], EXIT_PASS),
    (["analyze", f("powers_of_two.csv"), "--exact", "--max-order", "3", "--expect-order", "2"], EXIT_VIOLATED),
    (["analyze", f("short.csv"), "--exact", "--min-windows", "5"], EXIT_INCONCLUSIVE),
    (["analyze", f("malformed.csv"), "--exact"], EXIT_INPUT),
    (["analyze", f("float_quadratic.json"), "--exact"], EXIT_INPUT),
    (["classify", f("squares.json"), "--exact"] + CANDIDATES, EXIT_PASS),
    (["classify", f("short.csv"), "--exact", "--min-windows", "5"] + CANDIDATES, EXIT_INCONCLUSIVE),
    (["classify", f("nonpositive.csv"), "--exact"] + CANDIDATES, EXIT_INPUT),
    (["verify", "m-isometry", f("shear_m3.json")], EXIT_PASS),
    (["verify", "m-isometry", f("doubling_m3.json")], EXIT_VIOLATED),
    (["verify", "mq-isometry", f("bad_metric.json")], EXIT_VIOLATED),
    (["verify", "mq-isometry", f("mq_shear.json"), "--horizon", "3"], EXIT_INCONCLUSIVE),
    (["verify", "m-isometry", f("missing_key.json")], EXIT_INPUT),
    (["verify", "m-isometry", f("broken.json")], EXIT_INPUT),
    (["verify", "nope", f("shear_m3.json")], EXIT_INPUT),
    (["analyze", f("does_not_exist.csv")], EXIT_INPUT),
]


@pytest.mark.parametrize("argv,expected", MATRIX, ids=[" ".join(a[:2]) + f"->{c}" for a, c in MATRIX])
def test_exit_code_matrix(argv, expected):
    code, out, err = capture(argv)
    assert code == expected
    doc = json.loads(out)
    assert doc["status"] == {0: "pass", 1: "violated", 2: "inconclusive", 3: "input_error"}[expected]
    if expected != EXIT_PASS and expected != EXIT_VIOLATED:
        assert err.startswith("apseq:")


def test_argparse_errors_map_to_input_code():
    code, _, _ = capture(["classify", f("squares.json")])  # --candidates missing
    assert code == EXIT_INPUT
    assert run(["bogus"])[0] == EXIT_INPUT


WORKED = {
    "diagonal": "diagonal_ij.json",
    "steps": "steps_triangular.json",
    "decimate": "decimate_squares.json",
    "gcd-refine": "gcd_refine.json",
    "ring-perturbation": "ring_IN.json",
    "mq-isometry": "mq_shear.json",
    "rho": "rho_shear.json",
    "power": "power_shear.json",
    "product": "product_shear.json",
    "power-gcd": "power_gcd_shear.json",
    "m-isometry": "shear_m3.json",
    "hs-perturbation": "hs_IN.json",
    "n-inverse": "n_inverse.json",
    "inverse-perturbation": "inverse_IN.json",
    "identities": None,
}


def test_every_theorem_has_a_fixture():
    assert set(WORKED) == set(THEOREMS)


@pytest.mark.parametrize("theorem", list(WORKED))
def test_verify_worked_instances(theorem):
    argv = ["verify", theorem] + ([f(WORKED[theorem])] if WORKED[theorem] else [])
    code, doc, _ = run(argv)
    assert code == EXIT_PASS, doc
    assert doc["status"] == "pass"


def test_analyze_first_example_values():
    code, doc, _ = run(["analyze", f("example1.csv"), "--exact"])
    res = doc["result"]
    assert code == 0 and res["certified_order"] == 2 and res["strict"]
    assert res["monomial"] == ["2", "-2", "1"]
    assert res["monotonicity"] == {"kind": "increasing_from", "n0": 1}


def test_analyze_second_example():
    code, doc, _ = run(["analyze", f("example2.csv"), "--exact"])
    assert code == 0 and doc["result"]["certified_order"] == 3
    assert doc["result"]["monomial"] == ["1", "8", "-5", "1"]


def test_analyze_not_an_ap_without_expectation():
    code, doc, _ = run(["analyze", f("powers_of_two.csv"), "--exact", "--max-order", "3"])
    assert code == 0 and "not_an_ap" in doc["result"]


def test_analyze_matrix_kind():
    code, doc, _ = run(["analyze", f("matrices.json")])
    assert code == 0 and doc["result"]["certified_order"] == 2


def test_ring_worked_instance_output():
    code, doc, _ = run(["verify", "ring-perturbation", f("ring_IN.json")])
    res = doc["result"]
    assert res["perturbed_order"] == 2 and res["bound"] == 2
    assert res["certificate"] == [["0", "0"], ["0", "1"]]


def test_rho_output():
    _, doc, _ = run(["verify", "rho", f("rho_shear.json")])
    assert parse_rational(doc["result"]["rho_q"]) == 2
    assert abs(doc["result"]["rho"] ** 2 - 2) < 1e-12


def test_classify_variants_and_round_trip():
    code, doc, _ = run(["classify", f("squares.json"), "--exact", "--candidates", "1/2,1,2,3"])
    assert code == 0
    cls = PowerClassification.from_dict(doc["result"])
    assert cls.variant == PROPER and cls.s == parse_rational("1/2") and cls.ell == 1
    again = cls.to_dict()
    assert all(doc["result"][k] == v for k, v in again.items())
    _, doc, _ = run(["classify", f("exp12.json"), "--exact"] + CANDIDATES)
    assert doc["result"]["variant"] == "NeverAP"
    assert doc["result"]["qualifiers"]["candidates"] == ["1/2", "1", "2"]
    _, doc, _ = run(["classify", f("constant.csv"), "--exact"] + CANDIDATES)
    assert doc["result"]["variant"] == "Constant"


ALL_COMMANDS = (
    [["analyze", f("example1.csv"), "--exact"], ["analyze", f("matrices.json")],
     ["analyze", f("float_quadratic.json")],
     ["classify", f("squares.json"), "--exact"] + CANDIDATES]
    + [["verify", t] + ([f(p)] if p else []) for t, p in WORKED.items()]
    + [argv for argv, _ in MATRIX]
)


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=[" ".join(a[:2]) for a in ALL_COMMANDS])
def test_json_round_trip_and_determinism(argv):
    _, first, _ = capture(argv)
    _, second, _ = capture(argv)
    assert first == second
    doc = json.loads(first)
    assert canonical_json(doc) == first


def test_text_format_renders_json_leaves():
    code, out, _ = capture(["analyze", f("example1.csv"), "--exact", "--format", "text"])
    assert code == 0
    assert 'result.monomial: ["2", "-2", "1"]' in out.splitlines()
    assert 'status: "pass"' in out.splitlines()


def test_module_entry_point_subprocess():
    argv = [sys.executable, "-m", "apseq", "verify", "m-isometry", f("shear_m3.json")]
    a = subprocess.run(argv, capture_output=True, text=True)
    b = subprocess.run(argv, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout
    bad = subprocess.run(argv[:5] + [f("doubling_m3.json")], capture_output=True, text=True)
    assert bad.returncode == 1
