import json
import subprocess
import sys

import pytest

from ternary_codes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_weights_json(capsys):
    code, out, _ = run(capsys, "weights", "--m", "3", "--u", "1", "--v", "20", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"length": 26, "dimension": 6,
                               "counts": {"0": 1, "15": 312, "18": 260, "21": 156}}


def test_weights_csv(capsys):
    code, out, _ = run(capsys, "weights", "--m", "5", "--family", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["weight,count", "0,1", "153,21780", "162,19844", "171,17424"]


def test_weights_heavy_gate(capsys):
    code, _, err = run(capsys, "weights", "--m", "7", "--family", "2")
    assert code == 2 and "--heavy" in err and "codeword evaluations" in err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "1", "--m", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert {k: doc[k] for k in ("family", "m", "h", "v_raw", "v", "s", "expected_table")} == {
        "family": 1, "m": 3, "h": 1, "v_raw": 20, "v": 20, "s": 4, "expected_table": "I"}
    assert doc["parity_check_poly"]["text"] == "x^6 + 2x^3 + 2x^2 + x + 2"
    assert doc["conditions"]["passed"]


def test_construct_condition_violated(capsys):
    code, _, err = run(capsys, "construct", "--family", "2", "--m", "3")
    assert code == 2 and "7 mod 8" in err


def test_construct_custom_modulus(capsys):
    code, out, _ = run(capsys, "construct", "--family", "1", "--m", "3", "--modulus", "x^3 + 2x^2 + 1",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["modulus"] == "x^3 + 2x^2 + 1"
    assert doc["parity_check_poly"]["text"] != "x^6 + 2x^3 + 2x^2 + x + 2"


def test_bad_modulus(capsys):
    code, _, err = run(capsys, "weights", "--m", "3", "--v", "20", "--modulus", "1 0 0 1")
    assert code == 2 and "factors" in err


def test_dual_check(capsys):
    code, out, _ = run(capsys, "dual-check", "--family", "1", "--m", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["d_perp"] == 4 and doc["c1"] and doc["optimal"]
    code, out, _ = run(capsys, "dual-check", "--family", "3", "--m", "3", "--h", "1", "--format", "json")
    assert code == 0 and json.loads(out)["d_perp"] == 2


def test_expsum(capsys):
    code, out, _ = run(capsys, "expsum", "--lemma", "2", "--m", "3", "--h", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["values"] == {"-18": 156, "0": 260, "18": 312, "108": 1}
    code, out, _ = run(capsys, "expsum", "--lemma", "1", "--family", "1", "--m", "3")
    assert code == 0 and out.strip().endswith("PASS")


def test_xcorr(capsys):
    code, out, _ = run(capsys, "xcorr", "--family", "3", "--m", "5", "--h", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["three_valued"] and doc["predicted"] == [-28, -1, 26]
    code, _, err = run(capsys, "xcorr", "--family", "1", "--m", "3")
    assert code == 2 and "gcd" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "weights", "--m", "3")
    assert code == 2 and "--v" in err


def test_verify_m3(capsys):
    code, out, _ = run(capsys, "verify", "--m", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    statuses = {it["claim_id"]: it["status"] for it in doc["items"]}
    assert statuses["example.m3"] == "PASS"
    assert statuses["example.m5"] == "SKIPPED"
    assert doc["summary"]["FAIL"] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ternary_codes", "construct", "--family", "5", "--m", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "v = 33 = 7" in proc.stdout
