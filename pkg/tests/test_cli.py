import json
import subprocess
import sys

import jsonschema
import pytest

from conftest import FIXTURES
from waci.cli import load_schema, main

REPORT = load_schema("report")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write_algebra(tmp_path, name, **extra):
    names, rels = FIXTURES[name]
    doc = {
        "variables": [{"name": v[0], "weight": v[1]} if isinstance(v, tuple) else {"name": v, "weight": 2} for v in names],
        "relations": rels,
        **extra,
    }
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc))
    return path


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT)
    return doc


@pytest.mark.parametrize("cmd", ["check", "signature", "degree", "gram", "integrality", "smoothable"])
@pytest.mark.parametrize("name", ["A(2)", "cp2", "pp", "B(-1)"])
def test_algebra_commands_emit_valid_reports(tmp_path, capsys, cmd, name):
    path = write_algebra(tmp_path, name)
    doc = report(capsys, cmd, path)
    assert doc["command"] == cmd


def test_outputs_are_deterministic(tmp_path, capsys):
    path = write_algebra(tmp_path, "A(2)", orientation="x^4", middle_basis=["x*y", "x^2", "x^2 - y^2"])
    for cmd in ("check", "gram", "integrality", "smoothable", "degree"):
        a = report(capsys, cmd, path)
        b = report(capsys, cmd, path)
        a["diagnostics"].pop("elapsed_seconds")
        b["diagnostics"].pop("elapsed_seconds")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_a2_values(tmp_path, capsys):
    path = write_algebra(tmp_path, "A(2)", orientation="x^4", middle_basis=["x*y", "x^2", "x^2 - y^2"])
    assert report(capsys, "check", path)["result"]["hilbert_series"] == [1, 2, 3, 2, 1]
    assert report(capsys, "signature", path)["result"]["signature"] == 3
    assert report(capsys, "signature", path, "--orientation", "-1")["result"]["signature"] == -3
    assert report(capsys, "gram", path)["result"]["gram"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert report(capsys, "degree", path)["result"]["degree"] == -3
    smooth = report(capsys, "smoothable", path)["result"]
    assert smooth["decision"] == "smoothable" and smooth["witness"]["a"] == 1 and smooth["witness"]["b"] == 2
    pairing = report(capsys, "gram", path, "--degree", "2")["result"]
    assert len(pairing["matrix"]) == 2


def test_numeric_degree_diagnostic(tmp_path, capsys):
    path = write_algebra(tmp_path, "A(0)")
    doc = report(capsys, "degree", path, "--numeric", "--trials", "5")
    assert doc["diagnostics"]["numeric_degree_trials"] == [1] * 5
    path = write_algebra(tmp_path, "pp")
    doc = report(capsys, "degree", path, "--numeric")
    assert doc["diagnostics"]["numeric_degree_trials"] is None


def test_qform_command(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"gram": [["5", "0"], ["0", "5"]], "formal_dimension": 4}))
    res = report(capsys, "qform", path)["result"]
    assert res["in_witt_Z"] and res["sign_diagonal_witness"] == [["1/5", "2/5"], ["-2/5", "1/5"]]
    assert res["smoothable"]["witness"] == {"kind": "dim4", "t": 2, "s": 0, "model": "CP^2 # CP^2"}
    path.write_text(json.dumps({"gram": [["15", "0"], ["0", "15"]]}))
    res = report(capsys, "qform", path)["result"]
    assert not res["in_witt_Z"] and res["integrality"]["discriminant_ok"]
    assert res["sign_diagonal_witness"] is None


def test_family_command(tmp_path, capsys):
    out = tmp_path / "a2.json"
    doc = report(capsys, "family", "A", "2", "--out", out, "--verify")
    assert doc["result"]["verification"]["ok"]
    assert doc["result"]["oracle"]["signature_abs"] == 3 and doc["result"]["oracle"]["smoothable"]
    assert report(capsys, "signature", out)["result"]["signature"] == 3
    doc = report(capsys, "family", "B", "-1", "--verify")
    assert doc["result"]["oracle"]["signature"] == 6 and not doc["result"]["oracle"]["smoothable"]


@pytest.mark.parametrize(
    "argv_builder,code",
    [
        (lambda tmp: ["family", "B", "0"], 2),
        (lambda tmp: ["family", "A", "1"], 2),
        (lambda tmp: ["family", "A", "1/0"], 2),
        (lambda tmp: ["check", str(tmp / "missing.json")], 2),
    ],
)
def test_exit_codes(tmp_path, capsys, argv_builder, code):
    got, out, err = run(capsys, *argv_builder(tmp_path))
    assert got == code and out == "" and json.loads(err)["exit_code"] == code


@pytest.mark.parametrize(
    "doc",
    [
        {"variables": [{"name": "x", "weight": 3}], "relations": ["x^3"]},
        {"variables": [{"name": "x", "weight": 2}], "relations": ["x^3 + x"]},
        {"variables": [{"name": "x", "weight": 2}, {"name": "y", "weight": 2}], "relations": ["x^2", "x*y"]},
        {"variables": [{"name": "x", "weight": 2}], "relations": ["x^3 +"]},
        {"variables": [{"name": "x", "weight": 2}]},
    ],
)
def test_invalid_algebras_exit_2(tmp_path, capsys, doc):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "check", path)
    assert code == 2 and "error" in json.loads(err)


def test_singular_gram_exit_2(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"gram": [["1", "1"], ["1", "1"]]}))
    assert run(capsys, "qform", path)[0] == 2
    path.write_text("not json")
    assert run(capsys, "qform", path)[0] == 2


def test_pretty_output(tmp_path, capsys):
    path = write_algebra(tmp_path, "cp2")
    code, out, _ = run(capsys, "degree", path, "--pretty")
    assert code == 0 and "degree: 1" in out


def test_module_entry_point(tmp_path):
    path = write_algebra(tmp_path, "cp2")
    proc = subprocess.run([sys.executable, "-m", "waci", "check", str(path)], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["formal_dimension"] == 4
