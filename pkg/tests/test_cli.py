import json
import shutil
import subprocess
import sys

import pytest

from lie2 import catalog
from lie2.cli import main
from lie2.graded import AXIOM_NAMES
from lie2.serialization import algebra_from_json, algebra_to_json, load, operator_to_json, save


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def examples(tmp_path, capsys):
    assert main(["catalog", "--write", str(tmp_path)]) == 0
    capsys.readouterr()
    return tmp_path


def test_catalog_writes_all_files(examples):
    names = sorted(p.name for p in examples.iterdir())
    assert names == sorted(["abelian.json", "str_sl2.json", "string_type.json", "o_operator.json",
                            "string_type_operator.json", "o_operator_operator.json", "extension.json",
                            "zero_cocycle.json"])


@pytest.mark.parametrize("name", ["abelian", "str_sl2", "string_type", "o_operator"])
def test_verify_builtins(capsys, name):
    code, out = run(capsys, "verify", f"builtin:{name}")
    assert code == 0 and ": PASS" in out


def test_verify_corrupted_file(capsys, tmp_path):
    data = algebra_to_json(catalog.str_sl2())
    data["l2_00"][0]["out"][0] = "5"          # [h,e] picks up an h-component
    save(data, tmp_path / "bad.json")
    code, out = run(capsys, "verify", str(tmp_path / "bad.json"))
    assert code == 1
    assert f"FAIL {AXIOM_NAMES['iii']}" in out


@pytest.mark.parametrize("degree, expected", [(-1, "1"), (0, "0"), (1, "0"), (2, "0")])
def test_cohomology_str_sl2(capsys, degree, expected):
    code, out = run(capsys, "cohomology", "builtin:str_sl2", "--degree", str(degree))
    assert code == 0 and out.splitlines()[0] == expected


def test_cohomology_abelian_h0(capsys):
    code, out = run(capsys, "cohomology", "builtin:abelian", "--degree", "0")
    assert code == 0 and out.splitlines()[0] == "2"


def test_cohomology_degree_overflow(capsys):
    code, out = run(capsys, "cohomology", "builtin:abelian", "--degree", "5", "--max-degree", "3")
    assert code == 2 and "input error" in out


def test_nijenhuis_and_deform_roundtrip(capsys, examples, tmp_path):
    datum = tmp_path / "datum.json"
    code, out = run(capsys, "nijenhuis", "builtin:o_operator", "--output", str(datum))
    assert code == 0 and datum.exists()
    out_alg = tmp_path / "def0.json"
    code, _ = run(capsys, "deform", str(examples / "o_operator.json"), str(datum), "--lambda", "0",
                  "--output", str(out_alg))
    assert code == 0
    assert algebra_from_json(load(out_alg)) == algebra_from_json(load(examples / "o_operator.json"))
    code, _ = run(capsys, "deform", "builtin:o_operator", str(examples / "o_operator_operator.json"),
                  "--lambda=-2/3")
    assert code == 0


def test_nijenhuis_failure(capsys, tmp_path):
    from lie2.nijenhuis import NijenhuisOperator
    from lie2.exactlinalg import identity
    save(operator_to_json(NijenhuisOperator(identity(3), identity(1))), tmp_path / "id.json")
    code, out = run(capsys, "nijenhuis", "builtin:str_sl2", str(tmp_path / "id.json"))
    assert code == 1 and "FAIL" in out


def test_trivialize(capsys, examples):
    code, out = run(capsys, "trivialize", "builtin:o_operator", str(examples / "o_operator_operator.json"),
                    str(examples / "o_operator_operator.json"))
    assert code == 0, out


def test_extend_and_classify(capsys, examples, tmp_path):
    code, _ = run(capsys, "extend", str(examples / "extension.json"), "--output", str(tmp_path / "E.json"))
    assert code == 0
    code, out = run(capsys, "verify", str(tmp_path / "E.json"))
    assert code == 0
    w = tmp_path / "w.json"
    code, out = run(capsys, "classify", str(examples / "extension.json"), str(examples / "zero_cocycle.json"),
                    "--output", str(w))
    assert code == 0 and "equivalent" in out and w.exists()
    assert load(w)["degree"] == 1


def test_classify_inequivalent(capsys, tmp_path):
    from lie2.cohomology import CEComplex
    from lie2.extensions import AbelianComplex, ExtensionDatum
    from lie2.representations import adjoint_representation
    from lie2.serialization import extension_to_json
    g = catalog.abelian()
    mu = adjoint_representation(g)
    cx = CEComplex(g, mu)
    z = next(c for c in cx.cocycle_basis(2) if cx.is_coboundary(c) is None)
    save(extension_to_json(ExtensionDatum(g, AbelianComplex.of(g.d), mu, z)), tmp_path / "e.json")
    code, out = run(capsys, "classify", str(tmp_path / "e.json"), "builtin:zero")
    assert code == 1 and "not equivalent" in out


def test_json_output(capsys):
    code, out = run(capsys, "--json", "cohomology", "builtin:str_sl2")
    data = json.loads(out)
    assert code == 0 and data["exit_code"] == 0
    assert data["dimensions"]["H"] == {"-1": 1, "0": 0, "1": 0, "2": 0}
    assert data["verdicts"]["D^2=0"] is True


@pytest.mark.parametrize("argv", [
    ["verify", "builtin:nope"],
    ["verify", "/nonexistent/file.json"],
    ["deform", "builtin:str_sl2", "builtin:o_operator"],
    ["nijenhuis", "builtin:str_sl2"],
    ["frobnicate"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_console_script():
    exe = shutil.which("lie2")
    cmd = [exe] if exe else [sys.executable, "-m", "lie2.cli"]
    proc = subprocess.run(cmd + ["cohomology", "builtin:abelian", "--degree", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "2"
