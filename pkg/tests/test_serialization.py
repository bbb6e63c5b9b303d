import json
import random

import pytest
from hypothesis import given

from lie2 import catalog
from lie2.cohomology import CEComplex
from lie2.extensions import classify
from lie2.nijenhuis import nijenhuis_deformation
from lie2.serialization import (SchemaError, algebra_from_json, algebra_to_json, cochain_from_json, cochain_to_json,
                                datum_from_json, datum_to_json, dumps, extension_from_json, extension_to_json, load,
                                operator_from_json, operator_to_json, save, witness_from_json, witness_to_json)
from strategies import lie2_algebras
from test_extensions import random_cochain


def through_text(data):
    return json.loads(dumps(data))


@given(lie2_algebras())
def test_algebra_roundtrip(L):
    assert algebra_from_json(through_text(algebra_to_json(L))) == L


def test_algebra_file_roundtrip(tmp_path):
    L = catalog.str_sl2()
    save(algebra_to_json(L, "str(sl2)"), tmp_path / "a.json")
    data = load(tmp_path / "a.json")
    assert data["description"] == "str(sl2)"
    assert algebra_from_json(data) == L


def test_one_based_increasing_entries():
    data = algebra_to_json(catalog.str_sl2())
    assert data["l3"] == [{"indices": [1, 2, 3], "out": ["8"]}]   # Killing form ⟨x,[y,z]⟩ on h,e,f
    assert all(e["indices"] == sorted(e["indices"]) for e in data["l2_00"])


def test_quadratic_input_builds_l3():
    data = {"kind": "lie2algebra", "g0_dim": 3, "gm1_dim": 1,
            "l2_00": [{"indices": [1, 2], "out": ["0", "2", "0"]}, {"indices": [1, 3], "out": ["0", "0", "-2"]},
                      {"indices": [2, 3], "out": ["1", "0", "0"]}],
            "form": [["8", "0", "0"], ["0", "0", "4"], ["0", "4", "0"]]}
    L = algebra_from_json(data)
    assert any(v != 0 for v in L.l3.flat)


@pytest.mark.parametrize("name", ["string_type", "o_operator"])
def test_operator_and_datum_roundtrip(name):
    L, N = catalog.OPERATORS[name]()
    dims = (L.dim0, L.dim1)
    assert operator_from_json(through_text(operator_to_json(N)), dims) == N
    w = nijenhuis_deformation(L, N)
    assert datum_from_json(through_text(datum_to_json(w)), dims) == w


def test_cochain_roundtrip():
    L = catalog.str_sl2()
    cx = CEComplex(L, max_degree=3)
    rng = random.Random(3)
    dims = (3, 1, 3, 1)
    for n in range(-1, 4):
        c = random_cochain(cx, n, rng)
        assert cochain_from_json(through_text(cochain_to_json(c, dims)), dims) == c


def test_extension_and_witness_roundtrip():
    datum, zero = catalog.extension_example()
    assert extension_from_json(through_text(extension_to_json(datum))) == datum
    w = classify(datum.base, datum.fiber, datum.rep, datum.cocycle, zero)
    back = witness_from_json(through_text(witness_to_json(w)), (3, 1, 3, 1))
    assert back.to_cochain() == w.to_cochain()


def test_shipped_examples_load():
    from pathlib import Path
    ex = Path(__file__).resolve().parents[1] / "examples"
    assert algebra_from_json(load(ex / "str_sl2.json")) == catalog.str_sl2()
    assert extension_from_json(load(ex / "extension.json")) == catalog.extension_example()[0]


@pytest.mark.parametrize("mutate, match", [
    (lambda d: d.pop("g0_dim"), "g0_dim"),
    (lambda d: d.update(gm1_dim=-1), "non-negative"),
    (lambda d: d["l2_00"][0].update(indices=[2, 1]), "increasing"),
    (lambda d: d["l2_00"][0].update(indices=[1, 9]), "out of range"),
    (lambda d: d["l2_00"].append(dict(d["l2_00"][0])), "duplicate"),
    (lambda d: d["l3"][0].update(out=["1.5"]), None),
    (lambda d: d["l3"][0].update(out=["1", "2"]), "list of 1"),
    (lambda d: d.update(d=[["1"]]), "matrix"),
])
def test_schema_errors(mutate, match):
    data = algebra_to_json(catalog.str_sl2())
    mutate(data)
    with pytest.raises(SchemaError, match=match):
        algebra_from_json(data)


def test_cochain_schema_errors():
    c = CEComplex(catalog.str_sl2()).zero(2)
    data = cochain_to_json(c, (3, 1, 3, 1))
    with pytest.raises(SchemaError, match="do not match"):
        cochain_from_json(data, (2, 1, 2, 1))
    data["components"] = [{"key": [1, 0, 0], "entries": []}]
    with pytest.raises(SchemaError, match="degree"):
        cochain_from_json(data)


def test_load_errors(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("[1, 2]")
    with pytest.raises(SchemaError):
        load(p)
    p.write_text("{not json")
    with pytest.raises(SchemaError):
        load(p)
    with pytest.raises(SchemaError):
        load(tmp_path / "missing.json")
