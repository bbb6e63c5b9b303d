"""JSON file schemas.  Indices are 1-based; rationals are strings ``"p/q"``.

Every ``*_to_json`` has an inverse ``*_from_json`` with
``from_json(to_json(x)) == x``.  Malformed input raises :class:`SchemaError`.
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

import numpy as np

from .cohomology import Cochain, ComponentKey, canonical_entries, component_keys, expand_component
from .deformations import DeformationDatum, TrivializationCandidate
from .exactlinalg import format_rational, parse_rational, zeros
from .extensions import AbelianComplex, EquivalenceWitness, ExtensionDatum
from .graded import Lie2Algebra, alternating_tensor
from .nijenhuis import NijenhuisOperator, QuadraticLieAlgebra, build_lie_of_quadratic
from .representations import Representation, TwoTermComplex

__all__ = [
    "SchemaError",
    "algebra_from_json",
    "algebra_to_json",
    "candidate_from_json",
    "candidate_to_json",
    "cochain_from_json",
    "cochain_to_json",
    "complex_from_json",
    "complex_to_json",
    "datum_from_json",
    "datum_to_json",
    "dumps",
    "extension_from_json",
    "extension_to_json",
    "load",
    "operator_from_json",
    "operator_to_json",
    "representation_from_json",
    "representation_to_json",
    "save",
    "witness_from_json",
    "witness_to_json",
]


class SchemaError(ValueError):
    """Input file does not follow the schema."""


def load(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    return data


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def save(data: dict, path) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


# -- scalars and matrices ----------------------------------------------------


def _q(v):
    try:
        return parse_rational(v)
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc


def _field(data: dict, key: str, what: str):
    if key not in data:
        raise SchemaError(f"{what}: missing field '{key}'")
    return data[key]


def _count(data: dict, key: str, what: str) -> int:
    v = _field(data, key, what)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise SchemaError(f"{what}: '{key}' must be a non-negative integer")
    return v


def _vec_out(vec) -> list[str]:
    return [format_rational(v) for v in vec]


def _vec_in(vec, length: int, what: str) -> list:
    if not isinstance(vec, list) or len(vec) != length:
        raise SchemaError(f"{what}: expected a list of {length} rationals")
    return [_q(v) for v in vec]


def matrix_to_json(M) -> list[list[str]]:
    return [_vec_out(row) for row in np.asarray(M, dtype=object)]


def matrix_from_json(data, rows: int, cols: int, what: str) -> np.ndarray:
    if not isinstance(data, list) or len(data) != rows:
        raise SchemaError(f"{what}: expected a {rows}x{cols} matrix")
    out = zeros(rows, cols)
    for i, row in enumerate(data):
        out[i] = _vec_in(row, cols, f"{what} row {i + 1}")
    return out


def _entries_out(tensor: np.ndarray, tuples) -> list[dict]:
    out = []
    for idx in tuples:
        vec = tensor[idx]
        if any(v != 0 for v in vec):
            out.append({"indices": [i + 1 for i in idx], "out": _vec_out(vec)})
    return out


def _entries_in(data, arity: int, dims: tuple[int, ...], out_dim: int, increasing: bool, what: str) -> dict:
    if data is None:
        return {}
    if not isinstance(data, list):
        raise SchemaError(f"{what}: expected a list of entries")
    out = {}
    for k, entry in enumerate(data):
        where = f"{what} entry {k + 1}"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where}: expected an object")
        idx = _field(entry, "indices", where)
        if (not isinstance(idx, list) or len(idx) != arity
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in idx)):
            raise SchemaError(f"{where}: 'indices' must list {arity} integers")
        if any(not 1 <= i <= d for i, d in zip(idx, dims)):
            raise SchemaError(f"{where}: index out of range {idx}")
        if increasing and any(a >= b for a, b in zip(idx, idx[1:])):
            raise SchemaError(f"{where}: indices {idx} must be strictly increasing")
        key = tuple(i - 1 for i in idx)
        if key in out:
            raise SchemaError(f"{where}: duplicate indices {idx}")
        out[key] = _vec_in(_field(entry, "out", where), out_dim, where)
    return out


# -- algebras and complexes ----------------------------------------------------


def algebra_to_json(L: Lie2Algebra, description: str = "") -> dict:
    m, n = L.dim0, L.dim1
    data = {"kind": "lie2algebra"}
    if L.name:
        data["name"] = L.name
    if description:
        data["description"] = description
    data.update({
        "g0_dim": m,
        "gm1_dim": n,
        "d": matrix_to_json(L.d),
        "l2_00": _entries_out(L.br00, combinations(range(m), 2)),
        "l2_01": _entries_out(L.br01, [(x, a) for x in range(m) for a in range(n)]),
        "l3": _entries_out(L.l3, combinations(range(m), 3)),
    })
    return data


def algebra_from_json(data: dict) -> Lie2Algebra:
    what = "algebra"
    m = _count(data, "g0_dim", what)
    n = _count(data, "gm1_dim", what)
    d = matrix_from_json(data.get("d", [[0] * n for _ in range(m)]), m, n, "d")
    b00 = _entries_in(data.get("l2_00"), 2, (m, m), m, True, "l2_00")
    b01 = _entries_in(data.get("l2_01"), 2, (m, n), n, False, "l2_01")
    l3 = _entries_in(data.get("l3"), 3, (m, m, m), n, True, "l3")
    name = data.get("name", "")
    if "form" in data:
        if n != 1:
            raise SchemaError("quadratic input requires gm1_dim = 1")
        form = matrix_from_json(data["form"], m, m, "form")
        try:
            s = QuadraticLieAlgebra(alternating_tensor(b00, 2, m, m), form, name=name)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        L = build_lie_of_quadratic(s)
        L.name = name
        given = Lie2Algebra.from_structure_constants(m, n, d=d, l2_00=b00, l2_01=b01, l3=l3)
        if (l3 and not all(a == b for a, b in zip(L.l3.flat, given.l3.flat))) or b01 or any(v != 0 for v in d.flat):
            raise SchemaError("quadratic input: d, l2_01 and l3 must be omitted or agree with the form")
        return L
    return Lie2Algebra.from_structure_constants(m, n, d=d, l2_00=b00, l2_01=b01, l3=l3, name=name)


def complex_to_json(V: TwoTermComplex) -> dict:
    return {"dim0": V.dimV0, "dim1": V.dimV1, "partial": matrix_to_json(V.partial)}


def complex_from_json(data: dict) -> AbelianComplex:
    k0, k1 = _count(data, "dim0", "complex"), _count(data, "dim1", "complex")
    return AbelianComplex(k0, k1, matrix_from_json(data.get("partial", [[0] * k1 for _ in range(k0)]),
                                                   k0, k1, "partial"))


def representation_to_json(mu: Representation) -> dict:
    m, n = mu.dims
    return {
        "kind": "representation",
        "V": complex_to_json(mu.V),
        "mu0_0": [matrix_to_json(M) for M in mu.mu0_0],
        "mu0_1": [matrix_to_json(M) for M in mu.mu0_1],
        "mu1": [matrix_to_json(M) for M in mu.mu1],
        "mu2": [{"indices": [i + 1, j + 1], "matrix": matrix_to_json(mu.mu2[i, j])}
                for i, j in combinations(range(m), 2) if any(v != 0 for v in mu.mu2[i, j].flat)],
    }


def representation_from_json(data: dict, dims: tuple[int, int]) -> Representation:
    m, n = dims
    V = complex_from_json(_field(data, "V", "representation"))
    v0, v1 = V.dimV0, V.dimV1

    def mats(key, count, r, c):
        lst = data.get(key, [])
        if not isinstance(lst, list) or len(lst) not in (0, count):
            raise SchemaError(f"representation: '{key}' must list {count} matrices")
        if not lst:
            return zeros(count, r, c)
        return np.array([matrix_from_json(M, r, c, f"{key}[{i + 1}]") for i, M in enumerate(lst)],
                        dtype=object).reshape(count, r, c)

    mu2 = zeros(m, m, v1, v0)
    for k, entry in enumerate(data.get("mu2", [])):
        idx = _field(entry, "indices", f"mu2 entry {k + 1}")
        if not (isinstance(idx, list) and len(idx) == 2 and 1 <= idx[0] < idx[1] <= m):
            raise SchemaError(f"mu2 entry {k + 1}: indices must be increasing and in range")
        M = matrix_from_json(_field(entry, "matrix", "mu2"), v1, v0, "mu2")
        mu2[idx[0] - 1, idx[1] - 1] = M
        mu2[idx[1] - 1, idx[0] - 1] = -M
    try:
        return Representation(V, mats("mu0_0", m, v0, v0), mats("mu0_1", m, v1, v1),
                              mats("mu1", n, v1, v0), mu2)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def operator_to_json(N: NijenhuisOperator) -> dict:
    return {"kind": "nijenhuis", "N0": matrix_to_json(N.N0), "N1": matrix_to_json(N.N1)}


def operator_from_json(data: dict, dims: tuple[int, int]) -> NijenhuisOperator:
    m, n = dims
    return NijenhuisOperator(matrix_from_json(_field(data, "N0", "operator"), m, m, "N0"),
                             matrix_from_json(_field(data, "N1", "operator"), n, n, "N1"))


def candidate_to_json(t: TrivializationCandidate) -> dict:
    m, _ = t.dims
    return {"kind": "trivialization", "N0": matrix_to_json(t.N0), "N1": matrix_to_json(t.N1),
            "N2": _entries_out(t.N2, combinations(range(m), 2))}


def candidate_from_json(data: dict, dims: tuple[int, int]) -> TrivializationCandidate:
    m, n = dims
    N2 = _entries_in(data.get("N2"), 2, (m, m), n, True, "N2")
    return TrivializationCandidate(matrix_from_json(_field(data, "N0", "candidate"), m, m, "N0"),
                                   matrix_from_json(_field(data, "N1", "candidate"), n, n, "N1"),
                                   alternating_tensor(N2, 2, m, n))


# -- cochains ---------------------------------------------------------------------


def cochain_to_json(c: Cochain, dims: tuple[int, int, int, int]) -> dict:
    """``dims = (dim g0, dim g-1, dim V0, dim V-1)``."""
    comps = []
    for key in component_keys(c.degree):
        t = c.components.get(key)
        if t is None or t.size == 0:
            continue
        entries = [{"x": [i + 1 for i in I], "a": [j + 1 for j in J], "value": _vec_out(vec)}
                   for (I, J), vec in canonical_entries(key, t).items()]
        if entries:
            comps.append({"key": [key.p, key.q, key.s], "entries": entries})
    m, n, v0, v1 = dims
    return {"kind": "cochain", "degree": c.degree,
            "dims": {"g0": m, "gm1": n, "V0": v0, "Vm1": v1}, "components": comps}


def cochain_from_json(data: dict, dims: tuple[int, int, int, int] | None = None) -> Cochain:
    deg = _field(data, "degree", "cochain")
    if not isinstance(deg, int) or deg < -1:
        raise SchemaError("cochain: 'degree' must be an integer >= -1")
    fd = _field(data, "dims", "cochain")
    got = tuple(_count(fd, k, "cochain dims") for k in ("g0", "gm1", "V0", "Vm1"))
    if dims is not None and got != tuple(dims):
        raise SchemaError(f"cochain dims {got} do not match the algebra and representation {tuple(dims)}")
    m, n, v0, v1 = got
    vdim = {0: v0, -1: v1}
    comps = {k: zeros(*((m,) * k.p + (n,) * k.q + (vdim[k.s],))) for k in component_keys(deg)}
    for ci, comp in enumerate(data.get("components", [])):
        raw = _field(comp, "key", f"component {ci + 1}")
        try:
            key = ComponentKey(*raw)
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"component {ci + 1}: bad key {raw}") from exc
        if key.degree != deg:
            raise SchemaError(f"component {ci + 1}: key {raw} has degree {key.degree}, expected {deg}")
        values = {}
        for ei, e in enumerate(comp.get("entries", [])):
            where = f"component {list(raw)} entry {ei + 1}"
            I = tuple(i - 1 for i in e.get("x", []))
            J = tuple(j - 1 for j in e.get("a", []))
            if (I, J) in values:
                raise SchemaError(f"{where}: duplicate entry")
            values[(I, J)] = _vec_in(_field(e, "value", where), vdim[key.s], where)
        try:
            comps[key] = expand_component(key, m, n, vdim[key.s], values)
        except ValueError as exc:
            raise SchemaError(f"component {list(raw)}: {exc}") from exc
    return Cochain(deg, comps)


def datum_to_json(w: DeformationDatum) -> dict:
    m, n = w.dims
    c = Cochain(2, {
        ComponentKey(0, 1, 0): np.einsum("ka->ak", w.omega1),
        ComponentKey(1, 1, -1): w.omega2_1,
        ComponentKey(2, 0, 0): w.omega2_0,
        ComponentKey(3, 0, -1): w.omega3,
    })
    return cochain_to_json(c, (m, n, m, n))


def datum_from_json(data: dict, dims: tuple[int, int]) -> DeformationDatum:
    m, n = dims
    return DeformationDatum.from_cochain(cochain_from_json(data, (m, n, m, n)))


def witness_to_json(w: EquivalenceWitness) -> dict:
    k0, m = w.b0.shape
    k1, n = w.b1.shape
    return cochain_to_json(w.to_cochain(), (m, n, k0, k1))


def witness_from_json(data: dict, dims: tuple[int, int, int, int]) -> EquivalenceWitness:
    return EquivalenceWitness.from_cochain(cochain_from_json(data, dims))


def extension_to_json(e: ExtensionDatum) -> dict:
    g, h = e.base, e.fiber
    return {
        "kind": "extension",
        "base": algebra_to_json(g),
        "fiber": complex_to_json(h),
        "rep": representation_to_json(e.rep),
        "cocycle": cochain_to_json(e.cocycle, (g.dim0, g.dim1, h.dimV0, h.dimV1)),
    }


def extension_from_json(data: dict) -> ExtensionDatum:
    g = algebra_from_json(_field(data, "base", "extension"))
    h = complex_from_json(_field(data, "fiber", "extension"))
    mu = representation_from_json(_field(data, "rep", "extension"), (g.dim0, g.dim1))
    if mu.V != h:
        raise SchemaError("extension: representation space differs from the fiber")
    c = cochain_from_json(_field(data, "cocycle", "extension"), (g.dim0, g.dim1, h.dimV0, h.dimV1))
    if c.degree != 2:
        raise SchemaError("extension: cocycle must have degree 2")
    return ExtensionDatum(g, h, mu, c)
