"""Lie 2-algebras given by structure constants, and their homomorphisms.

Basis conventions: ``e_1..e_m`` span the degree-0 part ``g0`` and
``f_1..f_n`` span the degree -1 part ``g-1`` (0-based in code).  All
structure maps are dense numpy object arrays:

* ``d[i, j]``          coefficient of ``e_i`` in ``d(f_j)``
* ``br00[i, j, k]``    coefficient of ``e_k`` in ``[e_i, e_j]``
* ``br01[i, j, k]``    coefficient of ``f_k`` in ``[e_i, f_j]``
* ``l3[i, j, k, r]``   coefficient of ``f_r`` in ``l3(e_i, e_j, e_k)``

``br00`` and ``l3`` are generated from their values on strictly increasing
index tuples, so antisymmetry and alternation hold by construction.  Entries
may be Fractions or any ring element supporting ``+``, ``*`` and ``== 0``
(deformation code uses :class:`~lie2.exactlinalg.LambdaPoly`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from typing import Mapping, Sequence

import numpy as np

from .exactlinalg import as_matrix, contract, identity, inverse, parse_rational, zeros
from .reports import AxiomReport, basis_label

__all__ = [
    "GradedSpace",
    "Homomorphism",
    "Lie2Algebra",
    "alternating_tensor",
    "check_axioms",
    "check_homomorphism",
    "compose",
    "invert",
    "permutation_sign",
    "signed_unshuffle_sum",
    "transport_structure",
    "unshuffles",
]


def permutation_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort distinct indices, returning the sign of the sorting permutation.

    Returns sign 0 when an index repeats (alternating maps vanish there).
    """
    if len(set(indices)) != len(indices):
        return 0, tuple(sorted(indices))
    order = sorted(range(len(indices)), key=lambda k: indices[k])
    return permutation_sign(order), tuple(indices[k] for k in order)


def unshuffles(n: int, k: int):
    """(k, n-k)-unshuffles of ``range(n)`` as ``(head, tail, sign)``."""
    for head in combinations(range(n), k):
        tail = tuple(i for i in range(n) if i not in head)
        yield head, tail, permutation_sign(head + tail)


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def signed_unshuffle_sum(t: np.ndarray, k: int, n: int) -> np.ndarray:
    """Alternate the first ``n`` axes of ``t`` over (k, n-k)-unshuffles.

    ``out[x_1..x_n, ...] = Σ_σ sgn(σ) t[x_σ(1), ..., x_σ(n), ...]``.
    """
    rest = _LETTERS[n:t.ndim]
    out = None
    for head, tail, sign in unshuffles(n, k):
        src = "".join(_LETTERS[i] for i in head + tail) + rest
        term = np.einsum(f"{src}->{_LETTERS[:n]}{rest}", t)
        term = term if sign > 0 else -term
        out = term if out is None else out + term
    return out


def alternating_tensor(entries: Mapping[tuple, Sequence], arity: int, dim: int,
                       out_dim: int) -> np.ndarray:
    """Dense alternating tensor from values on strictly increasing tuples."""
    t = zeros(*([dim] * arity), out_dim)
    for key, vec in entries.items():
        key = tuple(key)
        if len(key) != arity or list(key) != sorted(set(key)):
            raise ValueError(f"index tuple {key} is not strictly increasing of length {arity}")
        if any(not 0 <= i < dim for i in key):
            raise ValueError(f"index tuple {key} out of range for dimension {dim}")
        vec = [parse_rational(v) for v in vec]
        if len(vec) != out_dim:
            raise ValueError(f"value for {key} has length {len(vec)}, expected {out_dim}")
        for perm in permutations(range(arity)):
            sign = permutation_sign(perm)
            idx = tuple(key[p] for p in perm)
            for r, v in enumerate(vec):
                t[idx + (r,)] = v if sign > 0 else -v
    return t


def is_alternating(t: np.ndarray, arity: int) -> bool:
    for perm in permutations(range(arity)):
        if perm == tuple(range(arity)):
            continue
        src = "".join(_LETTERS[i] for i in perm) + _LETTERS[arity:t.ndim]
        permuted = np.einsum(f"{src}->{_LETTERS[:t.ndim]}", t)
        expected = t if permutation_sign(perm) > 0 else -t
        if not all(a == b for a, b in zip(permuted.flat, expected.flat)):
            return False
    return True


def _obj(arr, shape) -> np.ndarray:
    a = np.asarray(arr, dtype=object)
    if a.size == 0:
        return zeros(*shape)
    if a.shape != tuple(shape):
        raise ValueError(f"shape {a.shape} != expected {tuple(shape)}")
    return a


@dataclass(frozen=True)
class GradedSpace:
    """``g = g0 ⊕ g-1`` with ``dim0 = dim g0`` and ``dim1 = dim g-1``."""

    dim0: int
    dim1: int

    def __post_init__(self):
        if self.dim0 < 0 or self.dim1 < 0:
            raise ValueError("dimensions must be non-negative")


class Lie2Algebra:
    """A 2-term L∞-algebra ``(g; d, [·,·], l3)`` by structure constants.

    There is no bracket ``g-1 ∧ g-1``; it would land in degree -2.
    Construction does not check the Lie 2-algebra identities; call
    :func:`check_axioms` for that.
    """

    def __init__(self, d, br00, br01, l3, *, name: str = "", check_alternation: bool = True):
        d = np.asarray(d, dtype=object)
        if d.ndim != 2:
            raise ValueError("d must be a matrix of shape (dim g0, dim g-1)")
        m, n = d.shape
        self.space = GradedSpace(m, n)
        self.d = d
        self.br00 = _obj(br00, (m, m, m))
        self.br01 = _obj(br01, (m, n, n))
        self.l3 = _obj(l3, (m, m, m, n))
        self.name = name
        if check_alternation:
            if not is_alternating(self.br00, 2):
                raise ValueError("[·,·] on g0 is not antisymmetric")
            if not is_alternating(self.l3, 3):
                raise ValueError("l3 is not alternating")

    @classmethod
    def from_structure_constants(cls, dim0: int, dim1: int, *, d=None,
                                 l2_00: Mapping | None = None, l2_01: Mapping | None = None,
                                 l3: Mapping | None = None, name: str = "") -> "Lie2Algebra":
        """Build from sparse data keyed by 0-based index tuples.

        ``l2_00`` and ``l3`` are keyed by strictly increasing tuples; ``l2_01``
        by ``(i, j)`` meaning ``[e_i, f_j]``.
        """
        dm = zeros(dim0, dim1) if d is None else as_matrix(d, dim0, dim1)
        b00 = alternating_tensor(l2_00 or {}, 2, dim0, dim0)
        b01 = zeros(dim0, dim1, dim1)
        for (i, j), vec in (l2_01 or {}).items():
            if not (0 <= i < dim0 and 0 <= j < dim1):
                raise ValueError(f"[e,f] index {(i, j)} out of range")
            b01[i, j, :] = [parse_rational(v) for v in vec]
        t3 = alternating_tensor(l3 or {}, 3, dim0, dim1)
        return cls(dm, b00, b01, t3, name=name, check_alternation=False)

    @classmethod
    def zero(cls, dim0: int, dim1: int, name: str = "") -> "Lie2Algebra":
        return cls(zeros(dim0, dim1), zeros(dim0, dim0, dim0), zeros(dim0, dim1, dim1),
                   zeros(dim0, dim0, dim0, dim1), name=name, check_alternation=False)

    @property
    def dim0(self) -> int:
        return self.space.dim0

    @property
    def dim1(self) -> int:
        return self.space.dim1

    # -- evaluation on vectors ------------------------------------------------

    def bracket00(self, x, y) -> np.ndarray:
        return contract("i,j,ijk->k", np.asarray(x, dtype=object), np.asarray(y, dtype=object), self.br00)

    def bracket01(self, x, a) -> np.ndarray:
        return contract("i,j,ijk->k", np.asarray(x, dtype=object), np.asarray(a, dtype=object), self.br01)

    def l3_eval(self, x, y, z) -> np.ndarray:
        return contract("i,j,k,ijkr->r", *(np.asarray(v, dtype=object) for v in (x, y, z)), self.l3)

    def apply_d(self, a) -> np.ndarray:
        return self.d.dot(np.asarray(a, dtype=object))

    def structure_equal(self, other: "Lie2Algebra") -> bool:
        return all(
            a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
            for a, b in zip(self.tensors(), other.tensors())
        )

    def tensors(self) -> tuple[np.ndarray, ...]:
        return self.d, self.br00, self.br01, self.l3

    def map_entries(self, fn) -> "Lie2Algebra":
        vec = np.vectorize(fn, otypes=[object])
        return Lie2Algebra(*(vec(t) if t.size else t.copy() for t in self.tensors()),
                           name=self.name, check_alternation=False)

    def is_strict(self) -> bool:
        return all(v == 0 for v in self.l3.flat)

    def is_skeletal(self) -> bool:
        return all(v == 0 for v in self.d.flat)

    def __eq__(self, other):
        return isinstance(other, Lie2Algebra) and self.structure_equal(other)

    __hash__ = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Lie2Algebra{label} dim g0={self.dim0} dim g-1={self.dim1}>"


# -- axioms --------------------------------------------------------------------


AXIOM_NAMES = {
    "i": "(i) d[x,a] = [x,da]",
    "ii": "(ii) [da,b] = [a,db]",
    "iii": "(iii) [[x,y],z] + c.p. + d l3(x,y,z) = 0",
    "iv": "(iv) [[x,y],a] + [[y,a],x] + [[a,x],y] + l3(x,y,da) = 0",
    "v": "(v) Jacobiator identity",
}


def axiom_residuals(L: Lie2Algebra) -> dict[str, np.ndarray]:
    """Residual tensors of the five Lie 2-algebra identities on all basis tuples.

    The last axis of each tensor is the output coordinate.
    """
    d, b00, b01, l3 = L.tensors()
    # [x,a] for x in g0, a in g-1 written B(x,a); [a,x] = -B(x,a)
    r1 = np.einsum("ir,xar->xai", d, b01) - np.einsum("xji,ja->xai", b00, d)
    da_b = np.einsum("ja,jbk->abk", d, b01)
    r2 = da_b + np.einsum("abk->bak", da_b)
    jac = np.einsum("xyc,czk->xyzk", b00, b00)
    r3 = (jac + np.einsum("yzxk->xyzk", jac) + np.einsum("zxyk->xyzk", jac)
          + np.einsum("ir,xyzr->xyzi", d, l3))
    # [[x,y],a] + [[y,a],x] + [[a,x],y] = B([x,y],a) - B(x,B(y,a)) + B(y,B(x,a))
    bb = np.einsum("yac,xck->xyak", b01, b01)
    r4 = (np.einsum("xyc,cak->xyak", b00, b01) - bb + np.einsum("yxak->xyak", bb)
          + np.einsum("ja,xyjk->xyak", d, l3))
    r5 = jacobiator(L)
    return {"i": r1, "ii": r2, "iii": r3, "iv": r4, "v": r5}


def jacobiator(L: Lie2Algebra) -> np.ndarray:
    """``J(x,y,z,t) = [l3(x,y,z),t] + c.p. - (l3([x,y],z,t) + c.p.)``.

    Both cyclic sums over four arguments are the signed unshuffle sums that
    make each side alternating.
    """
    _, b00, b01, l3 = L.tensors()
    m, n = L.dim0, L.dim1
    if m < 4:
        return zeros(m, m, m, m, n)
    # [a, t] = -B(t, a)
    s = -np.einsum("xyzc,tck->xyztk", l3, b01)
    t = np.einsum("xyc,cztk->xyztk", b00, l3)
    return signed_unshuffle_sum(s, 3, 4) - signed_unshuffle_sum(t, 2, 4)


def check_axioms(L: Lie2Algebra) -> AxiomReport:
    """Evaluate the five identities on basis tuples and report exact residuals.

    Alternating slots are visited on increasing tuples only; the residual of
    each identity is multilinear and alternating (or symmetric, for (ii)) in
    those slots, so this covers every tuple.  In particular the Jacobiator is
    only evaluated on ``i<j<k<l``.
    """
    res = axiom_residuals(L)
    m, n = L.dim0, L.dim1
    report = AxiomReport()
    for key in AXIOM_NAMES.values():
        report.declare(key)
    tuples = {
        "i": [((x, a), ("e", "f")) for x in range(m) for a in range(n)],
        "ii": [((a, b), ("f", "f")) for a, b in combinations_with_replacement(range(n), 2)],
        "iii": [(t, ("e",) * 3) for t in combinations(range(m), 3)],
        "iv": [((x, y, a), ("e", "e", "f")) for x, y in combinations(range(m), 2) for a in range(n)],
        "v": [(t, ("e",) * 4) for t in combinations(range(m), 4)],
    }
    for key, items in tuples.items():
        for idx, kinds in items:
            vec = res[key][idx]
            if any(v != 0 for v in vec):
                labels = [basis_label(0 if k == "e" else -1, i) for k, i in zip(kinds, idx)]
                report.record(AXIOM_NAMES[key], labels, vec)
    return report


# -- homomorphisms -------------------------------------------------------------


class Homomorphism:
    """``F = (F0, F1, F2)`` with ``F2: ∧²g0 → g'-1`` stored as a dense alternating tensor."""

    def __init__(self, F0, F1, F2=None):
        self.F0 = np.asarray(F0, dtype=object)
        self.F1 = np.asarray(F1, dtype=object)
        m = self.F0.shape[1]
        n1 = self.F1.shape[0]
        self.F2 = zeros(m, m, n1) if F2 is None else _obj(F2, (m, m, n1))

    @classmethod
    def identity(cls, L: Lie2Algebra) -> "Homomorphism":
        return cls(identity(L.dim0), identity(L.dim1))

    @property
    def source_dims(self) -> tuple[int, int]:
        return self.F0.shape[1], self.F1.shape[1]

    @property
    def target_dims(self) -> tuple[int, int]:
        return self.F0.shape[0], self.F1.shape[0]

    def is_strict(self) -> bool:
        return all(v == 0 for v in self.F2.flat)

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return all(
            a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
            for a, b in ((self.F0, other.F0), (self.F1, other.F1), (self.F2, other.F2))
        )

    __hash__ = None

    def __repr__(self):
        return f"<Homomorphism {self.source_dims} -> {self.target_dims}>"


HOM_NAMES = {
    "i": "(i) F0 d = d' F1",
    "ii": "(ii) F0[x,y] - [F0x,F0y]' = d'F2(x,y)",
    "iii": "(iii) F1[x,a] - [F0x,F1a]' = F2(x,da)",
    "iv": "(iv) F2-coherence with l3",
}


def _check_shapes(F: Homomorphism, L: Lie2Algebra, Lp: Lie2Algebra) -> None:
    if F.source_dims != (L.dim0, L.dim1) or F.target_dims != (Lp.dim0, Lp.dim1):
        raise ValueError(f"homomorphism {F.source_dims}->{F.target_dims} does not match "
                         f"({L.dim0},{L.dim1})->({Lp.dim0},{Lp.dim1})")


def homomorphism_residuals(F: Homomorphism, L: Lie2Algebra, Lp: Lie2Algebra) -> dict[str, np.ndarray]:
    _check_shapes(F, L, Lp)
    F0, F1, F2 = F.F0, F.F1, F.F2
    r1 = np.einsum("ij,ja->ia", F0, L.d) - np.einsum("ij,ja->ia", Lp.d, F1)
    img00 = contract("ix,jy,ijk->xyk", F0, F0, Lp.br00)
    r2 = (np.einsum("kc,xyc->xyk", F0, L.br00) - img00
          - np.einsum("kr,xyr->xyk", Lp.d, F2))
    r3 = (np.einsum("kc,xac->xak", F1, L.br01)
          - contract("ix,ja,ijk->xak", F0, F1, Lp.br01)
          - np.einsum("xjk,ja->xak", F2, L.d))
    # F2([x,y],z) + c.p. + F1 l3(x,y,z) - [F0x,F2(y,z)]' - c.p. - l3'(F0x,F0y,F0z)
    f2b = np.einsum("xyc,czk->xyzk", L.br00, F2)
    act = contract("ix,yzj,ijk->xyzk", F0, F2, Lp.br01)
    cyc = f2b - act
    r4 = (cyc + np.einsum("yzxk->xyzk", cyc) + np.einsum("zxyk->xyzk", cyc)
          + np.einsum("kr,xyzr->xyzk", F1, L.l3)
          - contract("ix,jy,kz,ijkr->xyzr", F0, F0, F0, Lp.l3))
    return {"i": r1, "ii": r2, "iii": r3, "iv": r4}


def check_homomorphism(F: Homomorphism, L: Lie2Algebra, Lp: Lie2Algebra) -> AxiomReport:
    res = homomorphism_residuals(F, L, Lp)
    m, n = L.dim0, L.dim1
    report = AxiomReport()
    for name in HOM_NAMES.values():
        report.declare(name)
    for a in range(n):
        col = res["i"][:, a]
        if any(v != 0 for v in col):
            report.record(HOM_NAMES["i"], [basis_label(-1, a)], col)
    for x, y in combinations(range(m), 2):
        if any(v != 0 for v in res["ii"][x, y]):
            report.record(HOM_NAMES["ii"], [basis_label(0, x), basis_label(0, y)], res["ii"][x, y])
    for x in range(m):
        for a in range(n):
            if any(v != 0 for v in res["iii"][x, a]):
                report.record(HOM_NAMES["iii"], [basis_label(0, x), basis_label(-1, a)], res["iii"][x, a])
    for t in combinations(range(m), 3):
        if any(v != 0 for v in res["iv"][t]):
            report.record(HOM_NAMES["iv"], [basis_label(0, i) for i in t], res["iv"][t])
    return report


def compose(G: Homomorphism, F: Homomorphism) -> Homomorphism:
    """``GF`` with ``(GF)_2 = G2∘(F0×F0) + G1∘F2``."""
    if F.target_dims != G.source_dims:
        raise ValueError(f"cannot compose: target {F.target_dims} != source {G.source_dims}")
    F2 = (contract("ix,jy,ijk->xyk", F.F0, F.F0, G.F2)
          + np.einsum("kr,xyr->xyk", G.F1, F.F2))
    return Homomorphism(G.F0.dot(F.F0), G.F1.dot(F.F1), F2)


def invert(F: Homomorphism) -> Homomorphism:
    """``F^{-1} = (F0^{-1}, F1^{-1}, -F1^{-1} F2(F0^{-1} × F0^{-1}))``."""
    if F.F0.shape[0] != F.F0.shape[1] or F.F1.shape[0] != F.F1.shape[1]:
        raise ValueError("F0 and F1 must be square to be invertible")
    G0 = inverse(F.F0)
    G1 = inverse(F.F1)
    G2 = -contract("kr,ix,jy,ijr->xyk", G1, G0, G0, F.F2)
    return Homomorphism(G0, G1, G2)


def transport_structure(F: Homomorphism, Lp: Lie2Algebra) -> Lie2Algebra:
    """Pull the structure of ``Lp`` back along ``F`` with invertible ``F0, F1``.

    The result is a Lie 2-algebra on the source space for which ``F`` is an
    isomorphism onto ``Lp`` (whenever ``Lp`` itself is one).
    """
    if F.target_dims != (Lp.dim0, Lp.dim1):
        raise ValueError("F does not land in the given algebra")
    G0 = inverse(F.F0)
    G1 = inverse(F.F1)
    F0, F1, F2 = F.F0, F.F1, F.F2
    d = G0.dot(Lp.d).dot(F1)
    br00 = np.einsum("ki,xyi->xyk", G0,
                     contract("ix,jy,ijk->xyk", F0, F0, Lp.br00)
                     + np.einsum("kr,xyr->xyk", Lp.d, F2))
    br01 = np.einsum("ki,xai->xak", G1,
                     contract("ix,ja,ijk->xak", F0, F1, Lp.br01)
                     + np.einsum("xjk,ja->xak", F2, d))
    # [F0x, F2(y,z)]' - F2([x,y],z), cyclically, plus l3'(F0x,F0y,F0z)
    term = (contract("ix,yzj,ijk->xyzk", F0, F2, Lp.br01)
            - np.einsum("xyc,czk->xyzk", br00, F2))
    inner = (term + np.einsum("yzxk->xyzk", term) + np.einsum("zxyk->xyzk", term)
             + contract("ix,jy,kz,ijkr->xyzr", F0, F0, F0, Lp.l3))
    l3 = np.einsum("ki,xyzi->xyzk", G1, inner)
    return Lie2Algebra(d, br00, br01, l3, check_alternation=False)
