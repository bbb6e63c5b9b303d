"""The strict Lie 2-algebra End(V) of a 2-term complex and representations into it.

A representation of ``L`` on ``V: V-1 --∂--> V0`` is stored as explicit
matrices per basis vector:

* ``mu0[i] = (X0, X1)`` with ``X0: V0→V0``, ``X1: V-1→V-1`` for ``e_i``
* ``mu1[j]: V0→V-1`` for ``f_j``
* ``mu2[i, j]: V0→V-1`` for ``e_i ∧ e_j`` (dense, antisymmetric)

Matrices act on column vectors, so ``X0[r, c]`` is the coefficient of the
r-th basis vector of ``V0`` in ``X0(v_c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exactlinalg import as_matrix, nullspace, zeros
from .graded import Lie2Algebra, is_alternating
from .reports import AxiomReport, basis_label

__all__ = [
    "Representation",
    "TwoTermComplex",
    "adjoint_representation",
    "build_end_algebra",
    "check_representation",
    "end_algebra_basis",
    "representation_residuals",
]


@dataclass(frozen=True, eq=False)
class TwoTermComplex:
    """``V-1 --∂--> V0``; ``partial`` has shape ``(dimV0, dimV1)``."""

    dimV0: int
    dimV1: int
    partial: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.partial, dtype=object)
        if p.size == 0:
            p = zeros(self.dimV0, self.dimV1)
        if p.shape != (self.dimV0, self.dimV1):
            raise ValueError(f"∂ has shape {p.shape}, expected ({self.dimV0}, {self.dimV1})")
        object.__setattr__(self, "partial", p)

    @classmethod
    def of(cls, partial, dimV0: int | None = None, dimV1: int | None = None) -> "TwoTermComplex":
        p = as_matrix(partial, dimV0, dimV1)
        return cls(p.shape[0], p.shape[1], p)

    @classmethod
    def underlying(cls, L: Lie2Algebra) -> "TwoTermComplex":
        return cls(L.dim0, L.dim1, L.d)

    def dim(self, s: int) -> int:
        return self.dimV0 if s == 0 else self.dimV1

    def __eq__(self, other):
        return (isinstance(other, TwoTermComplex) and self.dimV0 == other.dimV0
                and self.dimV1 == other.dimV1
                and all(a == b for a, b in zip(self.partial.flat, other.partial.flat)))

    __hash__ = None


class Representation:
    """``μ = (μ0, μ1, μ2)`` of a Lie 2-algebra on a 2-term complex.

    Internally ``mu0_0`` has shape ``(m, V0, V0)``, ``mu0_1`` ``(m, V1, V1)``,
    ``mu1`` ``(n, V1, V0)`` and ``mu2`` ``(m, m, V1, V0)``.
    """

    def __init__(self, V: TwoTermComplex, mu0_0, mu0_1, mu1, mu2):
        self.V = V
        self.mu0_0 = np.asarray(mu0_0, dtype=object)
        self.mu0_1 = np.asarray(mu0_1, dtype=object)
        self.mu1 = np.asarray(mu1, dtype=object)
        self.mu2 = np.asarray(mu2, dtype=object)
        m = self.mu0_0.shape[0]
        n = self.mu1.shape[0]
        v0, v1 = V.dimV0, V.dimV1
        expect = {
            "mu0_0": (self.mu0_0, (m, v0, v0)),
            "mu0_1": (self.mu0_1, (m, v1, v1)),
            "mu1": (self.mu1, (n, v1, v0)),
            "mu2": (self.mu2, (m, m, v1, v0)),
        }
        for name, (arr, shape) in expect.items():
            if arr.shape != shape:
                if arr.size == 0 and int(np.prod(shape)) == 0:
                    setattr(self, name, zeros(*shape))
                    continue
                raise ValueError(f"{name} has shape {arr.shape}, expected {shape}")
        if not is_alternating(self.mu2, 2):
            raise ValueError("μ2 is not antisymmetric")

    @classmethod
    def zero(cls, L: Lie2Algebra, V: TwoTermComplex) -> "Representation":
        m, n, v0, v1 = L.dim0, L.dim1, V.dimV0, V.dimV1
        return cls(V, zeros(m, v0, v0), zeros(m, v1, v1), zeros(n, v1, v0), zeros(m, m, v1, v0))

    @classmethod
    def from_lists(cls, V: TwoTermComplex, mu0, mu1, mu2=None) -> "Representation":
        """``mu0``: list of ``(X0, X1)``; ``mu1``: list of matrices; ``mu2``: ``{(i,j): M}`` for i<j."""
        m, n = len(mu0), len(mu1)
        v0, v1 = V.dimV0, V.dimV1
        a0 = zeros(m, v0, v0)
        a1 = zeros(m, v1, v1)
        for i, (X0, X1) in enumerate(mu0):
            a0[i] = as_matrix(X0, v0, v0)
            a1[i] = as_matrix(X1, v1, v1)
        b = zeros(n, v1, v0)
        for j, M in enumerate(mu1):
            b[j] = as_matrix(M, v1, v0)
        c = zeros(m, m, v1, v0)
        for (i, j), M in (mu2 or {}).items():
            if not i < j:
                raise ValueError(f"μ2 key {(i, j)} must be increasing")
            M = as_matrix(M, v1, v0)
            c[i, j] = M
            c[j, i] = -M
        return cls(V, a0, a1, b, c)

    @property
    def dims(self) -> tuple[int, int]:
        return self.mu0_0.shape[0], self.mu1.shape[0]

    def tensors(self):
        return self.mu0_0, self.mu0_1, self.mu1, self.mu2

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.V == other.V and all(
            a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
            for a, b in zip(self.tensors(), other.tensors()))

    __hash__ = None

    def __repr__(self):
        return f"<Representation of dims {self.dims} on V=({self.V.dimV0},{self.V.dimV1})>"


def adjoint_representation(L: Lie2Algebra) -> Representation:
    """``ad0_x = [x,·]``, ``ad1_a x = [a,x] = -[x,a]``, ``ad2_{x,y} = -l3(x,y,·)``."""
    V = TwoTermComplex.underlying(L)
    # br00[x, y, k]: coefficient k of [x,y]; as a matrix in (k, y)
    mu0_0 = np.einsum("xyk->xky", L.br00)
    mu0_1 = np.einsum("xak->xka", L.br01)
    mu1 = -np.einsum("xak->akx", L.br01)
    mu2 = -np.einsum("xyzr->xyrz", L.l3)
    return Representation(V, mu0_0, mu0_1, mu1, mu2)


# -- residuals -------------------------------------------------------------


REP_NAMES = {
    "i": "(i) μ0(da) = δμ1(a)",
    "ii": "(ii) μ0[x,y] - [μ0x,μ0y]_C = δμ2(x,y)",
    "iii": "(iii) μ1[x,a] - [μ0x,μ1a]_C = μ2(x,da)",
    "iv": "(iv) μ2([x,y],z) + c.p. + μ1 l3(x,y,z) = [μ0x,μ2(y,z)]_C + c.p.",
}


def representation_residuals(mu: Representation, L: Lie2Algebra) -> dict[str, tuple[np.ndarray, ...]]:
    """Residual tensors; for End⁰-valued conditions a pair (V0-part, V-1-part)."""
    if mu.dims != (L.dim0, L.dim1):
        raise ValueError(f"representation dims {mu.dims} do not match algebra ({L.dim0},{L.dim1})")
    P = mu.V.partial
    X0, X1, A, M2 = mu.tensors()
    # (i)
    r1_0 = np.einsum("ia,irc->arc", L.d, X0) - np.einsum("rk,akc->arc", P, A)
    r1_1 = np.einsum("ia,irc->arc", L.d, X1) - np.einsum("akc,cs->aks", A, P)
    # (ii)
    comm0 = np.einsum("xrk,ykc->xyrc", X0, X0)
    comm1 = np.einsum("xrk,ykc->xyrc", X1, X1)
    r2_0 = (np.einsum("xyi,irc->xyrc", L.br00, X0) - comm0 + np.einsum("yxrc->xyrc", comm0)
            - np.einsum("rk,xykc->xyrc", P, M2))
    r2_1 = (np.einsum("xyi,irc->xyrc", L.br00, X1) - comm1 + np.einsum("yxrc->xyrc", comm1)
            - np.einsum("xyrk,kc->xyrc", M2, P))
    # (iii): [X, A]_C = X1 A - A X0
    r3 = (np.einsum("xaj,jrc->xarc", L.br01, A)
          - np.einsum("xrk,akc->xarc", X1, A) + np.einsum("ark,xkc->xarc", A, X0)
          - np.einsum("ja,xjrc->xarc", L.d, M2))
    # (iv)
    lhs = np.einsum("xyi,izrc->xyzrc", L.br00, M2)
    rhs = np.einsum("xrk,yzkc->xyzrc", X1, M2) - np.einsum("yzrk,xkc->xyzrc", M2, X0)
    cyc = lhs - rhs
    r4 = (cyc + np.einsum("yzxrc->xyzrc", cyc) + np.einsum("zxyrc->xyzrc", cyc)
          + np.einsum("xyzj,jrc->xyzrc", L.l3, A))
    return {"i": (r1_0, r1_1), "ii": (r2_0, r2_1), "iii": (r3,), "iv": (r4,)}


def _flat(parts, idx):
    return [v for p in parts for v in p[idx].flat]


def check_representation(mu: Representation, L: Lie2Algebra,
                         V: TwoTermComplex | None = None) -> AxiomReport:
    """Check that ``μ`` is a Lie 2-algebra homomorphism into End(V).

    Also checks ``μ0(x) ∈ End⁰_∂(V)``.  A witness residual is the
    row-major flattening of the offending matrix (or matrix pair).
    """
    if V is not None and V != mu.V:
        raise ValueError("representation is defined on a different complex")
    res = representation_residuals(mu, L)
    m, n = L.dim0, L.dim1
    report = AxiomReport()
    member = "μ0(x) ∈ End⁰_∂(V)"
    report.declare(member)
    for name in REP_NAMES.values():
        report.declare(name)
    P = mu.V.partial
    for x in range(m):
        r = mu.mu0_0[x].dot(P) - P.dot(mu.mu0_1[x])
        if any(v != 0 for v in r.flat):
            report.record(member, [basis_label(0, x)], r.flat)
    for a in range(n):
        vals = _flat(res["i"], a)
        if any(v != 0 for v in vals):
            report.record(REP_NAMES["i"], [basis_label(-1, a)], vals)
    for x, y in combinations(range(m), 2):
        vals = _flat(res["ii"], (x, y))
        if any(v != 0 for v in vals):
            report.record(REP_NAMES["ii"], [basis_label(0, x), basis_label(0, y)], vals)
    for x in range(m):
        for a in range(n):
            vals = _flat(res["iii"], (x, a))
            if any(v != 0 for v in vals):
                report.record(REP_NAMES["iii"], [basis_label(0, x), basis_label(-1, a)], vals)
    for t in combinations(range(m), 3):
        vals = _flat(res["iv"], t)
        if any(v != 0 for v in vals):
            report.record(REP_NAMES["iv"], [basis_label(0, i) for i in t], vals)
    return report


# -- End(V) ----------------------------------------------------------------


def end_algebra_basis(V: TwoTermComplex) -> tuple[list[tuple[np.ndarray, np.ndarray]], list[np.ndarray], list[int]]:
    """Bases of ``End⁰_∂(V)`` and ``End¹(V) = Hom(V0, V-1)``.

    Pairs ``(X0, X1)`` are vectorized as ``X0`` row-major followed by ``X1``
    row-major; the ``End⁰_∂`` basis is ``kernel_basis`` of
    ``(X0, X1) ↦ X0∂ - ∂X1`` in that coordinate order.  The returned free
    column indices double as coordinates: an element's coordinates in this
    basis are its entries at those columns.
    """
    v0, v1 = V.dimV0, V.dimV1
    P = V.partial
    size = v0 * v0 + v1 * v1
    rows = []
    # constraint (X0∂ - ∂X1)[r, c] = Σ_k X0[r,k] P[k,c] - Σ_k P[r,k] X1[k,c]
    for r in range(v0):
        for c in range(v1):
            row = [0] * size
            for k in range(v0):
                row[r * v0 + k] += P[k, c]
            for k in range(v1):
                row[v0 * v0 + k * v1 + c] -= P[r, k]
            rows.append(row)
    cons = np.array(rows, dtype=object).reshape(len(rows), size) if rows else zeros(0, size)
    kb, free = nullspace(cons)
    g0 = [(vec[: v0 * v0].reshape(v0, v0), vec[v0 * v0:].reshape(v1, v1)) for vec in kb]
    g1 = []
    for r in range(v1):
        for c in range(v0):
            A = zeros(v1, v0)
            A[r, c] = 1
            g1.append(A)
    return g0, g1, free


def build_end_algebra(V: TwoTermComplex) -> Lie2Algebra:
    """``(End(V), δ, [·,·]_C)`` in the bases of :func:`end_algebra_basis`; ``l3 = 0``."""
    g0, g1, coords = end_algebra_basis(V)
    P = V.partial
    m, n = len(g0), len(g1)

    def coords0(X0, X1):
        flat = list(X0.flat) + list(X1.flat)
        return [flat[c] for c in coords]

    d = zeros(m, n)
    for j, A in enumerate(g1):
        d[:, j] = coords0(P.dot(A), A.dot(P))
    br00 = zeros(m, m, m)
    for i, j in combinations(range(m), 2):
        Xa, Xb = g0[i], g0[j]
        c = coords0(Xa[0].dot(Xb[0]) - Xb[0].dot(Xa[0]), Xa[1].dot(Xb[1]) - Xb[1].dot(Xa[1]))
        br00[i, j] = c
        br00[j, i] = [-v for v in c]
    br01 = zeros(m, n, n)
    for i in range(m):
        X = g0[i]
        for j, A in enumerate(g1):
            br01[i, j] = list((X[1].dot(A) - A.dot(X[0])).flat)
    return Lie2Algebra(d, br00, br01, zeros(m, m, m, n), name="End(V)", check_alternation=False)
