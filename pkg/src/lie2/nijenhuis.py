"""Nijenhuis operators on Lie 2-algebras and the quadratic-algebra examples.

A Nijenhuis operator ``N = (N0, N1)`` deforms the structure by the exact
2-cochain ``D(N0, N1)``::

    [x, y]_N    = [N0x, y] + [x, N0y] - N0[x, y]
    [x, a]_N    = [N0x, a] + [x, N1a] - N1[x, a]
    l3^N(x,y,z) = l3(N0x, y, z) + c.p. - N1 l3(x, y, z)

Condition (i) is read literally: both ``d∘N1`` and ``N0∘d`` must be zero,
which is stronger than the chain-map condition.
"""

from __future__ import annotations

import warnings
from collections.abc import Mapping, Sequence
from itertools import combinations, product

import numpy as np

from .cohomology import CEComplex, Cochain, ComponentKey
from .deformations import DeformationDatum, _cyc3
from .exactlinalg import Fraction, LambdaPoly, as_matrix, contract, identity, parse_rational, rank, zeros
from .graded import Homomorphism, Lie2Algebra, alternating_tensor, check_axioms, check_homomorphism
from .reports import AxiomReport, StructureError, basis_label

__all__ = [
    "LieAlgebra",
    "NIJENHUIS_NAMES",
    "NijenhuisOperator",
    "QuadraticLieAlgebra",
    "build_lie_of_quadratic",
    "check_nijenhuis",
    "check_o_operator",
    "check_t_lambda_invariance",
    "lemma_identities",
    "nijenhuis_deformation",
    "o_operator_nijenhuis",
    "polynomial_of_nijenhuis",
    "quadratic_nijenhuis_conditions",
    "skeletal_morphism_report",
    "string_type_nijenhuis",
    "t_lambda_invariance_report",
]


def _mat(M, k: int) -> np.ndarray:
    return as_matrix(M, k, k)


def _l3_apply(l3: np.ndarray, A=None, B=None, C=None) -> np.ndarray:
    """``(x, y, z) ↦ l3(Ax, By, Cz)``; ``None`` stands for the identity."""
    m = l3.shape[0]
    A, B, C = (identity(m) if M is None else M for M in (A, B, C))
    return contract("ix,jy,kz,ijkr->xyzr", A, B, C, l3)


class NijenhuisOperator:
    """A pair ``(N0, N1)``; validity is decided by :func:`check_nijenhuis`."""

    def __init__(self, N0, N1):
        self.N0 = np.asarray(N0, dtype=object)
        self.N1 = np.asarray(N1, dtype=object)
        if self.N0.ndim != 2 or self.N0.shape[0] != self.N0.shape[1]:
            raise ValueError("N0 must be square")
        if self.N1.ndim != 2 or self.N1.shape[0] != self.N1.shape[1]:
            raise ValueError("N1 must be square")

    @classmethod
    def zero(cls, L: Lie2Algebra) -> "NijenhuisOperator":
        return cls(zeros(L.dim0, L.dim0), zeros(L.dim1, L.dim1))

    @property
    def dims(self) -> tuple[int, int]:
        return self.N0.shape[0], self.N1.shape[0]

    def scale(self, lam) -> "NijenhuisOperator":
        lam = parse_rational(lam)
        return NijenhuisOperator(self.N0 * lam, self.N1 * lam)

    def power(self, k: int) -> "NijenhuisOperator":
        if k < 0:
            raise ValueError("negative power")
        m, n = self.dims
        P0, P1 = identity(m), identity(n)
        for _ in range(k):
            P0, P1 = P0.dot(self.N0), P1.dot(self.N1)
        return NijenhuisOperator(P0, P1)

    def _check(self, L: Lie2Algebra) -> None:
        if self.dims != (L.dim0, L.dim1):
            raise ValueError(f"operator dims {self.dims} do not match algebra ({L.dim0},{L.dim1})")

    def bracket00(self, L: Lie2Algebra) -> np.ndarray:
        """``[x, y]_N`` as a ``(m, m, m)`` tensor."""
        self._check(L)
        t = np.einsum("ix,iyk->xyk", self.N0, L.br00)
        return t - np.einsum("yxk->xyk", t) - np.einsum("kc,xyc->xyk", self.N0, L.br00)

    def bracket01(self, L: Lie2Algebra) -> np.ndarray:
        """``[x, a]_N`` as a ``(m, n, n)`` tensor."""
        self._check(L)
        return (np.einsum("ix,iak->xak", self.N0, L.br01) + np.einsum("xbk,ba->xak", L.br01, self.N1)
                - np.einsum("kc,xac->xak", self.N1, L.br01))

    def l3(self, L: Lie2Algebra) -> np.ndarray:
        """``l3^N`` as a ``(m, m, m, n)`` tensor."""
        self._check(L)
        return (_cyc3(np.einsum("ix,iyzr->xyzr", self.N0, L.l3))
                - np.einsum("kr,xyzr->xyzk", self.N1, L.l3))

    def differential(self, L: Lie2Algebra) -> np.ndarray:
        """``d_N = d∘N1 - N0∘d``."""
        self._check(L)
        return L.d.dot(self.N1) - self.N0.dot(L.d)

    def deformed_algebra(self, L: Lie2Algebra) -> Lie2Algebra:
        """The skeletal structure ``(0, [·,·]_N, l3^N)`` on the same graded space."""
        return Lie2Algebra(zeros(L.dim0, L.dim1), self.bracket00(L), self.bracket01(L), self.l3(L),
                           name=f"{L.name}_N" if L.name else "", check_alternation=False)

    def as_morphism(self) -> Homomorphism:
        return Homomorphism(self.N0, self.N1)

    def to_cochain(self, cx: CEComplex) -> Cochain:
        """The degree-1 adjoint cochain ``(N0, N1)``."""
        if (cx.m, cx.n) != self.dims:
            raise ValueError("complex does not match the operator")
        return Cochain(1, {
            ComponentKey(1, 0, 0): np.einsum("kx->xk", self.N0),
            ComponentKey(0, 1, -1): np.einsum("ka->ak", self.N1),
            ComponentKey(2, 0, -1): zeros(cx.m, cx.m, cx.n),
        })

    def __eq__(self, other):
        if not isinstance(other, NijenhuisOperator):
            return NotImplemented
        return (self.dims == other.dims and all(a == b for a, b in zip(self.N0.flat, other.N0.flat))
                and all(a == b for a, b in zip(self.N1.flat, other.N1.flat)))

    __hash__ = None

    def __repr__(self):
        return f"<NijenhuisOperator dims {self.dims}>"


NIJENHUIS_NAMES = {
    "i": "(i) d∘N1 = N0∘d = 0",
    "ii": "(ii) N0[x,y]_N = [N0x,N0y]",
    "iii": "(iii) N1[x,a]_N = [N0x,N1a]",
    "iv": "(iv) N1 l3^N = 0",
    "v": "(v) l3(N0x,N0y,N0z) = 0",
    "vi": "(vi) l3(N0x,N0y,z) + c.p. = 0",
}


def nijenhuis_residuals(L: Lie2Algebra, N: NijenhuisOperator) -> dict[str, tuple[np.ndarray, ...]]:
    N._check(L)
    N0, N1 = N.N0, N.N1
    dN1, N0d = L.d.dot(N1), N0.dot(L.d)
    ii = (np.einsum("kc,xyc->xyk", N0, N.bracket00(L))
          - contract("ix,jy,ijk->xyk", N0, N0, L.br00))
    iii = (np.einsum("kc,xac->xak", N1, N.bracket01(L))
           - contract("ix,ja,ijk->xak", N0, N1, L.br01))
    iv = np.einsum("kr,xyzr->xyzk", N1, N.l3(L))
    v = _l3_apply(L.l3, N0, N0, N0)
    vi = _cyc3(_l3_apply(L.l3, N0, N0, None))
    return {"i": (dN1, N0d), "ii": (ii,), "iii": (iii,), "iv": (iv,), "v": (v,), "vi": (vi,)}


def check_nijenhuis(L: Lie2Algebra, N: NijenhuisOperator) -> AxiomReport:
    """All six conditions, exactly, with basis witnesses for failures."""
    res = nijenhuis_residuals(L, N)
    m, n = L.dim0, L.dim1
    report = AxiomReport()
    for name in NIJENHUIS_NAMES.values():
        report.declare(name)

    dN1, N0d = res["i"]
    for a in range(n):                      # d N1 f_a, then N0 d f_a
        for col, tag in ((dN1[:, a], "d∘N1"), (N0d[:, a], "N0∘d")):
            if any(v != 0 for v in col):
                report.record(NIJENHUIS_NAMES["i"], [basis_label(-1, a), tag], col)
    pairs = list(combinations(range(m), 2))
    triples = list(combinations(range(m), 3))
    scans = (
        ("ii", pairs, (0, 0)),
        ("iii", [(x, a) for x in range(m) for a in range(n)], (0, -1)),
        ("iv", triples, (0, 0, 0)),
        ("v", triples, (0, 0, 0)),
        ("vi", triples, (0, 0, 0)),
    )
    for key, tuples, grades in scans:
        arr = res[key][0]
        for idx in tuples:
            vec = arr[idx]
            if any(v != 0 for v in vec):
                report.record(NIJENHUIS_NAMES[key], [basis_label(g, i) for g, i in zip(grades, idx)], vec)
    return report


def _require_nijenhuis(L: Lie2Algebra, N: NijenhuisOperator) -> None:
    report = check_nijenhuis(L, N)
    if not report.passed:
        raise StructureError("not a Nijenhuis operator", report)


def nijenhuis_deformation(L: Lie2Algebra, N: NijenhuisOperator) -> DeformationDatum:
    """The trivial deformation datum ``(0, [·,·]_N, l3^N) = D(N0, N1)``."""
    _require_nijenhuis(L, N)
    w = DeformationDatum(N.differential(L), N.bracket00(L), N.bracket01(L), N.l3(L))
    cx = CEComplex(L, max_degree=2)
    via_D = DeformationDatum.from_cochain(cx.apply_D(N.to_cochain(cx)))
    if w != via_D:
        raise AssertionError("Nijenhuis datum differs from D(N0, N1)")
    return w


def _poly_coeffs(coeffs) -> dict[int, Fraction]:
    if isinstance(coeffs, Mapping):
        out = {int(k): parse_rational(v) for k, v in coeffs.items()}
    elif isinstance(coeffs, Sequence) and not isinstance(coeffs, str):
        out = {i + 1: parse_rational(v) for i, v in enumerate(coeffs)}
    else:
        raise TypeError("coefficients must be a sequence (from power 1) or a {power: c} mapping")
    if any(k < 0 for k in out):
        raise ValueError("negative powers are not polynomial")
    if out.get(0, 0) != 0:
        raise ValueError("P must have no constant term")
    return {k: v for k, v in out.items() if k > 0}


def polynomial_of_nijenhuis(L: Lie2Algebra, N: NijenhuisOperator, coeffs) -> NijenhuisOperator:
    """``P(N) = (P(N0), P(N1))`` for ``P(X) = Σ c_i X^i``, ``i ≥ 1``.

    ``coeffs`` is ``[c1, c2, ...]`` or ``{power: c}``; a nonzero constant
    term is rejected.
    """
    cs = _poly_coeffs(coeffs)
    _require_nijenhuis(L, N)
    m, n = N.dims
    P0, P1 = zeros(m, m), zeros(n, n)
    for k, c in cs.items():
        Nk = N.power(k)
        P0, P1 = P0 + c * Nk.N0, P1 + c * Nk.N1
    P = NijenhuisOperator(P0, P1)
    if not check_nijenhuis(L, P).passed:
        raise AssertionError("P(N) failed the Nijenhuis conditions")
    return P


def lemma_identities(L: Lie2Algebra, N: NijenhuisOperator, max_power: int = 3) -> AxiomReport:
    """``N1^j l3^{N^k} = 0`` and the six-term ``l3`` identity for ``1 ≤ j, k ≤ max_power``."""
    m = L.dim0
    report = AxiomReport()
    triples = list(combinations(range(m), 3))
    labels = {t: [basis_label(0, i) for i in t] for t in triples}
    for j, k in product(range(1, max_power + 1), repeat=2):
        Nj, Nk = N.power(j), N.power(k)
        name1 = f"N1^{j} l3^(N^{k}) = 0"
        t1 = np.einsum("kr,xyzr->xyzk", Nj.N1, Nk.l3(L))
        A, B = Nk.N0, Nj.N0
        t2 = (_l3_apply(L.l3, A, B, None) + _l3_apply(L.l3, A, None, B) + _l3_apply(L.l3, None, A, B)
              + _l3_apply(L.l3, B, A, None) + _l3_apply(L.l3, B, None, A) + _l3_apply(L.l3, None, B, A))
        name2 = f"six-term l3 identity (j={j}, k={k})"
        for name, arr in ((name1, t1), (name2, t2)):
            report.declare(name)
            for t in triples:
                if any(v != 0 for v in arr[t]):
                    report.record(name, labels[t], arr[t])
    return report


# -- quadratic Lie algebras ------------------------------------------------------


class LieAlgebra:
    """An ordinary Lie algebra, ``bracket[i, j, k]`` = k-th coordinate of ``[e_i, e_j]``."""

    def __init__(self, bracket, *, name: str = ""):
        self.bracket = np.asarray(bracket, dtype=object)
        k = self.bracket.shape[0] if self.bracket.ndim == 3 else -1
        if self.bracket.shape != (k, k, k):
            raise ValueError("bracket must be a (k, k, k) tensor")
        if any(self.bracket[i, j, r] != -self.bracket[j, i, r] for i, j, r in product(range(k), repeat=3)):
            raise ValueError("bracket is not antisymmetric")
        self.name = name

    @classmethod
    def from_structure_constants(cls, dim: int, brackets: Mapping, name: str = "") -> "LieAlgebra":
        """``brackets`` maps 0-based ``(i, j)``, ``i < j``, to the coordinates of ``[e_i, e_j]``."""
        return cls(alternating_tensor(brackets, 2, dim, dim), name=name)

    @property
    def dim(self) -> int:
        return self.bracket.shape[0]

    def jacobi_report(self) -> AxiomReport:
        c = self.bracket
        t = np.einsum("xyc,czk->xyzk", c, c)
        jac = _cyc3(t)
        report = AxiomReport()
        report.declare("Jacobi identity")
        for idx in combinations(range(self.dim), 3):
            if any(v != 0 for v in jac[idx]):
                report.record("Jacobi identity", [basis_label(0, i) for i in idx], jac[idx])
        return report

    def coadjoint(self) -> np.ndarray:
        """``ad*[i, j, l]``: ``ad*_{e_i} ξ^l = Σ_j ad*[i, j, l] ξ^j``, i.e. ``-c_{ij}^l``."""
        return -self.bracket


class QuadraticLieAlgebra:
    """A Lie algebra with a symmetric bilinear form; invariance is checked by the builder."""

    def __init__(self, bracket, form, *, name: str = ""):
        self.lie = bracket if isinstance(bracket, LieAlgebra) else LieAlgebra(bracket, name=name)
        self.form = _mat(form, self.lie.dim)
        if any(self.form[i, j] != self.form[j, i] for i, j in combinations(range(self.dim), 2)):
            raise ValueError("form is not symmetric")
        self.name = name or self.lie.name

    @property
    def dim(self) -> int:
        return self.lie.dim

    @property
    def bracket(self) -> np.ndarray:
        return self.lie.bracket

    def invariance_report(self) -> AxiomReport:
        """``⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0``."""
        B = np.einsum("xyc,cz->xyz", self.bracket, self.form)          # ⟨[x,y],z⟩
        res = B + np.einsum("xzy->xyz", B)
        report = AxiomReport()
        report.declare("invariance of the form")
        for idx in product(range(self.dim), repeat=3):
            if res[idx] != 0:
                report.record("invariance of the form", [basis_label(0, i) for i in idx], [res[idx]])
        return report

    def is_nondegenerate(self) -> bool:
        return rank(self.form) == self.dim


def build_lie_of_quadratic(s: QuadraticLieAlgebra) -> Lie2Algebra:
    """``Lie(s)``: ``g0 = s``, ``g-1 = ℚ``, ``d = 0``, ``[x, a] = 0``, ``l3(x,y,z) = ⟨[x,y],z⟩``."""
    jac = s.lie.jacobi_report()
    if not jac.passed:
        raise StructureError("bracket violates the Jacobi identity", jac)
    inv = s.invariance_report()
    if not inv.passed:
        raise StructureError("form is not invariant", inv)
    if not s.is_nondegenerate():
        warnings.warn("quadratic form is degenerate", stacklevel=2)
    k = s.dim
    l3 = np.einsum("xyc,cz->xyz", s.bracket, s.form)[..., None]
    return Lie2Algebra(zeros(k, 1), s.bracket.copy(), zeros(k, 1, 1), l3,
                       name=f"Lie({s.name})" if s.name else "", check_alternation=False)


def t_lambda_invariance_report(s: QuadraticLieAlgebra, N0) -> AxiomReport:
    """``⟨T_λx, T_λy⟩ = ⟨x, y⟩`` for ``T_λ = 1 + λN0`` as a λ-polynomial identity.

    The λ¹ and λ² coefficients are the two unfolded identities; both are
    reported, and ``N0² = 0`` is checked when the form is nondegenerate.
    """
    N0 = _mat(N0, s.dim)
    G = s.form
    k = s.dim
    skew = N0.T.dot(G) + G.dot(N0)                   # ⟨N0x,y⟩ + ⟨x,N0y⟩
    sq = N0.T.dot(G).dot(N0)                         # ⟨N0x,N0y⟩
    lam = LambdaPoly.lam()
    T = np.empty((k, k), dtype=object)
    for i, j in product(range(k), repeat=2):
        T[i, j] = LambdaPoly([int(i == j)]) + lam * N0[i, j]
    poly = T.T.dot(G).dot(T) - G
    report = AxiomReport()
    names = ("⟨N0x,y⟩ + ⟨x,N0y⟩ = 0", "⟨N0x,N0y⟩ = 0")
    for name in names:
        report.declare(name)
    for i, j in product(range(k), repeat=2):
        if i > j:
            continue
        lab = [basis_label(0, i), basis_label(0, j)]
        if skew[i, j] != 0:
            report.record(names[0], lab, [skew[i, j]])
        if sq[i, j] != 0:
            report.record(names[1], lab, [sq[i, j]])
        p = poly[i, j]
        if (p.coefficient(1) == 0) != (skew[i, j] == 0) or (p.coefficient(2) == 0) != (sq[i, j] == 0):
            raise AssertionError("T_λ invariance polynomial disagrees with its unfolded identities")
    if report.passed and s.is_nondegenerate():
        name = "N0² = 0"
        report.declare(name)
        N2 = N0.dot(N0)
        for i, j in product(range(k), repeat=2):
            if N2[i, j] != 0:
                report.record(name, [basis_label(0, i), basis_label(0, j)], [N2[i, j]])
        if not report.ok(name):
            raise AssertionError("nondegenerate T_λ-invariant form with N0² ≠ 0")
    return report


def check_t_lambda_invariance(s: QuadraticLieAlgebra, N0) -> bool:
    return t_lambda_invariance_report(s, N0).passed


QUADRATIC_NAMES = {
    "01": "ordinary Nijenhuis identity of N0 on s",
    "02": "⟨[N0x,N0y],N0z⟩ = 0",
    "03": "⟨[N0x,N0y],z⟩ + ⟨[N0x,y],N0z⟩ + ⟨[x,N0y],N0z⟩ = 0",
}


def quadratic_nijenhuis_conditions(s: QuadraticLieAlgebra, N0) -> AxiomReport:
    """The three conditions equivalent to ``(N0, 0)`` being Nijenhuis on ``Lie(s)``."""
    N0 = _mat(N0, s.dim)
    c, G = s.bracket, s.form
    nn = contract("ix,jy,ijk->xyk", N0, N0, c)                     # [N0x, N0y]
    n_x = np.einsum("ix,iyk->xyk", N0, c)                           # [N0x, y]
    x_n = np.einsum("jy,xjk->xyk", N0, c)                           # [x, N0y]
    r01 = nn - np.einsum("kc,xyc->xyk", N0, n_x + x_n) + np.einsum("kc,xyc->xyk", N0.dot(N0), c)
    pair = lambda t, M: contract("xyc,cd,dz->xyz", t, G, M)        # ⟨t(x,y), Mz⟩
    r02 = pair(nn, N0)
    r03 = pair(nn, identity(s.dim)) + pair(n_x, N0) + pair(x_n, N0)
    report = AxiomReport()
    k = s.dim
    for key, arr, tuples in (("01", r01, combinations(range(k), 2)),
                             ("02", r02, combinations(range(k), 3)),
                             ("03", r03, product(range(k), repeat=3))):
        report.declare(QUADRATIC_NAMES[key])
        for idx in tuples:
            vec = np.atleast_1d(arr[idx])
            if any(v != 0 for v in vec):
                report.record(QUADRATIC_NAMES[key], [basis_label(0, i) for i in idx], vec)
    return report


def _double(h: LieAlgebra) -> QuadraticLieAlgebra:
    """``s = h ⊕ h*`` with ``[x+ξ, y+η] = [x,y] + ad*_xη - ad*_yξ`` and the canonical pairing."""
    k = h.dim
    c = zeros(2 * k, 2 * k, 2 * k)
    c[:k, :k, :k] = h.bracket
    ad = h.coadjoint()                                   # ad[i, j, l]: ξ^l -> ξ^j coefficient
    c[:k, k:, k:] = np.einsum("ijl->ilj", ad)            # [e_i, ξ^l] = ad*_{e_i} ξ^l
    c[k:, :k, k:] = -np.einsum("ijl->lij", ad)           # [ξ^l, e_i] = -ad*_{e_i} ξ^l
    form = zeros(2 * k, 2 * k)
    for i in range(k):
        form[i, k + i] = form[k + i, i] = Fraction(1)
    name = f"{h.name}+{h.name}*" if h.name else ""
    return QuadraticLieAlgebra(LieAlgebra(c, name=name), form, name=name)


def _lie_from(h) -> LieAlgebra:
    h = h if isinstance(h, LieAlgebra) else LieAlgebra(h)
    jac = h.jacobi_report()
    if not jac.passed:
        raise StructureError("h violates the Jacobi identity", jac)
    return h


def _is_skew(M) -> bool:
    k = M.shape[0]
    return all(M[i, j] == -M[j, i] for i in range(k) for j in range(i, k))


def _quadratic_route(s: QuadraticLieAlgebra, L: Lie2Algebra, N: NijenhuisOperator) -> None:
    direct = check_nijenhuis(L, N)
    route = quadratic_nijenhuis_conditions(s, N.N0)
    if direct.passed != route.passed:
        raise AssertionError("Nijenhuis verdicts on Lie(s) disagree between the two routes")
    if not direct.passed:
        raise StructureError("(N0, 0) is not a Nijenhuis operator on Lie(s)", direct)


def string_type_nijenhuis(h, H) -> tuple[Lie2Algebra, NijenhuisOperator]:
    """``Lie(h ⊕ h*)`` with ``N0 = [[0, 0], [H, 0]]`` for a skew ``H: h → h*``."""
    h = _lie_from(h)
    k = h.dim
    H = _mat(H, k)
    if not _is_skew(H):
        raise ValueError("H must be skew-symmetric (H = -H*)")
    s = _double(h)
    L = build_lie_of_quadratic(s)
    N0 = zeros(2 * k, 2 * k)
    N0[k:, :k] = H
    N = NijenhuisOperator(N0, zeros(1, 1))
    _quadratic_route(s, L, N)
    return L, N


O_OPERATOR_NAME = "T(ad*_{Tu}v - ad*_{Tv}u) = [Tu,Tv]"


def check_o_operator(h, T) -> AxiomReport:
    """The O-operator identity for ``T: h* → h`` and the coadjoint representation.

    ``T[i, l]`` is the ``e_i`` coordinate of ``T ξ^l``.
    """
    h = h if isinstance(h, LieAlgebra) else LieAlgebra(h)
    k = h.dim
    T = _mat(T, k)
    ad = h.coadjoint()
    act = np.einsum("iu,ijv->uvj", T, ad)                 # ad*_{Tξ^u} ξ^v, coords over ξ^j
    lhs = np.einsum("kj,uvj->uvk", T, act - np.einsum("vuj->uvj", act))
    rhs = contract("iu,jv,ijk->uvk", T, T, h.bracket)
    res = lhs - rhs
    report = AxiomReport()
    report.declare(O_OPERATOR_NAME)
    for u, v in combinations(range(k), 2):
        if any(x != 0 for x in res[u, v]):
            report.record(O_OPERATOR_NAME, [f"ξ{u + 1}", f"ξ{v + 1}"], res[u, v])
    return report


def o_operator_nijenhuis(h, T, rep: str = "coadjoint") -> tuple[Lie2Algebra, NijenhuisOperator]:
    """``Lie(h ⊕ h*)`` with ``N0 = [[0, T], [0, 0]]`` for a skew O-operator ``T``."""
    if rep != "coadjoint":
        raise ValueError("only the coadjoint representation is supported")
    h = _lie_from(h)
    k = h.dim
    T = _mat(T, k)
    if not _is_skew(T):
        raise ValueError("T must be skew-symmetric (T = -T*)")
    report = check_o_operator(h, T)
    if not report.passed:
        raise StructureError("T is not an O-operator for the coadjoint representation", report)
    s = _double(h)
    L = build_lie_of_quadratic(s)
    N0 = zeros(2 * k, 2 * k)
    N0[:k, k:] = T
    N = NijenhuisOperator(N0, zeros(1, 1))
    _quadratic_route(s, L, N)
    return L, N


def skeletal_morphism_report(L: Lie2Algebra, N: NijenhuisOperator) -> AxiomReport:
    """``N: (g, 0, [·,·]_N, l3^N) → L`` as a Lie 2-algebra morphism, together with the axioms of the source."""
    report = AxiomReport()
    report.merge(check_axioms(N.deformed_algebra(L)), prefix="deformed structure: ")
    report.merge(check_homomorphism(N.as_morphism(), N.deformed_algebra(L), L), prefix="N as morphism: ")
    return report
