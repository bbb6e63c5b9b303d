"""1-parameter infinitesimal deformations and trivializing morphisms.

A deformation datum ``w = (ω1, ω2⁰, ω2¹, ω3)`` is stored in the same tensor
layout as a :class:`~lie2.graded.Lie2Algebra` (``ω1`` like ``d``, ``ω2⁰``
like ``br00`` and so on).  The family ``L + λw`` is handled symbolically with
:class:`~lie2.exactlinalg.LambdaPoly` entries so "for all λ" is decided by
coefficient vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .cohomology import CEComplex, Cochain, ComponentKey
from .exactlinalg import Fraction, LambdaPoly, contract, parse_rational, zeros
from .graded import (AXIOM_NAMES, HOM_NAMES, Homomorphism, Lie2Algebra, axiom_residuals,
                     check_axioms, homomorphism_residuals, is_alternating)
from .reports import AxiomReport, basis_label

__all__ = [
    "DeformationDatum",
    "LambdaAlgebra",
    "PolynomialReport",
    "TrivializationCandidate",
    "UnfoldingMismatch",
    "check_deformation_datum",
    "check_trivializing_morphism",
    "deform",
    "deform_symbolic",
    "trivialization_conditions",
]


class DeformationDatum:
    """``(ω1, ω2⁰, ω2¹, ω3)`` with shapes ``(m,n)``, ``(m,m,m)``, ``(m,n,n)``, ``(m,m,m,n)``."""

    def __init__(self, omega1, omega2_0, omega2_1, omega3):
        self.omega1 = np.asarray(omega1, dtype=object)
        m, n = self.omega1.shape
        self.omega2_0 = _shaped(omega2_0, (m, m, m))
        self.omega2_1 = _shaped(omega2_1, (m, n, n))
        self.omega3 = _shaped(omega3, (m, m, m, n))
        if not is_alternating(self.omega2_0, 2) or not is_alternating(self.omega3, 3):
            raise ValueError("ω2⁰ must be antisymmetric and ω3 alternating")

    @classmethod
    def zero(cls, L: Lie2Algebra) -> "DeformationDatum":
        m, n = L.dim0, L.dim1
        return cls(zeros(m, n), zeros(m, m, m), zeros(m, n, n), zeros(m, m, m, n))

    @classmethod
    def from_algebra(cls, W: Lie2Algebra) -> "DeformationDatum":
        return cls(W.d, W.br00, W.br01, W.l3)

    def as_algebra(self) -> Lie2Algebra:
        """The datum read as structure maps ``(d, [,], l3) = (ω1, ω2, ω3)``."""
        return Lie2Algebra(self.omega1, self.omega2_0, self.omega2_1, self.omega3,
                           check_alternation=False)

    @property
    def dims(self) -> tuple[int, int]:
        return self.omega1.shape

    def tensors(self):
        return self.omega1, self.omega2_0, self.omega2_1, self.omega3

    def to_cochain(self, cx: CEComplex) -> Cochain:
        """The degree-2 adjoint cochain ``ψ = ω1, ω = ω2⁰, ν = ω2¹, θ = ω3``."""
        if (cx.m, cx.n) != self.dims or (cx.mu.V.dimV0, cx.mu.V.dimV1) != self.dims:
            raise ValueError("complex does not match the datum's dimensions")
        return Cochain(2, {
            ComponentKey(0, 1, 0): np.einsum("ka->ak", self.omega1),
            ComponentKey(1, 1, -1): self.omega2_1.copy(),
            ComponentKey(2, 0, 0): self.omega2_0.copy(),
            ComponentKey(3, 0, -1): self.omega3.copy(),
        })

    @classmethod
    def from_cochain(cls, c: Cochain) -> "DeformationDatum":
        if c.degree != 2:
            raise ValueError("a deformation datum is a degree-2 cochain")
        return cls(np.einsum("ak->ka", c.component(0, 1, 0)), c.component(2, 0, 0),
                   c.component(1, 1, -1), c.component(3, 0, -1))

    def scale(self, lam) -> "DeformationDatum":
        return DeformationDatum(*(t * lam for t in self.tensors()))

    def __eq__(self, other):
        if not isinstance(other, DeformationDatum):
            return NotImplemented
        return all(a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
                   for a, b in zip(self.tensors(), other.tensors()))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(v == 0 for t in self.tensors() for v in t.flat)

    def __repr__(self):
        return f"<DeformationDatum dims {self.dims}>"


def _shaped(arr, shape):
    a = np.asarray(arr, dtype=object)
    if a.size == 0 and int(np.prod(shape)) == 0:
        return zeros(*shape)
    if a.shape != shape:
        raise ValueError(f"shape {a.shape} != expected {shape}")
    return a


class LambdaAlgebra(Lie2Algebra):
    """A Lie 2-algebra whose structure constants are polynomials in λ."""

    def evaluate(self, lam) -> Lie2Algebra:
        lam = parse_rational(lam)
        ev = np.vectorize(lambda v: v(lam) if isinstance(v, LambdaPoly) else Fraction(v), otypes=[object])
        return Lie2Algebra(*(ev(t) if t.size else zeros(*t.shape) for t in self.tensors()),
                           name=self.name, check_alternation=False)

    def coefficient(self, k: int) -> Lie2Algebra:
        co = np.vectorize(lambda v: v.coefficient(k) if isinstance(v, LambdaPoly)
                          else (Fraction(v) if k == 0 else Fraction(0)), otypes=[object])
        return Lie2Algebra(*(co(t) if t.size else zeros(*t.shape) for t in self.tensors()),
                           check_alternation=False)


def _lam_family(base: np.ndarray, pert: np.ndarray) -> np.ndarray:
    out = np.empty(base.shape, dtype=object)
    for idx in np.ndindex(*base.shape):
        out[idx] = LambdaPoly([base[idx], pert[idx]])
    return out


def lambda_family(L: Lie2Algebra, w: DeformationDatum) -> LambdaAlgebra:
    """``(d + λω1, [·,·] + λω2, l3 + λω3)``."""
    _check_dims(L, w)
    return LambdaAlgebra(*(_lam_family(a, b) for a, b in zip(L.tensors(), w.tensors())),
                         name=L.name, check_alternation=False)


def _check_dims(L: Lie2Algebra, w) -> None:
    if w.dims != (L.dim0, L.dim1):
        raise ValueError(f"datum dims {w.dims} do not match algebra ({L.dim0},{L.dim1})")


def deform(L: Lie2Algebra, w: DeformationDatum, lambda0) -> Lie2Algebra:
    """The member of the family at ``λ = lambda0``."""
    _check_dims(L, w)
    lam = parse_rational(lambda0)
    return Lie2Algebra(*(a + lam * b for a, b in zip(L.tensors(), w.tensors())),
                       name=L.name, check_alternation=False)


_POWER = {1: "λ¹ (cocycle part)", 2: "λ² (structure part)", 3: "λ³"}


def equation_name(axiom: str, k: int) -> str:
    """Label of the ``λ^k`` coefficient of axiom ``axiom`` in a deformed family."""
    if k == 0:
        return f"base axiom {AXIOM_NAMES[axiom]}"
    return f"axiom ({axiom}) at {_POWER.get(k, f'λ^{k}')}"


@dataclass
class PolynomialReport:
    """λ-polynomial residuals of the five axioms of a deformed family.

    ``residuals[axiom]`` lists ``(basis labels, residual vector of LambdaPoly)``
    for every checked basis tuple with a nonzero residual.
    """

    residuals: dict[str, list[tuple[tuple[str, ...], tuple]]]

    @property
    def all_zero(self) -> bool:
        return not any(self.residuals.values())

    def max_degree(self) -> int:
        return max((v.degree for rows in self.residuals.values() for _, vec in rows
                    for v in vec if isinstance(v, LambdaPoly)), default=-1)

    def coefficient_report(self, k: int) -> AxiomReport:
        """Coefficient of λ^k as a report with one condition per axiom."""
        report = AxiomReport()
        for axiom, rows in self.residuals.items():
            name = equation_name(axiom, k)
            report.declare(name)
            for labels, vec in rows:
                co = tuple(v.coefficient(k) if isinstance(v, LambdaPoly) else
                           (Fraction(v) if k == 0 else Fraction(0)) for v in vec)
                if any(c != 0 for c in co):
                    report.record(name, labels, co)
        return report

    def evaluate(self, lam) -> dict[str, list[tuple[tuple[str, ...], tuple]]]:
        return {ax: [(lab, tuple(v(lam) if isinstance(v, LambdaPoly) else v for v in vec))
                     for lab, vec in rows] for ax, rows in self.residuals.items()}


def _residual_rows(res: dict[str, np.ndarray], m: int, n: int) -> dict[str, list]:
    from itertools import combinations_with_replacement
    tuples = {
        "i": [((x, a), (0, -1)) for x in range(m) for a in range(n)],
        "ii": [((a, b), (-1, -1)) for a, b in combinations_with_replacement(range(n), 2)],
        "iii": [(t, (0, 0, 0)) for t in combinations(range(m), 3)],
        "iv": [((x, y, a), (0, 0, -1)) for x, y in combinations(range(m), 2) for a in range(n)],
        "v": [(t, (0, 0, 0, 0)) for t in combinations(range(m), 4)],
    }
    out = {}
    for key, items in tuples.items():
        rows = []
        for idx, grades in items:
            vec = tuple(res[key][idx])
            if any(v != 0 for v in vec):
                rows.append((tuple(basis_label(g, i) for g, i in zip(grades, idx)), vec))
        out[key] = rows
    return out


def deform_symbolic(L: Lie2Algebra, w: DeformationDatum) -> tuple[LambdaAlgebra, PolynomialReport]:
    """The λ-family and the polynomial residuals of the five Lie 2-algebra identities."""
    fam = lambda_family(L, w)
    res = axiom_residuals(fam)
    return fam, PolynomialReport(_residual_rows(res, L.dim0, L.dim1))


def check_deformation_datum(L: Lie2Algebra, w: DeformationDatum) -> AxiomReport:
    """The two conditions of the deformation criterion.

    (i) ``w`` is a 2-cocycle in the adjoint complex.  Decided by ``D w = 0``;
    the primed equations (λ¹ coefficients) are evaluated alongside to name
    the violated one, and the two verdicts are required to agree.
    (ii) ``w`` itself is a Lie 2-algebra structure; violations are named by
    the double-primed equations.
    """
    _check_dims(L, w)
    cx = CEComplex(L)
    cocycle = cx.is_cocycle(w.to_cochain(cx))
    _, poly = deform_symbolic(L, w)
    primed = poly.coefficient_report(1)
    if cocycle != primed.passed:
        raise UnfoldingMismatch("D w = 0 disagrees with the λ¹ coefficient equations")
    report = AxiomReport()
    report.declare("(i) 2-cocycle in the adjoint representation")
    report.merge(primed)
    if not cocycle:
        first = primed.first_failure()
        report.record("(i) 2-cocycle in the adjoint representation", first.basis, first.residual)
    structure = check_axioms(w.as_algebra())
    report.declare("(ii) datum is a Lie 2-algebra structure")
    for key, full in AXIOM_NAMES.items():
        name = equation_name(key, 2)
        report.declare(name)
        for v in structure.conditions[full]:
            report.record(name, v.basis, v.residual)
    if not structure.passed:
        first = structure.first_failure()
        report.record("(ii) datum is a Lie 2-algebra structure", first.basis, first.residual)
    # lead with the two summary conditions
    order = ["(i) 2-cocycle in the adjoint representation", "(ii) datum is a Lie 2-algebra structure"]
    report.conditions = {k: report.conditions[k] for k in order + [k for k in report.conditions if k not in order]}
    return report


def first_violated_equation(report: AxiomReport) -> str | None:
    """The first per-axiom coefficient equation (not the summary condition) that fails."""
    for name, viol in report.conditions.items():
        if viol and name.startswith("axiom ("):
            return name
    return None


# -- trivial deformations ------------------------------------------------------


class UnfoldingMismatch(AssertionError):
    """Two equivalent formulations of the same condition disagreed."""


class TrivializationCandidate:
    """``(N0, N1, N2)`` giving ``T = (1 + λN0, 1 + λN1, λN2)``."""

    def __init__(self, N0, N1, N2=None):
        self.N0 = np.asarray(N0, dtype=object)
        self.N1 = np.asarray(N1, dtype=object)
        m, n = self.N0.shape[0], self.N1.shape[0]
        if self.N0.shape != (m, m) or self.N1.shape != (n, n):
            raise ValueError("N0 and N1 must be square")
        self.N2 = zeros(m, m, n) if N2 is None else _shaped(N2, (m, m, n))
        if not is_alternating(self.N2, 2):
            raise ValueError("N2 must be antisymmetric")

    @property
    def dims(self) -> tuple[int, int]:
        return self.N0.shape[0], self.N1.shape[0]

    def morphism(self) -> Homomorphism:
        m, n = self.dims
        lam = LambdaPoly.lam()

        def one_plus(M, k):
            out = np.empty((k, k), dtype=object)
            for i in range(k):
                for j in range(k):
                    out[i, j] = LambdaPoly([int(i == j), M[i, j]])
            return out

        T2 = np.empty(self.N2.shape, dtype=object)
        for idx in np.ndindex(*self.N2.shape):
            T2[idx] = lam * self.N2[idx]
        return Homomorphism(one_plus(self.N0, m), one_plus(self.N1, n), T2)


TRIVIAL_NAMES = {
    "0": "N0(dN1a - N0da) = 0",
    "1": "[N0x,N0y] - N0[N0x,y] - N0[x,N0y] + N0²[x,y] - N0dN2(x,y) = 0",
    "2": "[N0x,N1a] + N2(x,ω1a) - N1[N0x,a] - N1[x,N1a] + N1²[x,a] - N1N2(x,da) = 0",
    "3": "quadratic l3/N2 condition",
    "33": "l3(N0x,N0y,N0z) = 0",
}

FIRST_ORDER_NAMES = {
    "1": "ω1 = dN1 - N0d",
    "20": "ω2⁰ = [N0x,y] + [x,N0y] - N0[x,y] + dN2(x,y)",
    "21": "ω2¹ = [N0x,a] + [x,N1a] - N1[x,a] + N2(x,da)",
    "3": "ω3 = l3(N0x,y,z) + c.p. - N1l3 + [x,N2(y,z)] + c.p. - N2([x,y],z) - c.p.",
}


def _cyc3(t: np.ndarray) -> np.ndarray:
    """Cyclic sum over the first three axes."""
    return t + np.einsum("yzx...->xyz...", t) + np.einsum("zxy...->xyz...", t)


def trivialization_conditions(L: Lie2Algebra, w: DeformationDatum, t: TrivializationCandidate) -> AxiomReport:
    """The first-order identities fixing ``w`` in terms of ``N`` and the five unfolded N-conditions."""
    _check_dims(L, w)
    d, b00, b01, l3 = L.tensors()
    N0, N1, N2 = t.N0, t.N1, t.N2
    w1, w20, w21, w3 = w.tensors()
    m, n = L.dim0, L.dim1
    report = AxiomReport()

    # first order
    f1 = w1 - (d.dot(N1) - N0.dot(d))
    n0x_y = np.einsum("ix,iyk->xyk", N0, b00)            # [N0x, y]
    f20 = w20 - (n0x_y - np.einsum("yxk->xyk", n0x_y)
                 - np.einsum("kc,xyc->xyk", N0, b00) + np.einsum("kr,xyr->xyk", d, N2))
    f21 = w21 - (np.einsum("ix,iak->xak", N0, b01) + np.einsum("xbk,ba->xak", b01, N1)
                 - np.einsum("kc,xac->xak", N1, b01) + np.einsum("xjk,ja->xak", N2, d))
    l3n = _cyc3(np.einsum("ix,iyzr->xyzr", N0, l3)) - np.einsum("kr,xyzr->xyzk", N1, l3)
    x_n2 = np.einsum("xjk,yzj->xyzk", b01, N2)             # [x, N2(y,z)]
    n2_br = np.einsum("xyc,czk->xyzk", b00, N2)            # N2([x,y],z)
    f3 = w3 - (l3n + _cyc3(x_n2) - _cyc3(n2_br))

    # unfolded conditions
    c0 = N0.dot(d.dot(N1) - N0.dot(d))
    n0n0 = contract("ix,jy,ijk->xyk", N0, N0, b00)
    c1 = (n0n0 - np.einsum("kc,xyc->xyk", N0, n0x_y - np.einsum("yxk->xyk", n0x_y))
          + np.einsum("kc,xyc->xyk", N0.dot(N0), b00) - np.einsum("kc,xyc->xyk", N0.dot(d), N2))
    n0x_a = np.einsum("ix,iak->xak", N0, b01)              # [N0x, a]
    c2 = (contract("ix,ja,ijk->xak", N0, N1, b01) + np.einsum("xjk,ja->xak", N2, w1)
          - np.einsum("kc,xac->xak", N1, n0x_a) - contract("kc,xbc,ba->xak", N1, b01, N1)
          + np.einsum("kc,xac->xak", N1.dot(N1), b01) - contract("kc,xjc,ja->xak", N1, N2, d))
    l3_n0n0 = contract("ix,jy,ijzr->xyzr", N0, N0, l3)
    n0x_n2 = contract("ix,yzj,ijk->xyzk", N0, N2, b01)    # [N0x, N2(y,z)]
    n2_w = np.einsum("xyc,czk->xyzk", w20, N2)             # N2(ω2⁰(x,y), z)
    c3 = (_cyc3(contract("kr,ix,iyzr->xyzk", N1, N0, l3)) - np.einsum("kr,xyzr->xyzk", N1.dot(N1), l3)
          + _cyc3(np.einsum("kr,xyzr->xyzk", N1, x_n2)) - _cyc3(np.einsum("kr,xyzr->xyzk", N1, n2_br))
          - _cyc3(l3_n0n0) - _cyc3(n0x_n2) + _cyc3(n2_w))
    c33 = contract("ix,jy,kz,ijkr->xyzr", N0, N0, N0, l3)

    def scan(name, arr, tuples, grades):
        report.declare(name)
        for idx in tuples:
            vec = arr[idx] if arr.ndim > len(idx) else [arr[idx]]
            vec = list(np.asarray(vec, dtype=object).flat)
            if any(v != 0 for v in vec):
                report.record(name, [basis_label(g, i) for g, i in zip(grades, idx)], vec)

    pairs = list(combinations(range(m), 2))
    triples = list(combinations(range(m), 3))
    xa = [(x, a) for x in range(m) for a in range(n)]
    scan(FIRST_ORDER_NAMES["1"], np.einsum("ka->ak", f1), [(a,) for a in range(n)], (-1,))
    scan(FIRST_ORDER_NAMES["20"], f20, pairs, (0, 0))
    scan(FIRST_ORDER_NAMES["21"], f21, xa, (0, -1))
    scan(FIRST_ORDER_NAMES["3"], f3, triples, (0, 0, 0))
    scan(TRIVIAL_NAMES["0"], np.einsum("ka->ak", c0), [(a,) for a in range(n)], (-1,))
    scan(TRIVIAL_NAMES["1"], c1, pairs, (0, 0))
    scan(TRIVIAL_NAMES["2"], c2, xa, (0, -1))
    scan(TRIVIAL_NAMES["3"], c3, triples, (0, 0, 0))
    scan(TRIVIAL_NAMES["33"], c33, triples, (0, 0, 0))
    return report


def check_trivializing_morphism(L: Lie2Algebra, w: DeformationDatum,
                                t: TrivializationCandidate) -> AxiomReport:
    """Is ``T = (1+λN0, 1+λN1, λN2)`` a homomorphism from ``L + λw`` to ``L`` for all λ?

    Decided as a λ-polynomial identity (every coefficient of every
    homomorphism residual zero) and, independently, through the first-order
    identities plus the unfolded N-conditions.  The two verdicts must agree;
    :class:`UnfoldingMismatch` is raised otherwise.
    """
    _check_dims(L, w)
    if t.dims != (L.dim0, L.dim1):
        raise ValueError("candidate does not match the algebra")
    fam = lambda_family(L, w)
    T = t.morphism()
    res = homomorphism_residuals(T, fam, L)
    m, n = L.dim0, L.dim1
    poly = AxiomReport()
    tuples = {
        "i": ([(a,) for a in range(n)], (-1,), lambda r, idx: r[:, idx[0]]),
        "ii": (list(combinations(range(m), 2)), (0, 0), lambda r, idx: r[idx]),
        "iii": ([(x, a) for x in range(m) for a in range(n)], (0, -1), lambda r, idx: r[idx]),
        "iv": (list(combinations(range(m), 3)), (0, 0, 0), lambda r, idx: r[idx]),
    }
    for key, (items, grades, pick) in tuples.items():
        for k in range(4):
            poly.declare(f"{HOM_NAMES[key]} [λ^{k}]")
        for idx in items:
            vec = list(pick(res[key], idx))
            for k in range(4):
                co = [v.coefficient(k) if isinstance(v, LambdaPoly) else (Fraction(v) if k == 0 else Fraction(0))
                      for v in vec]
                if any(c != 0 for c in co):
                    poly.record(f"{HOM_NAMES[key]} [λ^{k}]", [basis_label(g, i) for g, i in zip(grades, idx)], co)
    unfolded = trivialization_conditions(L, w, t)
    if poly.passed != unfolded.passed:
        raise UnfoldingMismatch(
            "the λ-polynomial morphism identity and the unfolded N-conditions disagree: "
            f"polynomial={poly.passed}, unfolded={unfolded.passed}")
    report = AxiomReport()
    report.merge(poly)
    report.merge(unfolded)
    return report
