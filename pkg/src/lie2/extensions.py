"""Abelian extensions ``0 → h → ĝ → g → 0`` in normal form ``ĝ = g ⊕ h``.

Coordinates on ``ĝ0`` list the ``g0`` basis first, then ``h0``; likewise
for degree -1.  ``i`` and ``p`` are the canonical inclusion and projection.
An extension is assembled from a representation ``μ`` of ``g`` on ``h`` and
an ``h``-valued 2-cochain ``(ψ, ω, ν, θ)``::

    d(a+m)        = da + ψ(a) + ∂m
    [x+u, y+v]    = [x,y] + ω(x,y) + μ0(x)v - μ0(y)u
    [x+u, a+m]    = [x,a] + ν(x,a) + μ0(x)m - μ1(a)u
    l3(x+u, y+v, z+w) = l3(x,y,z) + θ(x,y,z) - μ2(x,y)w - μ2(z,x)v - μ2(y,z)u
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .cohomology import CEComplex, Cochain, ComponentKey
from .deformations import DeformationDatum
from .exactlinalg import as_matrix, contract, identity, zeros
from .graded import Homomorphism, Lie2Algebra, check_homomorphism, permutation_sign
from .reports import StructureError
from .representations import Representation, TwoTermComplex, check_representation

__all__ = [
    "AbelianComplex",
    "EquivalenceWitness",
    "ExtensionDatum",
    "Splitting",
    "build_extension",
    "canonical_maps",
    "classify",
    "extend_cocycle_to_semidirect",
    "extract_from_splitting",
    "semidirect_product",
]

_KEYS = {
    "psi": ComponentKey(0, 1, 0),
    "omega": ComponentKey(2, 0, 0),
    "nu": ComponentKey(1, 1, -1),
    "theta": ComponentKey(3, 0, -1),
}


class AbelianComplex(TwoTermComplex):
    """A 2-term complex viewed as an abelian Lie 2-algebra (zero brackets, ``l3 = 0``)."""

    def as_algebra(self) -> Lie2Algebra:
        k0, k1 = self.dimV0, self.dimV1
        return Lie2Algebra(self.partial, zeros(k0, k0, k0), zeros(k0, k1, k1), zeros(k0, k0, k0, k1),
                           check_alternation=False)


def _fiber(h) -> TwoTermComplex:
    if isinstance(h, TwoTermComplex):
        return h
    return AbelianComplex.of(h)


@dataclass
class ExtensionDatum:
    """``(g, h, μ, (ψ, ω, ν, θ))``; validity is checked by :meth:`validate`, not on construction."""

    base: Lie2Algebra
    fiber: TwoTermComplex
    rep: Representation
    cocycle: Cochain

    def complex(self, max_degree: int = 3) -> CEComplex:
        return CEComplex(self.base, self.rep, max_degree=max_degree)

    def validate(self) -> None:
        _require_rep(self.base, self.fiber, self.rep)
        if not self.complex().is_cocycle(self.cocycle):
            raise StructureError("(ψ, ω, ν, θ) is not a 2-cocycle")

    def __eq__(self, other):
        if not isinstance(other, ExtensionDatum):
            return NotImplemented
        return (self.base == other.base and self.fiber == other.fiber and self.rep == other.rep
                and self.cocycle == other.cocycle)

    __hash__ = None


def _require_rep(g: Lie2Algebra, h: TwoTermComplex, mu: Representation) -> None:
    if mu.V != h:
        raise ValueError("representation space differs from the fiber complex")
    report = check_representation(mu, g, h)
    if not report.passed:
        raise StructureError("invalid representation", report)


def _alternate3(t: np.ndarray, idx: tuple[int, int, int], vec) -> None:
    for perm in permutations(range(3)):
        s = permutation_sign(perm)
        t[tuple(idx[p] for p in perm)] = vec if s > 0 else -vec


def _assemble(g: Lie2Algebra, h: TwoTermComplex, mu: Representation, c: Cochain | None) -> Lie2Algebra:
    m, n = g.dim0, g.dim1
    k0, k1 = h.dimV0, h.dimV1
    M, N = m + k0, n + k1
    mu0_0, mu0_1, mu1, mu2 = mu.tensors()

    d = zeros(M, N)
    d[:m, :n] = g.d
    d[m:, n:] = h.partial

    b00 = zeros(M, M, M)
    b00[:m, :m, :m] = g.br00
    act = np.einsum("xkj->xjk", mu0_0)                 # [e_x, u_j] = μ0(x)u_j
    b00[:m, m:, m:] = act
    b00[m:, :m, m:] = -np.einsum("xjk->jxk", act)

    b01 = zeros(M, N, N)
    b01[:m, :n, :n] = g.br01
    b01[:m, n:, n:] = np.einsum("xkj->xjk", mu0_1)     # [e_x, m_j] = μ0(x)m_j
    b01[m:, :n, n:] = -np.einsum("aki->iak", mu1)      # [u_i, f_a] = -μ1(a)u_i

    l3 = zeros(M, M, M, N)
    l3[:m, :m, :m, :n] = g.l3
    for x in range(m):
        for y in range(x + 1, m):
            for w in range(k0):
                vec = zeros(N)
                vec[n:] = -mu2[x, y][:, w]
                _alternate3(l3, (x, y, m + w), vec)

    if c is not None:
        d[m:, :n] += np.einsum("ak->ka", c.component(0, 1, 0))
        b00[:m, :m, m:] += c.component(2, 0, 0)
        b01[:m, :n, n:] += c.component(1, 1, -1)
        l3[:m, :m, :m, n:] += c.component(3, 0, -1)
    return Lie2Algebra(d, b00, b01, l3, check_alternation=False)


def semidirect_product(g: Lie2Algebra, h, mu: Representation) -> Lie2Algebra:
    """``g ⋉_μ h``; rejects an invalid representation."""
    h = _fiber(h)
    _require_rep(g, h, mu)
    out = _assemble(g, h, mu, None)
    out.name = f"{g.name}⋉h" if g.name else ""
    return out


def build_extension(datum: ExtensionDatum) -> Lie2Algebra:
    """The structure on ``g ⊕ h`` determined by ``(μ, ψ, ω, ν, θ)``.

    No validation: the result satisfies the axioms exactly when the cocycle
    conditions hold.
    """
    g, h = datum.base, datum.fiber
    if datum.rep.V != h or datum.rep.dims != (g.dim0, g.dim1):
        raise ValueError("representation does not match base and fiber")
    return _assemble(g, h, datum.rep, datum.cocycle)


def canonical_maps(g: Lie2Algebra, h: TwoTermComplex) -> tuple[Homomorphism, Homomorphism]:
    """The strict inclusion ``i: h → g ⊕ h`` and projection ``p: g ⊕ h → g``."""
    m, n, k0, k1 = g.dim0, g.dim1, h.dimV0, h.dimV1
    i0, i1 = zeros(m + k0, k0), zeros(n + k1, k1)
    i0[m:, :] = identity(k0)
    i1[n:, :] = identity(k1)
    p0, p1 = zeros(m, m + k0), zeros(n, n + k1)
    p0[:, :m] = identity(m)
    p1[:, :n] = identity(n)
    return Homomorphism(i0, i1), Homomorphism(p0, p1)


@dataclass
class Splitting:
    """``σ = (σ0, σ1)`` with ``p∘σ = id``; only the ``h``-blocks are free."""

    sigma0: np.ndarray
    sigma1: np.ndarray

    def __post_init__(self):
        self.sigma0 = np.asarray(self.sigma0, dtype=object)
        self.sigma1 = np.asarray(self.sigma1, dtype=object)

    @classmethod
    def canonical(cls, g: Lie2Algebra, h: TwoTermComplex) -> "Splitting":
        return cls.shifted(g, h, zeros(h.dimV0, g.dim0), zeros(h.dimV1, g.dim1))

    @classmethod
    def shifted(cls, g: Lie2Algebra, h: TwoTermComplex, s0, s1) -> "Splitting":
        """``σ(x) = x + s0(x)``, ``σ(a) = a + s1(a)``."""
        m, n = g.dim0, g.dim1
        top0, top1 = identity(m), identity(n)
        s0 = as_matrix(s0, h.dimV0, m) if h.dimV0 else zeros(0, m)
        s1 = as_matrix(s1, h.dimV1, n) if h.dimV1 else zeros(0, n)
        return cls(np.vstack([top0, s0]), np.vstack([top1, s1]))

    def check(self, m: int, n: int) -> None:
        if self.sigma0.ndim != 2 or self.sigma0.shape[1] != m or self.sigma1.ndim != 2 or self.sigma1.shape[1] != n:
            raise ValueError("splitting shape does not match the base")
        ok0 = all(v == w for v, w in zip(self.sigma0[:m].flat, identity(m).flat))
        ok1 = all(v == w for v, w in zip(self.sigma1[:n].flat, identity(n).flat))
        if not (ok0 and ok1):
            raise ValueError("p∘σ ≠ id: not a splitting of the canonical projection")


def _require_normal_form(ext: Lie2Algebra, m: int, n: int) -> None:
    """``h`` is an abelian ideal and a subcomplex in the last coordinates."""
    d, b00, b01, l3 = ext.tensors()
    blocks = {
        "d(h-1) ⊄ h0": d[:m, n:],
        "[g0, h0] ⊄ h0": b00[:, m:, :m],
        "[ĝ0, h-1] ⊄ h-1": b01[:, n:, :n],
        "[h0, ĝ-1] ⊄ h-1": b01[m:, :, :n],
        "l3(·,·,h0) ⊄ h-1": l3[:, :, m:, :n],
        "[h0, h0] ≠ 0": b00[m:, m:],
        "[h0, h-1] ≠ 0": b01[m:, n:],
        "l3(·,h0,h0) ≠ 0": l3[:, m:, m:],
    }
    for msg, blk in blocks.items():
        if any(v != 0 for v in blk.flat):
            raise StructureError(f"not an abelian extension in normal form: {msg}")


def extract_from_splitting(ext: Lie2Algebra, sigma: Splitting,
                           base: Lie2Algebra | None = None) -> tuple[Representation, Cochain]:
    """Recover ``μ`` and ``(ψ, ω, ν, θ)`` from an extension on ``g ⊕ h`` and a splitting.

    ``g`` is read off through the projection unless ``base`` is given.
    Returns ``(μ, cocycle)``; the fiber complex is ``μ.V``.
    """
    m, n = sigma.sigma0.shape[1], sigma.sigma1.shape[1]
    sigma.check(m, n)
    M, N = ext.dim0, ext.dim1
    if sigma.sigma0.shape[0] != M or sigma.sigma1.shape[0] != N:
        raise ValueError("splitting does not map into the extension")
    _require_normal_form(ext, m, n)
    d, b00, b01, l3 = ext.tensors()
    g = base if base is not None else Lie2Algebra(d[:m, :n], b00[:m, :m, :m], b01[:m, :n, :n],
                                                   l3[:m, :m, :m, :n], check_alternation=False)
    s0, s1 = sigma.sigma0, sigma.sigma1
    h = TwoTermComplex(M - m, N - n, d[m:, n:])

    mu0_0 = np.einsum("ix,ijk->xkj", s0, b00[:, m:, m:])
    mu0_1 = np.einsum("ix,ijk->xkj", s0, b01[:, n:, n:])
    mu1 = -np.einsum("ba,ibk->aki", s1, b01[m:, :, n:])
    mu2 = -contract("ix,jy,ijwk->xykw", s0, s0, l3[:, :, m:, n:])
    mu = Representation(h, mu0_0, mu0_1, mu1, mu2)

    psi = d.dot(s1) - s0.dot(g.d)                                              # (M, n)
    omega = contract("ix,jy,ijk->xyk", s0, s0, b00) - np.einsum("kc,xyc->xyk", s0, g.br00)
    nu = contract("ix,ba,ibk->xak", s0, s1, b01) - np.einsum("kc,xac->xak", s1, g.br01)
    theta = (contract("ix,jy,kz,ijkr->xyzr", s0, s0, s0, l3)
             - np.einsum("kr,xyzr->xyzk", s1, g.l3))
    for name, blk in (("ψ", psi[:m]), ("ω", omega[..., :m]), ("ν", nu[..., :n]), ("θ", theta[..., :n])):
        if any(v != 0 for v in blk.flat):
            raise StructureError(f"{name} has a nonzero g-component; σ is not compatible with p")
    cocycle = Cochain(2, {
        _KEYS["psi"]: np.einsum("ka->ak", psi[m:]),
        _KEYS["omega"]: omega[..., m:],
        _KEYS["nu"]: nu[..., n:],
        _KEYS["theta"]: theta[..., n:],
    })
    return mu, cocycle


@dataclass
class EquivalenceWitness:
    """``(b0, b1, b2)`` with ``D(b0, b1, b2) = c1 - c2``.

    ``b0[k, x]`` is the ``h0``-coordinate ``k`` of ``b0(e_x)``, ``b1`` likewise;
    ``b2[x, y, k]`` is the ``h-1``-coordinate ``k`` of ``b2(e_x, e_y)``.
    """

    b0: np.ndarray
    b1: np.ndarray
    b2: np.ndarray

    @classmethod
    def from_cochain(cls, b: Cochain) -> "EquivalenceWitness":
        if b.degree != 1:
            raise ValueError("a witness is a degree-1 cochain")
        return cls(np.einsum("xk->kx", b.component(1, 0, 0)), np.einsum("ak->ka", b.component(0, 1, -1)),
                   b.component(2, 0, -1))

    def to_cochain(self) -> Cochain:
        return Cochain(1, {
            ComponentKey(1, 0, 0): np.einsum("kx->xk", self.b0),
            ComponentKey(0, 1, -1): np.einsum("ka->ak", self.b1),
            ComponentKey(2, 0, -1): self.b2,
        })

    def morphism(self, g: Lie2Algebra, h: TwoTermComplex) -> Homomorphism:
        """``F0(x+u) = x + b0(x) + u``, ``F1(a+m) = a + b1(a) + m``, ``F2 = b2∘(p ∧ p)``."""
        m, n, k0, k1 = g.dim0, g.dim1, h.dimV0, h.dimV1
        F0, F1 = identity(m + k0), identity(n + k1)
        F0[m:, :m] = self.b0
        F1[n:, :n] = self.b1
        F2 = zeros(m + k0, m + k0, n + k1)
        F2[:m, :m, n:] = self.b2
        return Homomorphism(F0, F1, F2)


def classify(g: Lie2Algebra, h, mu: Representation, c1: Cochain, c2: Cochain) -> EquivalenceWitness | None:
    """A witness that the extensions built from ``c1`` and ``c2`` are equivalent, or ``None``.

    Solves ``D(b0, b1, b2) = c1 - c2``; when solvable, the induced ``F`` is
    checked to be a morphism ``ĝ_{c1} → ĝ_{c2}`` commuting with ``i`` and ``p``.
    """
    h = _fiber(h)
    _require_rep(g, h, mu)
    cx = CEComplex(g, mu, max_degree=3)
    for name, c in (("c1", c1), ("c2", c2)):
        if c.degree != 2 or not cx.is_cocycle(c):
            raise StructureError(f"{name} is not a 2-cocycle")
    b = cx.is_coboundary(c1 - c2)
    if b is None:
        return None
    w = EquivalenceWitness.from_cochain(b)
    if cx.apply_D(w.to_cochain()) != c1 - c2:
        raise AssertionError("witness does not solve D(b) = c1 - c2")
    E1 = build_extension(ExtensionDatum(g, h, mu, c1))
    E2 = build_extension(ExtensionDatum(g, h, mu, c2))
    F = w.morphism(g, h)
    if not check_homomorphism(F, E1, E2).passed:
        raise AssertionError("induced F is not a Lie 2-algebra morphism")
    i, p = canonical_maps(g, h)
    if not (F.F0.dot(i.F0) == i.F0).all() or not (F.F1.dot(i.F1) == i.F1).all():
        raise AssertionError("F∘i ≠ i")
    if not (p.F0.dot(F.F0) == p.F0).all() or not (p.F1.dot(F.F1) == p.F1).all():
        raise AssertionError("p∘F ≠ p")
    if any(v != 0 for v in F.F2[g.dim0:].flat):
        raise AssertionError("F2(i(u), ·) ≠ 0")
    return w


def extend_cocycle_to_semidirect(g: Lie2Algebra, h, mu: Representation, cocycle: Cochain) -> Cochain:
    """The barred cochain ``(ψ̄, ω̄, ν̄, θ̄)`` in the adjoint complex of ``g ⋉_μ h``.

    ``ψ̄(a+m) = ψ(a)``, ``ω̄(x+u, y+v) = ω(x,y)`` and so on, landing in ``h``.
    """
    h = _fiber(h)
    S = semidirect_product(g, h, mu)
    m, n = g.dim0, g.dim1
    M, N = S.dim0, S.dim1
    w1 = zeros(M, N)
    w1[m:, :n] = np.einsum("ak->ka", cocycle.component(0, 1, 0))
    w20 = zeros(M, M, M)
    w20[:m, :m, m:] = cocycle.component(2, 0, 0)
    w21 = zeros(M, N, N)
    w21[:m, :n, n:] = cocycle.component(1, 1, -1)
    w3 = zeros(M, M, M, N)
    w3[:m, :m, :m, n:] = cocycle.component(3, 0, -1)
    return DeformationDatum(w1, w20, w21, w3).to_cochain(CEComplex(S, max_degree=3))
