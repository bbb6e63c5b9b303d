"""Random Lie 2-algebras for the property and acceptance tests.

Valid random algebras come from a small pool of integer strict algebras
(crossed modules and ``End(V)``) transported along random invertible
``(F0, F1)`` and, for non-strict ones, a random alternating ``F2``.
Transport preserves every axiom, so validity never depends on code under test.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from lie2 import catalog
from lie2.exactlinalg import rank, zeros
from lie2.graded import Homomorphism, Lie2Algebra, transport_structure
from lie2.representations import TwoTermComplex, build_end_algebra


def crossed_identity(h) -> Lie2Algebra:
    """``(h, h, id)``: d = 1, both brackets the Lie bracket of ``h``."""
    k = h.dim
    br = h.bracket
    d = zeros(k, k)
    for i in range(k):
        d[i, i] = Fraction(1)
    return Lie2Algebra(d, br.copy(), br.copy(), zeros(k, k, k, k), name=f"id({h.name})")


def lie_with_trivial_module(h, n: int) -> Lie2Algebra:
    """``h`` in degree 0 acting trivially on ``ℚ^n``, zero differential."""
    k = h.dim
    return Lie2Algebra(zeros(k, n), h.bracket.copy(), zeros(k, n, n), zeros(k, k, k, n), name=f"{h.name}+triv{n}")


def sl2_on_standard() -> Lie2Algebra:
    """``sl2`` acting on ``ℚ²`` by its defining matrices, zero differential."""
    h = catalog.sl2()
    mats = [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]
    br01 = zeros(3, 2, 2)
    for x, M in enumerate(mats):
        for a in range(2):
            for k in range(2):
                br01[x, a, k] = Fraction(M[k][a])
    return Lie2Algebra(zeros(3, 2), h.bracket.copy(), br01, zeros(3, 3, 3, 2), name="sl2+std")


def direct_sum(A: Lie2Algebra, B: Lie2Algebra) -> Lie2Algebra:
    m1, n1, m2, n2 = A.dim0, A.dim1, B.dim0, B.dim1
    m, n = m1 + m2, n1 + n2
    d, br00, br01, l3 = zeros(m, n), zeros(m, m, m), zeros(m, n, n), zeros(m, m, m, n)
    d[:m1, :n1], d[m1:, n1:] = A.d, B.d
    br00[:m1, :m1, :m1], br00[m1:, m1:, m1:] = A.br00, B.br00
    br01[:m1, :n1, :n1], br01[m1:, n1:, n1:] = A.br01, B.br01
    l3[:m1, :m1, :m1, :n1], l3[m1:, m1:, m1:, n1:] = A.l3, B.l3
    return Lie2Algebra(d, br00, br01, l3, name=f"{A.name}+{B.name}")


def strict_pool() -> list[Lie2Algebra]:
    """Integer strict Lie 2-algebras with ``dim g0 ≤ 4`` and ``dim g-1 ≤ 3``."""
    r2, sl2 = catalog.two_dim(), catalog.sl2()
    end_iso = build_end_algebra(TwoTermComplex.of([[1]]))
    end_zero = build_end_algebra(TwoTermComplex.of([[0]]))
    end_21 = build_end_algebra(TwoTermComplex.of([[1, 0]]))
    pool = [
        catalog.abelian(),
        end_iso,
        end_zero,
        end_21,
        crossed_identity(r2),
        crossed_identity(sl2),
        lie_with_trivial_module(sl2, 1),
        lie_with_trivial_module(r2, 2),
        sl2_on_standard(),
        direct_sum(crossed_identity(r2), end_iso),
        direct_sum(end_zero, end_zero),
        direct_sum(r2_as_lie2(r2), end_iso),
        direct_sum(lie_with_trivial_module(r2, 1), end_zero),
        direct_sum(lie_with_trivial_module(r2, 1), crossed_identity(r2)),
    ]
    for L in pool:
        assert L.dim0 <= 4 and L.dim1 <= 3, L
    return pool


def r2_as_lie2(h) -> Lie2Algebra:
    return lie_with_trivial_module(h, 0)


# -- random transport -----------------------------------------------------------


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -2, hi: int = 2) -> np.ndarray:
    M = zeros(rows, cols)
    for idx in np.ndindex(rows, cols):
        M[idx] = Fraction(rng.randint(lo, hi))
    return M


def random_invertible(rng: random.Random, k: int) -> np.ndarray:
    while True:
        M = random_matrix(rng, k, k)
        if rank(M) == k:
            return M


def random_alternating2(rng: random.Random, m: int, n: int) -> np.ndarray:
    F2 = zeros(m, m, n)
    for x in range(m):
        for y in range(x + 1, m):
            for k in range(n):
                v = Fraction(rng.randint(-1, 1))
                F2[x, y, k], F2[y, x, k] = v, -v
    return F2


def random_transport(rng: random.Random, base: Lie2Algebra, strict: bool = True) -> Lie2Algebra:
    """``base`` pulled back along a random invertible morphism."""
    m, n = base.dim0, base.dim1
    F2 = zeros(m, m, n) if strict else random_alternating2(rng, m, n)
    F = Homomorphism(random_invertible(rng, m), random_invertible(rng, n), F2)
    L = transport_structure(F, base)
    L.name = f"T({base.name})"
    return L


def random_strict_algebras(count: int, seed: int = 0) -> list[Lie2Algebra]:
    rng = random.Random(seed)
    pool = strict_pool()
    return [random_transport(rng, pool[i % len(pool)]) for i in range(count)]


@st.composite
def lie2_algebras(draw, strict: bool | None = None, max_pool_index: int | None = None):
    """Hypothesis strategy over valid (possibly non-strict) Lie 2-algebras."""
    pool = strict_pool()
    hi = len(pool) - 1 if max_pool_index is None else max_pool_index
    base = pool[draw(st.integers(0, hi))]
    seed = draw(st.integers(0, 2**32 - 1))
    is_strict = draw(st.booleans()) if strict is None else strict
    return random_transport(random.Random(seed), base, strict=is_strict)
