"""Builtin examples used by the CLI, the tests and ``examples/*.json``."""

from __future__ import annotations

from .cohomology import CEComplex, Cochain, ComponentKey
from .exactlinalg import as_matrix, zeros
from .extensions import AbelianComplex, ExtensionDatum
from .graded import Lie2Algebra
from .nijenhuis import (LieAlgebra, NijenhuisOperator, QuadraticLieAlgebra, build_lie_of_quadratic,
                        o_operator_nijenhuis, string_type_nijenhuis)
from .representations import adjoint_representation

__all__ = [
    "ALGEBRAS",
    "OPERATORS",
    "abelian",
    "extension_example",
    "o_operator",
    "sl2",
    "sl2_killing",
    "str_sl2",
    "string_type",
    "two_dim",
]


def sl2() -> LieAlgebra:
    """Basis ``h, e, f`` with ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``."""
    return LieAlgebra.from_structure_constants(
        3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}, name="sl2")


def sl2_killing() -> QuadraticLieAlgebra:
    """``sl2`` with its Killing form ``tr(ad x ad y)``."""
    return QuadraticLieAlgebra(sl2(), [[8, 0, 0], [0, 0, 4], [0, 4, 0]], name="sl2")


def two_dim() -> LieAlgebra:
    """The non-abelian 2-dimensional Lie algebra ``[x, y] = y``."""
    return LieAlgebra.from_structure_constants(2, {(0, 1): [0, 1]}, name="r2")


def abelian() -> Lie2Algebra:
    """``g0 = g-1 = ℚ`` with every structure map zero."""
    return Lie2Algebra.zero(1, 1, name="abelian")


def str_sl2() -> Lie2Algebra:
    """The string Lie 2-algebra of ``sl2``."""
    L = build_lie_of_quadratic(sl2_killing())
    L.name = "str(sl2)"
    return L


def string_type() -> tuple[Lie2Algebra, NijenhuisOperator]:
    """``Lie(r2 ⊕ r2*)`` with ``N0 = [[0,0],[H,0]]``, ``H = [[0,1],[-1,0]]``."""
    L, N = string_type_nijenhuis(two_dim(), [[0, 1], [-1, 0]])
    L.name = "string-type"
    return L, N


def o_operator() -> tuple[Lie2Algebra, NijenhuisOperator]:
    """``Lie(r2 ⊕ r2*)`` with ``N0 = [[0,T],[0,0]]``, ``T = [[0,1],[-1,0]]``."""
    L, N = o_operator_nijenhuis(two_dim(), as_matrix([[0, 1], [-1, 0]]))
    L.name = "o-operator"
    return L, N


def extension_example() -> tuple[ExtensionDatum, Cochain]:
    """``str(sl2)`` extended by its own underlying complex through the adjoint action.

    The cocycle is ``D(b)`` for a fixed degree-1 cochain ``b``; the second
    returned cocycle is zero, so the two extensions are equivalent.
    """
    g = str_sl2()
    h = AbelianComplex.of(g.d)
    mu = adjoint_representation(g)
    cx = CEComplex(g, mu, max_degree=3)
    b0 = as_matrix([[1, 0, 0], [0, 0, 1], [0, 2, 0]])           # b0 = key (1,0,0): F[x, k] = b0[k, x]
    b2 = zeros(3, 3, 1)
    b2[0, 1, 0], b2[1, 0, 0] = 1, -1
    b = Cochain(1, {ComponentKey(1, 0, 0): b0.T.copy(), ComponentKey(0, 1, -1): as_matrix([[3]]),
                    ComponentKey(2, 0, -1): b2})
    return ExtensionDatum(g, h, mu, cx.apply_D(b)), cx.zero(2)


ALGEBRAS = {
    "abelian": abelian,
    "str_sl2": str_sl2,
    "string_type": lambda: string_type()[0],
    "o_operator": lambda: o_operator()[0],
}

OPERATORS = {
    "string_type": string_type,
    "o_operator": o_operator,
}
