import random
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
import sympy.combinatorics
from hypothesis import given
from hypothesis import strategies as st

from lie2 import catalog
from lie2.exactlinalg import identity, zeros
from lie2.graded import (AXIOM_NAMES, HOM_NAMES, Homomorphism, Lie2Algebra, alternating_tensor, check_axioms,
                         check_homomorphism, compose, invert, is_alternating, permutation_sign, transport_structure)
from oracles import axioms_oracle
from strategies import (lie2_algebras, random_alternating2, random_invertible, random_transport, strict_pool)

# single-entry corruptions that break exactly one axiom: (pool name, tensor, index)
TARGETED = {
    "i": ("sl2+triv1", "d", (0, 0)),
    "ii": ("r2+triv1+End(V)", "d", (2, 0)),
    "iii": ("str(sl2)", "br00", (0, 1, 0)),
    "iv": ("str(sl2)", "br01", (0, 0, 0)),
    "v": ("End(V)+End(V)", "l3", (0, 1, 2, 1)),
}


def named(name):
    for L in [catalog.str_sl2()] + strict_pool():
        if L.name == name:
            return L
    raise KeyError(name)


def corrupt(L, tensor, idx, delta=1):
    """Add ``delta`` at ``idx`` keeping the alternating symmetry of the tensor."""
    d, b00, b01, l3 = (t.copy() for t in L.tensors())
    t = {"d": d, "br00": b00, "br01": b01, "l3": l3}[tensor]
    if tensor == "br00":
        t[idx] += delta
        t[idx[1], idx[0], idx[2]] -= delta
    elif tensor == "l3":
        for p in permutations(range(3)):
            t[tuple(idx[q] for q in p) + (idx[3],)] += permutation_sign(p) * delta
    else:
        t[idx] += delta
    return Lie2Algebra(d, b00, b01, l3, name=L.name + "*")


def test_abelian_passes():
    assert check_axioms(catalog.abelian()).passed


def test_str_sl2_passes_and_is_skeletal():
    L = catalog.str_sl2()
    assert check_axioms(L).passed
    assert L.is_skeletal() and not L.is_strict()


def test_sl2_perturbed_constant_fails_iii_with_residual():
    L = corrupt(catalog.str_sl2(), "br00", (0, 1, 1))
    report = check_axioms(L)
    assert AXIOM_NAMES["iii"] in report.failed()
    v = report.first_failure()
    assert any(r != 0 for r in v.residual)
    assert axioms_oracle(L)["iii"] is False


@pytest.mark.parametrize("axiom", list(TARGETED))
def test_targeted_corruption_breaks_exactly_one_axiom(axiom):
    name, tensor, idx = TARGETED[axiom]
    L = corrupt(named(name), tensor, idx)
    report = check_axioms(L)
    assert report.failed() == [AXIOM_NAMES[axiom]]
    assert report.first_failure().basis
    oracle = axioms_oracle(L)
    assert [k for k, ok in oracle.items() if not ok] == [axiom]


@given(lie2_algebras(max_pool_index=9), st.integers(0, 3), st.integers(0, 10**6))
def test_checker_agrees_with_loop_oracle_after_random_corruption(L, which, seed):
    rng = random.Random(seed)
    tensor = ["d", "br00", "br01", "l3"][which]
    t = getattr(L, tensor)
    if t.size == 0 or (tensor == "l3" and L.dim0 < 3) or (tensor == "br00" and L.dim0 < 2):
        return
    if tensor == "br00":
        i, j = rng.sample(range(L.dim0), 2)
        idx = (i, j, rng.randrange(L.dim0))
    elif tensor == "l3":
        idx = tuple(sorted(rng.sample(range(L.dim0), 3))) + (rng.randrange(L.dim1),)
    else:
        idx = tuple(rng.randrange(s) for s in t.shape)
    M = corrupt(L, tensor, idx, Fraction(rng.choice([-2, -1, 1, 3]), rng.choice([1, 2])))
    oracle = axioms_oracle(M)
    report = check_axioms(M)
    assert {AXIOM_NAMES[k] for k, ok in oracle.items() if not ok} == set(report.failed())


@given(lie2_algebras())
def test_random_transports_are_valid(L):
    assert check_axioms(L).passed
    assert all(axioms_oracle(L).values())


def test_non_alternating_input_rejected():
    b = zeros(2, 2, 2)
    b[0, 1, 0] = 1
    with pytest.raises(ValueError):
        Lie2Algebra(zeros(2, 1), b, zeros(2, 1, 1), zeros(2, 2, 2, 1))


# -- homomorphisms ---------------------------------------------------------------


@given(lie2_algebras())
def test_identity_homomorphism(L):
    assert check_homomorphism(Homomorphism.identity(L), L, L).passed


def test_nijenhuis_operator_is_morphism_from_deformed_bracket():
    L, N = catalog.string_type()
    LN = N.deformed_algebra(L)
    assert check_homomorphism(N.as_morphism(), LN, L).passed


def test_broken_intertwining_fails_condition_i():
    L = named("id(r2)")
    F = Homomorphism(identity(2), zeros(2, 2))
    report = check_homomorphism(F, L, L)
    assert HOM_NAMES["i"] in report.failed()


def test_compose_with_identity_and_inverse():
    rng = random.Random(3)
    L = catalog.str_sl2()
    F = Homomorphism(random_invertible(rng, 3), random_invertible(rng, 1), random_alternating2(rng, 3, 1))
    ident = Homomorphism(identity(3), identity(1))
    assert compose(ident, F) == F
    assert compose(invert(F), F) == ident
    assert compose(F, invert(F)) == ident
    src = transport_structure(F, L)
    assert check_homomorphism(F, src, L).passed
    assert check_homomorphism(invert(F), L, src).passed


def test_compose_strict_stays_strict():
    rng = random.Random(5)
    F = Homomorphism(random_invertible(rng, 3), random_invertible(rng, 2))
    G = Homomorphism(random_invertible(rng, 3), random_invertible(rng, 2))
    assert compose(G, F).is_strict()


def test_invert_examples():
    I3, I1 = identity(3), identity(1)
    assert invert(Homomorphism(I3, I1)) == Homomorphism(I3, I1)
    G = invert(Homomorphism(2 * I3, 3 * I1))
    assert (G.F0 == I3 * Fraction(1, 2)).all() and (G.F1 == I1 * Fraction(1, 3)).all() and G.is_strict()


def test_invert_formula_componentwise():
    rng = random.Random(11)
    F = Homomorphism(random_invertible(rng, 3), random_invertible(rng, 2), random_alternating2(rng, 3, 2))
    G = invert(F)
    GF = compose(G, F)
    assert (GF.F0 == identity(3)).all() and (GF.F1 == identity(2)).all()
    assert all(v == 0 for v in GF.F2.flat)


def test_transport_examples():
    L = catalog.str_sl2()
    assert transport_structure(Homomorphism.identity(L), L) == L
    A = transport_structure(Homomorphism(2 * identity(1), identity(1)), catalog.abelian())
    assert all(v == 0 for t in A.tensors() for v in t.flat)


@given(st.integers(0, 10**6))
def test_transport_over_str_sl2_with_random_f2(seed):
    L = random_transport(random.Random(seed), catalog.str_sl2(), strict=False)
    assert check_axioms(L).passed


def test_dimension_mismatch_errors():
    F = Homomorphism(identity(2), identity(1))
    with pytest.raises(ValueError):
        check_homomorphism(F, catalog.str_sl2(), catalog.str_sl2())
    with pytest.raises(ValueError):
        compose(Homomorphism(identity(3), identity(1)), F)


# -- alternating tensors ----------------------------------------------------------


@given(st.permutations(range(5)))
def test_permutation_sign_matches_sympy(p):
    assert permutation_sign(p) == sympy.combinatorics.Permutation(list(p)).signature()


def test_alternating_tensor_fills_orbits():
    t = alternating_tensor({(0, 1, 2): [1], (0, 2, 3): [2]}, 3, 4, 1)
    assert is_alternating(t, 3)
    assert t[2, 1, 0, 0] == -1 and t[3, 0, 2, 0] == 2 and t[0, 0, 1, 0] == 0


def test_structure_equal_ignores_name():
    L = catalog.str_sl2()
    M = Lie2Algebra(*L.tensors(), name="other")
    assert L == M and L.structure_equal(M)
    assert np.all(M.l3 == L.l3)
