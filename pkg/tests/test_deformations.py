import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie2 import catalog
from lie2.cohomology import CEComplex
from lie2.deformations import (DeformationDatum, TrivializationCandidate, check_deformation_datum,
                               check_trivializing_morphism, deform, deform_symbolic, equation_name,
                               first_violated_equation, lambda_family)
from lie2.exactlinalg import LambdaPoly, as_matrix, zeros
from lie2.graded import Lie2Algebra, alternating_tensor, axiom_residuals, check_axioms
from lie2.nijenhuis import NijenhuisOperator, nijenhuis_deformation
from strategies import lie2_algebras

COCYCLE = "(i) 2-cocycle in the adjoint representation"
STRUCTURE = "(ii) datum is a Lie 2-algebra structure"


def zero_algebra(m, n):
    return Lie2Algebra.zero(m, n, name=f"zero{m},{n}")


def non_jacobi_bracket():
    """An antisymmetric bracket on ℚ³ with [[e1,e2],e3] + c.p. ≠ 0."""
    return alternating_tensor({(0, 1): [0, 1, 0], (1, 2): [1, 0, 0]}, 2, 3, 3)


def jacobi_sum(b, x, y, z):
    def br(u, v):
        return [sum(u[i] * v[j] * b[i, j, k] for i in range(3) for j in range(3)) for k in range(3)]
    e = [[int(i == j) for j in range(3)] for i in range(3)]
    terms = [br(br(e[x], e[y]), e[z]), br(br(e[y], e[z]), e[x]), br(br(e[z], e[x]), e[y])]
    return [sum(t[k] for t in terms) for k in range(3)]


def test_zero_datum():
    L = catalog.str_sl2()
    report = check_deformation_datum(L, DeformationDatum.zero(L))
    assert report.passed
    assert deform_symbolic(L, DeformationDatum.zero(L))[1].all_zero


def test_nijenhuis_datum_passes():
    L, N = catalog.o_operator()
    w = nijenhuis_deformation(L, N)
    assert not w.is_zero()
    assert check_deformation_datum(L, w).passed
    assert deform_symbolic(L, w)[1].all_zero


def test_string_type_datum_vanishes():
    # ω2⁰ pairs to minus the CE differential of ⟨Hx, y⟩, a 3-cochain on a 2-dim algebra
    L, N = catalog.string_type()
    w = nijenhuis_deformation(L, N)
    assert w.is_zero()
    assert check_deformation_datum(L, w).passed


def test_non_jacobi_datum_fails_structure_at_lambda_two():
    L = zero_algebra(3, 1)
    b = non_jacobi_bracket()
    assert jacobi_sum(b, 0, 1, 2) != [0, 0, 0]
    w = DeformationDatum(zeros(3, 1), b, zeros(3, 1, 1), zeros(3, 3, 3, 1))
    report = check_deformation_datum(L, w)
    assert report.ok(COCYCLE)
    assert report.failed() == [STRUCTURE, equation_name("iii", 2)]
    assert first_violated_equation(report) == equation_name("iii", 2)
    v = report.conditions[equation_name("iii", 2)][0]
    assert list(v.residual) == jacobi_sum(b, 0, 1, 2)


def test_deform_at_zero_is_identity():
    L, N = catalog.o_operator()
    assert deform(L, nijenhuis_deformation(L, N), 0) == L


@pytest.mark.parametrize("lam", [1, -2, Fraction(1, 3)])
def test_valid_datum_gives_algebras(lam):
    L, N = catalog.o_operator()
    w = nijenhuis_deformation(L, N)
    assert check_axioms(deform(L, w, lam)).passed


def test_skeletal_stays_skeletal():
    L, N = catalog.o_operator()
    assert L.is_skeletal()
    for lam in (1, -2, 5):
        assert deform(L, nijenhuis_deformation(L, N), lam).is_skeletal()


@given(lie2_algebras(max_pool_index=10), st.integers(0, 10**6))
def test_non_closed_cochain_reports_lambda_one(L, seed):
    rng = random.Random(seed)
    cx = CEComplex(L)
    c = cx.from_coordinates(2, [rng.randint(-1, 1) for _ in range(cx.dim(2))])
    w = DeformationDatum.from_cochain(c)
    report = check_deformation_datum(L, w)
    _, poly = deform_symbolic(L, w)
    assert report.ok(COCYCLE) == cx.is_cocycle(c)
    if not cx.is_cocycle(c):
        assert any(name.endswith("(cocycle part)") for name in report.failed())
    assert report.passed == poly.all_zero


@given(lie2_algebras(max_pool_index=10), st.integers(0, 10**6))
def test_coefficients_match_evaluation_at_sampled_lambdas(L, seed):
    """Oracle: three sampled evaluations determine a degree ≤ 2 polynomial."""
    rng = random.Random(seed)
    cx = CEComplex(L)
    w = DeformationDatum.from_cochain(cx.from_coordinates(2, [rng.randint(-1, 1) for _ in range(cx.dim(2))]))
    fam, poly = deform_symbolic(L, w)
    assert poly.max_degree() <= 3
    samples = [Fraction(1), Fraction(-2), Fraction(3, 2), Fraction(5)]
    res_at = {lam: axiom_residuals(deform(L, w, lam)) for lam in samples}
    sym = axiom_residuals(fam)
    for key, arr in sym.items():
        for idx in itertools.product(*(range(s) for s in arr.shape)):
            p = arr[idx]
            for lam in samples:
                value = p(lam) if isinstance(p, LambdaPoly) else p
                assert value == res_at[lam][key][idx]


def test_family_coefficients():
    L, N = catalog.o_operator()
    w = nijenhuis_deformation(L, N)
    fam = lambda_family(L, w)
    assert fam.coefficient(0) == L
    assert fam.coefficient(1) == w.as_algebra()
    assert fam.evaluate(2) == deform(L, w, 2)


def test_cochain_roundtrip():
    L, N = catalog.o_operator()
    w = nijenhuis_deformation(L, N)
    cx = CEComplex(L)
    assert DeformationDatum.from_cochain(w.to_cochain(cx)) == w


def test_datum_validation():
    with pytest.raises(ValueError):
        DeformationDatum(zeros(2, 1), as_matrix([[1, 0], [0, 0]]).reshape(2, 2, 1).repeat(2, axis=2),
                         zeros(2, 1, 1), zeros(2, 2, 2, 1))
    with pytest.raises(ValueError):
        check_deformation_datum(catalog.str_sl2(), DeformationDatum.zero(catalog.abelian()))


# -- trivial deformations -----------------------------------------------------


def test_zero_candidate_trivializes_zero_datum():
    L = catalog.str_sl2()
    t = TrivializationCandidate(zeros(3, 3), zeros(1, 1))
    assert check_trivializing_morphism(L, DeformationDatum.zero(L), t).passed


@pytest.mark.parametrize("name", ["string_type", "o_operator"])
def test_nijenhuis_candidate_trivializes(name):
    L, N = catalog.OPERATORS[name]()
    w = nijenhuis_deformation(L, N)
    assert check_trivializing_morphism(L, w, TrivializationCandidate(N.N0, N.N1)).passed


def test_nontrivial_class_has_no_trivialization_on_grid():
    # on the abelian (1,1) algebra every datum is a cocycle; d' = 1 is not a coboundary
    L = catalog.abelian()
    w = DeformationDatum(as_matrix([[1]]), zeros(1, 1, 1), zeros(1, 1, 1), zeros(1, 1, 1, 1))
    assert check_deformation_datum(L, w).passed
    cx = CEComplex(L)
    assert cx.is_coboundary(w.to_cochain(cx)) is None
    for a, b in itertools.product(range(-2, 3), repeat=2):
        t = TrivializationCandidate(as_matrix([[a]]), as_matrix([[b]]))
        assert not check_trivializing_morphism(L, w, t).passed


def test_wrong_candidate_fails_with_named_condition():
    L, N = catalog.o_operator()
    w = nijenhuis_deformation(L, N)
    report = check_trivializing_morphism(L, w, TrivializationCandidate(zeros(4, 4), zeros(1, 1)))
    assert not report.passed
    assert report.first_failure().basis


def test_candidate_validation():
    with pytest.raises(ValueError):
        TrivializationCandidate(zeros(2, 3), zeros(1, 1))
    L = catalog.str_sl2()
    with pytest.raises(ValueError):
        check_trivializing_morphism(L, DeformationDatum.zero(L), TrivializationCandidate(zeros(2, 2), zeros(1, 1)))


def test_nijenhuis_datum_of_zero_operator_is_zero():
    L = catalog.str_sl2()
    assert nijenhuis_deformation(L, NijenhuisOperator.zero(L)).is_zero()
