"""Exact computations with Lie 2-algebras: cohomology, deformations,
Nijenhuis operators and abelian extensions over the rationals."""

from .cohomology import CEComplex, Cochain, ComponentKey, apply_D, cohomology_dim, is_coboundary, is_cocycle
from .deformations import (DeformationDatum, TrivializationCandidate, check_deformation_datum,
                           check_trivializing_morphism, deform, deform_symbolic)
from .exactlinalg import Fraction, LambdaPoly
from .extensions import (AbelianComplex, EquivalenceWitness, ExtensionDatum, Splitting, build_extension,
                         classify, extend_cocycle_to_semidirect, extract_from_splitting, semidirect_product)
from .graded import Homomorphism, Lie2Algebra, check_axioms, check_homomorphism
from .nijenhuis import (LieAlgebra, NijenhuisOperator, QuadraticLieAlgebra, build_lie_of_quadratic,
                        check_nijenhuis, check_t_lambda_invariance, nijenhuis_deformation,
                        o_operator_nijenhuis, polynomial_of_nijenhuis, string_type_nijenhuis)
from .reports import AxiomReport, StructureError
from .representations import Representation, TwoTermComplex, adjoint_representation, check_representation

__version__ = "0.1.0"

__all__ = [
    "AbelianComplex",
    "AxiomReport",
    "CEComplex",
    "Cochain",
    "ComponentKey",
    "DeformationDatum",
    "EquivalenceWitness",
    "ExtensionDatum",
    "Fraction",
    "Homomorphism",
    "LambdaPoly",
    "Lie2Algebra",
    "LieAlgebra",
    "NijenhuisOperator",
    "QuadraticLieAlgebra",
    "Representation",
    "Splitting",
    "StructureError",
    "TrivializationCandidate",
    "TwoTermComplex",
    "adjoint_representation",
    "apply_D",
    "build_extension",
    "build_lie_of_quadratic",
    "check_axioms",
    "check_deformation_datum",
    "check_homomorphism",
    "check_nijenhuis",
    "check_representation",
    "check_t_lambda_invariance",
    "check_trivializing_morphism",
    "classify",
    "cohomology_dim",
    "deform",
    "deform_symbolic",
    "extend_cocycle_to_semidirect",
    "extract_from_splitting",
    "is_coboundary",
    "is_cocycle",
    "nijenhuis_deformation",
    "o_operator_nijenhuis",
    "polynomial_of_nijenhuis",
    "semidirect_product",
    "string_type_nijenhuis",
]
