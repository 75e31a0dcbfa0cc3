"""Type I optimal normal bases of finite fields, their trace duals, and
exact complexity counts of their multiplication tables."""

from .basis import (
    MultTable,
    OrderedBasis,
    complexity,
    dual_basis_oracle,
    dual_of_polynomial_basis,
    gram_matrix,
    is_basis,
    multiplication_table,
    normal_closure,
    scalar_weak_equivalence,
)
from .field import GF, ExtensionField, FieldElement, PrimeField
from .linalg import Matrix, mat_solve
from .onb1 import (
    InvalidParameters,
    Type1Field,
    Type1Params,
    build_type1,
    closed_form_dual,
    dual_generator,
    dual_min_poly,
    validate_params,
    verify_theorem,
)
from .poly import Polynomial, is_irreducible, minimal_polynomial

__version__ = "0.1.0"
