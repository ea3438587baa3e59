"""Exact tools for weighted artinian complete intersections: Poincare duality,
Eisenbud-Levine degree, rational quadratic form invariants, and smoothability
in formal dimensions 4 and 8."""

from .arith import (
    INF,
    SquareClass,
    factorize,
    four_square_decompose,
    hilbert_symbol,
    is_sum_two_rational_squares,
    legendre,
    square_class,
)
from .families import family_A, family_B, verify_family
from .poly import GroebnerBasis, PolyRing, VarSpec, WPoly, groebner, jacobian_det, normal_form, parse_poly
from .qform import (
    diagonalize,
    discriminant,
    in_witt_Z,
    integrality_over_orientations,
    local_invariant,
    sign_diagonal_witness,
    signature,
)
from .quotient import (
    InnerProductSpace,
    Orientation,
    QuotientRing,
    build_waci,
    el_degree,
    el_orientation,
    middle_form,
    pairing_matrix,
    poincare_polynomial,
)
from .smooth import (
    dim4_witness,
    homogeneous_case_table,
    product_model_signature,
    smoothable,
    smoothable_form,
    solve_sq_system,
)

__version__ = "0.1.0"
