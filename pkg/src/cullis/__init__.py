"""Exact determinants of rectangular matrices.

The library evaluates the alternating-minor-sum determinant of an n x k
matrix four independent ways — three combinatorial oracles and a
cubic-time Pfaffian reduction — over arbitrary-precision integers,
rationals, and binary64 floats, with per-operation instrumentation.
"""
from .determinant import (
    METHODS,
    det,
    det_by_column_laplace,
    det_by_injections,
    det_by_minors,
    det_by_pfaffian,
    ones_column_identity_holds,
    square_det,
    zero_row_identity_holds,
)
from .matrix import (
    Matrix,
    MatrixError,
    append_ones_column,
    append_ones_column_and_unit_row,
    append_zero_row,
    identity,
    is_skew_symmetric,
    multiply,
    skew_kernel_matrix,
    submatrix_delete,
    submatrix_select,
    transpose,
)
from .pfaffian import (
    ENGINES,
    FractionFreeInvariantError,
    SkewMatrix,
    pfaffian,
    pfaffian_definition,
    pfaffian_eliminate,
    pfaffian_fraction_free,
    pfaffian_laplace,
)
from .scalars import (
    DOMAINS,
    FLOAT,
    INTEGER,
    RATIONAL,
    CapabilityError,
    Domain,
    ExactDivisionError,
    ScalarError,
    ScalarParseError,
    Tier,
    get_domain,
)
from .signs import (
    Matching,
    enumerate_matchings,
    injection_sign,
    matching_sum_sign,
    pair_sign_matrix,
    permutation_matrix,
    tuple_sign,
    validate_injection,
    validate_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "METHODS",
    "det",
    "det_by_column_laplace",
    "det_by_injections",
    "det_by_minors",
    "det_by_pfaffian",
    "ones_column_identity_holds",
    "square_det",
    "zero_row_identity_holds",
    "Matrix",
    "MatrixError",
    "append_ones_column",
    "append_ones_column_and_unit_row",
    "append_zero_row",
    "identity",
    "is_skew_symmetric",
    "multiply",
    "skew_kernel_matrix",
    "submatrix_delete",
    "submatrix_select",
    "transpose",
    "ENGINES",
    "FractionFreeInvariantError",
    "SkewMatrix",
    "pfaffian",
    "pfaffian_definition",
    "pfaffian_eliminate",
    "pfaffian_fraction_free",
    "pfaffian_laplace",
    "DOMAINS",
    "FLOAT",
    "INTEGER",
    "RATIONAL",
    "CapabilityError",
    "Domain",
    "ExactDivisionError",
    "ScalarError",
    "ScalarParseError",
    "Tier",
    "get_domain",
    "Matching",
    "enumerate_matchings",
    "injection_sign",
    "matching_sum_sign",
    "pair_sign_matrix",
    "permutation_matrix",
    "tuple_sign",
    "validate_injection",
    "validate_permutation",
    "__version__",
]
