"""
Exact linear algebra over GF(p) and Q: Smith forms over k[x], rational
canonical forms, centralizer bases and intertwiner spaces.
"""

from centrex.algebra.centralizer import (
    BasisElement,
    CentralizerBasis,
    centralizer_basis,
    frobenius_dimension,
    frobenius_dimension_closed_form,
    generating_matrix,
    generating_polynomial,
    generating_vector,
    normalized_basis,
    polynomial_centralizer_basis,
    rcf_centralizer_basis,
)
from centrex.algebra.field import FieldKind, FieldScalar, FieldSpec, f_from_integer, f_inv
from centrex.algebra.matrix import (
    MatrixK,
    companion,
    direct_sum,
    m_inverse,
    rref_kernel,
)
from centrex.algebra.poly import (
    Polynomial,
    p_divrem,
    p_eval_matrix,
    p_gcd_monic,
    p_lcm,
    p_xgcd,
)
from centrex.algebra.poly_matrix import MatrixPoly, char_matrix
from centrex.algebra.rcf import RcfResult, invariant_factors, rcf_transform
from centrex.algebra.smith import SnfResult, snf, snf_left
from centrex.algebra.wild import (
    IntertwinerMethod,
    IntertwinerSpace,
    invertible_witness_search,
    one_sided_intertwiners,
    simultaneous_intertwiners,
)

__all__ = [
    "BasisElement",
    "CentralizerBasis",
    "FieldKind",
    "FieldScalar",
    "FieldSpec",
    "IntertwinerMethod",
    "IntertwinerSpace",
    "MatrixK",
    "MatrixPoly",
    "Polynomial",
    "RcfResult",
    "SnfResult",
    "centralizer_basis",
    "char_matrix",
    "companion",
    "direct_sum",
    "f_from_integer",
    "f_inv",
    "frobenius_dimension",
    "frobenius_dimension_closed_form",
    "generating_matrix",
    "generating_polynomial",
    "generating_vector",
    "invariant_factors",
    "invertible_witness_search",
    "m_inverse",
    "normalized_basis",
    "one_sided_intertwiners",
    "p_divrem",
    "p_eval_matrix",
    "p_gcd_monic",
    "p_lcm",
    "p_xgcd",
    "polynomial_centralizer_basis",
    "rcf_centralizer_basis",
    "rcf_transform",
    "rref_kernel",
    "simultaneous_intertwiners",
    "snf",
    "snf_left",
]
