"""
Invariant factors and the rational canonical form transformation.

The Smith form xI - A = gamma1 * diag(f_1, ..., f_n) * gamma2 gives the
invariant factors as the nonconstant f_i. The module map

    phi: k[x]^n -> k^n,  sum x^i v_i  ->  sum A^i v_i

sends the columns y_i of gamma1 to cyclic generators, and the Krylov
columns phi(y_i), A phi(y_i), ... assemble P with P^-1 A P = R.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from centrex.algebra.errors import DimensionMismatch, InternalInconsistency, Singular
from centrex.algebra.matrix import MatrixK, direct_sum, companion, m_inverse
from centrex.algebra.poly import Polynomial
from centrex.algebra.poly_matrix import char_matrix
from centrex.algebra.smith import snf_left

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RcfResult:
    """Invariant factors f_1 | f_2 | ... with P^-1 A P = R = C(f_1) + ... ."""

    factors: Tuple[Polynomial, ...]
    P: MatrixK
    P_inverse: MatrixK
    R: MatrixK

    @property
    def degrees(self) -> List[int]:
        return [int(f.degree) for f in self.factors]


def apply_phi(column: Sequence[Polynomial], matrix: MatrixK) -> MatrixK:
    """
    Evaluate phi on a polynomial column: sum_i A^i v_i where v_i collects the
    x^i coefficients of every entry.

    Raises:
        DimensionMismatch: If the column length differs from the matrix size.
    """
    n = matrix.rows
    if len(column) != n or not matrix.is_square:
        raise DimensionMismatch(f"phi needs a length-{n} column for an {n}x{n} matrix")
    spec = matrix.spec
    top = max((len(p.coeffs) for p in column), default=0)
    result = MatrixK.zero(spec, n, 1)
    for i in range(top - 1, -1, -1):
        layer = MatrixK._raw(
            spec, [[p.coeffs[i] if i < len(p.coeffs) else spec.zero] for p in column]
        )
        result = matrix @ result + layer
    return result


def rational_canonical_form(factors: Sequence[Polynomial]) -> MatrixK:
    """Direct sum of the companion matrices of the factors."""
    return reduce(direct_sum, [companion(f) for f in factors])


def invariant_factors(matrix: MatrixK) -> Tuple[Polynomial, ...]:
    """
    Nonconstant Smith diagonal entries of xI - A, ascending by divisibility.

    Args:
        matrix (MatrixK): Square matrix, n >= 1.

    Returns:
        Tuple[Polynomial, ...]: Monic f_1 | f_2 | ... | f_m.
    """
    result = snf_left(char_matrix(matrix))
    return tuple(d for d in result.diag if d.degree >= 1)


def rcf_transform(matrix: MatrixK) -> RcfResult:
    """
    Invariant factors together with P such that P^-1 A P = R.

    The identity is checked before returning.

    Raises:
        NonSquare: If the matrix is not square.
        InternalInconsistency: If P is singular or A P != P R.
    """
    smith = snf_left(char_matrix(matrix))
    factors: List[Polynomial] = []
    columns: List[MatrixK] = []
    for index, d in enumerate(smith.diag):
        if d.degree < 1:
            continue
        factors.append(d)
        v = apply_phi(smith.gamma1.column_at(index), matrix)
        for _ in range(int(d.degree)):
            columns.append(v)
            v = matrix @ v
    p = MatrixK.from_columns(columns)
    r = rational_canonical_form(factors)
    try:
        p_inverse = m_inverse(p)
    except Singular as exc:
        raise InternalInconsistency("rational canonical transform is singular") from exc
    if matrix @ p != p @ r:
        raise InternalInconsistency("P^-1 A P does not equal the canonical form")
    logger.debug(
        "invariant factor degrees %s for %dx%d matrix",
        [int(f.degree) for f in factors],
        matrix.rows,
        matrix.cols,
    )
    return RcfResult(factors=tuple(factors), P=p, P_inverse=p_inverse, R=r)


def _factors_of(matrix: MatrixK, rcf: Optional[RcfResult]) -> Tuple[Polynomial, ...]:
    return rcf.factors if rcf is not None else invariant_factors(matrix)


def characteristic_polynomial(matrix: MatrixK, rcf: Optional[RcfResult] = None) -> Polynomial:
    """Product of the invariant factors; pass ``rcf`` to skip the Smith form."""
    factors = _factors_of(matrix, rcf)
    return reduce(lambda a, b: a * b, factors, Polynomial.one(matrix.spec))


def minimal_polynomial(matrix: MatrixK, rcf: Optional[RcfResult] = None) -> Polynomial:
    return _factors_of(matrix, rcf)[-1]


def is_cyclic(matrix: MatrixK, rcf: Optional[RcfResult] = None) -> bool:
    """True iff A has a single invariant factor (char poly == min poly)."""
    return len(_factors_of(matrix, rcf)) == 1


def similarity_transform(
    matrix: MatrixK,
    target: MatrixK,
    source_form: Optional[RcfResult] = None,
    target_form: Optional[RcfResult] = None,
) -> Optional[MatrixK]:
    """
    P with P A P^-1 = target, or None if the two matrices are not similar.

    Args:
        matrix (MatrixK): Source matrix A.
        target (MatrixK): Matrix of the same size and field.
        source_form (Optional[RcfResult]): Precomputed rcf_transform(matrix).
        target_form (Optional[RcfResult]): Precomputed rcf_transform(target).

    Raises:
        DimensionMismatch: If the sizes differ.
    """
    matrix.spec.check_same(target.spec)
    if matrix.shape != target.shape:
        raise DimensionMismatch("similar matrices have equal sizes")
    if source_form is None:
        source_form = rcf_transform(matrix)
    if target_form is None:
        target_form = rcf_transform(target)
    if source_form.factors != target_form.factors:
        return None
    return target_form.P @ source_form.P_inverse
