"""
Explicit bases of matrix centralizers.

For R = C(f_1) + ... + C(f_m) with f_1 | ... | f_m, every commuting matrix
splits into blocks C_ij of shape deg f_i x deg f_j, and each block ranges
over lambda(C(f_i)) Q_ij where Q_ij is the generating matrix built from the
generating polynomial q_ij. A general A is handled by conjugating with the
rational canonical transform P.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from centrex.algebra.errors import DimensionMismatch, NonDivisible
from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import (
    MatrixK,
    companion,
    embed_block,
    row_space_basis,
)
from centrex.algebra.poly import Polynomial, p_divrem
from centrex.algebra.rcf import RcfResult, rcf_transform

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisElement:
    """One basis matrix with its block (1-based) and power provenance."""

    block_row: int
    block_col: int
    power: int
    matrix: MatrixK

    @property
    def block(self) -> Tuple[int, int]:
        return self.block_row, self.block_col


@dataclass(frozen=True)
class CentralizerBasis:
    spec: FieldSpec
    n: int
    elements: Tuple[BasisElement, ...]
    factors: Tuple[Polynomial, ...]

    @property
    def matrices(self) -> List[MatrixK]:
        return [e.matrix for e in self.elements]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _factor(factors: Sequence[Polynomial], index: int) -> Polynomial:
    if not 1 <= index <= len(factors):
        raise DimensionMismatch(f"factor index {index} outside 1..{len(factors)}")
    return factors[index - 1]


def _offsets(factors: Sequence[Polynomial]) -> List[int]:
    offsets = [0]
    for f in factors:
        offsets.append(offsets[-1] + int(f.degree))
    return offsets


def generating_polynomial(i: int, j: int, factors: Sequence[Polynomial]) -> Polynomial:
    """
    q_ij = 1 for i <= j and f_i / f_j for i > j (indices are 1-based).

    Raises:
        NonDivisible: If f_j does not divide f_i.
    """
    fi, fj = _factor(factors, i), _factor(factors, j)
    if i <= j:
        return Polynomial.one(fi.spec)
    quotient, remainder = p_divrem(fi, fj)
    if not remainder.is_zero():
        raise NonDivisible(f"{fj.pretty()} does not divide {fi.pretty()}")
    return quotient


def generating_vector(i: int, j: int, factors: Sequence[Polynomial]) -> MatrixK:
    """Coefficients of q_ij padded to length deg f_i, as a column (e_k <-> x^(k-1))."""
    fi = _factor(factors, i)
    q = generating_polynomial(i, j, factors)
    size = int(fi.degree)
    values = list(q.coeffs) + [fi.spec.zero] * (size - len(q.coeffs))
    return MatrixK._raw(fi.spec, [[v] for v in values])


def generating_matrix(i: int, j: int, factors: Sequence[Polynomial]) -> MatrixK:
    """Q_ij = [q_ij | C(f_i) q_ij | C(f_i)^2 q_ij | ...] with deg f_j columns."""
    fi, fj = _factor(factors, i), _factor(factors, j)
    block = companion(fi)
    column = generating_vector(i, j, factors)
    columns = []
    for _ in range(int(fj.degree)):
        columns.append(column)
        column = block @ column
    return MatrixK.from_columns(columns)


def rcf_centralizer_basis(factors: Sequence[Polynomial]) -> CentralizerBasis:
    """
    Basis of the centralizer of C(f_1) + ... + C(f_m).

    Block (i, j) contributes C(f_i)^t Q_ij for t < min(deg f_i, deg f_j);
    blocks run row-major, powers ascending.
    """
    factors = tuple(factors)
    spec = factors[0].spec
    offsets = _offsets(factors)
    n = offsets[-1]
    elements: List[BasisElement] = []
    for i in range(1, len(factors) + 1):
        block = companion(factors[i - 1])
        for j in range(1, len(factors) + 1):
            current = generating_matrix(i, j, factors)
            count = min(int(factors[i - 1].degree), int(factors[j - 1].degree))
            for t in range(count):
                elements.append(
                    BasisElement(
                        i, j, t, embed_block(current, n, n, offsets[i - 1], offsets[j - 1])
                    )
                )
                current = block @ current
    return CentralizerBasis(spec=spec, n=n, elements=tuple(elements), factors=factors)


def centralizer_basis(matrix: MatrixK, rcf: Optional[RcfResult] = None) -> CentralizerBasis:
    """
    Basis of {B : AB = BA}, the canonical-form basis conjugated by P.

    Conjugating C(f_i)^t Q_ij placed in block (i, j) gives
    A^t (P E_ij P^-1) where E_ij holds Q_ij, so each block needs one sandwich
    product and then one multiplication by A per power.

    Args:
        matrix (MatrixK): Square matrix.
        rcf (Optional[RcfResult]): Precomputed rcf_transform(matrix), if available.

    Returns:
        CentralizerBasis: Elements ordered as in rcf_centralizer_basis.
    """
    if rcf is None:
        rcf = rcf_transform(matrix)
    factors = rcf.factors
    offsets = _offsets(factors)
    p_cols = rcf.P.transpose().entries
    p_inv_rows = rcf.P_inverse.entries
    spec = matrix.spec
    elements: List[BasisElement] = []
    for i in range(1, len(factors) + 1):
        left = MatrixK._raw(
            spec, [list(c) for c in p_cols[offsets[i - 1] : offsets[i]]]
        ).transpose()
        for j in range(1, len(factors) + 1):
            right = MatrixK._raw(spec, p_inv_rows[offsets[j - 1] : offsets[j]])
            current = left @ generating_matrix(i, j, factors) @ right
            count = min(int(factors[i - 1].degree), int(factors[j - 1].degree))
            for t in range(count):
                elements.append(BasisElement(i, j, t, current))
                if t + 1 < count:
                    current = matrix @ current
    logger.debug("centralizer of %dx%d matrix has dimension %d", matrix.rows, matrix.cols, len(elements))
    return CentralizerBasis(
        spec=spec, n=matrix.rows, elements=tuple(elements), factors=factors
    )


def frobenius_dimension(factors: Sequence[Polynomial]) -> int:
    """Sum over all pairs (i, j) of min(deg f_i, deg f_j)."""
    degrees = [int(f.degree) for f in factors]
    return sum(min(a, b) for a in degrees for b in degrees)


def frobenius_dimension_closed_form(factors: Sequence[Polynomial]) -> int:
    """deg f_m + 3 deg f_(m-1) + 5 deg f_(m-2) + ..."""
    m = len(factors)
    return sum((2 * i + 1) * int(factors[m - 1 - i].degree) for i in range(m))


def polynomial_centralizer_basis(matrix: MatrixK) -> List[MatrixK]:
    """
    I, A, ..., A^(n-1).

    These span the centralizer exactly when A has a single invariant factor.
    """
    powers = [MatrixK.identity(matrix.spec, matrix.rows)]
    for _ in range(matrix.rows - 1):
        powers.append(powers[-1] @ matrix)
    return powers


def normalized_basis(basis: CentralizerBasis) -> List[MatrixK]:
    """rref-normalized basis of the same space, for display."""
    return row_space_basis(basis.matrices)
