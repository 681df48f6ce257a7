"""
Brute-force cross-checks for the Smith and centralizer pipelines.

Nothing here touches smith, rcf or centralizer; only the field, polynomial
and matrix primitives are shared.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Sequence

from centrex.algebra.errors import NonSquare, ShapeMismatch, SingularInput
from centrex.algebra.matrix import MatrixK, intertwiner_kernel, row_space_basis
from centrex.algebra.poly import Polynomial, p_divrem, p_gcd_monic
from centrex.algebra.poly_matrix import MatrixPoly


def commutant_kernel_basis(matrix: MatrixK) -> List[MatrixK]:
    """Kernel of X -> XA - AX on vectorized X, reshaped into matrices."""
    return intertwiner_kernel(matrix, matrix)


def minor_gcd_invariants(matrix: MatrixPoly) -> List[Polynomial]:
    """
    Invariant factors from determinantal divisors.

    Delta_i is the monic gcd of all i x i minors and d_i = Delta_i / Delta_(i-1).
    The minor count grows combinatorially, so keep n small (n <= 5).

    Args:
        matrix (MatrixPoly): Square polynomial matrix with nonzero determinant.

    Returns:
        List[Polynomial]: d_1, ..., d_n including constant ones.

    Raises:
        SingularInput: If det M == 0.
    """
    if matrix.rows != matrix.cols:
        raise NonSquare("determinantal divisors need a square matrix")
    n = matrix.rows
    spec = matrix.spec
    deltas = [Polynomial.one(spec)]
    for size in range(1, n + 1):
        g = Polynomial.zero(spec)
        for rows in combinations(range(n), size):
            for cols in combinations(range(n), size):
                minor = matrix.minor(rows, cols)
                if minor.is_zero():
                    continue
                g = minor.monic() if g.is_zero() else p_gcd_monic(g, minor)
                if g.is_unit():
                    break
            if g.is_unit():
                break
        if g.is_zero():
            raise SingularInput("determinant is zero")
        deltas.append(g)
    return [p_divrem(deltas[i], deltas[i - 1])[0] for i in range(1, n + 1)]


def span_equal(first: Sequence[MatrixK], second: Sequence[MatrixK]) -> bool:
    """
    True iff the two families span the same subspace.

    Raises:
        ShapeMismatch: If the matrices do not all share one shape.
    """
    shapes = {m.shape for m in list(first) + list(second)}
    if len(shapes) > 1:
        raise ShapeMismatch(f"mixed shapes {sorted(shapes)}")
    return row_space_basis(first) == row_space_basis(second)
