"""
Matrices over k[x].
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from centrex.algebra.errors import DimensionMismatch, NonSquare
from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import MatrixK
from centrex.algebra.poly import Polynomial


class MatrixPoly:
    """A dense rows x cols matrix of Polynomials sharing one FieldSpec."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, entries: Sequence[Sequence[Polynomial]]):
        grid = tuple(tuple(row) for row in entries)
        if not grid or not grid[0]:
            raise DimensionMismatch("matrices must have at least one row and column")
        width = len(grid[0])
        for row in grid:
            if len(row) != width:
                raise DimensionMismatch("ragged matrix rows")
            for entry in row:
                spec.check_same(entry.spec)
        self.spec = spec
        self.rows = len(grid)
        self.cols = width
        self.entries: Tuple[Tuple[Polynomial, ...], ...] = grid

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MatrixPoly:
        one, zero = Polynomial.one(spec), Polynomial.zero(spec)
        return cls(spec, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, spec: FieldSpec, rows: int, cols: int) -> MatrixPoly:
        zero = Polynomial.zero(spec)
        return cls(spec, [[zero] * cols for _ in range(rows)])

    @classmethod
    def diagonal(
        cls, spec: FieldSpec, diag: Sequence[Polynomial], rows: int, cols: int
    ) -> MatrixPoly:
        """rows x cols matrix with diag on the main diagonal."""
        zero = Polynomial.zero(spec)
        grid = [[zero] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            grid[i][i] = d
        return cls(spec, grid)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Polynomial:
        i, j = index
        return self.entries[i][j]

    def column_at(self, j: int) -> List[Polynomial]:
        return [row[j] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixPoly):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.spec, self.entries))

    def __matmul__(self, other: MatrixPoly) -> MatrixPoly:
        self.spec.check_same(other.spec)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = Polynomial.zero(self.spec)
        grid = []
        for row in self.entries:
            out_row = []
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(row):
                    if not a.is_zero():
                        acc = acc + a * other.entries[k][j]
                out_row.append(acc)
            grid.append(out_row)
        return MatrixPoly(self.spec, grid)

    def minor(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> Polynomial:
        """Determinant of the submatrix on the given rows and columns."""
        if len(row_indices) != len(col_indices):
            raise NonSquare("minors are taken on square submatrices")
        return _cofactor_det(self.entries, list(row_indices), list(col_indices), self.spec)

    def determinant(self) -> Polynomial:
        """
        Determinant by cofactor expansion.

        This is exponential in n and intended for n <= 6.
        """
        if self.rows != self.cols:
            raise NonSquare("only square matrices have determinants")
        return self.minor(range(self.rows), range(self.cols))

    def to_strings(self) -> List[List[List[str]]]:
        return [[p.to_strings() for p in row] for row in self.entries]

    def pretty(self) -> str:
        cells = [[p.pretty() for p in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def __repr__(self) -> str:
        return f"MatrixPoly({self.spec.name}, {self.rows}x{self.cols})"


def _cofactor_det(
    grid: Sequence[Sequence[Polynomial]],
    rows: List[int],
    cols: List[int],
    spec: FieldSpec,
) -> Polynomial:
    if len(rows) == 1:
        return grid[rows[0]][cols[0]]
    total = Polynomial.zero(spec)
    top, rest = rows[0], rows[1:]
    for k, col in enumerate(cols):
        entry = grid[top][col]
        if entry.is_zero():
            continue
        sub = _cofactor_det(grid, rest, cols[:k] + cols[k + 1 :], spec)
        term = entry * sub
        total = total - term if k % 2 else total + term
    return total


def char_matrix(matrix: MatrixK) -> MatrixPoly:
    """
    The characteristic matrix xI - A.

    Raises:
        NonSquare: If the matrix is not square.
    """
    if not matrix.is_square:
        raise NonSquare("characteristic matrices need a square input")
    spec = matrix.spec
    grid = []
    for i, row in enumerate(matrix.entries):
        out_row = []
        for j, a in enumerate(row):
            coeffs = [spec.neg(a), spec.one] if i == j else [spec.neg(a)]
            out_row.append(Polynomial._raw(spec, coeffs))
        grid.append(out_row)
    return MatrixPoly(spec, grid)
