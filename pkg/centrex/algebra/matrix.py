"""
Dense exact matrices over a field.

MatrixK is immutable; entries are raw field values (see centrex.algebra.field)
stored row-major as a tuple of tuples. Column vectors are n x 1 matrices.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, List, Sequence, Tuple, Union

from centrex.algebra.errors import (
    DegreeZero,
    DimensionMismatch,
    NonSquare,
    NotMonic,
    ShapeMismatch,
    Singular,
)
from centrex.algebra.field import FieldScalar, FieldSpec, Raw

if TYPE_CHECKING:
    from centrex.algebra.poly import Polynomial

Rows = List[List[Raw]]


class MatrixK:
    """A dense rows x cols matrix over a FieldSpec."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, entries: Sequence[Sequence[Union[Raw, int]]]):
        grid = tuple(tuple(spec.reduce(v) for v in row) for row in entries)
        if not grid or not grid[0]:
            raise DimensionMismatch("matrices must have at least one row and column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionMismatch("ragged matrix rows")
        self.spec = spec
        self.rows = len(grid)
        self.cols = width
        self.entries: Tuple[Tuple[Raw, ...], ...] = grid

    @classmethod
    def _raw(cls, spec: FieldSpec, rows: Sequence[Sequence[Raw]]) -> MatrixK:
        """Build from canonical values without re-reducing."""
        matrix = cls.__new__(cls)
        matrix.spec = spec
        matrix.entries = tuple(tuple(row) for row in rows)
        matrix.rows = len(matrix.entries)
        matrix.cols = len(matrix.entries[0])
        return matrix

    @classmethod
    def from_ints(cls, spec: FieldSpec, rows: Sequence[Sequence[int]]) -> MatrixK:
        return cls(spec, rows)

    @classmethod
    def zero(cls, spec: FieldSpec, rows: int, cols: int) -> MatrixK:
        return cls._raw(spec, [[spec.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MatrixK:
        grid = [[spec.zero] * n for _ in range(n)]
        for i in range(n):
            grid[i][i] = spec.one
        return cls._raw(spec, grid)

    @classmethod
    def column(cls, spec: FieldSpec, values: Iterable[Union[Raw, int]]) -> MatrixK:
        return cls(spec, [[v] for v in values])

    @classmethod
    def from_columns(cls, columns: Sequence[MatrixK]) -> MatrixK:
        """Place n x 1 column vectors side by side."""
        spec = columns[0].spec
        height = columns[0].rows
        for col in columns:
            spec.check_same(col.spec)
            if col.cols != 1 or col.rows != height:
                raise DimensionMismatch("from_columns expects equal-length columns")
        return cls._raw(
            spec, [[col.entries[i][0] for col in columns] for i in range(height)]
        )

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Raw:
        i, j = index
        return self.entries[i][j]

    def scalar(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(self.spec, self.entries[i][j])

    def column_at(self, j: int) -> MatrixK:
        return MatrixK._raw(self.spec, [[row[j]] for row in self.entries])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixK):
            return NotImplemented
        return self.spec == other.spec and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.spec, self.entries))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _finish(self, rows: Rows) -> MatrixK:
        if self.spec.is_prime_field:
            p = self.spec.modulus
            rows = [[v % p for v in row] for row in rows]
        return MatrixK._raw(self.spec, rows)

    def _check_same_shape(self, other: MatrixK) -> None:
        self.spec.check_same(other.spec)
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: MatrixK) -> MatrixK:
        self._check_same_shape(other)
        return self._finish(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: MatrixK) -> MatrixK:
        self._check_same_shape(other)
        return self._finish(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> MatrixK:
        return self._finish([[-a for a in row] for row in self.entries])

    def scale(self, c: Raw) -> MatrixK:
        return self._finish([[c * a for a in row] for row in self.entries])

    def __matmul__(self, other: MatrixK) -> MatrixK:
        self.spec.check_same(other.spec)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = self.spec.zero
        right = other.entries
        out: Rows = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a:
                    acc = [x + a * b for x, b in zip(acc, right[k])]
            out.append(acc)
        return self._finish(out)

    def transpose(self) -> MatrixK:
        return MatrixK._raw(self.spec, [list(col) for col in zip(*self.entries)])

    def power(self, k: int) -> MatrixK:
        if not self.is_square:
            raise NonSquare("only square matrices have powers")
        result = MatrixK.identity(self.spec, self.rows)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rank(self) -> int:
        return len(_rref_rows(self.spec, _copy_rows(self), self.cols)[1])

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def inverse(self) -> MatrixK:
        return m_inverse(self)

    # ------------------------------------------------------------------
    # Text forms
    # ------------------------------------------------------------------

    def to_strings(self) -> List[List[str]]:
        fmt = self.spec.format_scalar
        return [[fmt(v) for v in row] for row in self.entries]

    def pretty(self) -> str:
        """Aligned, whitespace-separated rows."""
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    def __repr__(self) -> str:
        return f"MatrixK({self.spec.name}, {self.to_strings()})"


def _copy_rows(matrix: MatrixK) -> Rows:
    return [list(row) for row in matrix.entries]


def _rref_rows(spec: FieldSpec, rows: Rows, ncols: int) -> Tuple[Rows, List[int]]:
    """
    In-place Gauss-Jordan reduction; returns (rows, pivot columns).

    The pivot in each column is the first nonzero entry at or below the
    current row.
    """
    prime = spec.modulus if spec.is_prime_field else None
    nrows = len(rows)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = spec.inv(rows[r][c])
        if prime:
            lead = [v * inv % prime for v in rows[r]]
        else:
            lead = [v * inv for v in rows[r]]
        rows[r] = lead
        for i in range(nrows):
            factor = rows[i][c]
            if i == r or not factor:
                continue
            if prime:
                rows[i] = [(x - factor * y) % prime for x, y in zip(rows[i], lead)]
            else:
                rows[i] = [x - factor * y for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
    return rows, pivots


def _kernel_from_rref(
    spec: FieldSpec, rows: Rows, pivots: List[int], ncols: int
) -> List[List[Raw]]:
    pivot_set = set(pivots)
    basis: List[List[Raw]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [spec.zero] * ncols
        vector[free] = spec.one
        for row_index, pc in enumerate(pivots):
            vector[pc] = spec.neg(rows[row_index][free])
        basis.append(vector)
    return basis


def rref_kernel(matrix: MatrixK) -> Tuple[MatrixK, List[MatrixK]]:
    """
    Reduced row echelon form and a kernel basis.

    Each kernel generator has a one in exactly one free column, so
    rank + len(kernel) == cols.

    Args:
        matrix (MatrixK): Any matrix.

    Returns:
        Tuple[MatrixK, List[MatrixK]]: The rref and kernel column vectors.
    """
    spec = matrix.spec
    rows, pivots = _rref_rows(spec, _copy_rows(matrix), matrix.cols)
    kernel = _kernel_from_rref(spec, rows, pivots, matrix.cols)
    return MatrixK._raw(spec, rows), [MatrixK._raw(spec, [[v] for v in k]) for k in kernel]


def m_inverse(matrix: MatrixK) -> MatrixK:
    """
    Inverse by Gauss-Jordan elimination on [A | I].

    Raises:
        NonSquare: If the matrix is not square.
        Singular: If the matrix has no inverse.
    """
    if not matrix.is_square:
        raise NonSquare("only square matrices can be inverted")
    spec = matrix.spec
    n = matrix.rows
    augmented = [
        list(row) + [spec.one if i == j else spec.zero for j in range(n)]
        for i, row in enumerate(matrix.entries)
    ]
    rows, pivots = _rref_rows(spec, augmented, n)
    if len(pivots) < n:
        raise Singular("matrix is singular")
    return MatrixK._raw(spec, [row[n:] for row in rows])


def companion(f: Polynomial) -> MatrixK:
    """
    Companion matrix: ones on the subdiagonal and -c_0 ... -c_{n-1} in the
    last column.

    Raises:
        NotMonic: If f is not monic.
        DegreeZero: If f is constant.
    """
    if f.is_zero() or f.degree < 1:
        raise DegreeZero("companion matrices need deg f >= 1")
    if not f.is_monic():
        raise NotMonic(f"{f.pretty()} is not monic")
    spec = f.spec
    n = int(f.degree)
    grid = [[spec.zero] * n for _ in range(n)]
    for i in range(1, n):
        grid[i][i - 1] = spec.one
    for i in range(n):
        grid[i][n - 1] = spec.neg(f.coeffs[i])
    return MatrixK._raw(spec, grid)


def direct_sum(a: MatrixK, b: MatrixK) -> MatrixK:
    """Block-diagonal matrix with blocks a and b."""
    a.spec.check_same(b.spec)
    if not (a.is_square and b.is_square):
        raise NonSquare("direct sums are formed from square matrices")
    zero = a.spec.zero
    n, m = a.rows, b.rows
    grid = [list(row) + [zero] * m for row in a.entries]
    grid += [[zero] * n + list(row) for row in b.entries]
    return MatrixK._raw(a.spec, grid)


def embed_block(
    block: MatrixK, rows: int, cols: int, row_offset: int, col_offset: int
) -> MatrixK:
    """A rows x cols zero matrix with block placed at the given offsets."""
    if row_offset + block.rows > rows or col_offset + block.cols > cols:
        raise DimensionMismatch("block does not fit")
    spec = block.spec
    grid = [[spec.zero] * cols for _ in range(rows)]
    for i, row in enumerate(block.entries):
        grid[row_offset + i][col_offset : col_offset + block.cols] = row
    return MatrixK._raw(spec, grid)


def vectorize(matrix: MatrixK) -> MatrixK:
    """Row-major flattening into a (rows*cols) x 1 column."""
    return MatrixK._raw(matrix.spec, [[v] for row in matrix.entries for v in row])


def devectorize(vector: MatrixK, rows: int, cols: int) -> MatrixK:
    """Inverse of vectorize."""
    if vector.cols != 1 or vector.rows != rows * cols:
        raise DimensionMismatch(
            f"a {vector.rows}x{vector.cols} vector does not reshape to {rows}x{cols}"
        )
    flat = [row[0] for row in vector.entries]
    return MatrixK._raw(vector.spec, [flat[i * cols : (i + 1) * cols] for i in range(rows)])


def row_space_basis(matrices: Sequence[MatrixK]) -> List[MatrixK]:
    """
    Canonical basis of the span of equally shaped matrices.

    The matrices are vectorized, stacked, row reduced, and the nonzero rref
    rows reshaped back. Two families span the same space iff their results
    are equal.
    """
    if not matrices:
        return []
    first = matrices[0]
    for m in matrices:
        first.spec.check_same(m.spec)
        if m.shape != first.shape:
            raise ShapeMismatch(f"shapes {first.shape} and {m.shape} differ")
    stack = [[v for row in m.entries for v in row] for m in matrices]
    rows, pivots = _rref_rows(first.spec, stack, first.rows * first.cols)
    width = first.cols
    return [
        MatrixK._raw(first.spec, [row[i * width : (i + 1) * width] for i in range(first.rows)])
        for row in rows[: len(pivots)]
    ]


def intertwiner_kernel(a: MatrixK, a_prime: MatrixK) -> List[MatrixK]:
    """
    Basis of {U : U*a == a_prime*U}, solved as a linear system in vec(U).

    The coefficient of U[p][q] in entry (i, j) of U*a - a_prime*U is
    [p == i]*a[q][j] - [q == j]*a_prime[i][p].
    """
    a.spec.check_same(a_prime.spec)
    if not (a.is_square and a_prime.is_square) or a.rows != a_prime.rows:
        raise DimensionMismatch("intertwiners need square matrices of equal size")
    spec = a.spec
    n = a.rows
    system: Rows = []
    for i in range(n):
        for j in range(n):
            row = [spec.zero] * (n * n)
            for q in range(n):
                row[i * n + q] = spec.add(row[i * n + q], a.entries[q][j])
            for p in range(n):
                row[p * n + j] = spec.sub(row[p * n + j], a_prime.entries[i][p])
            system.append(row)
    rows, pivots = _rref_rows(spec, system, n * n)
    kernel = _kernel_from_rref(spec, rows, pivots, n * n)
    return [MatrixK._raw(spec, [k[r * n : (r + 1) * n] for r in range(n)]) for k in kernel]


def span_contains(basis: Sequence[MatrixK], candidate: MatrixK) -> bool:
    """True iff candidate lies in the span of basis."""
    if not basis:
        return candidate.is_zero()
    return len(row_space_basis(list(basis) + [candidate])) == len(
        row_space_basis(basis)
    )

