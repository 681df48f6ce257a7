"""
Smith Normal Form over k[x] with unimodular transforms.

The input M is rewritten as M = gamma1 * D * gamma2. Every elementary row
operation applied to the working copy of M is mirrored as the inverse
column operation on gamma1, and every column operation as the inverse row
operation on gamma2, so the identity holds after each step and no
polynomial matrix is ever inverted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from centrex.algebra.field import Raw
from centrex.algebra.poly import Polynomial, p_divrem
from centrex.algebra.poly_matrix import MatrixPoly

logger = logging.getLogger(__name__)

Grid = List[List[Polynomial]]


@dataclass(frozen=True)
class SnfResult:
    """
    M = gamma1 * diag * gamma2 with a monic divisibility chain on diag.

    gamma2 is None only when produced by snf_left.
    """

    gamma1: MatrixPoly
    diag: Tuple[Polynomial, ...]
    gamma2: Optional[MatrixPoly]
    rows: int
    cols: int

    def diagonal_matrix(self) -> MatrixPoly:
        return MatrixPoly.diagonal(self.gamma1.spec, self.diag, self.rows, self.cols)

    def reconstruct(self) -> MatrixPoly:
        if self.gamma2 is None:
            raise ValueError("gamma2 was not tracked for this result")
        return self.gamma1 @ self.diagonal_matrix() @ self.gamma2

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if not d.is_zero())


def _identity_grid(spec, n: int) -> Grid:
    one, zero = Polynomial.one(spec), Polynomial.zero(spec)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


class _SmithEngine:
    """Working state of one Smith reduction."""

    def __init__(self, matrix: MatrixPoly, track_right: bool = True):
        self.spec = matrix.spec
        self.m: Grid = [list(row) for row in matrix.entries]
        self.nrows = matrix.rows
        self.ncols = matrix.cols
        self.left: Grid = _identity_grid(self.spec, self.nrows)
        self.right: Optional[Grid] = (
            _identity_grid(self.spec, self.ncols) if track_right else None
        )
        self.one = Polynomial.one(self.spec)
        self.operations = 0

    # ------------------------------------------------------------------
    # Elementary operations
    # ------------------------------------------------------------------

    def add_row(self, target: int, source: int, factor: Polynomial) -> None:
        """row[target] += factor * row[source]; gamma1 col[source] -= factor * col[target]."""
        if factor.is_zero():
            return
        self.operations += 1
        src, dst = self.m[source], self.m[target]
        for j, s in enumerate(src):
            if not s.is_zero():
                dst[j] = dst[j] + factor * s
        for row in self.left:
            t = row[target]
            if not t.is_zero():
                row[source] = row[source] - factor * t

    def add_col(self, target: int, source: int, factor: Polynomial) -> None:
        """col[target] += factor * col[source]; gamma2 row[source] -= factor * row[target]."""
        if factor.is_zero():
            return
        self.operations += 1
        for row in self.m:
            s = row[source]
            if not s.is_zero():
                row[target] = row[target] + factor * s
        if self.right is not None:
            src, dst = self.right[target], self.right[source]
            for j, t in enumerate(src):
                if not t.is_zero():
                    dst[j] = dst[j] - factor * t

    def swap_rows(self, i: int, j: int) -> None:
        self.operations += 1
        self.m[i], self.m[j] = self.m[j], self.m[i]
        for row in self.left:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i: int, j: int) -> None:
        self.operations += 1
        for row in self.m:
            row[i], row[j] = row[j], row[i]
        if self.right is not None:
            self.right[i], self.right[j] = self.right[j], self.right[i]

    def scale_row(self, i: int, unit: Raw) -> None:
        """row[i] *= unit; gamma1 col[i] *= unit^-1."""
        self.operations += 1
        self.m[i] = [p.scale(unit) for p in self.m[i]]
        inverse = self.spec.inv(unit)
        for row in self.left:
            row[i] = row[i].scale(inverse)

    # ------------------------------------------------------------------
    # Reduction
    # ------------------------------------------------------------------

    def _pick_pivot(
        self, rows: Sequence[int], cols: Sequence[int]
    ) -> Optional[Tuple[int, int]]:
        best = None
        best_key = None
        for r in rows:
            row = self.m[r]
            for c in cols:
                entry = row[c]
                if entry.is_zero():
                    continue
                key = (entry.degree, r, c)
                if best_key is None or key < best_key:
                    best, best_key = (r, c), key
                    if entry.degree == 0 and r == rows[0]:
                        return best
        return best

    def eliminate(self, pos: int, rows: Sequence[int], cols: Sequence[int]) -> bool:
        """
        Reduce the active block so that (pos, pos) holds an entry dividing
        every other active entry and the rest of row and column pos is zero.

        Returns False when the active block is entirely zero.
        """
        while True:
            found = self._pick_pivot(rows, cols)
            if found is None:
                return False
            r, c = found
            if r != pos:
                self.swap_rows(pos, r)
            if c != pos:
                self.swap_cols(pos, c)
            pivot = self.m[pos][pos]
            clean = True
            for r in rows:
                entry = self.m[r][pos]
                if r == pos or entry.is_zero():
                    continue
                quotient, remainder = p_divrem(entry, pivot)
                self.add_row(r, pos, -quotient)
                if not remainder.is_zero():
                    clean = False
            for c in cols:
                entry = self.m[pos][c]
                if c == pos or entry.is_zero():
                    continue
                quotient, remainder = p_divrem(entry, pivot)
                self.add_col(c, pos, -quotient)
                if not remainder.is_zero():
                    clean = False
            if not clean:
                continue
            if pivot.is_unit():
                return True
            offender = self._find_non_multiple(pos, pivot, rows, cols)
            if offender is None:
                return True
            self.add_row(pos, offender, self.one)

    def _find_non_multiple(
        self, pos: int, pivot: Polynomial, rows: Sequence[int], cols: Sequence[int]
    ) -> Optional[int]:
        for r in rows:
            if r == pos:
                continue
            for c in cols:
                entry = self.m[r][c]
                if c != pos and not entry.is_zero():
                    if not p_divrem(entry, pivot)[1].is_zero():
                        return r
        return None

    def normalize(self, i: int) -> None:
        entry = self.m[i][i]
        if not entry.is_zero() and not entry.is_monic():
            self.scale_row(i, self.spec.inv(entry.leading))

    def enforce_chain(self, length: int) -> None:
        """
        Replace adjacent (d_i, d_j) by (gcd, lcm) until d_i | d_j everywhere.

        After eliminate every pivot already divides the rest of its block, so
        within run() this finds nothing to change. It matters for diagonals
        that did not come out of eliminate.
        """
        changed = True
        while changed:
            changed = False
            for i in range(length - 1):
                a, b = self.m[i][i], self.m[i + 1][i + 1]
                if a.is_zero() or b.is_zero():
                    continue
                if p_divrem(b, a)[1].is_zero():
                    continue
                self.add_row(i, i + 1, self.one)
                self.eliminate(i, [i, i + 1], [i, i + 1])
                self.normalize(i)
                self.normalize(i + 1)
                changed = True

    def run(self) -> Tuple[Polynomial, ...]:
        length = min(self.nrows, self.ncols)
        for t in range(length):
            if not self.eliminate(t, range(t, self.nrows), range(t, self.ncols)):
                break
        for t in range(length):
            self.normalize(t)
        self.enforce_chain(length)
        return tuple(self.m[t][t] for t in range(length))


def _reduce(matrix: MatrixPoly, track_right: bool) -> SnfResult:
    engine = _SmithEngine(matrix, track_right=track_right)
    diag = engine.run()
    logger.debug(
        "smith form of %dx%d matrix after %d elementary operations",
        matrix.rows,
        matrix.cols,
        engine.operations,
    )
    return SnfResult(
        gamma1=MatrixPoly(matrix.spec, engine.left),
        diag=diag,
        gamma2=(
            MatrixPoly(matrix.spec, engine.right) if engine.right is not None else None
        ),
        rows=matrix.rows,
        cols=matrix.cols,
    )


def snf(matrix: MatrixPoly) -> SnfResult:
    """
    Smith Normal Form with both transforms.

    Pivots are minimal-degree nonzero entries, ties broken by the smallest
    (row, col). Diagonal entries are monic (or zero, trailing) and form a
    divisibility chain.

    Args:
        matrix (MatrixPoly): Any rectangular polynomial matrix.

    Returns:
        SnfResult: gamma1, diag, gamma2 with matrix == gamma1 * D * gamma2.
    """
    return _reduce(matrix, track_right=True)


def snf_left(matrix: MatrixPoly) -> SnfResult:
    """Same as snf but without accumulating gamma2 (left as None)."""
    return _reduce(matrix, track_right=False)
