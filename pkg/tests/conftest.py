"""
Shared test fixtures for Centrex tests.

This module contains pytest fixtures that are shared across all test modules:
fields, the worked GF(2) and GF(5) examples, seeded random data and
temporary input documents.
"""

from pathlib import Path
from typing import Callable, List

import pytest
from faker import Faker

from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import MatrixK
from centrex.algebra.poly import Polynomial
from tests.helpers import block_companion

FAKER_SEED = 1729


# ============================================================================
# Fields
# ============================================================================


@pytest.fixture
def gf2() -> FieldSpec:
    return FieldSpec.prime(2)


@pytest.fixture
def gf5() -> FieldSpec:
    return FieldSpec.prime(5)


@pytest.fixture
def rationals() -> FieldSpec:
    return FieldSpec.rationals()


# ============================================================================
# Random data
# ============================================================================


@pytest.fixture
def fake() -> Faker:
    """A Faker instance reseeded for every test so random suites are reproducible."""
    generator = Faker()
    generator.seed_instance(FAKER_SEED)
    return generator


# ============================================================================
# Worked examples
# ============================================================================


@pytest.fixture
def chain_gf2(gf2) -> List[Polynomial]:
    """Invariant factors x^2+1 | x^3+x^2+x+1 over GF(2)."""
    return [Polynomial.from_ints(gf2, [1, 0, 1]), Polynomial.from_ints(gf2, [1, 1, 1, 1])]


@pytest.fixture
def block_matrix_gf2(chain_gf2) -> MatrixK:
    """C(x^2+1) + C(x^3+x^2+x+1), a 5x5 matrix over GF(2)."""
    return block_companion(chain_gf2)


@pytest.fixture
def matrix_gf5(gf5) -> MatrixK:
    return MatrixK.from_ints(gf5, [[0, 1, 3], [3, 2, 4], [0, 0, 4]])


@pytest.fixture
def printed_basis_gf5(gf5) -> List[MatrixK]:
    """A reference centralizer basis of matrix_gf5."""
    rows = [
        [[1, 3, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 2], [0, 0, 0], [0, 0, 0]],
        [[4, 2, 0], [2, 1, 0], [3, 4, 0]],
        [[0, 2, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 3], [0, 3, 4], [0, 0, 4]],
    ]
    return [MatrixK.from_ints(gf5, r) for r in rows]


# ============================================================================
# Input documents
# ============================================================================


GF5_DOCUMENT = "field 5\nmatrix A 3 3\n0 1 3\n3 2 4\n0 0 4\n"

GF2_DOCUMENT = """# C(x^2+1) + C(x^3+x^2+x+1)
field 2
matrix A 5 5
0 1 0 0 0
1 0 0 0 0
0 0 0 0 1
0 0 1 0 1
0 0 0 1 1
"""

INTERTWINE_DOCUMENT = """field 5
matrix A 2 2
1 1
0 1
matrix B 2 2
0 1
0 0
matrix Aprime 2 2
1 1
0 1
matrix Bprime 2 2
0 1
0 0
"""


@pytest.fixture
def write_document(tmp_path) -> Callable[[str], Path]:
    """Write document text to a temporary file and return its path."""

    def _write(text: str, name: str = "input.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
