"""
Random test data built on a seeded Faker instance.
"""

from fractions import Fraction
from functools import reduce
from typing import List, Sequence

from faker import Faker

from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import MatrixK, companion, direct_sum
from centrex.algebra.poly import Polynomial
from centrex.algebra.poly_matrix import MatrixPoly

SMALL_PRIMES = (2, 3, 5, 7, 11)


def random_scalar(fake: Faker, spec: FieldSpec):
    if spec.is_prime_field:
        return fake.random_int(0, spec.modulus - 1)
    return spec.reduce(fake.random_int(-5, 5))


def random_field_value(fake: Faker, spec: FieldSpec):
    """Any element of a prime field, or a fraction with small numerator and denominator."""
    if spec.is_prime_field:
        return fake.random_int(0, spec.modulus - 1)
    return Fraction(fake.random_int(-30, 30), fake.random_int(1, 12))


def random_matrix(fake: Faker, spec: FieldSpec, rows: int, cols: int = None) -> MatrixK:
    cols = rows if cols is None else cols
    return MatrixK(
        spec, [[random_scalar(fake, spec) for _ in range(cols)] for _ in range(rows)]
    )


def random_invertible(fake: Faker, spec: FieldSpec, n: int) -> MatrixK:
    while True:
        candidate = random_matrix(fake, spec, n)
        if candidate.is_invertible():
            return candidate


def random_poly(fake: Faker, spec: FieldSpec, max_degree: int) -> Polynomial:
    degree = fake.random_int(-1, max_degree)
    return Polynomial(spec, [random_scalar(fake, spec) for _ in range(degree + 1)])


def random_monic(fake: Faker, spec: FieldSpec, degree: int) -> Polynomial:
    coeffs = [random_scalar(fake, spec) for _ in range(degree)] + [1]
    return Polynomial(spec, coeffs)


def random_poly_matrix(
    fake: Faker, spec: FieldSpec, rows: int, cols: int, max_degree: int
) -> MatrixPoly:
    return MatrixPoly(
        spec,
        [[random_poly(fake, spec, max_degree) for _ in range(cols)] for _ in range(rows)],
    )


def random_chain(fake: Faker, spec: FieldSpec, size: int) -> List[Polynomial]:
    """Monic f_1 | f_2 | ... with degrees summing to size."""
    degrees = []
    remaining = size
    while remaining > 0:
        part = fake.random_int(1, remaining)
        degrees.append(part)
        remaining -= part
    degrees.sort()
    chain = [random_monic(fake, spec, degrees[0])]
    for previous, current in zip(degrees, degrees[1:]):
        chain.append(chain[-1] * random_monic(fake, spec, current - previous))
    return chain


def block_companion(factors: Sequence[Polynomial]) -> MatrixK:
    return reduce(direct_sum, [companion(f) for f in factors])


def random_test_matrix(fake: Faker, spec: FieldSpec, n: int) -> MatrixK:
    """
    A random n x n matrix; half of the draws are conjugated canonical forms
    so that several invariant factors show up regularly.
    """
    if fake.boolean():
        return random_matrix(fake, spec, n)
    # a chain with deg sum n, then a random similarity
    chain = random_chain(fake, spec, n)
    s = random_invertible(fake, spec, n)
    return s @ block_companion(chain) @ s.inverse()


def random_prime_spec(fake: Faker) -> FieldSpec:
    return FieldSpec.prime(fake.random_element(SMALL_PRIMES))
