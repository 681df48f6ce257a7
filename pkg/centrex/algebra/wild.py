"""
Intertwiner spaces for the weak form of the wild problem.

Given pairs (A, B) and (A', B'), find every U with UA = A'U and UB = B'U.
When A and A' are similar the one-sided space is the coset P C(A) with
P A P^-1 = A'; otherwise it falls back to a direct kernel computation.
Whether the final space holds an invertible element is only tested by
random sampling.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from centrex.algebra.centralizer import centralizer_basis
from centrex.algebra.errors import EmptySpace, SizeMismatch, Singular, UnsupportedField
from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import (
    MatrixK,
    intertwiner_kernel,
    m_inverse,
    rref_kernel,
)
from centrex.algebra.rcf import rcf_transform, similarity_transform

logger = logging.getLogger(__name__)


class IntertwinerMethod(str, Enum):
    COSET_VIA_RCF = "coset_via_rcf"
    BRUTE_KERNEL = "brute_kernel"


@dataclass(frozen=True)
class IntertwinerSpace:
    """A linearly independent basis of an intertwiner space and how it was found."""

    spec: FieldSpec
    n: int
    basis: Tuple[MatrixK, ...]
    method: IntertwinerMethod

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _check_pair(a: MatrixK, a_prime: MatrixK) -> None:
    a.spec.check_same(a_prime.spec)
    if not (a.is_square and a_prime.is_square) or a.rows != a_prime.rows:
        raise SizeMismatch(
            f"need square matrices of one size, got {a.shape} and {a_prime.shape}"
        )


def one_sided_intertwiners(a: MatrixK, a_prime: MatrixK) -> IntertwinerSpace:
    """
    Basis of {U : U A = A' U}.

    Args:
        a (MatrixK): Source matrix.
        a_prime (MatrixK): Target matrix of the same size.

    Returns:
        IntertwinerSpace: P C(A) for similar inputs, the brute kernel otherwise.

    Raises:
        SizeMismatch: If the matrices are not square of one size.
    """
    _check_pair(a, a_prime)
    source = rcf_transform(a)
    p = similarity_transform(a, a_prime, source, rcf_transform(a_prime))
    if p is not None:
        # P A P^-1 = A' and U = P E with E A = A E gives U A = A' U
        basis = tuple(p @ e.matrix for e in centralizer_basis(a, source).elements)
        method = IntertwinerMethod.COSET_VIA_RCF
    else:
        basis = tuple(intertwiner_kernel(a, a_prime))
        method = IntertwinerMethod.BRUTE_KERNEL
    logger.debug("one-sided intertwiners: dimension %d via %s", len(basis), method.value)
    return IntertwinerSpace(spec=a.spec, n=a.rows, basis=basis, method=method)


def _intersect(
    first: Tuple[MatrixK, ...], second: Tuple[MatrixK, ...], spec: FieldSpec, n: int
) -> List[MatrixK]:
    if not first or not second:
        return []
    # columns vec(U_1), ..., vec(U_k), -vec(V_1), ..., -vec(V_l)
    system = [
        [u.entries[r // n][r % n] for u in first]
        + [spec.neg(v.entries[r // n][r % n]) for v in second]
        for r in range(n * n)
    ]
    _, kernel = rref_kernel(MatrixK._raw(spec, system))
    k = len(first)
    result = []
    for vector in kernel:
        coefficients = [vector.entries[i][0] for i in range(k)]
        total = MatrixK.zero(spec, n, n)
        for c, u in zip(coefficients, first):
            if c:
                total = total + u.scale(c)
        result.append(total)
    return result


def simultaneous_intertwiners(
    a: MatrixK, b: MatrixK, a_prime: MatrixK, b_prime: MatrixK
) -> IntertwinerSpace:
    """
    Basis of {U : U A = A' U and U B = B' U}.

    The two one-sided spaces are intersected through the kernel of
    [vec basis1 | -vec basis2]; the basis1 coefficients of each kernel
    vector recombine into one intersection element.

    Raises:
        SizeMismatch: If the four matrices are not square of one size.
    """
    _check_pair(a, a_prime)
    _check_pair(b, b_prime)
    _check_pair(a, b)
    left = one_sided_intertwiners(a, a_prime)
    right = one_sided_intertwiners(b, b_prime)
    basis = _intersect(left.basis, right.basis, a.spec, a.rows)
    both_coset = (
        left.method is IntertwinerMethod.COSET_VIA_RCF
        and right.method is IntertwinerMethod.COSET_VIA_RCF
    )
    method = IntertwinerMethod.COSET_VIA_RCF if both_coset else IntertwinerMethod.BRUTE_KERNEL
    logger.debug(
        "simultaneous intertwiners: %d and %d intersect in dimension %d",
        left.dimension,
        right.dimension,
        len(basis),
    )
    return IntertwinerSpace(spec=a.spec, n=a.rows, basis=tuple(basis), method=method)


def invertible_witness_search(
    space: IntertwinerSpace, trials: int, seed: int = 0
) -> Optional[MatrixK]:
    """
    Look for an invertible element by sampling random combinations.

    A None result means no witness was found, not that none exists.

    Args:
        space (IntertwinerSpace): Space over a prime field.
        trials (int): Number of samples, at least 1.
        seed (int): Seed for the call-local generator.

    Returns:
        Optional[MatrixK]: The first invertible sample, or None.

    Raises:
        UnsupportedField: Over the rationals.
        EmptySpace: If the space has dimension 0.
    """
    if not space.spec.is_prime_field:
        raise UnsupportedField("witness search samples a finite field")
    if not space.basis:
        raise EmptySpace("the zero space has no invertible element")
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    spec = space.spec
    for attempt in range(1, trials + 1):
        sample = MatrixK.zero(spec, space.n, space.n)
        for u in space.basis:
            c = spec.random_element(rng)
            if c:
                sample = sample + u.scale(c)
        try:
            m_inverse(sample)
        except Singular:
            continue
        logger.debug("invertible witness found after %d trials", attempt)
        return sample
    logger.debug("no invertible witness in %d trials", trials)
    return None
