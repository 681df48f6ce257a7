"""
Self-verification of the full pipeline on one input matrix.

Every check recomputes an identity that must hold exactly, or compares the
main pipeline against the brute-force oracles. A check that raises counts
as failed and carries the error text as its detail.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, List, Tuple

from centrex.algebra.centralizer import (
    CentralizerBasis,
    centralizer_basis,
    frobenius_dimension,
    frobenius_dimension_closed_form,
    polynomial_centralizer_basis,
)
from centrex.algebra.errors import CentrexError
from centrex.algebra.matrix import MatrixK
from centrex.algebra.oracle import commutant_kernel_basis, minor_gcd_invariants, span_equal
from centrex.algebra.poly import Polynomial, p_divrem
from centrex.algebra.poly_matrix import MatrixPoly, char_matrix
from centrex.algebra.rcf import RcfResult, apply_phi, is_cyclic, rcf_transform
from centrex.algebra.smith import SnfResult, snf
from centrex.models.result_models import VerifyCheck

logger = logging.getLogger(__name__)

# cofactor determinants and minor enumeration stop being practical above these
MAX_DETERMINANT_SIZE = 6
MAX_MINOR_SIZE = 5


@dataclass
class CheckOutcome:
    passed: bool
    detail: str = ""


@dataclass
class ResultValidator:
    """
    Runs every pipeline check against one square matrix.

    Validations:
      1) Smith form reconstruction, unimodularity and divisibility chain
      2) Agreement with determinantal divisors (n <= 5)
      3) Rational canonical conjugation identity
      4) Centralizer commutation, dimension and span against the oracle
      5) Dimension formulas and the cyclic specialization
      6) phi annihilates the image of xI - A
    """

    matrix: MatrixK
    random_samples: int = 8
    seed: int = 0
    checks: List[VerifyCheck] = field(default_factory=list)

    @cached_property
    def smith(self) -> SnfResult:
        return snf(self.characteristic_matrix)

    @cached_property
    def characteristic_matrix(self) -> MatrixPoly:
        return char_matrix(self.matrix)

    @cached_property
    def rcf(self) -> RcfResult:
        return rcf_transform(self.matrix)

    @cached_property
    def basis(self) -> CentralizerBasis:
        return centralizer_basis(self.matrix, self.rcf)

    @cached_property
    def oracle_basis(self) -> List[MatrixK]:
        return commutant_kernel_basis(self.matrix)

    # ------------------------------------------------------------------

    def check_snf_reconstruction(self) -> CheckOutcome:
        ok = self.smith.reconstruct() == self.characteristic_matrix
        return CheckOutcome(ok, "gamma1 * D * gamma2 == xI - A")

    def check_snf_unimodular(self) -> CheckOutcome:
        if self.matrix.rows > MAX_DETERMINANT_SIZE:
            return CheckOutcome(True, f"skipped for n > {MAX_DETERMINANT_SIZE}")
        dets = [self.smith.gamma1.determinant(), self.smith.gamma2.determinant()]
        return CheckOutcome(all(d.is_unit() for d in dets), "det gamma1, det gamma2 nonzero constants")

    def check_snf_chain(self) -> CheckOutcome:
        diag = self.smith.diag
        if any(d.is_zero() or not d.is_monic() for d in diag):
            return CheckOutcome(False, "diagonal entries must be monic and nonzero")
        for a, b in zip(diag, diag[1:]):
            if not p_divrem(b, a)[1].is_zero():
                return CheckOutcome(False, f"{a.pretty()} does not divide {b.pretty()}")
        return CheckOutcome(True, "monic divisibility chain")

    def check_minor_gcd(self) -> CheckOutcome:
        if self.matrix.rows > MAX_MINOR_SIZE:
            return CheckOutcome(True, f"skipped for n > {MAX_MINOR_SIZE}")
        expected = minor_gcd_invariants(self.characteristic_matrix)
        return CheckOutcome(list(self.smith.diag) == expected, "diag matches determinantal divisors")

    def check_rcf_conjugation(self) -> CheckOutcome:
        r = self.rcf
        ok = (
            r.P @ r.P_inverse == MatrixK.identity(self.matrix.spec, self.matrix.rows)
            and self.matrix @ r.P == r.P @ r.R
            and sum(r.degrees) == self.matrix.rows
        )
        return CheckOutcome(ok, f"factor degrees {r.degrees}")

    def check_commutation(self) -> CheckOutcome:
        a = self.matrix
        bad = [k for k, b in enumerate(self.basis.matrices, 1) if a @ b != b @ a]
        if bad:
            return CheckOutcome(False, f"elements {bad} do not commute")
        return CheckOutcome(True, f"{self.basis.dimension} elements commute")

    def check_dimensions(self) -> CheckOutcome:
        sizes = (
            self.basis.dimension,
            frobenius_dimension(self.rcf.factors),
            len(self.oracle_basis),
        )
        return CheckOutcome(len(set(sizes)) == 1, f"basis / formula / oracle = {sizes}")

    def check_span(self) -> CheckOutcome:
        return CheckOutcome(span_equal(self.basis.matrices, self.oracle_basis), "span equals oracle kernel")

    def check_closed_form(self) -> CheckOutcome:
        pairwise = frobenius_dimension(self.rcf.factors)
        closed = frobenius_dimension_closed_form(self.rcf.factors)
        return CheckOutcome(pairwise == closed, f"{pairwise} == {closed}")

    def check_cyclic_powers(self) -> CheckOutcome:
        if not is_cyclic(self.matrix, self.rcf):
            return CheckOutcome(True, "skipped, more than one invariant factor")
        powers = polynomial_centralizer_basis(self.matrix)
        return CheckOutcome(span_equal(self.basis.matrices, powers), "span equals {A^t : t < n}")

    def check_phi_kernel(self) -> CheckOutcome:
        rng = random.Random(self.seed)
        spec = self.matrix.spec
        n = self.matrix.rows
        zero = MatrixK.zero(spec, n, 1)
        for _ in range(self.random_samples):
            column = [
                [Polynomial(spec, [rng.randint(-4, 4) for _ in range(rng.randint(0, 3))])]
                for _ in range(n)
            ]
            image = self.characteristic_matrix @ MatrixPoly(spec, column)
            if apply_phi(image.column_at(0), self.matrix) != zero:
                return CheckOutcome(False, "phi((xI - A) w) != 0")
        return CheckOutcome(True, f"{self.random_samples} random columns")

    # ------------------------------------------------------------------

    def _plan(self) -> List[Tuple[str, Callable[[], CheckOutcome]]]:
        return [
            ("snf_reconstruction", self.check_snf_reconstruction),
            ("snf_unimodular", self.check_snf_unimodular),
            ("snf_divisibility_chain", self.check_snf_chain),
            ("minor_gcd_agreement", self.check_minor_gcd),
            ("rcf_conjugation", self.check_rcf_conjugation),
            ("centralizer_commutation", self.check_commutation),
            ("dimension_agreement", self.check_dimensions),
            ("span_equality", self.check_span),
            ("closed_form_identity", self.check_closed_form),
            ("cyclic_powers", self.check_cyclic_powers),
            ("phi_kernel", self.check_phi_kernel),
        ]

    def run(self) -> List[VerifyCheck]:
        """Run all checks in order and return their outcomes."""
        self.checks = []
        for name, check in self._plan():
            try:
                outcome = check()
            except CentrexError as exc:
                outcome = CheckOutcome(False, str(exc))
            logger.debug("check %s: %s", name, "pass" if outcome.passed else "fail")
            self.checks.append(
                VerifyCheck(name=name, passed=outcome.passed, detail=outcome.detail)
            )
        return self.checks

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)
