"""
Unit tests for the pipeline self-verification.
"""

import pytest

from centrex.algebra.errors import InternalInconsistency
from centrex.algebra.matrix import MatrixK, companion
from centrex.algebra.poly import Polynomial
from centrex.validator.result_validator import (
    MAX_DETERMINANT_SIZE,
    MAX_MINOR_SIZE,
    CheckOutcome,
    ResultValidator,
)
from tests.helpers import random_prime_spec, random_test_matrix

CHECK_NAMES = [
    "snf_reconstruction",
    "snf_unimodular",
    "snf_divisibility_chain",
    "minor_gcd_agreement",
    "rcf_conjugation",
    "centralizer_commutation",
    "dimension_agreement",
    "span_equality",
    "closed_form_identity",
    "cyclic_powers",
    "phi_kernel",
]


@pytest.mark.unit
class TestResultValidator:
    def test_all_checks_pass_on_gf5_example(self, matrix_gf5):
        validator = ResultValidator(matrix_gf5)
        checks = validator.run()
        assert [c.name for c in checks] == CHECK_NAMES
        assert validator.passed
        dims = next(c for c in checks if c.name == "dimension_agreement")
        assert dims.detail == "basis / formula / oracle = (5, 5, 5)"

    def test_cyclic_check_runs_for_companion(self, gf2):
        validator = ResultValidator(companion(Polynomial.from_ints(gf2, [1, 1, 0, 1])))
        validator.run()
        cyclic = next(c for c in validator.checks if c.name == "cyclic_powers")
        assert cyclic.passed
        assert "skipped" not in cyclic.detail

    def test_cyclic_check_skipped_otherwise(self, block_matrix_gf2):
        validator = ResultValidator(block_matrix_gf2)
        validator.run()
        cyclic = next(c for c in validator.checks if c.name == "cyclic_powers")
        assert cyclic.detail.startswith("skipped")
        assert validator.passed

    def test_expensive_checks_skip_large_inputs(self, gf5):
        n = max(MAX_DETERMINANT_SIZE, MAX_MINOR_SIZE) + 1
        validator = ResultValidator(MatrixK.identity(gf5, n))
        assert validator.check_snf_unimodular().detail == f"skipped for n > {MAX_DETERMINANT_SIZE}"
        assert validator.check_minor_gcd().detail == f"skipped for n > {MAX_MINOR_SIZE}"

    def test_rationals(self, rationals):
        a = MatrixK(rationals, [[1, 2, 0], [0, 1, 0], [3, 0, 2]])
        validator = ResultValidator(a, random_samples=3)
        validator.run()
        assert validator.passed

    def test_errors_become_failed_checks(self, matrix_gf5, mocker):
        mocker.patch.object(
            ResultValidator,
            "check_rcf_conjugation",
            side_effect=InternalInconsistency("P is singular"),
        )
        validator = ResultValidator(matrix_gf5)
        validator.run()
        failed = [c for c in validator.checks if not c.passed]
        assert [c.name for c in failed] == ["rcf_conjugation"]
        assert failed[0].detail == "P is singular"
        assert not validator.passed

    def test_failing_outcome(self, matrix_gf5, mocker):
        mocker.patch.object(
            ResultValidator, "check_span", return_value=CheckOutcome(False, "spans differ")
        )
        validator = ResultValidator(matrix_gf5)
        validator.run()
        assert not validator.passed

    def test_not_passed_before_running(self, matrix_gf5):
        assert not ResultValidator(matrix_gf5).passed

    def test_random_matrices(self, fake):
        for _ in range(15):
            spec = random_prime_spec(fake)
            validator = ResultValidator(random_test_matrix(fake, spec, fake.random_int(1, 4)))
            validator.run()
            assert validator.passed, [c for c in validator.checks if not c.passed]
