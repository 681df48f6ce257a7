"""
Unit tests for centrex.io.document.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from centrex.algebra.errors import DimensionMismatch, NonPrimeModulus, ParseError
from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import MatrixK
from centrex.algebra.poly import Polynomial
from centrex.io.document import (
    InputDocument,
    field_from_json,
    matrix_from_json,
    parse_input,
    polynomial_from_json,
)
from tests.conftest import GF2_DOCUMENT, GF5_DOCUMENT, INTERTWINE_DOCUMENT


@pytest.mark.unit
class TestParseInput:
    def test_gf5_document(self, gf5, matrix_gf5):
        document = parse_input(GF5_DOCUMENT)
        assert document.field_spec == gf5
        assert document.names == ["A"]
        assert document.select() == ("A", matrix_gf5)

    def test_comments_and_blank_lines(self, block_matrix_gf2):
        document = parse_input("\n\n" + GF2_DOCUMENT.replace("field 2", "field 2  # binary"))
        assert document.matrices["A"] == block_matrix_gf2

    def test_several_matrices_keep_file_order(self):
        document = parse_input(INTERTWINE_DOCUMENT)
        assert document.names == ["A", "B", "Aprime", "Bprime"]
        a, b = document.require(["A", "B"])
        assert a.entries == ((1, 1), (0, 1))
        assert b.entries == ((0, 1), (0, 0))

    def test_rational_entries(self, rationals):
        document = parse_input("field Q\nmatrix M 2 2\n1/2 -3\n0 4/6\n")
        assert document.field_spec == rationals
        assert document.matrices["M"].entries == (
            (Fraction(1, 2), Fraction(-3)),
            (Fraction(0), Fraction(2, 3)),
        )

    def test_primed_names(self):
        document = parse_input("field 3\nmatrix A' 1 1\n2\n")
        assert document.names == ["A'"]

    @pytest.mark.parametrize(
        "text,line",
        [
            ("", 1),
            ("matrix A 1 1\n1\n", 1),
            ("field\nmatrix A 1 1\n1\n", 1),
            ("field 5\n", 1),
            ("field 5\nmatrix 1A 1 1\n1\n", 2),
            ("field 5\nmatrix A 0 1\n", 2),
            ("field 5\nmatrix A x 1\n1\n", 2),
            ("field 5\nmatrix A 1 1\n1\nmatrix A 1 1\n2\n", 4),
            ("field 5\nmatrix A 1 2\n1 1/2\n", 3),
            ("field 5\nvector v 1\n1\n", 2),
        ],
    )
    def test_parse_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as excinfo:
            parse_input(text)
        assert excinfo.value.line == line
        assert str(excinfo.value).startswith(f"line {line}:")

    def test_composite_modulus(self):
        with pytest.raises(NonPrimeModulus, match="line 2"):
            parse_input("# header\nfield 4\nmatrix A 1 1\n1\n")

    def test_missing_rows(self):
        with pytest.raises(DimensionMismatch, match="declares 3 rows"):
            parse_input("field 5\nmatrix A 3 3\n1 2 3\n")

    def test_wrong_entry_count(self):
        with pytest.raises(DimensionMismatch, match="line 3"):
            parse_input("field 5\nmatrix A 2 2\n1 2 3\n4 0\n")


@pytest.mark.unit
class TestInputDocument:
    def test_select_by_name(self, gf5):
        document = parse_input(INTERTWINE_DOCUMENT)
        name, matrix = document.select("Bprime")
        assert name == "Bprime"
        assert matrix == MatrixK.from_ints(gf5, [[0, 1], [0, 0]])

    def test_select_single_matrix_without_a(self):
        document = parse_input("field 7\nmatrix M 1 1\n3\n")
        assert document.select()[0] == "M"

    def test_select_ambiguous(self):
        document = parse_input("field 7\nmatrix M 1 1\n3\nmatrix N 1 1\n4\n")
        with pytest.raises(ParseError, match="--matrix"):
            document.select()

    def test_select_unknown(self):
        with pytest.raises(ParseError, match="no matrix named"):
            parse_input(GF5_DOCUMENT).select("Z")

    def test_require_lists_missing(self):
        with pytest.raises(ParseError, match="Aprime, Bprime"):
            parse_input(GF5_DOCUMENT).require(["A", "Aprime", "Bprime"])

    def test_mixed_fields_rejected(self, gf5, gf2):
        with pytest.raises(ValidationError):
            InputDocument(field_spec=gf5, matrices={"A": MatrixK.identity(gf2, 2)})


@pytest.mark.unit
class TestJsonDecoding:
    @pytest.mark.parametrize("name", ["GF(2)", "GF(11)", "Q"])
    def test_field_names_round_trip(self, name):
        assert field_from_json(name).name == name

    def test_invalid_field_names(self):
        with pytest.raises(ParseError):
            field_from_json("F5")
        with pytest.raises(NonPrimeModulus):
            field_from_json("GF(6)")

    def test_polynomial(self, gf5):
        assert polynomial_from_json(["2", "3", "1"], gf5) == Polynomial.from_ints(gf5, [2, 3, 1])
        with pytest.raises(ParseError):
            polynomial_from_json("x+1", gf5)

    def test_matrix(self, gf5, matrix_gf5):
        assert matrix_from_json(matrix_gf5.to_strings(), gf5) == matrix_gf5
        with pytest.raises(ParseError):
            matrix_from_json(["1 2"], gf5)
        with pytest.raises(DimensionMismatch):
            matrix_from_json([["1", "2"], ["3"]], gf5)

    def test_rational_matrix(self):
        spec = FieldSpec.rationals()
        m = matrix_from_json([["1/2", "-1"]], spec)
        assert m.entries == ((Fraction(1, 2), Fraction(-1)),)
