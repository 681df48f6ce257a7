"""
Unit tests for centrex.algebra.field.
"""

import random
from fractions import Fraction

import pytest

from centrex.algebra.errors import (
    NonPrimeModulus,
    ParseError,
    SpecMismatch,
    UnsupportedField,
    ZeroInversion,
)
from centrex.algebra.field import (
    FieldKind,
    FieldScalar,
    FieldSpec,
    f_from_integer,
    f_inv,
    is_prime,
)
from tests.helpers import random_field_value


@pytest.mark.unit
class TestFieldSpec:
    def test_prime_field_construction(self):
        spec = FieldSpec.prime(7)
        assert spec.kind is FieldKind.PRIME_FIELD
        assert spec.modulus == 7
        assert spec.name == "GF(7)"

    @pytest.mark.parametrize("modulus", [0, 1, 4, 9, 15])
    def test_composite_modulus_rejected(self, modulus):
        with pytest.raises(NonPrimeModulus):
            FieldSpec.prime(modulus)

    def test_rationals(self):
        spec = FieldSpec.rationals()
        assert not spec.is_prime_field
        assert spec.name == "Q"
        assert spec.zero == Fraction(0)

    @pytest.mark.parametrize(
        "text,expected",
        [("5", FieldSpec.prime(5)), ("Q", FieldSpec.rationals()), (" q ", FieldSpec.rationals())],
    )
    def test_parse(self, text, expected):
        assert FieldSpec.parse(text) == expected

    def test_parse_rejects_garbage(self):
        with pytest.raises(ParseError):
            FieldSpec.parse("GF5")

    def test_parse_composite(self):
        with pytest.raises(NonPrimeModulus):
            FieldSpec.parse("4")

    def test_check_same(self, gf5, gf2):
        gf5.check_same(FieldSpec.prime(5))
        with pytest.raises(SpecMismatch):
            gf5.check_same(gf2)

    def test_is_prime(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.unit
class TestRawArithmetic:
    def test_prime_field_ops(self, gf5):
        assert gf5.add(3, 4) == 2
        assert gf5.sub(1, 3) == 3
        assert gf5.mul(4, 4) == 1
        assert gf5.neg(2) == 3
        assert gf5.inv(2) == 3
        assert gf5.div(1, 3) == 2

    def test_reduce_fraction_into_prime_field(self, gf5):
        assert gf5.reduce(Fraction(1, 2)) == 3

    def test_inverse_of_zero(self, gf5, rationals):
        with pytest.raises(ZeroInversion):
            gf5.inv(0)
        with pytest.raises(ZeroDivisionError):
            rationals.inv(Fraction(0))

    def test_rational_ops_exact(self, rationals):
        a = Fraction(2, 3)
        assert rationals.mul(a, rationals.inv(a)) == 1
        assert rationals.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)

    def test_random_element_in_range(self, gf5):
        rng = random.Random(3)
        assert all(0 <= gf5.random_element(rng) < 5 for _ in range(50))

    def test_random_element_needs_finite_field(self, rationals):
        with pytest.raises(UnsupportedField):
            rationals.random_element(random.Random(0))


FIELD_TEXTS = ["2", "3", "5", "7", "11", "101", "Q"]


@pytest.mark.unit
class TestFieldAxioms:
    @pytest.mark.parametrize("field_text", FIELD_TEXTS)
    def test_ring_axioms(self, fake, field_text):
        spec = FieldSpec.parse(field_text)
        for case in range(1000):
            a, b, c = (random_field_value(fake, spec) for _ in range(3))
            context = f"case {case}: a={a}, b={b}, c={c}"
            assert spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c)), context
            assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c)), context
            assert spec.add(a, b) == spec.add(b, a), context
            assert spec.mul(a, b) == spec.mul(b, a), context
            assert spec.mul(a, spec.add(b, c)) == spec.add(
                spec.mul(a, b), spec.mul(a, c)
            ), context
            assert spec.add(a, spec.neg(a)) == spec.zero, context
            assert spec.sub(a, b) == spec.add(a, spec.neg(b)), context
            assert spec.mul(a, spec.one) == a, context

    @pytest.mark.parametrize("field_text", FIELD_TEXTS)
    def test_inverses(self, fake, field_text):
        spec = FieldSpec.parse(field_text)
        for case in range(1000):
            a, b = random_field_value(fake, spec), random_field_value(fake, spec)
            if a == spec.zero:
                continue
            assert spec.mul(a, spec.inv(a)) == spec.one, f"case {case}: a={a}"
            assert spec.mul(spec.div(b, a), a) == b, f"case {case}: a={a}, b={b}"

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 101])
    def test_fermat(self, fake, p):
        spec = FieldSpec.prime(p)
        for _ in range(1000):
            a = FieldScalar(spec, random_field_value(fake, spec))
            assert a**p == a

    @pytest.mark.parametrize("field_text", FIELD_TEXTS)
    def test_reduce_is_idempotent(self, fake, field_text):
        spec = FieldSpec.parse(field_text)
        for _ in range(1000):
            value = fake.random_int(-10_000, 10_000)
            once = spec.reduce(value)
            assert spec.reduce(once) == once
            fraction = Fraction(value, fake.random_int(1, 50))
            if spec.is_prime_field and fraction.denominator % spec.modulus == 0:
                continue
            once = spec.reduce(fraction)
            assert spec.reduce(once) == once


@pytest.mark.unit
class TestScalarText:
    @pytest.mark.parametrize("text,value", [("3", 3), ("-1", 4), ("12", 2), ("+2", 2)])
    def test_prime_scalars(self, gf5, text, value):
        assert gf5.parse_scalar(text) == value

    def test_fraction_needs_rationals(self, gf5):
        with pytest.raises(ParseError):
            gf5.parse_scalar("1/2")

    @pytest.mark.parametrize(
        "text,value", [("-3/2", Fraction(-3, 2)), ("4/2", Fraction(2)), ("7", Fraction(7))]
    )
    def test_rational_scalars(self, rationals, text, value):
        assert rationals.parse_scalar(text) == value

    def test_zero_denominator(self, rationals):
        with pytest.raises(ParseError):
            rationals.parse_scalar("1/0")

    def test_format(self, rationals, gf5):
        assert rationals.format_scalar(Fraction(2, 5)) == "2/5"
        assert rationals.format_scalar(Fraction(-4, 2)) == "-2"
        assert gf5.format_scalar(3) == "3"


@pytest.mark.unit
class TestFieldScalar:
    def test_operators(self, gf5):
        a = FieldScalar(gf5, 3)
        b = FieldScalar(gf5, 4)
        assert (a + b).value == 2
        assert (a - b).value == 4
        assert (a * b).value == 2
        assert (a / b).value == 2
        assert (-a).value == 2
        assert (1 - a).value == 3
        assert (a + 2).value == 0

    def test_power_and_negative_power(self, gf5, rationals):
        assert (FieldScalar(gf5, 2) ** 4).value == 1
        assert (FieldScalar(gf5, 2) ** -1).value == 3
        assert (FieldScalar(rationals, Fraction(2, 3)) ** -2).value == Fraction(9, 4)

    def test_canonicalizes(self, gf5):
        assert FieldScalar(gf5, 7) == FieldScalar(gf5, 2)
        assert str(FieldScalar(gf5, -1)) == "4"

    def test_mixed_fields_rejected(self, gf5, gf2):
        with pytest.raises(SpecMismatch):
            FieldScalar(gf5, 1) + FieldScalar(gf2, 1)

    def test_truthiness(self, gf5):
        assert not FieldScalar(gf5, 5)
        assert FieldScalar(gf5, 1).is_zero() is False

    def test_module_helpers(self, gf5):
        assert f_inv(FieldScalar(gf5, 2)) == FieldScalar(gf5, 3)
        assert f_from_integer(-6, gf5) == FieldScalar(gf5, 4)
        with pytest.raises(ZeroInversion):
            f_inv(FieldScalar(gf5, 0))
