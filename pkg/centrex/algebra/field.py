"""
Exact field arithmetic for Centrex.

A FieldSpec describes the field (Z/p or Q) and carries the arithmetic on raw
values: plain ints in [0, p) for prime fields and fully reduced Fractions for
the rationals. Matrices and polynomials store raw values and go through the
FieldSpec; FieldScalar wraps a raw value together with its field for use at
API boundaries.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from centrex.algebra.errors import (
    NonPrimeModulus,
    ParseError,
    SpecMismatch,
    UnsupportedField,
    ZeroInversion,
)

# Raw field values: int for Z/p, Fraction for Q
Raw = Union[int, Fraction]

_INTEGER_RE = re.compile(r"^[+-]?\d+$")
_FRACTION_RE = re.compile(r"^[+-]?\d+/\d+$")


class FieldKind(str, Enum):
    PRIME_FIELD = "prime_field"
    RATIONALS = "rationals"


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """
    Descriptor of the coefficient field.

    Two FieldSpecs are compatible for arithmetic iff they compare equal.
    """

    kind: FieldKind
    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == FieldKind.PRIME_FIELD:
            if self.modulus is None or not is_prime(self.modulus):
                raise NonPrimeModulus(f"{self.modulus} is not a prime modulus")
        elif self.modulus is not None:
            raise ValueError("The rationals carry no modulus")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME_FIELD, p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(FieldKind.RATIONALS)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """
        Parse a field descriptor: a decimal prime or ``Q``.

        Args:
            text (str): Descriptor text.

        Returns:
            FieldSpec: The described field.
        """
        token = text.strip()
        if token.upper() == "Q":
            return cls.rationals()
        if not token.isdigit():
            raise ParseError(f"invalid field descriptor {token!r}")
        return cls.prime(int(token))

    @property
    def is_prime_field(self) -> bool:
        return self.kind == FieldKind.PRIME_FIELD

    @property
    def name(self) -> str:
        return f"GF({self.modulus})" if self.is_prime_field else "Q"

    @property
    def zero(self) -> Raw:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.is_prime_field else Fraction(1)

    # ------------------------------------------------------------------
    # Raw arithmetic
    # ------------------------------------------------------------------

    def reduce(self, value: Union[int, Fraction]) -> Raw:
        """Bring an int or Fraction to the canonical representative."""
        if self.is_prime_field:
            if isinstance(value, Fraction):
                inverse = pow(value.denominator, -1, self.modulus)
                return value.numerator * inverse % self.modulus
            return value % self.modulus
        return Fraction(value)

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.is_prime_field:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.is_prime_field:
            return (a - b) % self.modulus
        return a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.is_prime_field:
            return a * b % self.modulus
        return a * b

    def neg(self, a: Raw) -> Raw:
        if self.is_prime_field:
            return -a % self.modulus
        return -a

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise ZeroInversion("zero has no multiplicative inverse")
        if self.is_prime_field:
            return pow(a, -1, self.modulus)
        return 1 / a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> Raw:
        return self.reduce(n)

    def random_element(self, rng: random.Random) -> Raw:
        """Uniform element of a prime field."""
        if not self.is_prime_field:
            raise UnsupportedField("uniform sampling needs a finite field")
        return rng.randrange(self.modulus)

    # ------------------------------------------------------------------
    # Text syntax
    # ------------------------------------------------------------------

    def parse_scalar(self, text: str) -> Raw:
        """
        Parse a scalar: a decimal integer, or ``a/b`` over the rationals.

        Args:
            text (str): Scalar text.

        Returns:
            Raw: Canonical raw value.
        """
        token = text.strip()
        if _INTEGER_RE.match(token):
            return self.reduce(int(token))
        if not self.is_prime_field and _FRACTION_RE.match(token):
            num, den = token.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {token!r}")
            return Fraction(int(num), int(den))
        raise ParseError(f"invalid scalar {token!r} for field {self.name}")

    def format_scalar(self, value: Raw) -> str:
        if self.is_prime_field:
            return str(value)
        frac = Fraction(value)
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"

    def check_same(self, other: FieldSpec) -> None:
        if self != other:
            raise SpecMismatch(f"field mismatch: {self.name} vs {other.name}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FieldScalar:
    """An exact field element together with its field."""

    spec: FieldSpec
    value: Raw

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.spec.reduce(self.value))

    def _coerce(self, other: Union[FieldScalar, int]) -> Raw:
        if isinstance(other, FieldScalar):
            self.spec.check_same(other.spec)
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        raise TypeError(f"cannot combine FieldScalar with {type(other).__name__}")

    def __add__(self, other: Union[FieldScalar, int]) -> FieldScalar:
        return FieldScalar(self.spec, self.spec.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: Union[FieldScalar, int]) -> FieldScalar:
        return FieldScalar(self.spec, self.spec.sub(self.value, self._coerce(other)))

    def __rsub__(self, other: int) -> FieldScalar:
        return FieldScalar(self.spec, self.spec.sub(self._coerce(other), self.value))

    def __mul__(self, other: Union[FieldScalar, int]) -> FieldScalar:
        return FieldScalar(self.spec, self.spec.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Union[FieldScalar, int]) -> FieldScalar:
        return FieldScalar(self.spec, self.spec.div(self.value, self._coerce(other)))

    def __neg__(self) -> FieldScalar:
        return FieldScalar(self.spec, self.spec.neg(self.value))

    def __pow__(self, exponent: int) -> FieldScalar:
        base = self if exponent >= 0 else f_inv(self)
        if self.spec.is_prime_field:
            return FieldScalar(
                self.spec, pow(base.value, abs(exponent), self.spec.modulus)
            )
        return FieldScalar(self.spec, base.value ** abs(exponent))

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self) -> str:
        return self.spec.format_scalar(self.value)


def f_inv(a: FieldScalar) -> FieldScalar:
    """
    Multiplicative inverse of a nonzero scalar.

    Raises:
        ZeroInversion: If a is zero.
    """
    return FieldScalar(a.spec, a.spec.inv(a.value))


def f_from_integer(n: int, spec: FieldSpec) -> FieldScalar:
    """Canonical image of the integer n in the field."""
    return FieldScalar(spec, spec.from_int(n))
