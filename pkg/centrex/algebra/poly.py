"""
Univariate polynomials over an exact field.

Polynomials are immutable dense coefficient tuples in ascending order with
no trailing zeros, so the zero polynomial is the empty tuple. Its degree is
the NEG_INF sentinel, which compares below every integer degree.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, List, Sequence, Tuple, Union

from centrex.algebra.errors import (
    BothZero,
    DivisionByZeroPoly,
    NonSquare,
    ZeroArgument,
)
from centrex.algebra.field import FieldScalar, FieldSpec, Raw

if TYPE_CHECKING:
    from centrex.algebra.matrix import MatrixK

NEG_INF = float("-inf")

Degree = Union[int, float]


def _strip(values: List[Raw]) -> Tuple[Raw, ...]:
    end = len(values)
    while end and not values[end - 1]:
        end -= 1
    return tuple(values[:end])


class Polynomial:
    """A dense univariate polynomial over a FieldSpec."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Union[Raw, int]] = ()):
        self.spec = spec
        self.coeffs: Tuple[Raw, ...] = _strip([spec.reduce(c) for c in coeffs])

    @classmethod
    def _raw(cls, spec: FieldSpec, values: List[Raw]) -> Polynomial:
        """Build from already-canonical values, skipping reduction."""
        poly = cls.__new__(cls)
        poly.spec = spec
        poly.coeffs = _strip(values)
        return poly

    @classmethod
    def zero(cls, spec: FieldSpec) -> Polynomial:
        return cls._raw(spec, [])

    @classmethod
    def one(cls, spec: FieldSpec) -> Polynomial:
        return cls._raw(spec, [spec.one])

    @classmethod
    def constant(cls, spec: FieldSpec, value: Union[Raw, int]) -> Polynomial:
        return cls(spec, [value])

    @classmethod
    def x(cls, spec: FieldSpec) -> Polynomial:
        return cls._raw(spec, [spec.zero, spec.one])

    @classmethod
    def from_ints(cls, spec: FieldSpec, coeffs: Sequence[int]) -> Polynomial:
        """Build from ascending integer coefficients, e.g. [1, 0, 1] = x^2+1."""
        return cls(spec, coeffs)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Raw:
        return self.coeffs[-1] if self.coeffs else self.spec.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Nonzero constant."""
        return len(self.coeffs) == 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.spec.one

    def coefficient(self, i: int) -> FieldScalar:
        value = self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero
        return FieldScalar(self.spec, value)

    @property
    def coefficients(self) -> Tuple[FieldScalar, ...]:
        return tuple(FieldScalar(self.spec, c) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.spec, self.coeffs))

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _finish(self, values: List[Raw]) -> Polynomial:
        if self.spec.is_prime_field:
            p = self.spec.modulus
            values = [v % p for v in values]
        return Polynomial._raw(self.spec, values)

    def __add__(self, other: Polynomial) -> Polynomial:
        self.spec.check_same(other.spec)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        values = list(a)
        for i, c in enumerate(b):
            values[i] += c
        return self._finish(values)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return self._finish([-c for c in self.coeffs])

    def __mul__(self, other: Polynomial) -> Polynomial:
        self.spec.check_same(other.spec)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero(self.spec)
        values: List[Raw] = [self.spec.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                values[i + j] += ca * cb
        return self._finish(values)

    def scale(self, c: Raw) -> Polynomial:
        """Multiply by the raw scalar c."""
        if not c:
            return Polynomial.zero(self.spec)
        return self._finish([c * v for v in self.coeffs])

    def shift(self, k: int) -> Polynomial:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Polynomial._raw(self.spec, [self.spec.zero] * k + list(self.coeffs))

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self.scale(self.spec.inv(self.coeffs[-1]))

    def divrem(self, divisor: Polynomial) -> Tuple[Polynomial, Polynomial]:
        return p_divrem(self, divisor)

    def evaluate(self, point: Raw) -> Raw:
        """Horner evaluation at a raw scalar."""
        spec = self.spec
        result = spec.zero
        for c in reversed(self.coeffs):
            result = spec.add(spec.mul(result, point), c)
        return result

    # ------------------------------------------------------------------
    # Text forms
    # ------------------------------------------------------------------

    def to_strings(self) -> List[str]:
        """Ascending coefficient strings, the JSON form."""
        return [self.spec.format_scalar(c) for c in self.coeffs]

    def pretty(self) -> str:
        """Human-readable form such as ``x^2+1``."""
        if not self.coeffs:
            return "0"
        terms: List[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            text = self.spec.format_scalar(c)
            if power == 0:
                body = text
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                if text == "1":
                    body = monomial
                elif text == "-1":
                    body = f"-{monomial}"
                else:
                    if "/" in text:
                        text = f"({text})"
                    body = f"{text}*{monomial}"
            if terms and not body.startswith("-"):
                body = "+" + body
            terms.append(body)
        return "".join(terms)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"Polynomial({self.spec.name}, {self.pretty()})"


def p_divrem(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """
    Euclidean division a = q*b + r with deg r < deg b.

    Raises:
        DivisionByZeroPoly: If b is the zero polynomial.
    """
    a.spec.check_same(b.spec)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    spec = a.spec
    db = len(b.coeffs) - 1
    rem = list(a.coeffs)
    if len(rem) <= db:
        return Polynomial.zero(spec), a
    inv_lead = spec.inv(b.coeffs[-1])
    quot: List[Raw] = [spec.zero] * (len(rem) - db)
    prime = spec.modulus if spec.is_prime_field else None
    bc = b.coeffs
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] * inv_lead
        if prime:
            c %= prime
        if not c:
            continue
        quot[k] = c
        for i in range(db + 1):
            value = rem[k + i] - c * bc[i]
            rem[k + i] = value % prime if prime else value
    return Polynomial._raw(spec, quot), Polynomial._raw(spec, rem[:db])


def p_gcd_monic(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    Monic greatest common divisor by the Euclidean algorithm.

    Raises:
        BothZero: If both arguments are zero.
    """
    a.spec.check_same(b.spec)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, p_divrem(a, b)[1]
    return a.monic()


def p_xgcd(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """
    Extended Euclid: returns (g, s, t) with g = s*a + t*b and g monic.

    Raises:
        BothZero: If both arguments are zero.
    """
    a.spec.check_same(b.spec)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    spec = a.spec
    r0, r1 = a, b
    s0, s1 = Polynomial.one(spec), Polynomial.zero(spec)
    t0, t1 = Polynomial.zero(spec), Polynomial.one(spec)
    while not r1.is_zero():
        q, r = p_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    unit = spec.inv(r0.leading)
    return r0.scale(unit), s0.scale(unit), t0.scale(unit)


def p_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    Monic least common multiple.

    Raises:
        ZeroArgument: If either argument is zero.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroArgument("lcm needs nonzero arguments")
    quotient, _ = p_divrem(a * b, p_gcd_monic(a, b))
    return quotient.monic()


def colon_generator(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    Monic generator d of the colon ideal (a) : (b) = {x : x*b in (a)}.

    In a PID this is lcm(a, b) / b.
    """
    quotient, _ = p_divrem(p_lcm(a, b), b)
    return quotient.monic()


def hom_dimension(source: Polynomial, target: Polynomial) -> int:
    """
    Dimension over k of Hom(k[x]/source, k[x]/target).

    Every homomorphism sends 1 to a multiple of the colon generator d of
    (target) : (source), so the space is d*k[x] / target*k[x].
    """
    d = colon_generator(target, source)
    return int(target.degree - d.degree)


def p_eval_matrix(poly: Polynomial, matrix: MatrixK) -> MatrixK:
    """
    Evaluate a polynomial at a square matrix by Horner's rule.

    Raises:
        NonSquare: If the matrix is not square.
    """
    from centrex.algebra.matrix import MatrixK

    poly.spec.check_same(matrix.spec)
    if matrix.rows != matrix.cols:
        raise NonSquare("polynomials can only be evaluated at square matrices")
    n = matrix.rows
    result = MatrixK.zero(matrix.spec, n, n)
    for c in reversed(poly.coeffs):
        result = result @ matrix
        if c:
            result = result + MatrixK.identity(matrix.spec, n).scale(c)
    return result
