"""
Exception hierarchy for Centrex.

Every error raised by the algebra layer derives from CentrexError and from
the builtin exception it most resembles, so callers may catch either.
"""

from typing import Optional


class CentrexError(Exception):
    """Base class for all Centrex errors."""


class NonPrimeModulus(CentrexError, ValueError):
    """Raised when a prime field is requested with a composite modulus."""


class SpecMismatch(CentrexError, ValueError):
    """Raised when operands live over different fields."""


class ZeroInversion(CentrexError, ZeroDivisionError):
    """Raised when inverting the zero scalar."""


class DivisionByZeroPoly(CentrexError, ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


class BothZero(CentrexError, ValueError):
    """Raised when the gcd of two zero polynomials is requested."""


class ZeroArgument(CentrexError, ValueError):
    """Raised when an operation needs nonzero polynomials."""


class NotMonic(CentrexError, ValueError):
    pass


class DegreeZero(CentrexError, ValueError):
    pass


class NonSquare(CentrexError, ValueError):
    pass


class Singular(CentrexError, ArithmeticError):
    """Raised when inverting a singular matrix."""


class DimensionMismatch(CentrexError, ValueError):
    pass


class ShapeMismatch(CentrexError, ValueError):
    pass


class SizeMismatch(CentrexError, ValueError):
    pass


class NonDivisible(CentrexError, ArithmeticError):
    """Raised when a factor chain is not a divisibility chain."""


class SingularInput(CentrexError, ArithmeticError):
    """Raised by the minor oracle on matrices with zero determinant."""


class UnsupportedField(CentrexError, ValueError):
    pass


class EmptySpace(CentrexError, ValueError):
    """Raised when sampling from the zero subspace."""


class InternalInconsistency(CentrexError, RuntimeError):
    """
    Raised when a self-check on a computed result fails.

    This always indicates a bug in Centrex, never bad input.
    """


class ParseError(CentrexError, ValueError):
    """Raised on malformed input documents."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.reason = message
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
