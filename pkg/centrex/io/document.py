"""
Input document parsing and JSON decoding.

The text format is line based::

    # comment
    field 5
    matrix A 3 3
    0 1 3
    3 2 4
    0 0 4

One ``field`` line comes first, followed by one or more ``matrix`` blocks.
"""

from __future__ import annotations

import re
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from centrex.algebra.errors import DimensionMismatch, NonPrimeModulus, ParseError
from centrex.algebra.field import FieldSpec
from centrex.algebra.matrix import MatrixK
from centrex.algebra.poly import Polynomial

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
_FIELD_NAME_RE = re.compile(r"^GF\((\d+)\)$")


class InputDocument(BaseModel):
    """A field together with uniquely named matrices over it."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    field_spec: FieldSpec
    matrices: Dict[str, MatrixK] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_fields(self) -> InputDocument:
        for name, matrix in self.matrices.items():
            if matrix.spec != self.field_spec:
                raise ValueError(f"matrix {name} is over {matrix.spec.name}")
        return self

    @property
    def names(self) -> List[str]:
        return list(self.matrices)

    def select(self, name: Optional[str] = None) -> Tuple[str, MatrixK]:
        """
        Pick a matrix by name.

        Without a name, ``A`` is used if present, otherwise the only matrix.

        Raises:
            ParseError: If the name is unknown or the choice is ambiguous.
        """
        if name is None:
            if "A" in self.matrices:
                name = "A"
            elif len(self.matrices) == 1:
                name = next(iter(self.matrices))
            else:
                raise ParseError(
                    f"several matrices ({', '.join(self.names)}); choose one with --matrix"
                )
        if name not in self.matrices:
            raise ParseError(f"no matrix named {name!r}")
        return name, self.matrices[name]

    def require(self, names: Sequence[str]) -> List[MatrixK]:
        missing = [n for n in names if n not in self.matrices]
        if missing:
            raise ParseError(f"missing required matrices: {', '.join(missing)}")
        return [self.matrices[n] for n in names]


def _meaningful_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if content:
            lines.append((number, content))
    return lines


def _positive(token: str, what: str, line: int) -> int:
    if not token.isdigit() or int(token) == 0:
        raise ParseError(f"{what} must be a positive integer, got {token!r}", line)
    return int(token)


def parse_input(text: str) -> InputDocument:
    """
    Parse the matrix file format.

    Args:
        text (str): Whole document.

    Returns:
        InputDocument: Field and matrices in file order.

    Raises:
        ParseError: On malformed lines, with the 1-based line number.
        NonPrimeModulus: If the field line names a composite modulus.
        DimensionMismatch: If a matrix body disagrees with its header.
    """
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    number, tokens = lines[0]
    if tokens[0] != "field" or len(tokens) != 2:
        raise ParseError("expected 'field <p>' or 'field Q'", number)
    try:
        spec = FieldSpec.parse(tokens[1])
    except ParseError as exc:
        raise ParseError(exc.reason, number) from exc
    except NonPrimeModulus as exc:
        raise NonPrimeModulus(f"line {number}: {exc}") from exc

    matrices: Dict[str, MatrixK] = {}
    index = 1
    while index < len(lines):
        number, tokens = lines[index]
        if tokens[0] != "matrix" or len(tokens) != 4:
            raise ParseError("expected 'matrix <name> <rows> <cols>'", number)
        name = tokens[1]
        if not _NAME_RE.match(name):
            raise ParseError(f"invalid matrix name {name!r}", number)
        if name in matrices:
            raise ParseError(f"duplicate matrix name {name!r}", number)
        rows = _positive(tokens[2], "rows", number)
        cols = _positive(tokens[3], "cols", number)
        body = lines[index + 1 : index + 1 + rows]
        if len(body) < rows:
            raise DimensionMismatch(
                f"line {number}: matrix {name} declares {rows} rows, found {len(body)}"
            )
        grid = []
        for row_number, row_tokens in body:
            if len(row_tokens) != cols:
                raise DimensionMismatch(
                    f"line {row_number}: expected {cols} entries, found {len(row_tokens)}"
                )
            try:
                grid.append([spec.parse_scalar(t) for t in row_tokens])
            except ParseError as exc:
                raise ParseError(exc.reason, row_number) from exc
        matrices[name] = MatrixK._raw(spec, grid)
        index += 1 + rows
    if not matrices:
        raise ParseError("no matrix blocks", lines[-1][0])
    return InputDocument(field_spec=spec, matrices=matrices)


def field_from_json(name: str) -> FieldSpec:
    """Inverse of FieldSpec.name: ``GF(5)`` or ``Q``."""
    if name == "Q":
        return FieldSpec.rationals()
    match = _FIELD_NAME_RE.match(name)
    if not match:
        raise ParseError(f"invalid field name {name!r}")
    return FieldSpec.prime(int(match.group(1)))


def polynomial_from_json(data: Sequence[Any], spec: FieldSpec) -> Polynomial:
    """Decode an ascending coefficient array of scalar strings."""
    if not isinstance(data, (list, tuple)):
        raise ParseError("a polynomial is an array of coefficients")
    return Polynomial(spec, [spec.parse_scalar(str(c)) for c in data])


def matrix_from_json(data: Sequence[Sequence[Any]], spec: FieldSpec) -> MatrixK:
    """Decode an array of rows of scalar strings."""
    if not isinstance(data, (list, tuple)) or not all(
        isinstance(row, (list, tuple)) for row in data
    ):
        raise ParseError("a matrix is an array of row arrays")
    return MatrixK(spec, [[spec.parse_scalar(str(v)) for v in row] for row in data])
