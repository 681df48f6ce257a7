"""
JSON output schema.

Scalars are always strings ("3", "2/5"), polynomials are ascending
coefficient arrays and matrices are arrays of rows, so no precision is lost
by any consumer.
"""

from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

ScalarText = str
PolynomialData = List[ScalarText]
MatrixData = List[List[ScalarText]]
PolyMatrixData = List[List[PolynomialData]]


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class WitnessStatus(str, Enum):
    FOUND = "found"
    UNKNOWN = "unknown"
    NONE = "none"
    NOT_REQUESTED = "not_requested"


class SnfOutput(BaseModel):
    field: str = Field(..., description="GF(p) or Q")
    matrix: str = Field(..., description="Name of the input matrix")
    gamma1: PolyMatrixData
    diag: List[PolynomialData]
    gamma2: PolyMatrixData


class RcfOutput(BaseModel):
    field: str
    matrix: str
    factors: List[PolynomialData] = Field(
        ..., description="Nonconstant invariant factors, ascending by divisibility"
    )
    P: MatrixData = Field(..., description="Transform with P^-1 A P = R")
    R: MatrixData
    characteristic_polynomial: PolynomialData
    minimal_polynomial: PolynomialData


class BasisElementOutput(BaseModel):
    block: Optional[List[int]] = Field(
        default=None, description="1-based (i, j) block of the canonical form"
    )
    power: Optional[int] = None
    matrix: MatrixData


class DimOutput(BaseModel):
    field: str
    matrix: str
    dimension: int
    degrees: List[int]


class IntertwineOutput(BaseModel):
    field: str
    dimension: int
    method: str
    basis: List[MatrixData] = Field(default_factory=list)
    witness_status: WitnessStatus = WitnessStatus.NOT_REQUESTED
    witness: Optional[MatrixData] = None


class VerifyCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""
