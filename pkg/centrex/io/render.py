"""
Rendering of computation results as plain text or JSON.

Text goes through a rich Console with markup and highlighting disabled, so
matrix brackets survive and the bytes on stdout depend only on the input.
"""

from __future__ import annotations

import json
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel
from rich import box
from rich.console import Console
from rich.table import Table

from centrex.algebra.centralizer import CentralizerBasis
from centrex.algebra.matrix import MatrixK
from centrex.algebra.poly import Polynomial
from centrex.algebra.rcf import RcfResult
from centrex.algebra.smith import SnfResult
from centrex.algebra.wild import IntertwinerSpace
from centrex.models.result_models import (
    BasisElementOutput,
    DimOutput,
    IntertwineOutput,
    RcfOutput,
    SnfOutput,
    VerifyCheck,
    WitnessStatus,
)


def dump_json(payload: Any) -> str:
    """Serialize a model, or a list of models, with a stable layout."""
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json", exclude_none=True)
    else:
        data = [
            item.model_dump(mode="json", exclude_none=True)
            if isinstance(item, BaseModel)
            else item
            for item in payload
        ]
    return json.dumps(data, indent=2)


def _line(console: Console, text: str = "") -> None:
    console.print(text, markup=False, highlight=False, soft_wrap=True)


def _indent(block: str, prefix: str = "  ") -> str:
    return "\n".join(prefix + row for row in block.splitlines())


def _factor_list(factors: Sequence[Polynomial]) -> str:
    return ", ".join(f.pretty() for f in factors)


# ----------------------------------------------------------------------
# Output models
# ----------------------------------------------------------------------


def snf_output(name: str, result: SnfResult) -> SnfOutput:
    return SnfOutput(
        field=result.gamma1.spec.name,
        matrix=name,
        gamma1=result.gamma1.to_strings(),
        diag=[d.to_strings() for d in result.diag],
        gamma2=result.gamma2.to_strings(),
    )


def rcf_output(
    name: str, result: RcfResult, char_poly: Polynomial, min_poly: Polynomial
) -> RcfOutput:
    return RcfOutput(
        field=result.P.spec.name,
        matrix=name,
        factors=[f.to_strings() for f in result.factors],
        P=result.P.to_strings(),
        R=result.R.to_strings(),
        characteristic_polynomial=char_poly.to_strings(),
        minimal_polynomial=min_poly.to_strings(),
    )


def centralizer_output(basis: CentralizerBasis) -> List[BasisElementOutput]:
    return [
        BasisElementOutput(
            block=[e.block_row, e.block_col], power=e.power, matrix=e.matrix.to_strings()
        )
        for e in basis.elements
    ]


def normalized_output(matrices: Sequence[MatrixK]) -> List[BasisElementOutput]:
    return [BasisElementOutput(matrix=m.to_strings()) for m in matrices]


def dim_output(name: str, field: str, dimension: int, degrees: List[int]) -> DimOutput:
    return DimOutput(field=field, matrix=name, dimension=dimension, degrees=degrees)


def intertwine_output(
    space: IntertwinerSpace, status: WitnessStatus, witness: Optional[MatrixK]
) -> IntertwineOutput:
    return IntertwineOutput(
        field=space.spec.name,
        dimension=space.dimension,
        method=space.method.value,
        basis=[u.to_strings() for u in space.basis],
        witness_status=status,
        witness=witness.to_strings() if witness is not None else None,
    )


# ----------------------------------------------------------------------
# Text
# ----------------------------------------------------------------------


def render_snf_text(console: Console, name: str, result: SnfResult) -> None:
    _line(console, f"field: {result.gamma1.spec.name}")
    _line(console, f"smith form of xI-{name} ({result.rows}x{result.cols})")
    _line(console, "gamma1:")
    _line(console, _indent(result.gamma1.pretty()))
    _line(console, f"diag: {_factor_list(result.diag)}")
    _line(console, "gamma2:")
    _line(console, _indent(result.gamma2.pretty()))


def render_rcf_text(
    console: Console,
    name: str,
    result: RcfResult,
    char_poly: Polynomial,
    min_poly: Polynomial,
) -> None:
    _line(console, f"field: {result.P.spec.name}")
    _line(console, f"matrix: {name} ({result.P.rows}x{result.P.cols})")
    _line(console, f"invariant factors: {_factor_list(result.factors)}")
    _line(console, f"characteristic polynomial: {char_poly.pretty()}")
    _line(console, f"minimal polynomial: {min_poly.pretty()}")
    _line(console, "P:")
    _line(console, _indent(result.P.pretty()))
    _line(console, "R:")
    _line(console, _indent(result.R.pretty()))


def render_centralizer_text(
    console: Console,
    name: str,
    basis: CentralizerBasis,
    normalized: Optional[Sequence[MatrixK]] = None,
) -> None:
    _line(console, f"field: {basis.spec.name}")
    _line(console, f"matrix: {name} ({basis.n}x{basis.n})")
    _line(console, f"invariant factors: {_factor_list(basis.factors)}")
    _line(console, f"dimension: {basis.dimension}")
    if normalized is not None:
        for k, m in enumerate(normalized, start=1):
            _line(console)
            _line(console, f"basis element {k} (normalized)")
            _line(console, _indent(m.pretty()))
        return
    for k, e in enumerate(basis.elements, start=1):
        _line(console)
        _line(console, f"basis element {k}: block ({e.block_row}, {e.block_col}), power {e.power}")
        _line(console, _indent(e.matrix.pretty()))


def render_dim_text(console: Console, output: DimOutput) -> None:
    _line(console, str(output.dimension))


def render_intertwine_text(
    console: Console,
    space: IntertwinerSpace,
    status: WitnessStatus,
    witness: Optional[MatrixK],
) -> None:
    _line(console, f"field: {space.spec.name}")
    _line(console, f"method: {space.method.value}")
    _line(console, f"dimension: {space.dimension}")
    for k, u in enumerate(space.basis, start=1):
        _line(console)
        _line(console, f"basis element {k}")
        _line(console, _indent(u.pretty()))
    if status is WitnessStatus.NOT_REQUESTED:
        return
    _line(console)
    if status is WitnessStatus.NONE:
        _line(console, "witness: NONE (zero space)")
    elif witness is None:
        _line(console, "witness: UNKNOWN")
    else:
        _line(console, "witness:")
        _line(console, _indent(witness.pretty()))


def render_verify_text(console: Console, checks: Sequence[VerifyCheck]) -> None:
    table = Table(title="Verification", show_header=True, box=box.ROUNDED)
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Detail", style="dim")
    for check in checks:
        result = "[green]PASS[/]" if check.passed else "[bold red]FAIL[/]"
        table.add_row(check.name, result, check.detail)
    console.print(table)
    failed = sum(1 for c in checks if not c.passed)
    _line(console, f"{len(checks) - failed}/{len(checks)} checks passed")
