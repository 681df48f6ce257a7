"""
Main entry point for the Centrex CLI.

Every subcommand reads one input document (a path, or ``-`` for stdin) and
prints its result as text or JSON. Exit codes: 0 on success, 1 when a
verification fails, 2 on usage, parse or input errors.
"""

import importlib.metadata
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional

import typer
from rich.console import Console
from rich.markup import escape

from centrex import __version__
from centrex.algebra.centralizer import (
    centralizer_basis,
    frobenius_dimension,
    normalized_basis,
)
from centrex.algebra.errors import CentrexError, EmptySpace, InternalInconsistency
from centrex.algebra.poly_matrix import char_matrix
from centrex.algebra.rcf import (
    characteristic_polynomial,
    invariant_factors,
    minimal_polynomial,
    rcf_transform,
)
from centrex.algebra.smith import snf
from centrex.algebra.wild import invertible_witness_search, simultaneous_intertwiners
from centrex.config.settings import settings
from centrex.io import render
from centrex.io.document import InputDocument, parse_input
from centrex.models.result_models import OutputFormat, WitnessStatus
from centrex.utils.logging import initialize_logging
from centrex.validator.result_validator import ResultValidator

logger = logging.getLogger(__name__)

INTERTWINE_NAMES = ("A", "B", "Aprime", "Bprime")

app = typer.Typer(
    name="centrex",
    help="Exact centralizers, canonical forms and intertwiners of matrices over GF(p) and Q",
    add_completion=False,
)

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)

# Define typer arguments at module level to avoid B008
_FILE_ARG = typer.Argument(..., help="Input document, or - to read stdin.")
_MATRIX_OPT = typer.Option(
    None, "--matrix", "-m", help="Matrix to use (default: A, or the only matrix)."
)
_FORMAT_OPT = typer.Option(
    None, "--format", "-f", case_sensitive=False, help="Output format: text or json."
)


def get_version() -> str:
    """Get the installed version of Centrex."""
    try:
        return importlib.metadata.version("centrex")
    except importlib.metadata.PackageNotFoundError:
        return __version__


@app.callback(invoke_without_command=True)
def callback(
    ctx: typer.Context,
    version: Optional[bool] = typer.Option(
        None, "--version", "-v", help="Show the application version and exit."
    ),
    debug: bool = typer.Option(False, "--debug", "-d", help="Log debug details to stderr."),
) -> None:
    """Centrex - exact linear algebra for centralizers and similarity."""
    if version:
        console.print(f"[bold green]Centrex Version:[/] {get_version()}")
        raise typer.Exit()

    initialize_logging(debug=debug)

    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        raise typer.Exit()


def _fail(message: str, code: int) -> typer.Exit:
    err_console.print(f"[bold red]Error:[/] {escape(message)}", soft_wrap=True)
    return typer.Exit(code)


@contextmanager
def _handle_errors() -> Iterator[None]:
    """Map library errors onto exit codes with a one-line diagnostic."""
    try:
        yield
    except InternalInconsistency as exc:
        logger.exception("internal consistency check failed")
        raise _fail(f"internal error: {exc}", 1) from exc
    except CentrexError as exc:
        raise _fail(str(exc), 2) from exc


def _read_document(path: str) -> InputDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise _fail(f"cannot read {path}: {exc}", 2) from exc
    return parse_input(text)


def _resolve_format(output_format: Optional[OutputFormat]) -> OutputFormat:
    return output_format or settings.get_output_format()


def _emit_json(payload: Any) -> None:
    console.print(render.dump_json(payload), markup=False, soft_wrap=True)


@app.command("snf")
def snf_command(
    path: str = _FILE_ARG,
    matrix: Optional[str] = _MATRIX_OPT,
    output_format: Optional[OutputFormat] = _FORMAT_OPT,
) -> None:
    """Smith Normal Form of xI - A with both unimodular transforms."""
    with _handle_errors():
        name, a = _read_document(path).select(matrix)
        result = snf(char_matrix(a))
        if _resolve_format(output_format) is OutputFormat.JSON:
            _emit_json(render.snf_output(name, result))
        else:
            render.render_snf_text(console, name, result)


@app.command("rcf")
def rcf_command(
    path: str = _FILE_ARG,
    matrix: Optional[str] = _MATRIX_OPT,
    output_format: Optional[OutputFormat] = _FORMAT_OPT,
) -> None:
    """Invariant factors, rational canonical form R and P with P^-1 A P = R."""
    with _handle_errors():
        name, a = _read_document(path).select(matrix)
        result = rcf_transform(a)
        char_poly = characteristic_polynomial(a, result)
        min_poly = minimal_polynomial(a, result)
        if _resolve_format(output_format) is OutputFormat.JSON:
            payload = render.rcf_output(name, result, char_poly, min_poly)
            _emit_json(payload)
        else:
            render.render_rcf_text(console, name, result, char_poly, min_poly)


@app.command("centralizer")
def centralizer_command(
    path: str = _FILE_ARG,
    matrix: Optional[str] = _MATRIX_OPT,
    output_format: Optional[OutputFormat] = _FORMAT_OPT,
    normalize: bool = typer.Option(
        False, "--normalize", "-n", help="Print an rref-normalized basis instead."
    ),
) -> None:
    """Dimension and an explicit basis of {B : AB = BA}."""
    with _handle_errors():
        name, a = _read_document(path).select(matrix)
        basis = centralizer_basis(a)
        normalized = normalized_basis(basis) if normalize else None
        if _resolve_format(output_format) is OutputFormat.JSON:
            payload = (
                render.normalized_output(normalized)
                if normalized is not None
                else render.centralizer_output(basis)
            )
            _emit_json(payload)
        else:
            render.render_centralizer_text(console, name, basis, normalized)


@app.command("dim")
def dim_command(
    path: str = _FILE_ARG,
    matrix: Optional[str] = _MATRIX_OPT,
    output_format: Optional[OutputFormat] = _FORMAT_OPT,
) -> None:
    """Dimension of the centralizer from the invariant factor degrees."""
    with _handle_errors():
        name, a = _read_document(path).select(matrix)
        factors = invariant_factors(a)
        output = render.dim_output(
            name, a.spec.name, frobenius_dimension(factors), [int(f.degree) for f in factors]
        )
        if _resolve_format(output_format) is OutputFormat.JSON:
            _emit_json(output)
        else:
            render.render_dim_text(console, output)


@app.command("intertwine")
def intertwine_command(
    path: str = _FILE_ARG,
    output_format: Optional[OutputFormat] = _FORMAT_OPT,
    witness: bool = typer.Option(
        False, "--witness", "-w", help="Search for an invertible element."
    ),
    trials: Optional[int] = typer.Option(
        None, "--trials", "-t", min=1, help="Random samples for --witness."
    ),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help="Sampler seed."),
) -> None:
    """
    All U with U A = A' U and U B = B' U.

    The document must define matrices A, B, Aprime and Bprime.
    """
    with _handle_errors():
        a, b, a_prime, b_prime = _read_document(path).require(INTERTWINE_NAMES)
        space = simultaneous_intertwiners(a, b, a_prime, b_prime)
        status, found = WitnessStatus.NOT_REQUESTED, None
        if witness:
            trials = trials or settings.get_wild_trials()
            seed = settings.get_wild_seed() if seed is None else seed
            try:
                found = invertible_witness_search(space, trials, seed)
                status = WitnessStatus.FOUND if found is not None else WitnessStatus.UNKNOWN
            except EmptySpace:
                status = WitnessStatus.NONE
        if _resolve_format(output_format) is OutputFormat.JSON:
            payload = render.intertwine_output(space, status, found)
            _emit_json(payload)
        else:
            render.render_intertwine_text(console, space, status, found)


@app.command("verify")
def verify_command(
    path: str = _FILE_ARG,
    matrix: Optional[str] = _MATRIX_OPT,
    output_format: Optional[OutputFormat] = _FORMAT_OPT,
    samples: Optional[int] = typer.Option(
        None, "--samples", min=1, help="Random polynomial columns for the phi check."
    ),
) -> None:
    """Cross-check every pipeline stage against exact identities and oracles."""
    with _handle_errors():
        _, a = _read_document(path).select(matrix)
        validator = ResultValidator(
            a, random_samples=samples or settings.get_random_samples()
        )
        checks = validator.run()
        if _resolve_format(output_format) is OutputFormat.JSON:
            _emit_json(checks)
        else:
            render.render_verify_text(console, checks)
    if not validator.passed:
        raise typer.Exit(1)


if __name__ == "__main__":
    app()
