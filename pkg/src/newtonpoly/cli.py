"""
Command-line interface for newtonpoly.

Every command prints a JSON payload on stdout; logs, tables and progress
go to stderr. Exit codes: 0 success, 1 negative verdict, 2 input error.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable

import click
import numpy as np
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from .analysis.catalog import summary_polytopes, trigonal_witness
from .analysis.hulls import is_maximal
from .analysis.report import analyze
from .config.settings import NewtonPolyConfig
from .core.batch_runner import BatchRunner
from .core.errors import NewtonPolyError
from .core.results import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK, CommandResult
from .enumeration.enumerator import METHODS, enumerate_by_genus
from .enumeration.moduli import exceptional_g1_polytopes, m_value, moduli_table
from .lattice.transforms import UnimodularAffineMap, apply_map, canonical_key
from .loops.legal_loops import dual_loop, loop_bounds, loop_of_polytope, verify_twelve
from .nondegeneracy.checker import genus_of_model, is_nondegenerate
from .nondegeneracy.conic import conic_ea
from .nondegeneracy.laurent import format_polynomial
from .nondegeneracy.oracle import brute_force_face_check
from .nondegeneracy.translation import find_nondegenerate_translation
from .utils.serialization import (
    load_json,
    load_polygon,
    loop_from_json,
    polygon_from_json,
    read_polynomial,
    write_corpus,
)

console = Console(stderr=True)


def setup_logging(verbose: bool = False) -> logging.Logger:
    """Setup logging with a Rich handler on stderr."""
    level = logging.DEBUG if verbose else logging.INFO

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, rich_tracebacks=True, show_path=False)],
        force=True,
    )
    return logging.getLogger("newtonpoly")


def emit(ctx, result: CommandResult) -> None:
    """Print the payload and exit with the result's code."""
    indent = 2 if ctx.obj["config"].output.pretty else None
    click.echo(json.dumps(result.to_json(), indent=indent))
    ctx.exit(result.exit_code)


def run_command(ctx, body: Callable[[], CommandResult]) -> None:
    """Run a command body, mapping precondition failures to exit 2."""
    try:
        result = body()
    except NewtonPolyError as e:
        ctx.obj["logger"].error(str(e))
        result = CommandResult.failure(str(e))
    emit(ctx, result)


@click.group()
@click.option("--config", "config_file", type=click.Path(path_type=Path), help="YAML configuration file")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.option("--pretty/--json", default=None, help="Indent JSON output (default: compact)")
@click.option("--seed", type=int, default=None, help="Seed for randomized checks")
@click.pass_context
def cli(ctx, config_file, verbose, pretty, seed):
    """newtonpoly: lattice polygons and nondegenerate curve models"""
    ctx.ensure_object(dict)
    logger = setup_logging(verbose)
    try:
        config = NewtonPolyConfig.load(config_file)
    except (FileNotFoundError, ValueError) as e:
        console.print(f"[red]Failed to load configuration: {e}[/red]")
        ctx.exit(EXIT_INPUT_ERROR)
    if pretty is not None:
        config.output.pretty = pretty
    if seed is not None:
        config.output.seed = seed
    ctx.obj["config"] = config
    ctx.obj["logger"] = logger


def _analyze_file(path: str) -> Any:
    return analyze(load_polygon(path))


def invariance_warnings(path: str, checks: int, seed: int) -> list:
    """Re-analyze random unimodular images of the polygon and report any drift."""
    polygon = load_polygon(path)
    report = analyze(polygon)
    rng = np.random.default_rng(seed)
    warnings = []
    for _ in range(checks):
        m = UnimodularAffineMap.random(rng)
        image = apply_map(m, polygon)
        moved = analyze(image)
        if canonical_key(image) != canonical_key(polygon):
            warnings.append(f"canonical form changed under {m.to_json()}")
        for name in ("g", "r", "c", "m", "is_maximal", "is_hyperelliptic"):
            if getattr(moved, name) != getattr(report, name):
                warnings.append(f"{name} changed under {m.to_json()}")
    return warnings


@cli.command("analyze")
@click.argument("polygon_files", nargs=-1, required=True)
@click.option("--invariance-checks", type=int, default=0, help="Random unimodular images to re-check per file")
@click.option("--n-jobs", type=int, default=None, help="Parallel workers for several files")
@click.pass_context
def analyze_cmd(ctx, polygon_files, invariance_checks, n_jobs):
    """Full polygon report: genus, column vectors, m, maximality, loops."""
    config = ctx.obj["config"]
    runner = BatchRunner(config, ctx.obj["logger"])
    results = runner.run(list(polygon_files), _analyze_file, n_jobs=n_jobs)

    if invariance_checks > 0:
        for path, result in results.items():
            if result.success:
                result.warnings.extend(invariance_warnings(path, invariance_checks, config.output.seed))
                if result.warnings:
                    result.exit_code = EXIT_NEGATIVE

    if len(results) == 1:
        emit(ctx, next(iter(results.values())))
        return

    summary = runner.get_batch_summary(results)
    console.print(
        Panel.fit(
            f"[bold]Batch Summary[/bold]\n"
            f"Inputs: {summary['total_inputs']}\n"
            f"Successful: {summary['successful']}\n"
            f"Failed: {summary['failed']}\n"
            f"Total Time: {summary['total_execution_time']:.2f}s",
            title="analyze",
        )
    )
    payload = {path: result.to_json() for path, result in results.items()}
    emit(ctx, CommandResult(success=summary["failed"] == 0, payload=payload, exit_code=runner.exit_code(results)))


@cli.command("enumerate")
@click.option("--genus", "-g", type=int, required=True, help="Number of interior lattice points")
@click.option("--method", type=click.Choice(METHODS), default="hull_recursion", show_default=True)
@click.option("--out", "-o", type=click.Path(path_type=Path), help="JSON-lines corpus file (default: stdout)")
@click.option("--n-jobs", type=int, default=None, help="joblib workers (default from config)")
@click.pass_context
def enumerate_cmd(ctx, genus, method, out, n_jobs):
    """All polygons of one genus up to equivalence."""
    config = ctx.obj["config"]

    def body() -> CommandResult:
        corpus = enumerate_by_genus(
            genus,
            method=method,
            n_jobs=n_jobs or config.enumeration.n_jobs,
            show_progress=config.enumeration.show_progress,
            max_genus=config.enumeration.max_genus,
        )
        if out is None:
            for polygon in corpus:
                click.echo(json.dumps(polygon.to_json()))
            ctx.exit(EXIT_OK)
        write_corpus(corpus, out)
        console.print(f"[green]{len(corpus)} classes of genus {genus} written to {out}[/green]")
        return CommandResult(
            success=True,
            payload={"genus": genus, "method": method, "classes": len(corpus), "out": str(out)},
        )

    run_command(ctx, body)


@cli.command("check")
@click.argument("polynomial")
@click.option("--oracle", is_flag=True, help="Also search small extension fields for witnesses")
@click.option("--oracle-degree", type=int, default=None, help="Largest extension degree for --oracle (default from config)")
@click.pass_context
def check_cmd(ctx, polynomial, oracle, oracle_degree):
    """Face-by-face nondegeneracy of a polynomial literal or file."""
    config = ctx.obj["config"]

    def body() -> CommandResult:
        f = read_polynomial(polynomial, max_prime=config.nondegeneracy.max_prime)
        result = is_nondegenerate(f)
        payload = {"polynomial": format_polynomial(f), **result.to_json()}
        if result.nondegenerate:
            payload["genus"] = genus_of_model(f)
        if oracle:
            degree = oracle_degree or config.nondegeneracy.oracle_max_degree
            solutions = [brute_force_face_check(f, v.face, degree) for v in result.verdicts]
            payload["oracle"] = [None if s is None else s.to_json() for s in solutions]
        return CommandResult(
            success=True,
            payload=payload,
            exit_code=EXIT_OK if result.nondegenerate else EXIT_NEGATIVE,
        )

    run_command(ctx, body)


@cli.command("translate")
@click.argument("polynomial")
@click.pass_context
def translate_cmd(ctx, polynomial):
    """Search F_p^2 for a nondegenerate translate f(x - x0, y - y0)."""
    config = ctx.obj["config"]

    def body() -> CommandResult:
        f = read_polynomial(polynomial, max_prime=config.nondegeneracy.max_prime)
        shift = find_nondegenerate_translation(
            f, require_origin=config.nondegeneracy.translation_requires_origin
        )
        return CommandResult(
            success=True,
            payload={"polynomial": format_polynomial(f), "translation": None if shift is None else list(shift)},
            exit_code=EXIT_OK if shift is not None else EXIT_NEGATIVE,
        )

    run_command(ctx, body)


@cli.command("loop")
@click.argument("source", type=click.Path(path_type=Path))
@click.pass_context
def loop_cmd(ctx, source):
    """Legal loop, dual and twelve check of a maximal polygon or a loop file."""

    def body() -> CommandResult:
        data = load_json(source)
        if isinstance(data, dict) and "vectors" in data:
            legal = loop_from_json(data)
            bounds = None
        else:
            polygon = polygon_from_json(data)
            legal = loop_of_polytope(polygon)
            bounds = loop_bounds(polygon)
        twelve = verify_twelve(legal)
        payload = {
            "vectors": legal.to_json()["vectors"],
            "dual": dual_loop(legal).to_json()["vectors"],
            "twelve": twelve.to_json(),
        }
        if bounds is not None:
            payload["bounds"] = bounds
        return CommandResult(success=True, payload=payload, exit_code=EXIT_OK if twelve.holds else EXIT_NEGATIVE)

    run_command(ctx, body)


@cli.command("moduli-table")
@click.option("--gmax", type=int, required=True, help="Largest genus in the table")
@click.pass_context
def moduli_table_cmd(ctx, gmax):
    """Largest m over maximal nonhyperelliptic polygons, genus 2 .. gmax."""
    config = ctx.obj["config"]

    def body() -> CommandResult:
        rows = moduli_table(gmax, max_genus=config.enumeration.max_genus)
        table = Table(title="Moduli bounds")
        table.add_column("g", justify="right", style="cyan")
        table.add_column("max m (nonhyp.)", justify="right")
        table.add_column("2g - 1", justify="right")
        table.add_column("nondegenerate dim", justify="right")
        table.add_column("claimed", justify="right")
        table.add_column("witnesses", justify="right")
        for row in rows:
            color = "green" if row.consistent else "red"
            table.add_row(
                str(row.g),
                str(row.max_m_maximal_nonhyp),
                str(row.hyperelliptic_dim),
                f"[{color}]{row.nondegenerate_dim}[/{color}]",
                str(row.claimed_dim),
                str(len(row.witnesses)),
            )
        console.print(table)
        consistent = all(row.consistent for row in rows)
        return CommandResult(
            success=True,
            payload=[row.to_json() for row in rows],
            exit_code=EXIT_OK if consistent else EXIT_NEGATIVE,
        )

    run_command(ctx, body)


@cli.command("conic-ea")
@click.argument("coefficients", nargs=6, type=int)
@click.option("--p", "prime", type=int, required=True, help="Field characteristic")
@click.pass_context
def conic_ea_cmd(ctx, coefficients, prime):
    """E_A of c00 + c10 x + c01 y + c20 x^2 + c11 xy + c02 y^2 over F_p."""

    def body() -> CommandResult:
        determinant = conic_ea(*coefficients, p=prime)
        return CommandResult(
            success=True,
            payload=determinant.to_json(),
            exit_code=EXIT_OK if determinant.value else EXIT_NEGATIVE,
        )

    run_command(ctx, body)


@cli.command("exceptional")
@click.pass_context
def exceptional_cmd(ctx):
    """Polygons with g1 = 1 attaining m = 2g + 2."""

    def body() -> CommandResult:
        polygons = exceptional_g1_polytopes()
        payload = [
            {**p.to_json(), "genus": p.genus, "m": m_value(p), "is_maximal": is_maximal(p)}
            for p in polygons
        ]
        return CommandResult(success=True, payload=payload)

    run_command(ctx, body)


@cli.command("catalog")
@click.option("--witness-genus", type=int, multiple=True, help="Also list the trigonal witness of these genera (>= 5)")
@click.pass_context
def catalog_cmd(ctx, witness_genus):
    """Named polygons modelling every curve of genus at most four."""

    def body() -> CommandResult:
        payload = {"summary": [entry.to_json() for entry in summary_polytopes()]}
        if witness_genus:
            payload["witnesses"] = {
                str(g): {**trigonal_witness(g).to_json(), "m": m_value(trigonal_witness(g))} for g in witness_genus
            }
        return CommandResult(success=True, payload=payload)

    run_command(ctx, body)


@cli.command("init-config")
@click.option("--output", "-o", type=click.Path(path_type=Path), default="newtonpoly_config.yaml",
              help="Output configuration file path")
@click.pass_context
def init_config(ctx, output):
    """Write the default configuration to a YAML file."""
    try:
        ctx.obj["config"].save_to_file(output)
    except OSError as e:
        console.print(f"[red]Failed to write configuration: {e}[/red]")
        ctx.exit(EXIT_INPUT_ERROR)
    console.print(f"[green]Configuration saved to: {output}[/green]")
    emit(ctx, CommandResult(success=True, payload={"config": str(output)}))


if __name__ == "__main__":
    cli()
