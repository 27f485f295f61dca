# kashaev_cli.py
"""Command line front end.

    python kashaev_cli.py info corpus/clasp_kink.pd
    python kashaev_cli.py signature clasp_kink --theta 3.14159265,3.14159265
    python kashaev_cli.py grid clasp_kink --n 16 --out grid.csv
    python kashaev_cli.py alexander whitehead
    python kashaev_cli.py dump-matrix clasp_kink --which tau-sym --reduced
    python kashaev_cli.py verify --random 20 --seed 7

DIAGRAM is a corpus name, a path to a PD file or inline PD text. Results are
JSON on stdout; errors are JSON on stderr with exit code 1 (bad input or a bad
command line) or 2 (an internal consistency alarm).
"""
import json
import logging
import sys
from typing import Optional

import click
from rich.console import Console
from rich.table import Table

import settings
from corpus import CORPUS, load_diagram
from diagram import ColoredDiagram, read_diagram
from errors import CommandLineError, InvalidPointError, KashaevError
from invariants import conway, diagram_info, signature_at, signature_grid, write_grid_csv, xi_invariant
from laurent import TorusPoint
from matrices import build_K, build_tau_numeric, build_tau_symbolic, delete_marked
from matrices.utils import matrix_json
from verification import DEFAULT_RANDOM_DIAGRAMS, DEFAULT_SEED, SUITES, Verifier

logger = logging.getLogger("kashaev")


def _load(source: str, mark: Optional[int]) -> ColoredDiagram:
    d = load_diagram(source) if source in CORPUS else read_diagram(source)
    return d.with_mark(mark) if mark is not None else d


def _fail(exc: KashaevError):
    logger.debug(f"[CLI] {exc.kind}: {exc.message}")
    click.echo(json.dumps(exc.to_dict()), err=True)
    raise click.exceptions.Exit(exc.exit_code)


class KashaevGroup(click.Group):
    """Turns KashaevError and click usage errors into JSON on stderr and an exit code."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as exc:
            _fail(CommandLineError(exc.format_message()))

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            _fail(CommandLineError(exc.format_message(), command=ctx.invoked_subcommand))
        except KashaevError as exc:
            _fail(exc)


diagram_argument = click.argument("diagram")
mark_option = click.option("--mark", type=int, default=None, help="Marked edge (default: smallest color-1 edge).")
tol_option = click.option("--tol", type=click.FloatRange(min=0.0, min_open=True), default=None,
                          help="Relative zero threshold (env KASHAEV_TOL).")


@click.group(cls=KashaevGroup)
@click.option("--log-json", is_flag=True, help="Log JSON lines (env KASHAEV_LOG_JSON).")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
def cli(log_json: bool, verbose: bool):
    """Signature, nullity and Conway function of colored links."""
    settings.configure_logging(json_logs=True if log_json else None, level="DEBUG" if verbose else None)


@cli.command()
@diagram_argument
@mark_option
def info(diagram: str, mark: Optional[int]):
    """Crossings, regions, colors, w_m and linking numbers."""
    d = _load(diagram, mark)
    click.echo(diagram_info(d).model_dump_json(indent=2))


@cli.command()
@diagram_argument
@click.option("--theta", required=True, help="Comma separated angles in radians, one per color.")
@click.option("--method", type=click.Choice(["eigh", "ldl"]), default="eigh", show_default=True)
@mark_option
@tol_option
def signature(diagram: str, theta: str, method: str, mark: Optional[int], tol: Optional[float]):
    """Signature and nullity at one point of the torus."""
    d = _load(diagram, mark)
    result = signature_at(d, TorusPoint.parse(theta), tol, method)
    click.echo(result.model_dump_json(indent=2))


@cli.command()
@diagram_argument
@click.option("--n", "resolution", type=click.IntRange(min=1), default=settings.DEFAULT_GRID_RESOLUTION,
              show_default=True, help="Points per axis.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="CSV file (default stdout).")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes (env KASHAEV_JOBS).")
@mark_option
@tol_option
def grid(diagram: str, resolution: int, out: Optional[str], jobs: Optional[int], mark: Optional[int],
         tol: Optional[float]):
    """Signature and nullity on a uniform grid, as CSV."""
    d = _load(diagram, mark)
    results = signature_grid(d, resolution, jobs, tol)
    if out is None:
        write_grid_csv(results, sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            write_grid_csv(results, f)
        logger.info(f"[Grid] wrote {len(results)} rows to {out}")


@cli.command()
@diagram_argument
@click.option("--lenient", is_flag=True, help="Report a route mismatch instead of failing.")
@mark_option
def alexander(diagram: str, lenient: bool, mark: Optional[int]):
    """Conway function up to sign, its square and the Alexander polynomial."""
    d = _load(diagram, mark)
    click.echo(conway(d, strict=not lenient).to_report().model_dump_json(indent=2))


@cli.command("dump-matrix")
@diagram_argument
@click.option("--which", type=click.Choice(["tau", "tau-sym", "K"]), required=True)
@click.option("--theta", default=None, help="Point for --which tau.")
@click.option("--reduced", is_flag=True, help="Delete the two regions beside the marked edge.")
@mark_option
def dump_matrix(diagram: str, which: str, theta: Optional[str], reduced: bool, mark: Optional[int]):
    """Print tau(omega), tau(t^2) or K as JSON."""
    d = _load(diagram, mark)
    if which == "tau":
        if theta is None:
            raise InvalidPointError("--which tau needs a point; pass --theta")
        m = build_tau_numeric(d, d.regions, TorusPoint.parse(theta))
    elif which == "tau-sym":
        m = build_tau_symbolic(d)
    else:
        m = build_K(d)
    if reduced:
        m = delete_marked(m, d)
    click.echo(matrix_json(m))


@cli.command()
@diagram_argument
@mark_option
@tol_option
def xi(diagram: str, mark: Optional[int], tol: Optional[float]):
    """Signature at (-1, ..., -1) with one color per component."""
    d = _load(diagram, mark)
    click.echo(json.dumps({"xi": xi_invariant(d, tol)}))


@cli.command()
@click.option("--random", "random_count", type=int, default=DEFAULT_RANDOM_DIAGRAMS, show_default=True,
              help="Random closed-braid diagrams per suite.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--suite", "suites", type=click.Choice(SUITES), multiple=True, help="Run only these suites.")
@tol_option
def verify(random_count: int, seed: int, suites, tol: Optional[float]):
    """Golden values, identities on random diagrams and the Fox-calculus oracle."""
    results = Verifier(random_count=random_count, seed=seed, tol=tol).run_all(suites or None)

    table = Table(title="Verification")
    table.add_column("Suite")
    table.add_column("Check")
    table.add_column("Result")
    table.add_column("Detail", overflow="fold")
    for row in results:
        table.add_row(row.suite, row.name, "[green]pass[/green]" if row.passed else "[red]FAIL[/red]", row.detail)
    console = Console()
    console.print(table)

    failed = [row for row in results if not row.passed]
    console.print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        sys.exit(2)


if __name__ == "__main__":
    cli()
