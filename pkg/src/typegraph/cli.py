"""typegraph command line.

Registered in pyproject.toml as ``typegraph = "typegraph.cli:cli"``; also
runnable as ``python -m typegraph``.
"""
from __future__ import annotations

import io
import random
from pathlib import Path
from typing import Any

import click
from loguru import logger

from typegraph import __version__
from typegraph.colorings import (
    Coloring,
    color_auxiliary_graph,
    color_shift_graph,
    color_typegraph,
    paper_upper_bound,
    verify_proper,
)
from typegraph.exceptions import (
    EXIT_VIOLATIONS,
    BadRange,
    BudgetExceeded,
    GraphTooLarge,
    TypeGraphError,
)
from typegraph.graphs import Graph, build_Gb, build_typegraph, export_dimacs, to_json
from typegraph.homomorphisms import (
    VertexMap,
    hom_lower,
    hom_project_map,
    hom_reducible,
    hom_upper_map,
    target_view,
    verify_homomorphism,
)
from typegraph.models.enums import HomKind, OutputFormat
from typegraph.models.schemas import ChromaticReport, DecompositionReport
from typegraph.oracle import exact_chromatic, greedy_coloring
from typegraph.order_types import (
    OrderType,
    block_decompose,
    factorize,
    format_blocks,
    growth_order,
    parse_type,
)
from typegraph.utils.export import report_json, table_to_csv
from typegraph.utils.logging import configure_app_logging
from typegraph.utils.settings import get_settings

KINDS = ("typegraph", "gb")


class TypeGraphGroup(click.Group):
    """Maps library errors to their exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except TypeGraphError as exc:
            click.echo(f"error: {exc.detail}", err=True)
            ctx.exit(exc.exit_code)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info(f"Wrote {out}")


def _require(value: Any, flag: str, kind: str) -> Any:
    if value is None:
        raise BadRange(f"{flag} is required for kind '{kind}'")
    return value


def _build(kind: str, type_text: str | None, n: int | None, b: int | None) -> Graph:
    n = _require(n, "--n", kind)
    if kind == "typegraph":
        return build_typegraph(n, parse_type(_require(type_text, "--type", kind)))
    return build_Gb(_require(b, "--b", kind), n)


def _explicit(kind: str, type_text: str | None, n: int | None, b: int | None) -> Coloring:
    """The explicit colouring of the requested graph; its `.graph` is the graph itself."""
    n = _require(n, "--n", kind)
    if kind == "typegraph":
        return color_typegraph(n, parse_type(_require(type_text, "--type", kind)))
    return color_auxiliary_graph(_require(b, "--b", kind), n)


def _parse_range(text: str) -> range:
    """'2..20' or a single integer."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError as exc:
        raise BadRange(f"cannot parse n-range {text!r}") from exc
    if low < 1 or high < low:
        raise BadRange(f"empty or invalid n-range {text!r}")
    return range(low, high + 1)


type_option = click.option("--type", "type_text", help="Order type as a digit string, e.g. 132")
n_option = click.option("--n", "n", type=int, help="Ground set size n")
b_option = click.option("--b", "b", type=int, help="Dimension parameter b of G_b(n)")
out_option = click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), help="Write output to a file"
)
budget_options = [
    click.option("--budget-nodes", type=int, help="Search node cap (default from settings)"),
    click.option("--budget-ms", type=int, help="Search time cap in ms (default from settings)"),
]


def with_budget(func: Any) -> Any:
    for option in reversed(budget_options):
        func = option(func)
    return func


@click.group(cls=TypeGraphGroup)
@click.version_option(__version__, prog_name="typegraph")
@click.option("--debug", is_flag=True, default=None, help="Verbose logging")
@click.option(
    "--log-dir", type=click.Path(file_okay=False, path_type=Path), help="Write rotating log files here"
)
@click.option("--seed", type=int, default=None, help="Seed for randomised orders (0 = natural order)")
def cli(debug: bool | None, log_dir: Path | None, seed: int | None) -> None:
    """
    Type-graphs G(n, τ): build, colour, verify homomorphisms, compute χ.

    \b
    Commands:
      decompose   Factorisation and block decomposition of a type
      build       Materialise G(n, τ) or G_b(n) as DIMACS or JSON
      color       Explicit proper colouring with a properness report
      verify-hom  Check one of the four homomorphism constructions
      chi         Exact chromatic number with a witness
      table       CSV comparison of colour counts

    \b
    Exit codes: 0 ok, 2 invalid input, 3 violations found, 4 budget exceeded.
    """
    configure_app_logging(debug=debug, log_dir=log_dir)
    if seed is not None:
        get_settings().seed = seed


@cli.command()
@click.argument("type_text", metavar="TYPE")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", OutputFormat.JSON.value]),
    default="text",
    show_default=True,
)
@click.option("--n", "n", type=int, help="Also print the finite upper bound at this n")
def decompose(type_text: str, fmt: str, n: int | None) -> None:
    """Print factors, blocks, b and s(i) of TYPE."""
    tau = parse_type(type_text)
    factors = factorize(tau)
    decompositions = [block_decompose(factor) for factor in factors]
    counts = [dec.b for dec in decompositions]

    if fmt == OutputFormat.JSON.value:
        report = DecompositionReport(
            type=str(tau),
            factors=[str(factor) for factor in factors],
            blocks=[[str(block) for block in dec.blocks] for dec in decompositions],
            block_counts=counts,
            prefix_sums=[list(dec.s) for dec in decompositions],
            b_star=max(counts),
            growth_order=None if tau.is_trivial else growth_order(tau),
        )
        click.echo(report_json(report))
        return

    if tau.is_trivial:
        blocks = " | ".join(format_blocks(dec) for dec in decompositions)
        click.echo(f"trivial; blocks: {blocks}; b=1")
        return
    click.echo(f"factors: {' | '.join(map(str, factors))}; b*={max(counts)}")
    for dec in decompositions:
        s = ",".join(map(str, dec.s))
        click.echo(f"{dec.source}: {format_blocks(dec)}; b={dec.b}; s=({s})")
    click.echo(f"growth order: {growth_order(tau)}")
    if n is not None:
        bound = paper_upper_bound(tau, n)
        click.echo(f"upper bound at n={n}: {'undefined' if bound is None else f'{bound:.3f}'}")


@cli.command()
@click.argument("kind", type=click.Choice(KINDS))
@type_option
@n_option
@b_option
@click.option(
    "--format",
    "fmt",
    type=click.Choice([OutputFormat.DIMACS.value, OutputFormat.JSON.value]),
    default=OutputFormat.DIMACS.value,
    show_default=True,
)
@out_option
def build(
    kind: str, type_text: str | None, n: int | None, b: int | None, fmt: str, out: Path | None
) -> None:
    """Materialise G(n, τ) (typegraph) or G_b(n) (gb)."""
    graph = _build(kind, type_text, n, b)
    if fmt == OutputFormat.JSON.value:
        _emit(report_json(to_json(graph)), out)
        return
    buffer = io.StringIO()
    export_dimacs(graph, buffer)
    _emit(buffer.getvalue(), out)


@cli.command()
@click.argument("kind", type=click.Choice(KINDS))
@type_option
@n_option
@b_option
@click.option("--shift", is_flag=True, help="Use the f(i, j) colouring of G(n, 132)")
@out_option
def color(
    kind: str, type_text: str | None, n: int | None, b: int | None, shift: bool, out: Path | None
) -> None:
    """Colour G(n, τ) or G_b(n) with the explicit scheme and check properness."""
    n = _require(n, "--n", kind)
    coloring: Coloring
    if kind == "gb":
        coloring = color_auxiliary_graph(_require(b, "--b", kind), n)
    elif shift:
        if type_text not in (None, "132"):
            raise BadRange("--shift applies to type 132 only")
        coloring = color_shift_graph(n)
    else:
        coloring = color_typegraph(n, parse_type(_require(type_text, "--type", kind)))

    check = verify_proper(coloring.graph, coloring)
    _emit(report_json(coloring.to_report(check)), out)
    if out is not None:
        click.echo(f"proper: {'yes' if check.proper else 'no'}; palette: {coloring.palette_size}")
    if not check.proper:
        for u, v in check.violations:
            click.echo(f"violation: {coloring.graph.vertices[u]} - {coloring.graph.vertices[v]}", err=True)
        click.get_current_context().exit(EXIT_VIOLATIONS)


def _vertex_map(which: HomKind, tau: OrderType, n: int, factor: int) -> VertexMap:
    if which is HomKind.LOWER:
        return hom_lower(tau, n)
    if which is HomKind.UPPER:
        return hom_upper_map(tau, n)
    if which is HomKind.PROJECT:
        return hom_project_map(tau, factor, n)
    return hom_reducible(tau, n)


@cli.command("verify-hom")
@click.argument("which", type=click.Choice([kind.value for kind in HomKind]))
@click.option("--type", "type_text", required=True, help="Order type τ")
@click.option("--n", "n", type=int, required=True, help="Ground set size of the source graph")
@click.option("--factor", type=int, default=1, show_default=True, help="Factor index for 'project'")
@out_option
def verify_hom(which: str, type_text: str, n: int, factor: int, out: Path | None) -> None:
    """Check that a homomorphism construction preserves every edge."""
    m = _vertex_map(HomKind(which), parse_type(type_text), n, factor)
    src = build_typegraph(m.source["n"], parse_type(m.source["type"]))
    report = verify_homomorphism(src, target_view(m), m)
    _emit(report_json(report), out)
    if not report.ok:
        click.get_current_context().exit(EXIT_VIOLATIONS)


@cli.command()
@click.argument("kind", type=click.Choice(KINDS))
@type_option
@n_option
@b_option
@with_budget
@out_option
def chi(
    kind: str,
    type_text: str | None,
    n: int | None,
    b: int | None,
    budget_nodes: int | None,
    budget_ms: int | None,
    out: Path | None,
) -> None:
    """Exact chromatic number of G(n, τ) or G_b(n).

    The explicit colouring seeds the upper bound of the search.
    """
    explicit = _explicit(kind, type_text, n, b)
    try:
        result = exact_chromatic(
            explicit.graph, budget_nodes=budget_nodes, budget_ms=budget_ms, upper_hint=explicit
        )
    except BudgetExceeded as exc:
        bracket = ChromaticReport(
            chi=None,
            lower=exc.lower,
            upper=exc.upper,
            colors=[],
            nodes_explored=exc.nodes_explored,
            elapsed_ms=0.0,
        )
        _emit(report_json(bracket), out)
        raise
    _emit(report_json(result.to_report()), out)


@cli.command()
@click.option(
    "--type",
    "types",
    multiple=True,
    help="Type to tabulate (repeatable); defaults to the configured catalogue",
)
@click.option("--n-range", default="2..8", show_default=True, help="Range of n, e.g. 2..20")
@with_budget
@out_option
def table(
    types: tuple[str, ...],
    n_range: str,
    budget_nodes: int | None,
    budget_ms: int | None,
    out: Path | None,
) -> None:
    """CSV of explicit palette size, exact χ and greedy colour count per (type, n)."""
    settings = get_settings()
    taus = [parse_type(text) for text in (types or settings.catalogue)]
    rows: list[dict[str, Any]] = []
    for tau in taus:
        for n in _parse_range(n_range):
            if n < tau.width:
                continue
            try:
                coloring = color_typegraph(n, tau)
            except GraphTooLarge as exc:
                logger.info(f"Skipping {tau}, n={n}: {exc.detail}")
                continue
            graph = coloring.graph
            order = list(range(graph.order))
            if settings.seed:
                random.Random(settings.seed).shuffle(order)
            try:
                exact: int | None = exact_chromatic(
                    graph, budget_nodes, budget_ms, upper_hint=coloring
                ).chi
            except BudgetExceeded as exc:
                logger.info(f"chi_exact left empty for {tau}, n={n}: {exc.detail}")
                exact = None
            rows.append(
                {
                    "type": str(tau),
                    "n": n,
                    "paper_colors": coloring.palette_size,
                    "chi_exact": exact,
                    "greedy": greedy_coloring(graph, order).palette_size,
                }
            )
    _emit(table_to_csv(rows), out)
