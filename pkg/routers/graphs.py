import logging
from typing import Optional

import click

from config import WorkbenchSettings
from models import OutputFormat
from services.export import graph_document, render
from services.families import FamilyGraph, GraphFamilyService
from services.product import ProductDims

logger = logging.getLogger(__name__)

router = click.Group(name="graphs", help="Build, inspect and export graphs")

family_service = GraphFamilyService()

FORMATS = click.Choice([f.value for f in OutputFormat])


def output_options(command):
    command = click.option("--cap", type=click.IntRange(min=1), help="Vertex cap for construction")(command)
    command = click.option("--format", "fmt", type=FORMATS, help="Output format (default json)")(command)
    command = click.option(
        "--export", "export", type=click.Choice([OutputFormat.DOT.value, OutputFormat.JSON.value]),
        help="Export the graph itself as DOT or JSON",
    )(command)
    command = click.option("--report", is_flag=True, help="Attach oracle properties and closed forms")(command)
    return command


def _service(ctx: click.Context, cap: Optional[int]) -> GraphFamilyService:
    settings: WorkbenchSettings = ctx.obj["settings"]
    if cap is not None:
        settings = settings.model_copy(update={"construction_cap": cap})
    return family_service.with_settings(settings)


def emit(
    service: GraphFamilyService,
    built: FamilyGraph,
    report: bool,
    export: Optional[str],
    fmt: Optional[str],
) -> None:
    chosen = OutputFormat(export or fmt or OutputFormat.JSON.value)
    properties = service.report(built.graph) if report and chosen != OutputFormat.DOT else None
    document = graph_document(
        built.family,
        built.graph,
        properties=properties,
        closed_form=built.closed_form if report else None,
        **built.identity,
    )
    click.echo(render(document, built.graph, chosen).payload, nl=False)


@router.command()
@click.argument("n", type=int)
@output_options
@click.pass_context
def ring(ctx: click.Context, n: int, report: bool, export: Optional[str], fmt: Optional[str], cap: Optional[int]):
    """Zero-divisor graph of Z_n"""
    service = _service(ctx, cap)
    emit(service, service.ring(n), report, export, fmt)


@router.command()
@click.argument("dims")
@output_options
@click.pass_context
def product(ctx: click.Context, dims: str, report: bool, export: Optional[str], fmt: Optional[str], cap: Optional[int]):
    """Zero-divisor graph of Z_n1 x ... x Z_nk, dims given as n1,n2,..."""
    service = _service(ctx, cap)
    emit(service, service.product(ProductDims.parse(dims)), report, export, fmt)


@router.command()
@click.argument("target")
@click.option("--strong", is_flag=True, help="Add a loop on every self-annihilating class")
@output_options
@click.pass_context
def typegraph(
    ctx: click.Context,
    target: str,
    strong: bool,
    report: bool,
    export: Optional[str],
    fmt: Optional[str],
    cap: Optional[int],
):
    """Type graph of Z_n, or of a product when TARGET lists dims"""
    service = _service(ctx, cap)
    emit(service, service.typegraph(ProductDims.parse(target), strong=strong), report, export, fmt)


@router.command()
@click.argument("n", type=int)
@output_options
@click.pass_context
def poset(ctx: click.Context, n: int, report: bool, export: Optional[str], fmt: Optional[str], cap: Optional[int]):
    """Zero-divisor graph of the divisor poset D_n"""
    service = _service(ctx, cap)
    emit(service, service.poset(n), report, export, fmt)
