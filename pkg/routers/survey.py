import json
import logging
from typing import List

import click

from config import WorkbenchSettings
from services.errors import InvalidInput
from services.export import survey_csv
from services.families import GraphFamilyService
from services.graph import ALL_PROPERTIES

logger = logging.getLogger(__name__)

router = click.Group(name="survey", help="Property surveys over ranges of n")

family_service = GraphFamilyService()


def _parse_props(text: str) -> List[str]:
    props = [p.strip() for p in text.split(",") if p.strip()]
    unknown = [p for p in props if p not in ALL_PROPERTIES]
    if unknown:
        raise InvalidInput(f"unknown properties: {', '.join(unknown)}")
    if not props:
        raise InvalidInput("--props needs at least one property")
    return props


@router.command()
@click.option("--kind", type=click.Choice(sorted(family_service.survey_builders)), default="ring", show_default=True)
@click.option("--from", "start", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("--to", "stop", type=click.IntRange(min=2), required=True)
@click.option(
    "--props",
    default="clique_number,chromatic_number,girth,diameter",
    show_default=True,
    help="Comma-separated property names",
)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.pass_context
def survey(ctx: click.Context, kind: str, start: int, stop: int, props: str, fmt: str):
    """Tabulate oracle properties for every n in a range"""
    settings: WorkbenchSettings = ctx.obj["settings"]
    names = _parse_props(props)
    rows = family_service.with_settings(settings).survey_rows(kind, start, stop, names)
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    else:
        click.echo(survey_csv(rows, ["n", "vertices", *names]), nl=False)
