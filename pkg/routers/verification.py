import logging
from typing import Iterable, Optional

import click

from config import WorkbenchSettings
from models import Status, VerificationOutcome
from services.verify import VerificationEngine

logger = logging.getLogger(__name__)

router = click.Group(name="verification", help="Run and list registered claims")

EXIT_MISMATCH = 1
EXIT_RESOURCE = 3


def exit_code(outcomes: Iterable[VerificationOutcome]) -> int:
    """3 if any run hit a resource limit, else 1 if any outcome was unexpected, else 0"""
    outcomes = list(outcomes)
    if any(o.status == Status.RESOURCE_LIMIT for o in outcomes):
        return EXIT_RESOURCE
    if not all(o.as_expected for o in outcomes):
        return EXIT_MISMATCH
    return 0


@router.command()
@click.option("--claim", "claim_id", help="Claim id; all claims when omitted")
@click.option("--from", "start", type=int, help="First n; with --claim, also the smallest dim")
@click.option("--to", "stop", type=int, help="Last n; with --claim, also the largest dim")
@click.option("--budget", type=click.IntRange(min=1), help="Search nodes allowed per instance")
@click.option("--exhaustive", is_flag=True, help="Keep going after the first counterexample")
@click.pass_context
def verify(
    ctx: click.Context,
    claim_id: Optional[str],
    start: Optional[int],
    stop: Optional[int],
    budget: Optional[int],
    exhaustive: bool,
):
    """Check closed forms against the graph oracles, one JSON line per claim"""
    settings: WorkbenchSettings = ctx.obj["settings"]
    engine = VerificationEngine(settings)
    span = (start, stop) if start is not None or stop is not None else None
    if claim_id:
        runs = [engine.run_claim(claim_id, span, budget, exhaustive)]
    else:
        runs = engine.run_all(span, budget, exhaustive)
    outcomes = []
    for outcome in runs:
        click.echo(outcome.model_dump_json(exclude_none=True))
        outcomes.append(outcome)
    ctx.exit(exit_code(outcomes))


@router.command()
@click.pass_context
def claims(ctx: click.Context):
    """List every registered claim with its default range"""
    engine = VerificationEngine(ctx.obj["settings"])
    for summary in engine.list_claims():
        click.echo(summary.model_dump_json())
