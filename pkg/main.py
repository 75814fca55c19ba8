import logging
import sys
from typing import List, Optional

import click

from config import load_settings
from routers import graphs, survey, verification
from services.errors import InvalidInput, ResourceLimitExceeded, UnknownClaim

logger = logging.getLogger(__name__)

EXIT_USAGE = 2
EXIT_RESOURCE = 3


class CommandFailed(click.ClickException):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class WorkbenchGroup(click.Group):
    """Maps workbench errors onto the CLI exit codes"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (InvalidInput, UnknownClaim) as e:
            raise CommandFailed(str(e), EXIT_USAGE) from e
        except ResourceLimitExceeded as e:
            raise CommandFailed(str(e), EXIT_RESOURCE) from e


@click.group(cls=WorkbenchGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="YAML settings file")
@click.option("--verbose", is_flag=True, help="Log debug output to stderr")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], verbose: bool):
    """Zero-divisor graph workbench"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        settings = load_settings(config_path)
    except InvalidInput as e:
        raise CommandFailed(str(e), EXIT_USAGE) from e
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


def include_router(group: click.Group, router: click.Group) -> None:
    for name, command in router.commands.items():
        group.add_command(command, name)


include_router(cli, graphs.router)
include_router(cli, survey.router)
include_router(cli, verification.router)


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on argv and return its exit code"""
    try:
        result = cli.main(args=argv, prog_name="zdg", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(run())
