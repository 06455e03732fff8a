import logging

import click
from click.core import ParameterSource

import config
from exactla import Field
from commands import coend, demo, evaluate, opposite, verify
from commands.session import EXIT_INPUT_ERROR, Session
from utils.errors import ShcError

logger = logging.getLogger(__name__)


@click.group()
@click.option("--field", "field_spec", default=config.get_field_spec, show_default="$SHC_FIELD or QQ",
              help='Ground field, "QQ" or "GF(p)"')
@click.option("--json/--human", "json_output", default=False, help="Machine-readable output")
@click.option("--log-level", default=None, help="Overrides SHC_LOG_LEVEL")
@click.pass_context
def cli(ctx: click.Context, field_spec: str, json_output: bool, log_level):
    """Exact computations with squared coalgebras over comodule categories"""
    level = logging.getLevelName(log_level.upper()) if log_level else config.get_log_level()
    logging.basicConfig(level=level if isinstance(level, int) else logging.INFO, format=config.LOG_FORMAT)
    try:
        field = Field.parse(field_spec)
    except ShcError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_INPUT_ERROR)
    logger.debug(f"working over {field}")
    pinned = ctx.get_parameter_source("field_spec") is not ParameterSource.DEFAULT or config.has_field_override()
    ctx.obj = Session(field, json_output, config.is_paranoid(), pinned)


cli.add_command(verify)
cli.add_command(coend)
cli.add_command(opposite)
cli.add_command(evaluate)
cli.add_command(demo)


if __name__ == "__main__":
    cli()
