import functools
import json
import logging
from dataclasses import dataclass

import click
from pydantic import ValidationError

from exactla import Field
from serialization import dumps, report_to_model
from utils.errors import FieldMismatch, ShcError
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_AXIOM_FAILURE = 1
EXIT_INPUT_ERROR = 2


@dataclass
class Session:
    """Settings shared by every subcommand of one run"""
    field: Field
    json_output: bool = False
    paranoid: bool = False
    # set when --field or SHC_FIELD chose the field
    field_pinned: bool = False

    def field_for(self, spec: str) -> Field:
        """Field of a stored document; a pinned session field must agree with it"""
        stored = Field.parse(spec)
        if self.field_pinned and stored != self.field:
            raise FieldMismatch(f"document is over {stored} but the session works over {self.field}")
        return stored


pass_session = click.make_pass_decorator(Session)


def handles_input_errors(command):
    """Malformed input of any kind ends the run with exit code 2"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ShcError, ValidationError, json.JSONDecodeError, OSError) as exc:
            logger.debug("input error", exc_info=True)
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            click.get_current_context().exit(EXIT_INPUT_ERROR)
    return wrapper


def emit_report(session: Session, report: VerificationReport, title: str = ""):
    """Print the report and finish with 0 when every entry passed, 1 otherwise"""
    if session.json_output:
        click.echo(dumps(report_to_model(report)), nl=False)
    else:
        if title:
            click.echo(title)
        for line in report.summary_lines():
            click.echo(f"  {line}")
        passed = len(report.entries) - len(report.failures)
        click.echo(f"{passed}/{len(report.entries)} checks passed")
    if not report.ok:
        click.get_current_context().exit(EXIT_AXIOM_FAILURE)
