import json
import logging
from pathlib import Path

import click

from exactla import to_rows
from comod import Comodule
from placement import normalize, realize
from serialization import (
    CoendModel,
    ComoduleModel,
    SquaredModel,
    coend_from_model,
    comodule_from_model,
    dumps,
    squared_from_model,
)
from serialization.models import _Document
from commands.session import Session, handles_input_errors, pass_session
from utils.errors import ShcError

logger = logging.getLogger(__name__)


class EvalModel(_Document):
    expression: str
    level: int
    dim: int
    coaction: list[list[str]]


def _load_binding(path: str, session: Session) -> Comodule:
    """A comodule document, a squared coalgebra or a coend; the last two bind their object C"""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if "coalgebra" in data:
        model = CoendModel.model_validate(data)
        return coend_from_model(model, session.field_for(model.field)).C.C
    if "delta" in data and "eps" in data:
        return squared_from_model(SquaredModel.model_validate(data), session.field).C
    return comodule_from_model(ComoduleModel.model_validate(data), session.field)


def _parse_bindings(bindings: tuple[str, ...], session: Session) -> dict[str, Comodule]:
    bind = {}
    for item in bindings:
        name, sep, path = item.partition("=")
        if not sep or not name:
            raise ShcError(f"binding {item!r} is not of the form NAME=FILE")
        bind[name] = _load_binding(path, session)
    return bind


@click.command(name="eval")
@click.argument("expression")
@click.option("--bind", "bindings", multiple=True, metavar="NAME=FILE", help="Bind an operand name to a JSON file")
@pass_session
@handles_input_errors
def evaluate(session: Session, expression: str, bindings: tuple[str, ...]):
    """Realise a placement EXPRESSION and print its level, dimension and coaction"""
    bind = _parse_bindings(bindings, session)
    X, _ = realize(expression, bind)
    result = EvalModel(expression=normalize(expression), level=X.level, dim=X.dim, coaction=to_rows(X.coaction))
    if session.json_output:
        click.echo(dumps(result), nl=False)
        return
    click.echo(result.expression)
    click.echo(f"level {result.level}, dimension {result.dim}")
    for row in result.coaction:
        click.echo("  " + " ".join(row))
