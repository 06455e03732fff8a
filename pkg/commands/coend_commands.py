import logging
from typing import Optional

import click

from coend import (
    CoendCoalgebra,
    build_coend,
    c58_report,
    check_opposite,
    check_structures,
    induce_antipode,
    induce_multiplication,
    induce_ribbon,
    induce_rmatrix,
    opposite_coend,
)
from serialization import CoendModel, coend_from_model, coend_to_model, load, load_diagram, save
from commands.session import Session, emit_report, handles_input_errors, pass_session
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


def _save_if_ok(report: VerificationReport, E: CoendCoalgebra, output: Optional[str]):
    """A coend whose checks failed is reported but never written"""
    if not output:
        return
    if report.ok:
        save(coend_to_model(E), output)
    else:
        logger.warning(f"not writing {output}: {len(report.failures)} checks failed")


@click.command(name="coend")
@click.argument("diagram")
@click.option("--monoidal", is_flag=True, help="Induce the multiplication and unit")
@click.option("--antipode", is_flag=True, help="Induce both antipodes (needs a dual table)")
@click.option("--rmatrix", is_flag=True, help="Induce R± from the r-form of H")
@click.option("--ribbon", is_flag=True, help="Induce Θ from the ribbon form of H")
@click.option("--check-c58", "check_c58", is_flag=True, help="Report rank deficits of the generating family")
@click.option("--paranoid", is_flag=True, help="Also run the redundant higher-level checks")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Where to write the coend JSON")
@pass_session
@handles_input_errors
def coend(session: Session, diagram: str, monoidal: bool, antipode: bool, rmatrix: bool, ribbon: bool,
          check_c58: bool, paranoid: bool, output: Optional[str]):
    """Build the coend of DIAGRAM (a file or builtin:NAME) with the requested structures"""
    paranoid = paranoid or session.paranoid
    E = build_coend(load_diagram(diagram, session.field))
    if ribbon:
        E = induce_ribbon(E)
    elif rmatrix:
        E = induce_rmatrix(E)
    elif antipode:
        E = induce_antipode(E)
    elif monoidal:
        E = induce_multiplication(E)
    report = check_structures(E, paranoid)
    if check_c58:
        report.extend(c58_report(E))
    _save_if_ok(report, E, output)
    emit_report(session, report, f"coend of {E.diagram.name}: dimension {E.dim}")


@click.command(name="opposite")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Where to write the coend of the dual diagram")
@pass_session
@handles_input_errors
def opposite(session: Session, path: str, output: Optional[str]):
    """Realise the opposite coalgebra of a stored coend on the coend of the dual diagram"""
    model = load(path, CoendModel)
    E = coend_from_model(model, session.field_for(model.field))
    E_dual, z = opposite_coend(E)
    report = check_opposite(E, E_dual, z, paranoid=session.paranoid)
    _save_if_ok(report, E_dual, output)
    emit_report(session, report, f"opposite of {E.C.name}")
