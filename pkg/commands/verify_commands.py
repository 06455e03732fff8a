import logging

import click

from hopf import check_cqt, check_hopf
from comod import check_comodule, check_morphism
from squared import check_antipode, check_bicoalgebra, check_qt, check_ribbon, check_squared, check_squared_comodule
from coend import CoendCoalgebra, antipode_generators
from serialization import (
    CoendModel,
    ComoduleModel,
    HopfModel,
    MorphismModel,
    SquaredComoduleModel,
    SquaredModel,
    coend_from_model,
    comodule_from_model,
    hopf_from_ref,
    load,
    morphism_from_model,
    squared_comodule_from_model,
    squared_from_model,
)
from serialization.store import builtin_name
from commands.session import Session, emit_report, handles_input_errors, pass_session
from utils.errors import ShcError
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

KINDS = (
    "hopf", "comodule", "morphism", "squared", "squared-comodule",
    "bicoalgebra", "hopf-coalgebra", "quasitriangular", "ribbon",
)


def _verify_hopf(session: Session, path: str) -> VerificationReport:
    ref = path if builtin_name(path) is not None else load(path, HopfModel)
    H = hopf_from_ref(ref, session.field)
    report = check_hopf(H)
    if H.rform is not None:
        report.extend(check_cqt(H))
    return report


def _verify_comodule(session: Session, path: str) -> VerificationReport:
    return check_comodule(comodule_from_model(load(path, ComoduleModel), session.field))


def _verify_morphism(session: Session, path: str) -> VerificationReport:
    return check_morphism(morphism_from_model(load(path, MorphismModel), session.field))


def _verify_squared(session: Session, path: str) -> VerificationReport:
    return check_squared(squared_from_model(load(path, SquaredModel), session.field), session.paranoid)


def _verify_squared_comodule(session: Session, path: str) -> VerificationReport:
    M = squared_comodule_from_model(load(path, SquaredComoduleModel), session.field)
    return check_squared(M.over).extend(check_squared_comodule(M))


def _load_coend(session: Session, path: str, needs: str) -> CoendCoalgebra:
    model = load(path, CoendModel)
    E = coend_from_model(model, session.field_for(model.field))
    if getattr(E, needs) is None:
        raise ShcError(f"{path} carries no {needs} data")
    return E


def _verify_bicoalgebra(session: Session, path: str) -> VerificationReport:
    return check_bicoalgebra(_load_coend(session, path, "bi").bi)


def _verify_hopf_coalgebra(session: Session, path: str) -> VerificationReport:
    E = _load_coend(session, path, "hopf")
    return check_antipode(E.hopf, antipode_generators(E, E.hopf.zeta_source))


def _verify_quasitriangular(session: Session, path: str) -> VerificationReport:
    return check_qt(_load_coend(session, path, "qt").qt, session.paranoid)


def _verify_ribbon(session: Session, path: str) -> VerificationReport:
    return check_ribbon(_load_coend(session, path, "ribbon").ribbon)


VERIFIERS = {
    "hopf": _verify_hopf,
    "comodule": _verify_comodule,
    "morphism": _verify_morphism,
    "squared": _verify_squared,
    "squared-comodule": _verify_squared_comodule,
    "bicoalgebra": _verify_bicoalgebra,
    "hopf-coalgebra": _verify_hopf_coalgebra,
    "quasitriangular": _verify_quasitriangular,
    "ribbon": _verify_ribbon,
}


@click.command(name="verify")
@click.argument("kind", type=click.Choice(KINDS))
@click.argument("path")
@pass_session
@handles_input_errors
def verify(session: Session, kind: str, path: str):
    """Run the checker suite for KIND on the JSON document at PATH (or builtin:NAME for hopf)"""
    logger.info(f"verifying {kind} from {path}")
    report = VERIFIERS[kind](session, path)
    emit_report(session, report, f"{kind} {path}")
