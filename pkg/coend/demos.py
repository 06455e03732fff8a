"""End-to-end scenarios behind ``shc demo``."""
import logging
from typing import Callable, Optional

from exactla import Field, is_invertible
from squared import canonical_comodule, check_squared_comodule
from coend.build import build_coend, check_coend, check_h_morphism, h_morphism, reconstruct_comodule
from coend.fixtures import kz2_qt, sweedler4_hopf, trivial_k2
from coend.induce import check_structures, induce_antipode, induce_ribbon
from coend.opposite import check_opposite, opposite_coend
from utils.errors import UnknownFixture
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


def _record_dim(report: VerificationReport, name: str, got: int, expected: int):
    report.record(name, got == expected, f"dimension {got}, expected {expected}")


def trivial_comatrix(field: Optional[Field] = None, paranoid: bool = False) -> VerificationReport:
    report = VerificationReport()
    for generators, expected in (("id", 4), ("e11", 2), ("end", 1)):
        E = build_coend(trivial_k2(field, generators))
        _record_dim(report, f"dim[{generators}]", E.dim, expected)
        report.extend(check_coend(E, paranoid), f"{generators}:")
    E = build_coend(trivial_k2(field))
    report.extend(check_squared_comodule(reconstruct_comodule(E, "M")), "M:")
    N = canonical_comodule(E.diagram.object("M"))
    _, h = h_morphism(N.over, [N])
    report.extend(check_h_morphism(h, check_c58=True), "h:")
    report.record("h-invertible", is_invertible(h.matrix))
    return report


def kz2_quasitriangular(field: Optional[Field] = None, paranoid: bool = False) -> VerificationReport:
    E = induce_ribbon(build_coend(kz2_qt(field)))
    report = VerificationReport()
    _record_dim(report, "dim", E.dim, 2)
    report.extend(check_structures(E, paranoid))
    E_dual, z = opposite_coend(E)
    report.extend(check_opposite(E, E_dual, z, paranoid=paranoid), "opposite:")
    return report


def sweedler_hopf(field: Optional[Field] = None, paranoid: bool = False) -> VerificationReport:
    E = induce_antipode(build_coend(sweedler4_hopf(field)))
    report = VerificationReport()
    _record_dim(report, "dim", E.dim, 4)
    report.extend(check_structures(E, paranoid))
    return report


DEMOS: dict[str, Callable[..., VerificationReport]] = {
    "trivial-comatrix": trivial_comatrix,
    "kZ2-qt": kz2_quasitriangular,
    "sweedler4-hopf": sweedler_hopf,
}


def run_demo(name: str, field: Optional[Field] = None, paranoid: bool = False) -> VerificationReport:
    if name not in DEMOS:
        raise UnknownFixture(f"no demo named {name!r}; choose from {', '.join(DEMOS)}")
    logger.info(f"running demo {name}")
    return DEMOS[name](field, paranoid)
