"""Builtin diagrams used by the demos, the tests and ``builtin:NAME`` inputs."""
import logging
from functools import partial
from typing import Callable, Optional

from exactla import Field, from_rows, identity
from hopf import builtin as builtin_hopf
from hopf import sweedler_zeta_character
from comod import Comodule, from_coefficients, trivial
from coend.diagram import Arrow, Diagram
from utils.errors import UnknownFixture

logger = logging.getLogger(__name__)


def _k2(field: Field) -> Comodule:
    return trivial(builtin_hopf("trivial", field), dim=2, name="M")


def trivial_k2(field: Optional[Field] = None, generators: str = "id") -> Diagram:
    """k² over the trivial Hopf algebra with id, {id, E₁₁} or all of End listed"""
    field = field or Field.rational()
    M = _k2(field)
    K = M.domain
    D = Diagram(M.hopf, {"M": M}, (Arrow("id", "M", "M", identity(2, K)),), name=f"k2-{generators}")
    if generators == "id":
        return D
    if generators == "e11":
        e11 = Arrow("E11", "M", "M", from_rows([[1, 0], [0, 0]], K))
        return Diagram(M.hopf, {"M": M}, D.arrows + (e11,), name="k2-e11")
    if generators == "end":
        return D.with_full_homs()
    raise UnknownFixture(f"no generator set {generators!r} for k²")


def trivial_k2_dual(field: Optional[Field] = None) -> Diagram:
    field = field or Field.rational()
    M = _k2(field)
    H = M.hopf
    objects = {"I": trivial(H), "M": M, "M^∨": M.renamed("M^∨")}
    D = Diagram(H, objects, unit_object="I", tensor_table={("I", "I"): "I", ("I", "M"): "M", ("M", "I"): "M"},
                dual_table={"I": "I", "M": "M^∨", "M^∨": "M"}, name="k2-dual")
    return D.with_full_homs()


def _v_odd(field: Field) -> Comodule:
    return from_coefficients(builtin_hopf("kZ2", field), [[{1: 1}]], "V")


def kz2_odd(field: Optional[Field] = None) -> Diagram:
    field = field or Field.rational()
    V = _v_odd(field)
    return Diagram(V.hopf, {"V": V}, (Arrow("id", "V", "V", identity(1, V.domain)),), name="kZ2-odd")


def kz2_qt(field: Optional[Field] = None) -> Diagram:
    """{I, V_odd} over kZ2 with V_odd⊗V_odd = I and both objects self-dual"""
    field = field or Field.rational()
    V = _v_odd(field)
    H = V.hopf
    table = {("I", "I"): "I", ("I", "V"): "V", ("V", "I"): "V", ("V", "V"): "I"}
    D = Diagram(H, {"I": trivial(H), "V": V}, unit_object="I", tensor_table=table,
                dual_table={"I": "I", "V": "V"}, name="kZ2-qt")
    return D.with_full_homs()


# Sweedler basis order is 1, g, x, gx.
_SWEEDLER_OBJECTS = {
    "Kg": [[{1: 1}]],
    "X": [[{0: 1}, {2: 1}], [{}, {1: 1}]],
    "X'": [[{1: 1}, {3: 1}], [{}, {0: 1}]],
}


def sweedler4_hopf(field: Optional[Field] = None) -> Diagram:
    """I, K_g and the two projective covers over sweedler4; ζ is evaluation at g"""
    field = field or Field.rational()
    H = builtin_hopf("sweedler4", field)
    objects = {"I": trivial(H)}
    objects.update({key: from_coefficients(H, table, key) for key, table in _SWEEDLER_OBJECTS.items()})
    table = {("I", key): key for key in objects}
    table.update({(key, "I"): key for key in objects})
    table[("Kg", "Kg")] = "I"
    D = Diagram(H, objects, unit_object="I", tensor_table=table,
                dual_table={"I": "I", "Kg": "Kg", "X": "X'", "X'": "X"},
                zeta_source=sweedler_zeta_character(field), name="sweedler4-hopf")
    return D.with_full_homs()


def sweedler4_regular(field: Optional[Field] = None) -> Diagram:
    """The regular comodule of sweedler4 with all of its endomorphisms"""
    field = field or Field.rational()
    H = builtin_hopf("sweedler4", field)
    R = Comodule(H, 1, H.dim, H.comult, "H")
    return Diagram(H, {"H": R}, zeta_source=sweedler_zeta_character(field), name="sweedler4-regular").with_full_homs()


DIAGRAMS: dict[str, Callable[[Optional[Field]], Diagram]] = {
    "trivial-k2": trivial_k2,
    "trivial-k2-e11": partial(trivial_k2, generators="e11"),
    "trivial-k2-end": partial(trivial_k2, generators="end"),
    "trivial-k2-dual": trivial_k2_dual,
    "kZ2-odd": kz2_odd,
    "kZ2-qt": kz2_qt,
    "sweedler4-hopf": sweedler4_hopf,
    "sweedler4-regular": sweedler4_regular,
}


def builtin_diagram(name: str, field: Optional[Field] = None) -> Diagram:
    try:
        factory = DIAGRAMS[name]
    except KeyError:
        raise UnknownFixture(f"no builtin diagram named {name!r}") from None
    logger.debug(f"building builtin diagram {name}")
    return factory(field)
