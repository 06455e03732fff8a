import logging
from typing import Optional

from exactla import Matrix, identity, is_invertible, kron, matmul, transpose
from comod import ComodMorphism, check_morphism, dual, swap
from squared import check_squared, descend, generator, opposite_from_generators
from squared.hopf_coalgebra import ZetaSource
from coend.build import CoendCoalgebra, build_coend, reconstructed
from coend.diagram import Arrow, Diagram
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


def dual_key(key: str) -> str:
    return f"{key}^∨"


def dual_diagram(D: Diagram) -> Diagram:
    """Objects X^∨ and arrows fᵗ: Y^∨ → X^∨"""
    objects = {dual_key(key): dual(X)[0] for key, X in D.objects.items()}
    arrows = tuple(Arrow(f"{a.name}^∨", dual_key(a.dst), dual_key(a.src), transpose(a.matrix)) for a in D.arrows)
    return Diagram(D.hopf, objects, arrows, zeta_source=D.zeta_source, name=f"{D.name}^∨")


def _opposite_images(E: CoendCoalgebra, E_dual: CoendCoalgebra, zetas: dict[str, Matrix]) -> dict[str, Matrix]:
    """q′_{X^∨}∘(1⊙ζ_X) read on P(X⊙X^∨)"""
    K = E.domain
    images = {}
    for key, X in E.diagram.objects.items():
        d = X.dim
        images[key] = matmul(E_dual.q[dual_key(key)], matmul(kron(identity(d, K), zetas[key]), swap(d, d, K)))
    return images


def _zetas(E: CoendCoalgebra, source: Optional[ZetaSource]) -> dict[str, Matrix]:
    source = E.diagram.zeta_source if source is None else source
    return {M.name: generator(M, source).zeta for M in reconstructed(E)}


def opposite_coend(E: CoendCoalgebra, source: Optional[ZetaSource] = None) -> tuple[CoendCoalgebra, Matrix]:
    """The coend of the dual diagram and z: P(C) → C_{p^∨} with z∘q_X = q′_{X^∨}∘(1⊙ζ)"""
    E_dual = build_coend(dual_diagram(E.diagram))
    images = _opposite_images(E, E_dual, _zetas(E, source))
    z = descend(E.generators(), [images[key] for key in E.diagram.names], E.dim)
    logger.info(f"opposite of {E.C.name} realised on {E_dual.C.name}")
    return E_dual, z


def check_opposite(E: CoendCoalgebra, E_dual: CoendCoalgebra, z: Matrix,
                   source: Optional[ZetaSource] = None, paranoid: bool = False) -> VerificationReport:
    zetas = _zetas(E, source)
    report = VerificationReport()
    report.extend(check_squared(E_dual.C, paranoid), "dual:")
    images = _opposite_images(E, E_dual, zetas)
    for key in E.diagram.names:
        report.compare(f"d107[{key}]", matmul(z, E.q[key]), images[key])
    op = opposite_from_generators(E.C, [(E.q[key], zetas[key]) for key in E.diagram.names])
    report.record("z-invertible", is_invertible(z))
    report.extend(check_morphism(ComodMorphism(op.C, E_dual.C.C, z, "z"), "z-intertwines"))
    report.compare("z-comult", matmul(E_dual.C.delta, z), matmul(kron(z, z), op.delta))
    report.compare("z-counit", matmul(E_dual.C.eps, z), op.eps)
    return report
