"""Multiplication, antipodes, R-matrices and ribbon functionals induced on a coend."""
import logging
from dataclasses import replace
from typing import Optional

from exactla import (
    Matrix,
    apply_on_factors,
    equal,
    identity,
    inverse,
    kron,
    kron_all,
    matmul,
    permute_factors,
    scalar_matrix,
    transpose,
)
from comod import braiding, braiding_inverse, dual, intertwining_sides, pairing, swap, tensor_V, trivial
from squared import (
    Bicoalgebra,
    HopfCoalgebra,
    QTHopfCoalgebra,
    RibbonHopfCoalgebra,
    braiding_R,
    check_antipode,
    check_bicoalgebra,
    check_braiding_R,
    check_qt,
    check_ribbon,
    check_twist,
    descend,
    generator,
    theta_to_Theta,
)
from squared.hopf_coalgebra import AntipodeGenerator, ZetaSource
from coend.build import CoendCoalgebra, check_coend, generator_for, reconstructed
from utils.errors import Inconsistent, NoRibbonData, NotGenerating, NotMonoidalDiagram
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


def _pairs(E: CoendCoalgebra):
    objects = E.diagram.objects
    for a, X in objects.items():
        for b, Y in objects.items():
            yield a, X, b, Y


def induce_multiplication(E: CoendCoalgebra) -> CoendCoalgebra:
    """m∘(q_X⊗q_Y) = q_{X⊗Y}∘(1⊙j₊) and η = q_I; listed products and the unit object are used as they are"""
    D, K, c = E.diagram, E.domain, E.dim
    if D.unit_object is not None:
        unit = E.q[D.unit_object]
    else:
        try:
            unit = generator_for(E, trivial(D.hopf))
        except NotGenerating as exc:
            raise NotMonoidalDiagram(f"the unit object does not embed into {D.name}") from exc
    sources, images = [], []
    for a, X, b, Y in _pairs(E):
        if (a, b) in D.tensor_table:
            q_XY = E.q[D.tensor_table[(a, b)]]
        else:
            try:
                q_XY = generator_for(E, tensor_V(X, Y))
            except NotGenerating as exc:
                raise NotMonoidalDiagram(f"{a}⊗{b} does not embed into {D.name}") from exc
        shuffle = permute_factors([X.dim, X.dim, Y.dim, Y.dim], [0, 2, 1, 3], K=K)
        sources.append(kron(E.q[a], E.q[b]))
        images.append(matmul(q_XY, shuffle))
    mult = descend(sources, images, c * c)
    logger.info(f"multiplication induced on {E.C.name} from {len(sources)} object pairs")
    return replace(E, bi=Bicoalgebra(E.C, mult, unit))


def _transported(E: CoendCoalgebra, key: str, phi: Matrix) -> Matrix:
    """q_W = q_key∘(φ⊗φ^{-T}) for an isomorphism φ: W → key"""
    return matmul(E.q[key], kron(phi, inverse(transpose(phi))))


def antipode_generators(E: CoendCoalgebra, source: Optional[ZetaSource] = None) -> list[AntipodeGenerator]:
    source = E.diagram.zeta_source if source is None else source
    return [generator(M, source) for M in reconstructed(E)]


def induce_antipode(E: CoendCoalgebra, source: Optional[ZetaSource] = None) -> CoendCoalgebra:
    """γ′∘q_X = q_{X^∨}∘(1⊙ζ) and ′γ∘q_X = q_{^∨X}∘(ξ⊙1), both read on P(X⊙X^∨)

    X^∨ and ^∨X are carried to listed objects by the isomorphisms of the dual table.
    """
    D, K = E.diagram, E.domain
    D.require_dual_table()
    if E.bi is None:
        E = induce_multiplication(E)
    source = D.zeta_source if source is None else source
    right, left = [], []
    for key, g in zip(D.names, antipode_generators(E, source)):
        d = g.comodule.dim
        flip = swap(d, d, K)
        q_right = _transported(E, *D.right_dual(key))
        q_left = _transported(E, *D.left_dual(key))
        right.append(matmul(q_right, matmul(kron(identity(d, K), g.zeta), flip)))
        left.append(matmul(q_left, matmul(kron(g.xi, identity(d, K)), flip)))
    gamma_r = descend(E.generators(), right, E.dim)
    gamma_l = descend(E.generators(), left, E.dim)
    return replace(E, hopf=HopfCoalgebra(E.bi, gamma_r, gamma_l, source))


def _rmatrix_block(X, Y, sign: str) -> Matrix:
    """ev_Y(1⊗ev_X⊗1)(c_{X,Y}⊗1⊗1)(1⊗c^±⊗1) on X⊗X^∨⊗Y⊗Y^∨"""
    K = X.domain
    dx, dy = X.dim, Y.dim
    Xd = dual(X)[0]
    if sign == "+":
        cross = braiding(Xd, Y).matrix
    else:
        cross = braiding_inverse(Y, Xd).matrix
    m = kron_all([identity(dx, K), cross, identity(dy, K)], K)
    m = matmul(kron_all([braiding(X, Y).matrix, identity(dx, K), identity(dy, K)], K), m)
    m = matmul(kron_all([identity(dy, K), pairing(dx, K), identity(dy, K)], K), m)
    return matmul(pairing(dy, K), m)


def induce_rmatrix(E: CoendCoalgebra) -> CoendCoalgebra:
    """R± from the braiding of V; raises NoRForm without an r-form"""
    E.diagram.hopf.require_rform()
    if E.hopf is None:
        E = induce_antipode(E)
    sources = [kron(E.q[a], E.q[b]) for a, _, b, _ in _pairs(E)]
    r_plus = descend(sources, [_rmatrix_block(X, Y, "+") for _, X, _, Y in _pairs(E)], E.dim ** 2)
    r_minus = descend(sources, [_rmatrix_block(X, Y, "-") for _, X, _, Y in _pairs(E)], E.dim ** 2)
    return replace(E, qt=QTHopfCoalgebra(E.hopf, r_plus, r_minus))


def default_twists(E: CoendCoalgebra) -> dict[str, Matrix]:
    """θ_X = (ν⊗1)∘δ_X from the ribbon form of H"""
    H = E.diagram.hopf
    if H.ribbon_form is None:
        raise NoRibbonData(f"{H.name} carries no ribbon form")
    return {key: apply_on_factors([H.dim, X.dim], 0, 1, H.ribbon_form, X.coaction)
            for key, X in E.diagram.objects.items()}


def _check_twist_data(E: CoendCoalgebra, thetas: dict[str, Matrix]):
    D, K = E.diagram, E.domain
    for key, X in D.objects.items():
        if key not in thetas:
            raise NoRibbonData(f"no twist given for {key}")
        if not equal(*intertwining_sides(X, X, thetas[key])):
            raise Inconsistent(f"twist on {key} is not a comodule map")
    for a in D.arrows:
        if not equal(matmul(thetas[a.dst], a.matrix), matmul(a.matrix, thetas[a.src])):
            raise Inconsistent(f"twists do not commute with {a.name}")
    if D.unit_object is not None and not equal(thetas[D.unit_object], scalar_matrix(1, K)):
        raise Inconsistent("twist on the unit object is not 1")
    for (left, right), target in D.tensor_table.items():
        X, Y = D.objects[left], D.objects[right]
        balanced = matmul(braiding(Y, X).matrix, braiding(X, Y).matrix)
        if not equal(thetas[target], matmul(balanced, kron(thetas[left], thetas[right]))):
            raise Inconsistent(f"twist on {target} is not balanced against {left}⊗{right}")


def induce_ribbon(E: CoendCoalgebra, thetas: Optional[dict[str, Matrix]] = None) -> CoendCoalgebra:
    """Θ with Θ∘q_X = ev∘(θ_X⊗1)"""
    if E.qt is None:
        E = induce_rmatrix(E)
    if thetas is None:
        thetas = default_twists(E)
    _check_twist_data(E, thetas)
    Theta = theta_to_Theta(E.qt, [(M, thetas[M.name]) for M in reconstructed(E)])
    return replace(E, ribbon=RibbonHopfCoalgebra(E.qt, Theta))


def _reconstructed_arrows(E: CoendCoalgebra, comodules: dict):
    return [(comodules[a.src], comodules[a.dst], a.matrix) for a in E.diagram.arrows]


def check_structures(E: CoendCoalgebra, paranoid: bool = False) -> VerificationReport:
    """Every checker suite that applies to the structures present on E"""
    report = check_coend(E, paranoid)
    if E.bi is not None:
        report.extend(check_bicoalgebra(E.bi))
    if E.hopf is not None:
        report.extend(check_antipode(E.hopf, antipode_generators(E, E.hopf.zeta_source)))
    if E.qt is not None:
        Q = E.qt
        report.extend(check_qt(Q, paranoid))
        comodules = {M.name: M for M in reconstructed(E)}
        for M in comodules.values():
            for N in comodules.values():
                expected = braiding(M.X, N.X).matrix
                report.compare(f"braiding-R-matches-V[{M.name},{N.name}]", braiding_R(Q, M, N).matrix, expected)
        if paranoid:
            report.extend(check_braiding_R(Q, list(comodules.values()), _reconstructed_arrows(E, comodules)))
    if E.ribbon is not None:
        report.extend(check_ribbon(E.ribbon))
        comodules = {M.name: M for M in reconstructed(E)}
        report.extend(check_twist(E.ribbon, list(comodules.values()), _reconstructed_arrows(E, comodules)))
    return report
