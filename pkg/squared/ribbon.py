from dataclasses import dataclass
from typing import Sequence

from exactla import Matrix, apply_on_factors, identity, kron, kron_all, matmul, scalar_matrix
from comod import ComodMorphism, check_morphism, pairing, trivial
from squared.coalgebra import SquaredComodule, iota
from squared.crossings import bar_braiding, bar_object, partial_self_braiding
from squared.hopf_coalgebra import descend
from squared.quasitriangular import QTHopfCoalgebra, bar_mult
from utils.errors import Inconsistent, NoRibbonData, ShapeMismatch, WellDefinednessFailure
from utils.report import VerificationReport


@dataclass(frozen=True, eq=False)
class RibbonHopfCoalgebra:
    qt: QTHopfCoalgebra
    theta: Matrix

    def __post_init__(self):
        if self.theta.shape != (1, self.qt.dim):
            raise ShapeMismatch(f"Theta has shape {self.theta.shape}, expected {(1, self.qt.dim)}")

    @property
    def dim(self) -> int:
        return self.qt.dim

    @property
    def domain(self):
        return self.qt.domain


def check_ribbon(Rb: RibbonHopfCoalgebra) -> VerificationReport:
    Q = Rb.qt
    S = Q.base
    K, c = Q.domain, Q.dim
    I = identity(c, K)
    T, delta = Rb.theta, S.delta
    report = VerificationReport()
    report.extend(check_morphism(ComodMorphism(bar_object(S), trivial(S.hopf), T), "Theta-intertwines"))
    report.compare("e171a", matmul(T, Q.bi.unit), scalar_matrix(1, K))
    report.compare("e171b", matmul(T, matmul(Q.hopf.gamma_r, partial_self_braiding(S))), T)
    # (a⊗b) ↦ R₊(a₁₁⊗b₁₁)·R₋(b₁₂⊗a₁₂)·Θ(a₂)·Θ(b₂), b₁ crossed past a₁₂
    split = kron(delta, delta)
    trimmed = kron_all([delta, T, I, T], K)
    crossed = kron(I, bar_braiding(S))
    resplit = kron_all([I, delta, I], K)
    lhs = matmul(kron(Q.r_plus, Q.r_minus), matmul(resplit, matmul(crossed, matmul(trimmed, split))))
    report.compare("e171c", lhs, matmul(T, bar_mult(Q.bi)))
    report.compare("e171d", matmul(kron(T, I), delta), matmul(kron(I, T), delta))
    return report


def twist(Rb: RibbonHopfCoalgebra, M: SquaredComodule) -> ComodMorphism:
    """θ_X = (Θ⊗1)∘δ̄_X, checked to be a map of H-comodules"""
    m = apply_on_factors([Rb.dim, M.dim], 0, 1, Rb.theta, M.delta)
    theta = ComodMorphism(M.X, M.X, m, f"theta_{M.name}")
    report = check_morphism(theta, "twist-intertwines")
    if not report.ok:
        raise Inconsistent(f"twist on {M.name} is not a comodule map at {report.failures[0].witness}")
    return theta


def check_twist(Rb: RibbonHopfCoalgebra, comodules: Sequence[SquaredComodule],
                morphisms: Sequence[tuple[SquaredComodule, SquaredComodule, Matrix]] = ()) -> VerificationReport:
    report = VerificationReport()
    twists = {M.name: twist(Rb, M).matrix for M in comodules}
    for M in comodules:
        lhs = matmul(M.delta, twists[M.name])
        rhs = apply_on_factors([Rb.dim, M.dim], 1, 2, twists[M.name], M.delta)
        report.compare(f"twist-comodule-map[{M.name}]", lhs, rhs)
    for src, dst, f in morphisms:
        lhs = matmul(twist(Rb, dst).matrix, f)
        rhs = matmul(f, twist(Rb, src).matrix)
        report.compare(f"twist-natural[{src.name}→{dst.name}]", lhs, rhs)
    return report


def theta_to_Theta(Q: QTHopfCoalgebra, twists: Sequence[tuple[SquaredComodule, Matrix]]) -> Matrix:
    """Θ with Θ∘ï_X = ev∘(θ_X⊗1) for every listed comodule"""
    if not twists:
        raise NoRibbonData("no twist values supplied")
    K = Q.domain
    qs, images = [], []
    for M, theta in twists:
        d = M.dim
        qs.append(iota(M).matrix)
        images.append(matmul(pairing(d, K), kron(theta, identity(d, K))))
    try:
        return descend(qs, images, Q.dim)
    except WellDefinednessFailure as exc:
        raise Inconsistent("twist values are not induced by a single form on the coalgebra") from exc
