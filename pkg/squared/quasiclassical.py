"""The underlying braided bialgebra C̄ of a bicoalgebra and its comodules."""
import logging
from dataclasses import dataclass
from typing import Sequence

from exactla import Matrix, apply_on_factors, identity, inverse, is_invertible, kron, kron_all, matmul
from comod import ComodMorphism, Comodule, braiding, braiding_inverse, check_morphism, tensor_V, trivial
from squared.bicoalgebra import Bicoalgebra, bicomodule_tensor
from squared.coalgebra import SquaredCoalgebra, SquaredComodule
from squared.crossings import bar_braiding, bar_object, partial_self_braiding
from squared.hopf_coalgebra import HopfCoalgebra
from squared.quasitriangular import QTHopfCoalgebra, bar_mult, braiding_R
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

CbarPair = tuple[SquaredComodule, Comodule]


@dataclass(frozen=True, eq=False)
class BarredBialgebra:
    """(C̄, Δ̄, ε, m̄, η̄) in V"""
    obj: Comodule
    delta: Matrix
    eps: Matrix
    mult: Matrix
    unit: Matrix

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def domain(self):
        return self.obj.domain


def bar(B: Bicoalgebra) -> BarredBialgebra:
    S = B.base
    return BarredBialgebra(bar_object(S), S.delta, S.eps, bar_mult(B), B.unit)


def check_braided_bialgebra(Bb: BarredBialgebra) -> VerificationReport:
    K, c = Bb.domain, Bb.dim
    I = identity(c, K)
    X = Bb.obj
    pair = tensor_V(X, X)
    one = trivial(X.hopf)
    delta, eps, m, eta = Bb.delta, Bb.eps, Bb.mult, Bb.unit
    report = VerificationReport()
    report.extend(check_morphism(ComodMorphism(pair, X, m), "bar-m-intertwines"))
    report.extend(check_morphism(ComodMorphism(X, pair, delta), "bar-delta-intertwines"))
    report.extend(check_morphism(ComodMorphism(X, one, eps), "bar-eps-intertwines"))
    report.extend(check_morphism(ComodMorphism(one, X, eta), "bar-eta-intertwines"))
    report.compare("bar-associativity", matmul(m, kron(m, I)), matmul(m, kron(I, m)))
    report.compare("bar-left-unit", matmul(m, kron(eta, I)), I)
    report.compare("bar-right-unit", matmul(m, kron(I, eta)), I)
    report.compare("bar-coassociativity", matmul(kron(delta, I), delta), matmul(kron(I, delta), delta))
    report.compare("bar-left-counit", matmul(kron(eps, I), delta), I)
    report.compare("bar-right-counit", matmul(kron(I, eps), delta), I)
    crossed = matmul(kron_all([I, braiding(X, X).matrix, I], K), kron(delta, delta))
    report.compare("bar-comult-multiplicative", matmul(delta, m), matmul(kron(m, m), crossed))
    report.compare("bar-counit-multiplicative", matmul(eps, m), kron(eps, eps))
    report.compare("bar-comult-unit", matmul(delta, eta), kron(eta, eta))
    report.compare("bar-counit-unit", matmul(eps, eta), identity(1, K))
    return report


def quasiclassical_antipode(H: HopfCoalgebra) -> Matrix:
    """γ_C̄ = γ′∘c^{12}"""
    return matmul(H.gamma_r, partial_self_braiding(H.base))


def check_quasiclassical_antipode(H: HopfCoalgebra) -> VerificationReport:
    Bb = bar(H.bi)
    K, c = Bb.domain, Bb.dim
    I = identity(c, K)
    gamma = quasiclassical_antipode(H)
    unit_counit = matmul(Bb.unit, Bb.eps)
    report = VerificationReport()
    report.compare("bar-antipode-left", matmul(Bb.mult, matmul(kron(gamma, I), Bb.delta)), unit_counit)
    report.compare("bar-antipode-right", matmul(Bb.mult, matmul(kron(I, gamma), Bb.delta)), unit_counit)
    return report


def comparison_map(S: SquaredCoalgebra) -> Matrix:
    """The braiding C̄_op → bar(C_op), a ↦ r(a^{[2]}₋₁⊗a^{[1]}₋₁)a₀"""
    return partial_self_braiding(S)


def check_comparison(S: SquaredCoalgebra, opposite: SquaredCoalgebra) -> VerificationReport:
    """c is a coalgebra map from (C̄, c∘Δ̄, ε) to the barred opposite coalgebra"""
    B = comparison_map(S)
    co_opposite = matmul(bar_braiding(S), S.delta)
    report = VerificationReport()
    report.record("comparison-invertible", is_invertible(B))
    report.compare("comparison-comult", matmul(kron(B, B), co_opposite), matmul(opposite.delta, B))
    report.compare("comparison-counit", matmul(opposite.eps, B), S.eps)
    return report


def cbar_comodule(M: SquaredComodule, Y: Comodule) -> tuple[Comodule, Matrix]:
    """(M⊗Y, δ̄_M⊗Y) as an ordinary C̄-comodule in V"""
    coaction = kron(M.delta, identity(Y.dim, Y.domain))
    return tensor_V(M.X, Y), coaction


def check_cbar_comodule(M: SquaredComodule, Y: Comodule) -> VerificationReport:
    S = M.over
    U, coaction = cbar_comodule(M, Y)
    d = U.dim
    report = VerificationReport()
    target = tensor_V(bar_object(S), U)
    report.extend(check_morphism(ComodMorphism(U, target, coaction), "cbar-coaction-intertwines"))
    report.compare("cbar-coassociative", apply_on_factors([S.dim, d], 1, 2, coaction, coaction),
                   apply_on_factors([S.dim, d], 0, 1, S.delta, coaction))
    report.compare("cbar-counit", apply_on_factors([S.dim, d], 0, 1, S.eps, coaction), identity(d, U.domain))
    return report


def cbar_tensor_coaction(B: Bicoalgebra, first: CbarPair, second: CbarPair) -> Matrix:
    """Coaction of U⊗W for C̄-comodules: (m̄⊗1⊗1)(1⊗c_{U,C̄}⊗1)(δ_U⊗δ_W)"""
    S = B.base
    c = S.dim
    U, du = cbar_comodule(*first)
    W, dw = cbar_comodule(*second)
    m = kron(du, dw)
    m = apply_on_factors([c, U.dim, c, W.dim], 1, 3, braiding(U, bar_object(S)).matrix, m)
    return apply_on_factors([c, c, U.dim * W.dim], 0, 2, bar_mult(B), m)


def cbar_braidings(Q: QTHopfCoalgebra, first: CbarPair, second: CbarPair, signs: tuple = ("+", "+")) -> Matrix:
    """c′±± on (M⊗X)⊗(N⊗Y): (1⊗c⁻¹_{Y,M}⊗1)(R^{±}⊗c^{±})(1⊗c_{X,N}⊗1)"""
    (M, X), (N, Y) = first, second
    K = Q.domain
    r_sign, c_sign = signs
    if r_sign == "+":
        R = braiding_R(Q, M, N).matrix
    else:
        R = inverse(braiding_R(Q, N, M).matrix)
    if c_sign == "+":
        c = braiding(X, Y).matrix
    else:
        c = braiding_inverse(Y, X).matrix
    shuffle_in = kron_all([identity(M.dim, K), braiding(X, N.X).matrix, identity(Y.dim, K)], K)
    shuffle_out = kron_all([identity(N.dim, K), braiding_inverse(Y, M.X).matrix, identity(X.dim, K)], K)
    return matmul(shuffle_out, matmul(kron(R, c), shuffle_in))


def _merge(Q: QTHopfCoalgebra, second: CbarPair, third: CbarPair) -> tuple[CbarPair, Matrix]:
    """(N, Y)⊗(P, Z) = (N⊗P, Y⊗Z) and the reordering N⊗Y⊗P⊗Z → N⊗P⊗Y⊗Z"""
    (N, Y), (P, Z) = second, third
    K = Q.domain
    merged = (bicomodule_tensor(Q.bi, N, P), tensor_V(Y, Z))
    reorder = kron_all([identity(N.dim, K), braiding(Y, P.X).matrix, identity(Z.dim, K)], K)
    return merged, reorder


def _pair_name(pair: CbarPair) -> str:
    return f"{pair[0].name}⊗{pair[1].name}"


def check_cbar_braidings(Q: QTHopfCoalgebra, objects: Sequence[CbarPair],
                         signs: tuple = ("+", "+"), hexagons: bool = False) -> VerificationReport:
    K = Q.domain
    B = Q.bi
    report = VerificationReport()
    sign_tag = "".join(signs)
    for first in objects:
        for second in objects:
            tag = f"[{sign_tag}][{_pair_name(first)},{_pair_name(second)}]"
            c = cbar_braidings(Q, first, second, signs)
            report.record("cbar-braiding-invertible" + tag, is_invertible(c))
            lhs = matmul(cbar_tensor_coaction(B, second, first), c)
            rhs = apply_on_factors([Q.dim, c.shape[1]], 1, 2, c, cbar_tensor_coaction(B, first, second))
            report.compare("cbar-braiding-comodule-map" + tag, lhs, rhs)
    if not hexagons:
        return report
    for first in objects:
        for second in objects:
            for third in objects:
                tag = f"[{sign_tag}][{_pair_name(first)},{_pair_name(second)},{_pair_name(third)}]"
                du = first[0].dim * first[1].dim
                dv = second[0].dim * second[1].dim
                dw = third[0].dim * third[1].dim
                merged, reorder = _merge(Q, second, third)
                lhs = matmul(kron(inverse(reorder), identity(du, K)),
                             matmul(cbar_braidings(Q, first, merged, signs), kron(identity(du, K), reorder)))
                rhs = matmul(kron(identity(dv, K), cbar_braidings(Q, first, third, signs)),
                             kron(cbar_braidings(Q, first, second, signs), identity(dw, K)))
                report.compare("cbar-hexagon-left" + tag, lhs, rhs)
                merged, reorder = _merge(Q, first, second)
                lhs = matmul(kron(identity(dw, K), inverse(reorder)),
                             matmul(cbar_braidings(Q, merged, third, signs), kron(reorder, identity(dw, K))))
                rhs = matmul(kron(cbar_braidings(Q, first, third, signs), identity(dv, K)),
                             kron(identity(du, K), cbar_braidings(Q, second, third, signs)))
                report.compare("cbar-hexagon-right" + tag, lhs, rhs)
    return report
