import logging
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from exactla import Matrix, identity, inverse, is_invertible, kron, kron_all, matmul, permute_factors
from comod import ComodMorphism, braiding, braiding_inverse, check_morphism, tensor_V, trivial
from squared.bicoalgebra import Bicoalgebra, bicomodule_tensor
from squared.coalgebra import SquaredComodule, comodule_morphism_sides
from squared.crossings import (
    bar_braiding_inverse,
    bar_object,
    crossing_minus,
    crossing_plus,
    double_braiding,
    on_outer_factors,
    product_crossing,
)
from squared.hopf_coalgebra import HopfCoalgebra
from utils.errors import ShapeMismatch
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QTHopfCoalgebra:
    hopf: HopfCoalgebra
    r_plus: Matrix
    r_minus: Matrix

    def __post_init__(self):
        c = self.hopf.dim
        for name, r in (("R_plus", self.r_plus), ("R_minus", self.r_minus)):
            if r.shape != (1, c * c):
                raise ShapeMismatch(f"{name} has shape {r.shape}, expected {(1, c * c)}")

    @property
    def base(self):
        return self.hopf.base

    @property
    def bi(self):
        return self.hopf.bi

    @property
    def dim(self) -> int:
        return self.hopf.dim

    @property
    def domain(self):
        return self.hopf.domain


def bar_mult(bi: Bicoalgebra) -> Matrix:
    """m̄ = m∘φ on C̄⊗C̄"""
    return matmul(bi.mult, product_crossing(bi.base))


def check_qt(Q: QTHopfCoalgebra, paranoid: bool = False) -> VerificationReport:
    S = Q.base
    K, c = Q.domain, Q.dim
    I = identity(c, K)
    Rp, Rm = Q.r_plus, Q.r_minus
    delta, eta, m = S.delta, Q.bi.unit, Q.bi.mult
    m_bar = bar_mult(Q.bi)
    Cbar = bar_object(S)
    pair = tensor_V(Cbar, Cbar)
    one = trivial(S.hopf)
    report = VerificationReport()
    report.extend(check_morphism(ComodMorphism(pair, one, Rp), "R-plus-intertwines"))
    report.extend(check_morphism(ComodMorphism(pair, one, Rm), "R-minus-intertwines"))
    report.compare("e160a", Rp, matmul(Rm, double_braiding(S)))
    report.compare("e160b", matmul(Rp, kron(eta, I)), S.eps)
    report.compare("e160c", matmul(Rp, kron(I, eta)), S.eps)

    lhs = matmul(Rp, kron(m_bar, I))
    rhs = matmul(Rp, matmul(kron_all([I, Rp, I], K), kron_all([I, I, delta], K)))
    report.compare("e160d", lhs, rhs)

    lhs = matmul(Rm, kron(I, m_bar))
    rhs = matmul(kron(Rm, Rm), matmul(kron_all([I, bar_braiding_inverse(S), I], K), kron_all([delta, I, I], K)))
    report.compare("e160e", lhs, rhs)

    report.compare("e160f", *_e160f_sides(Q, Rp, crossing_minus(S)))
    if paranoid:
        plain_lhs, plain_rhs = _e160f_sides(Q, Rp, crossing_minus(S))
        variant_lhs, variant_rhs = _e160f_sides(Q, Rm, crossing_plus(S))
        report.compare("e160f-remark-lhs", variant_lhs, plain_lhs)
        report.compare("e160f-remark-rhs", variant_rhs, plain_rhs)
    return report


def _e160f_sides(Q: QTHopfCoalgebra, R: Matrix, cross: Matrix) -> tuple[Matrix, Matrix]:
    """Both sides of the R-matrix/multiplication exchange law on C⊗C → C"""
    S = Q.base
    K, c = Q.domain, Q.dim
    I = identity(c, K)
    delta, m = S.delta, Q.bi.mult
    middle = permute_factors([c, c, c], [0, 2, 1], K=K)
    # a⊗b → a₁⊗b⊗a₂, cross a₁ with b, split b, then R(a₁⊗b₁)·m(b₂⊗a₂)
    lhs = matmul(kron(R, m), matmul(kron_all([I, delta, I], K),
                                    matmul(kron(cross, I), matmul(middle, kron(delta, I)))))
    # a⊗b → a⊗b₁⊗b₂, cross a with b₂, split a, then m(a₁⊗b₁)·R(a₂⊗b₂)
    shuffle = permute_factors([c, c, c, c], [0, 2, 1, 3], K=K)
    rhs = matmul(kron(m, R), matmul(shuffle, matmul(kron_all([delta, I, I], K),
                                                    matmul(on_outer_factors(S, cross), kron(I, delta)))))
    return lhs, rhs


def braiding_R(Q: QTHopfCoalgebra, X: SquaredComodule, Y: SquaredComodule, sign: str = "+") -> ComodMorphism:
    """The braiding X⊗Y → Y⊗X of comodules: R₊(x₋₁⊗y₋₁)·c(x₀⊗y₀) with the legs crossed in V"""
    S = Q.base
    K = Q.domain
    Cbar = bar_object(S)
    dx, dy = X.dim, Y.dim
    coactions = kron(X.delta, Y.delta)
    if sign == "+":
        cross = braiding(X.X, tensor_V(Cbar, Y.X)).matrix
        R = Q.r_plus
    elif sign == "-":
        cross = braiding_inverse(tensor_V(Cbar, Y.X), X.X).matrix
        R = Q.r_minus
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    m = matmul(kron(R, identity(dy * dx, K)), matmul(kron(identity(S.dim, K), cross), coactions))
    return ComodMorphism(tensor_V(X.X, Y.X), tensor_V(Y.X, X.X), m, f"R_{X.name},{Y.name}")


def check_braiding_R(Q: QTHopfCoalgebra, comodules: Sequence[SquaredComodule],
                     morphisms: Sequence[tuple[SquaredComodule, SquaredComodule, Matrix]] = (),
                     hexagons: bool = True) -> VerificationReport:
    K = Q.domain
    B = Q.bi
    report = VerificationReport()
    for X, Y in product(comodules, repeat=2):
        tag = f"[{X.name},{Y.name}]"
        R = braiding_R(Q, X, Y)
        report.compare("braiding-R-variants" + tag, R.matrix, braiding_R(Q, X, Y, "-").matrix)
        report.extend(check_morphism(R, "braiding-R-intertwines" + tag))
        src, dst = bicomodule_tensor(B, X, Y), bicomodule_tensor(B, Y, X)
        report.compare("braiding-R-comodule-map" + tag, *comodule_morphism_sides(src, dst, R.matrix))
        report.record("braiding-R-invertible" + tag, is_invertible(R.matrix))
    if hexagons:
        for X, Y, Z in product(comodules, repeat=3):
            tag = f"[{X.name},{Y.name},{Z.name}]"
            dx, dy, dz = X.dim, Y.dim, Z.dim
            lhs = braiding_R(Q, X, bicomodule_tensor(B, Y, Z)).matrix
            rhs = matmul(kron(identity(dy, K), braiding_R(Q, X, Z).matrix),
                         kron(braiding_R(Q, X, Y).matrix, identity(dz, K)))
            report.compare("braiding-R-hexagon-left" + tag, lhs, rhs)
            lhs = braiding_R(Q, bicomodule_tensor(B, X, Y), Z).matrix
            rhs = matmul(kron(braiding_R(Q, X, Z).matrix, identity(dy, K)),
                         kron(identity(dx, K), braiding_R(Q, Y, Z).matrix))
            report.compare("braiding-R-hexagon-right" + tag, lhs, rhs)
    for src, dst, f in morphisms:
        for Y in comodules:
            tag = f"[{src.name}→{dst.name},{Y.name}]"
            dy = Y.dim
            lhs = matmul(braiding_R(Q, dst, Y).matrix, kron(f, identity(dy, K)))
            rhs = matmul(kron(identity(dy, K), f), braiding_R(Q, src, Y).matrix)
            report.compare("braiding-R-natural" + tag, lhs, rhs)
    return report


def braiding_R_inverse(Q: QTHopfCoalgebra, X: SquaredComodule, Y: SquaredComodule) -> Matrix:
    """(R_{Y,X})⁻¹: X⊗Y → Y⊗X"""
    return inverse(braiding_R(Q, Y, X).matrix)
