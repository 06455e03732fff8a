from dataclasses import dataclass

from exactla import Matrix, identity, kron, matmul, permute_factors
from comod import ComodMorphism, barotimes, check_morphism, tensor_V, trivial
from squared.coalgebra import SquaredCoalgebra, SquaredComodule
from squared.tensor import barotimes_coaction
from utils.errors import ShapeMismatch, ShcError
from utils.report import VerificationReport


@dataclass(frozen=True, eq=False)
class Bicoalgebra:
    """Squared coalgebra with a multiplication C⊗̄C → C and unit I⊙I → C"""
    base: SquaredCoalgebra
    mult: Matrix
    unit: Matrix

    def __post_init__(self):
        c = self.base.dim
        if self.mult.shape != (c, c * c):
            raise ShapeMismatch(f"multiplication has shape {self.mult.shape}, expected {(c, c * c)}")
        if self.unit.shape != (c, 1):
            raise ShapeMismatch(f"unit has shape {self.unit.shape}, expected {(c, 1)}")

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def domain(self):
        return self.base.domain

    @property
    def name(self) -> str:
        return self.base.name


def check_bicoalgebra(B: Bicoalgebra) -> VerificationReport:
    S = B.base
    K, c = B.domain, B.dim
    I = identity(c, K)
    m, eta = B.mult, B.unit
    report = VerificationReport()
    report.extend(check_morphism(ComodMorphism(barotimes(S.C, S.C), S.C, m), "m-intertwines"))
    report.extend(check_morphism(ComodMorphism(trivial(S.hopf, level=2), S.C, eta), "eta-intertwines"))
    report.compare("associativity", matmul(m, kron(m, I)), matmul(m, kron(I, m)))
    report.compare("left-unit", matmul(m, kron(eta, I)), I)
    report.compare("right-unit", matmul(m, kron(I, eta)), I)
    # Δ∘m = (m⊗m)∘σ₂₃∘(Δ⊗Δ)
    crossed = permute_factors([c, c, c, c], [0, 2, 1, 3], kron(S.delta, S.delta))
    report.compare("comult-multiplicative", matmul(S.delta, m), matmul(kron(m, m), crossed))
    report.compare("counit-multiplicative", matmul(S.eps, m), kron(S.eps, S.eps))
    report.compare("comult-unit", matmul(S.delta, eta), kron(eta, eta))
    report.compare("counit-unit", matmul(S.eps, eta), identity(1, K))
    return report


def bicomodule_tensor(B: Bicoalgebra, M: SquaredComodule, N: SquaredComodule) -> SquaredComodule:
    """M⊗N over B with δ = (m⊗1)∘δ_{M⊗̄N}"""
    if M.over is not B.base or N.over is not B.base:
        raise ShcError(f"tensor of comodules that do not live over {B.name}")
    d = M.dim * N.dim
    delta = matmul(kron(B.mult, identity(d, B.domain)), barotimes_coaction(M, N))
    return SquaredComodule(B.base, tensor_V(M.X, N.X), delta, f"{M.name}⊗{N.name}")


def unit_comodule(B: Bicoalgebra) -> SquaredComodule:
    """I with δ_I = η"""
    return SquaredComodule(B.base, trivial(B.base.hopf), B.unit, "I")


def tensor_comodules(B: Bicoalgebra, comodules) -> SquaredComodule:
    """Left-nested tensor product, unit for an empty list"""
    result = None
    for M in comodules:
        result = M if result is None else bicomodule_tensor(B, result, M)
    return result if result is not None else unit_comodule(B)


def check_tensor_unit(B: Bicoalgebra, M: SquaredComodule) -> VerificationReport:
    """I⊗M and M⊗I have the coaction of M"""
    report = VerificationReport()
    one = unit_comodule(B)
    report.compare(f"unit-left[{M.name}]", bicomodule_tensor(B, one, M).delta, M.delta)
    report.compare(f"unit-right[{M.name}]", bicomodule_tensor(B, M, one).delta, M.delta)
    return report


def check_tensor_associative(B: Bicoalgebra, L: SquaredComodule, M: SquaredComodule,
                             N: SquaredComodule) -> VerificationReport:
    report = VerificationReport()
    left = bicomodule_tensor(B, bicomodule_tensor(B, L, M), N)
    right = bicomodule_tensor(B, L, bicomodule_tensor(B, M, N))
    report.compare(f"tensor-associative[{L.name},{M.name},{N.name}]", left.delta, right.delta)
    return report

