import logging
from dataclasses import dataclass

from exactla import Matrix, apply_on_factors, equal, identity, kron, kron_all, matmul
from comod import ComodMorphism, Comodule, check_morphism, copairing, dual, exterior, pairing, trivial
from placement import placement_sides
from utils.errors import LevelMismatch, NotACoalgebraHom, ShapeMismatch
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

COMULT_SRC = "C_{13} ⊙ I_2"
COMULT_DST = "C_{12'} ⊗ C_{2''3}"
COUNIT_SRC = "C_{1'1''}"
COACTION_SRC = "X_1 ⊙ I_2"
COACTION_DST = "C_{12'} ⊗ X_{2''}"


@dataclass(frozen=True, eq=False)
class SquaredCoalgebra:
    """Coalgebra in V⊗V on a level-2 comodule C"""
    C: Comodule
    delta: Matrix
    eps: Matrix
    name: str = "C"

    def __post_init__(self):
        if self.C.level != 2:
            raise LevelMismatch(f"squared coalgebra {self.name} needs a level-2 comodule")
        c = self.C.dim
        if self.delta.shape != (c * c, c):
            raise ShapeMismatch(f"comultiplication of {self.name} has shape {self.delta.shape}")
        if self.eps.shape != (1, c):
            raise ShapeMismatch(f"counit of {self.name} has shape {self.eps.shape}")

    @property
    def dim(self) -> int:
        return self.C.dim

    @property
    def hopf(self):
        return self.C.hopf

    @property
    def domain(self):
        return self.C.domain

    def identity(self) -> Matrix:
        return identity(self.dim, self.domain)


@dataclass(frozen=True, eq=False)
class SquaredComodule:
    """Left comodule over a squared coalgebra; ``X`` is the underlying object of V"""
    over: SquaredCoalgebra
    X: Comodule
    delta: Matrix
    name: str = ""

    def __post_init__(self):
        if self.X.level != 1:
            raise LevelMismatch(f"comodule {self.name} needs a level-1 underlying object")
        want = (self.over.dim * self.X.dim, self.X.dim)
        if self.delta.shape != want:
            raise ShapeMismatch(f"coaction of {self.name} has shape {self.delta.shape}, expected {want}")

    @property
    def dim(self) -> int:
        return self.X.dim

    @property
    def domain(self):
        return self.X.domain


@dataclass(frozen=True, eq=False)
class CoalgebraHom:
    src: SquaredCoalgebra
    dst: SquaredCoalgebra
    matrix: Matrix
    name: str = ""

    def __post_init__(self):
        if self.matrix.shape != (self.dst.dim, self.src.dim):
            raise ShapeMismatch(f"coalgebra map {self.name} has shape {self.matrix.shape}")


def comult_left(S: SquaredCoalgebra) -> Matrix:
    """(Δ⊗1)∘Δ"""
    return matmul(kron(S.delta, S.identity()), S.delta)


def comult_right(S: SquaredCoalgebra) -> Matrix:
    """(1⊗Δ)∘Δ"""
    return matmul(kron(S.identity(), S.delta), S.delta)


def check_squared(S: SquaredCoalgebra, paranoid: bool = False) -> VerificationReport:
    report = VerificationReport()
    bind = {"C": S.C}
    report.compare("delta-intertwines", *placement_sides(COMULT_SRC, COMULT_DST, bind, S.delta))
    report.compare("eps-intertwines", *placement_sides(COUNIT_SRC, "I_1", bind, S.eps))
    report.compare("d23a", comult_right(S), comult_left(S))
    I = S.identity()
    report.compare("e23b", matmul(kron(S.eps, I), S.delta), I)
    report.compare("e23c", matmul(kron(I, S.eps), S.delta), I)
    if paranoid:
        src, dst = "C_{14} ⊙ I_2 ⊙ I_3", "C_{12'} ⊗ C_{2''3'} ⊗ C_{3''4}"
        report.compare("d23a-level4-left", *placement_sides(src, dst, bind, comult_left(S)))
        report.compare("d23a-level4-right", *placement_sides(src, dst, bind, comult_right(S)))
    return report


def check_squared_comodule(M: SquaredComodule) -> VerificationReport:
    S = M.over
    report = VerificationReport()
    bind = {"C": S.C, "X": M.X}
    report.compare("delta-X-intertwines", *placement_sides(COACTION_SRC, COACTION_DST, bind, M.delta))
    d = M.dim
    lhs = apply_on_factors([S.dim, d], 1, 2, M.delta, M.delta)
    rhs = apply_on_factors([S.dim, d], 0, 1, S.delta, M.delta)
    report.compare("d28a", lhs, rhs)
    report.compare("e28b", apply_on_factors([S.dim, d], 0, 1, S.eps, M.delta), identity(d, M.domain))
    return report


def check_coalgebra_hom(f: CoalgebraHom) -> VerificationReport:
    report = check_morphism(ComodMorphism(f.src.C, f.dst.C, f.matrix, f.name), "hom-intertwines")
    report.compare("hom-comult", matmul(kron(f.matrix, f.matrix), f.src.delta), matmul(f.dst.delta, f.matrix))
    report.compare("hom-counit", matmul(f.dst.eps, f.matrix), f.src.eps)
    return report


def canonical(M: Comodule) -> SquaredCoalgebra:
    """M⊙M^∨ with Δ = M⊙coev⊙M^∨ and ε = ev"""
    if M.level != 1:
        raise LevelMismatch("canonical coalgebra of a level-1 comodule only")
    K, d = M.domain, M.dim
    Md, _, _ = dual(M)
    C = exterior(M, Md).renamed(f"{M.name}⊙{M.name}^∨")
    delta = kron_all([identity(d, K), copairing(d, K), identity(d, K)], K)
    return SquaredCoalgebra(C, delta, pairing(d, K), f"can({M.name})")


def canonical_comodule(M: Comodule) -> SquaredComodule:
    """M over canonical(M) with δ = M⊙coev"""
    K, d = M.domain, M.dim
    return SquaredComodule(canonical(M), M, kron(identity(d, K), copairing(d, K)), M.name)


def iota(M: SquaredComodule) -> ComodMorphism:
    """ï: X⊙X^∨ → C, x⊗φ ↦ x₋₁·φ(x₀)"""
    S, d, K = M.over, M.dim, M.domain
    m = matmul(kron(S.identity(), pairing(d, K)), kron(M.delta, identity(d, K)))
    return ComodMorphism(canonical(M.X).C, S.C, m, f"iota_{M.name}")


def comodule_from_hom(X: Comodule, target: SquaredCoalgebra, matrix: Matrix, name: str = "") -> SquaredComodule:
    """Inverse of iota: the coaction (ï⊗1)∘(1⊙coev) of a coalgebra map canonical(X) → C"""
    f = CoalgebraHom(canonical(X), target, matrix, f"iota_{X.name}")
    report = check_coalgebra_hom(f)
    if not report.ok:
        bad = report.failures[0]
        raise NotACoalgebraHom(f"{bad.name} fails for the map into {target.name} at {bad.witness}")
    K, d = X.domain, X.dim
    delta = matmul(kron(matrix, identity(d, K)), kron(identity(d, K), copairing(d, K)))
    return SquaredComodule(target, X, delta, name or X.name)


def unit_coalgebra(H) -> SquaredCoalgebra:
    """I⊙I with the only coalgebra structure"""
    K = H.domain
    return SquaredCoalgebra(trivial(H, level=2), identity(1, K), identity(1, K), "I⊙I")


def trivial_comodule(S: SquaredCoalgebra, unit: Matrix, dim: int = 1, name: str = "I") -> SquaredComodule:
    """k^dim with coaction v ↦ unit⊗v, for a grouplike unit column"""
    K = S.domain
    return SquaredComodule(S, trivial(S.hopf, dim=dim, name=name), kron(unit, identity(dim, K)), name)


def comodule_morphism_sides(src: SquaredComodule, dst: SquaredComodule, f: Matrix) -> tuple[Matrix, Matrix]:
    """δ_dst∘f against (1⊗f)∘δ_src"""
    lhs = matmul(dst.delta, f)
    rhs = apply_on_factors([src.over.dim, src.dim], 1, 2, f, src.delta)
    return lhs, rhs


def is_comodule_morphism(src: SquaredComodule, dst: SquaredComodule, f: Matrix) -> bool:
    return equal(*comodule_morphism_sides(src, dst, f))

