import logging
from dataclasses import dataclass
from typing import Sequence

from exactla import (
    Matrix,
    add,
    apply_on_factors,
    columns,
    equal,
    first_difference,
    from_rows,
    identity,
    kernel_basis,
    kron,
    matmul,
    permute_factors,
    rref,
    solve,
    transpose,
    zeros,
)
from exactla import cokernel as matrix_cokernel
from hopf import HopfAlgebra, counit_power, unit_power
from utils.errors import BadPermutation, BadPosition, HopfMismatch, Inconsistent, LevelMismatch, NotAMorphism, ShapeMismatch
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Comodule:
    """Object of H^{⊗n}-comod: coaction (hⁿ·d)×d, row index t*d + i"""
    hopf: HopfAlgebra
    level: int
    dim: int
    coaction: Matrix
    name: str = ""

    def __post_init__(self):
        want = ((self.hopf.dim ** self.level) * self.dim, self.dim)
        if self.coaction.shape != want:
            raise ShapeMismatch(f"coaction of {self.name or 'comodule'} has shape "
                                f"{self.coaction.shape}, expected {want}")

    @property
    def domain(self):
        return self.hopf.domain

    @property
    def legs(self) -> int:
        return self.hopf.dim ** self.level

    def identity(self) -> Matrix:
        return identity(self.dim, self.domain)

    def renamed(self, name: str) -> "Comodule":
        return Comodule(self.hopf, self.level, self.dim, self.coaction, name)

    def same_as(self, other: "Comodule") -> bool:
        """Literal equality of the coaction data"""
        return (
            self.hopf.same_as(other.hopf)
            and self.level == other.level
            and self.dim == other.dim
            and equal(self.coaction, other.coaction)
        )


@dataclass(frozen=True, eq=False)
class ComodMorphism:
    src: Comodule
    dst: Comodule
    matrix: Matrix
    name: str = ""

    def __post_init__(self):
        if self.matrix.shape != (self.dst.dim, self.src.dim):
            raise ShapeMismatch(f"morphism {self.name} has shape {self.matrix.shape}, "
                                f"expected {(self.dst.dim, self.src.dim)}")
        if self.src.level != self.dst.level:
            raise LevelMismatch(f"morphism {self.name} between levels {self.src.level} and {self.dst.level}")

    def then(self, other: "ComodMorphism") -> "ComodMorphism":
        """other∘self"""
        return ComodMorphism(self.src, other.dst, matmul(other.matrix, self.matrix))


def same_hopf(*objects: Comodule) -> HopfAlgebra:
    H = objects[0].hopf
    for X in objects[1:]:
        if not X.hopf.same_as(H):
            raise HopfMismatch(f"{X.name or 'comodule'} lives over {X.hopf.name}, not {H.name}")
    return H


def trivial(H: HopfAlgebra, level: int = 1, dim: int = 1, name: str = "I") -> Comodule:
    """k^dim with coaction v ↦ 1⊗v at the given level"""
    coaction = kron(unit_power(H, level), identity(dim, H.domain))
    return Comodule(H, level, dim, coaction, name)


def from_coefficients(H: HopfAlgebra, table: Sequence[Sequence[dict]], name: str = "") -> Comodule:
    """Level-1 comodule from δ(e_j) = Σ_i c_ij ⊗ e_i, with c_ij given as {basis index: scalar}"""
    K = H.domain
    d = len(table)
    data = [[K.zero] * d for _ in range(H.dim * d)]
    for i in range(d):
        for j in range(d):
            for t, value in table[i][j].items():
                data[t * d + i][j] = K(value) if isinstance(value, int) else value
    return Comodule(H, 1, d, from_rows(data, K, d), name)


def _leg_dims(X: Comodule, extra: int) -> list[int]:
    return [X.hopf.dim] * X.level + [extra]


def comult_legs(H: HopfAlgebra, n: int, m: Matrix, rest: int) -> Matrix:
    """(Δ_{H^{⊗n}} ⊗ I)·m for m with row factors [h]*n + [rest].

    Output row factors are [h]*n (first Sweedler legs) + [h]*n + [rest].
    """
    h = H.dim
    dims = [h] * n + [rest]
    result = m
    for i in range(n):
        position = 2 * i
        result = apply_on_factors(dims, position, position + 1, H.comult, result)
        dims = dims[:position] + [h, h] + dims[position + 1:]
    if n > 1:
        sigma = [2 * k for k in range(n)] + [2 * k + 1 for k in range(n)] + [2 * n]
        result = permute_factors(dims, sigma, result)
    return result


def coassociativity_sides(X: Comodule) -> tuple[Matrix, Matrix]:
    H, n, d = X.hopf, X.level, X.dim
    lhs = comult_legs(H, n, X.coaction, d)
    rhs = apply_on_factors([X.legs, d], 1, 2, X.coaction, X.coaction)
    return lhs, rhs


def counit_side(X: Comodule) -> Matrix:
    return apply_on_factors([X.legs, X.dim], 0, 1, counit_power(X.hopf, X.level), X.coaction)


def check_comodule(X: Comodule) -> VerificationReport:
    report = VerificationReport()
    lhs, rhs = coassociativity_sides(X)
    report.compare("coaction-coassociative", lhs, rhs)
    report.compare("coaction-counit", counit_side(X), X.identity())
    return report


def intertwining_sides(src: Comodule, dst: Comodule, f: Matrix) -> tuple[Matrix, Matrix]:
    if src.level != dst.level:
        raise LevelMismatch(f"intertwiner between levels {src.level} and {dst.level}")
    if f.shape != (dst.dim, src.dim):
        raise ShapeMismatch(f"map of shape {f.shape} between dims {src.dim} and {dst.dim}")
    lhs = matmul(dst.coaction, f)
    rhs = apply_on_factors([src.legs, src.dim], 1, 2, f, src.coaction)
    return lhs, rhs


def check_morphism(f: ComodMorphism, name: str = "intertwines") -> VerificationReport:
    report = VerificationReport()
    report.compare(name, *intertwining_sides(f.src, f.dst, f.matrix))
    return report


def morphism(src: Comodule, dst: Comodule, f: Matrix, name: str = "") -> ComodMorphism:
    """A ComodMorphism after checking the intertwining square"""
    lhs, rhs = intertwining_sides(src, dst, f)
    witness = first_difference(lhs, rhs)
    if witness is not None:
        raise NotAMorphism(f"{name or 'map'} does not intertwine the coactions", witness)
    return ComodMorphism(src, dst, f, name)


def exterior(X: Comodule, Y: Comodule) -> Comodule:
    """X⊙Y: all H-legs of X, then those of Y, then X⊗Y"""
    H = same_hopf(X, Y)
    a, b = X.level, Y.level
    dims = [H.dim] * a + [X.dim] + [H.dim] * b + [Y.dim]
    sigma = list(range(a)) + list(range(a + 1, a + 1 + b)) + [a, a + b + 1]
    coaction = permute_factors(dims, sigma, kron(X.coaction, Y.coaction))
    return Comodule(H, a + b, X.dim * Y.dim, coaction, f"{X.name}⊙{Y.name}")


def restrict_ot(X: Comodule, i: int = 1) -> Comodule:
    """Merge H-legs i and i+1 (1-based) by the multiplication of H"""
    if not 1 <= i <= X.level - 1:
        raise BadPosition(f"cannot merge legs {i},{i + 1} of a level-{X.level} comodule")
    coaction = apply_on_factors(_leg_dims(X, X.dim), i - 1, i + 1, X.hopf.mult, X.coaction)
    return Comodule(X.hopf, X.level - 1, X.dim, coaction, X.name)


def permute(X: Comodule, sigma: Sequence[int]) -> Comodule:
    """Output leg k carries input leg sigma[k] (0-based)"""
    if sorted(sigma) != list(range(X.level)):
        raise BadPermutation(f"{list(sigma)} does not permute {X.level} legs")
    coaction = permute_factors(_leg_dims(X, X.dim), list(sigma) + [X.level], X.coaction)
    return Comodule(X.hopf, X.level, X.dim, coaction, X.name)


def tensor_V(X: Comodule, Y: Comodule) -> Comodule:
    if X.level != 1 or Y.level != 1:
        raise LevelMismatch("tensor_V takes two level-1 comodules")
    T = restrict_ot(exterior(X, Y), 1)
    return T.renamed(f"{X.name}⊗{Y.name}")


def tensor_all(objects: Sequence[Comodule], H: HopfAlgebra) -> Comodule:
    result = trivial(H)
    for X in objects:
        result = tensor_V(result, X)
    return result


def barotimes(A: Comodule, B: Comodule) -> Comodule:
    """A⊗̄B on A⊗B: coaction a⊗b ↦ a₍₁₎b₍₁₎ ⊗ b₍₂₎a₍₂₎ ⊗ a₀⊗b₀"""
    H = same_hopf(A, B)
    if A.level != 2 or B.level != 2:
        raise LevelMismatch("barotimes takes two level-2 comodules")
    h = H.dim
    dims = [h, h, A.dim, h, h, B.dim]
    m = permute_factors(dims, [0, 3, 4, 1, 2, 5], kron(A.coaction, B.coaction))
    m = apply_on_factors([h, h, h, h, A.dim * B.dim], 0, 2, H.mult, m)
    m = apply_on_factors([h, h, h, A.dim * B.dim], 1, 3, H.mult, m)
    return Comodule(H, 2, A.dim * B.dim, m, f"{A.name}⊗̄{B.name}")


def leg_restriction(A: Comodule, legs: Sequence[int]) -> Comodule:
    """Keep the listed legs (1-based, in the given order); the others go through ε"""
    H = A.hopf
    keep = list(legs)
    if any(not 1 <= k <= A.level for k in keep) or len(set(keep)) != len(keep):
        raise BadPosition(f"bad leg selection {keep} for level {A.level}")
    m = A.coaction
    dims = _leg_dims(A, A.dim)
    current = list(range(1, A.level + 1))
    for leg in sorted(set(current) - set(keep), reverse=True):
        pos = current.index(leg)
        m = apply_on_factors(dims, pos, pos + 1, H.counit, m)
        dims = dims[:pos] + dims[pos + 1:]
        current.pop(pos)
    sigma = [current.index(k) for k in keep]
    restricted = Comodule(H, len(keep), A.dim, m, A.name)
    if sigma != sorted(sigma):
        restricted = permute(restricted, sigma)
    return restricted


def direct_sum(objects: Sequence[Comodule], name: str = "") -> tuple[Comodule, list[Matrix], list[Matrix]]:
    """⊕X_k with inclusion and projection matrices"""
    H = same_hopf(*objects)
    level = objects[0].level
    if any(X.level != level for X in objects):
        raise LevelMismatch("direct sum of comodules at different levels")
    K = H.domain
    total = sum(X.dim for X in objects)
    inclusions, projections = [], []
    offset = 0
    for X in objects:
        inc = zeros(total, X.dim, K)
        rows = inc.to_list()
        for i in range(X.dim):
            rows[offset + i][i] = K.one
        inc = from_rows(rows, K, X.dim)
        inclusions.append(inc)
        projections.append(transpose(inc))
        offset += X.dim
    legs = H.dim ** level
    coaction = zeros(legs * total, total, K)
    for X, inc, proj in zip(objects, inclusions, projections):
        pushed = apply_on_factors([legs, X.dim], 1, 2, inc, X.coaction)
        coaction = add(coaction, matmul(pushed, proj))
    return Comodule(H, level, total, coaction, name or "⊕".join(X.name for X in objects)), inclusions, projections


def _left_inverse(basis: Matrix) -> Matrix:
    """L with L·basis = I for a full-column-rank basis"""
    k = basis.shape[1]
    return transpose(solve(transpose(basis), identity(k, basis.domain)))


def subcomodule(X: Comodule, basis: Matrix, name: str = "") -> Comodule:
    """Coaction restricted to the column span of ``basis``, which must be a subcomodule"""
    L = _left_inverse(basis)
    coaction = apply_on_factors([X.legs, X.dim], 1, 2, L, matmul(X.coaction, basis))
    lifted = apply_on_factors([X.legs, basis.shape[1]], 1, 2, basis, coaction)
    if not equal(lifted, matmul(X.coaction, basis)):
        raise Inconsistent(f"span is not a subcomodule of {X.name}")
    return Comodule(X.hopf, X.level, basis.shape[1], coaction, name)


def kernel(f: ComodMorphism) -> tuple[Comodule, ComodMorphism]:
    basis = kernel_basis(f.matrix)
    K = subcomodule(f.src, basis, f"ker {f.name}".strip())
    return K, ComodMorphism(K, f.src, basis, "kernel-inclusion")


def cokernel(f: ComodMorphism) -> tuple[Comodule, ComodMorphism]:
    proj, section = matrix_cokernel(f.matrix)
    X = f.dst
    coaction = apply_on_factors([X.legs, X.dim], 1, 2, proj, matmul(X.coaction, section))
    Q = Comodule(X.hopf, X.level, proj.shape[0], coaction, f"coker {f.name}".strip())
    killed = apply_on_factors([X.legs, X.dim], 1, 2, proj, matmul(X.coaction, f.matrix))
    if any(v != X.domain.zero for row in killed.to_list() for v in row):
        raise Inconsistent("cokernel coaction is not well defined")
    return Q, ComodMorphism(X, Q, proj, "cokernel-projection")


def image(f: ComodMorphism) -> tuple[Comodule, ComodMorphism, ComodMorphism]:
    """(Im f, inclusion Im f → dst, corestriction src → Im f)"""
    _, pivots = rref(f.matrix)
    basis = columns(f.matrix, list(pivots))
    Im = subcomodule(f.dst, basis, f"im {f.name}".strip())
    corestriction = matmul(_left_inverse(basis), f.matrix)
    return Im, ComodMorphism(Im, f.dst, basis, "image-inclusion"), ComodMorphism(f.src, Im, corestriction, "corestriction")


def hom_space(X: Comodule, Y: Comodule) -> list[Matrix]:
    """Basis of the intertwiners X → Y"""
    same_hopf(X, Y)
    if X.level != Y.level:
        raise LevelMismatch("hom_space between different levels")
    K = X.domain
    dx, dy, legs = X.dim, Y.dim, X.legs
    if dx == 0 or dy == 0:
        return []
    dX = X.coaction.to_list()
    dY = Y.coaction.to_list()
    blocks = []
    for t in range(legs):
        y_block = [row[:] for row in dY[t * dy:(t + 1) * dy]]
        x_block = [row[:] for row in dX[t * dx:(t + 1) * dx]]
        # vec(Y_t F) - vec(F X_t) with row-major vec
        eq = [[K.zero] * (dy * dx) for _ in range(dy * dx)]
        for a2 in range(dy):
            for i in range(dx):
                row = a2 * dx + i
                for a in range(dy):
                    eq[row][a * dx + i] += y_block[a2][a]
                for b in range(dx):
                    eq[row][a2 * dx + b] -= x_block[b][i]
        blocks.extend(eq)
    system = from_rows(blocks, K, dy * dx)
    basis = kernel_basis(system)
    homs = []
    for k in range(basis.shape[1]):
        vec = [r[k] for r in basis.to_list()]
        homs.append(from_rows([vec[a * dx:(a + 1) * dx] for a in range(dy)], K, dx))
    logger.debug(f"Hom({X.name}, {Y.name}) has dimension {len(homs)}")
    return homs


def swap(d1: int, d2: int, K) -> Matrix:
    """x⊗y ↦ y⊗x on k^{d1}⊗k^{d2}"""
    return permute_factors([d1, d2], [1, 0], K=K)
