"""Antipodes of bicoalgebras, opposite coalgebras and duals of comodules.

Antipode equations are tested on generators: for every comodule X with
ï_X: X⊙X^∨ → C the four pictured equations are composed with ï_X⊗ï_X and
compared as matrices. They determine the antipodes once the ï_X are jointly
surjective, which ``require_generating`` certifies by a rank computation.
"""
import logging
from dataclasses import dataclass
from typing import Sequence, Union

from exactla import (
    Matrix,
    apply_on_factors,
    from_rows,
    hstack,
    identity,
    inverse,
    is_invertible,
    kron,
    kron_all,
    matmul,
    rank,
    solve,
    transpose,
)
from comod import ComodMorphism, check_morphism, copairing, dual, pairing, permute, swap, zeta
from squared.bicoalgebra import Bicoalgebra, bicomodule_tensor
from squared.coalgebra import SquaredCoalgebra, SquaredComodule, check_squared_comodule, iota
from utils.errors import Inconsistent, MissingZeta, NoRForm, NotGenerating, WellDefinednessFailure
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

ZetaSource = Union[str, Matrix]


@dataclass(frozen=True, eq=False)
class AntipodeGenerator:
    """A comodule with ζ_X: X → X^∨∨ and ξ_X = ζ_{^∨X}⁻¹: X^∨ → ^∨X"""
    comodule: SquaredComodule
    zeta: Matrix
    xi: Matrix

    @property
    def name(self) -> str:
        return self.comodule.name

    @property
    def q(self) -> Matrix:
        return iota(self.comodule).matrix


@dataclass(frozen=True, eq=False)
class HopfCoalgebra:
    bi: Bicoalgebra
    gamma_r: Matrix
    gamma_l: Matrix
    zeta_source: ZetaSource = "rform"

    @property
    def base(self) -> SquaredCoalgebra:
        return self.bi.base

    @property
    def dim(self) -> int:
        return self.bi.dim

    @property
    def domain(self):
        return self.bi.domain


def generator(M: SquaredComodule, source: ZetaSource = "rform") -> AntipodeGenerator:
    try:
        z = zeta(M.X, source).matrix
        left, _, _ = dual(M.X, "left")
        xi = inverse(zeta(left, source).matrix)
    except NoRForm as exc:
        raise MissingZeta(f"no zeta for {M.name}: the Hopf algebra has no r-form") from exc
    return AntipodeGenerator(M, z, xi)


def opposite_comult_block(d: int, z: Matrix) -> Matrix:
    """x⊗φ ↦ Σ_k (z⁻¹e_k⊗φ)⊗(x⊗e^k) on X⊗X^∨"""
    K = z.domain
    zi = inverse(z).to_list()
    n = d * d
    data = [[K.zero] * n for _ in range(n * n)]
    for i in range(d):
        for j in range(d):
            col = i * d + j
            for k in range(d):
                for a in range(d):
                    if zi[a][k] != K.zero:
                        data[((a * d + j) * d + i) * d + k][col] = zi[a][k]
    return from_rows(data, K, n)


def opposite_counit_block(d: int, z: Matrix) -> Matrix:
    """x⊗φ ↦ φ(z·x)"""
    return matmul(pairing(d, z.domain), kron(z, identity(d, z.domain)))


def canonical_comult_block(d: int, K) -> Matrix:
    return kron_all([identity(d, K), copairing(d, K), identity(d, K)], K)


def require_generating(qs: Sequence[Matrix], c: int) -> Matrix:
    """The ï_X side by side; raises NotGenerating unless they span C"""
    Q = hstack(*qs)
    if rank(Q) < c:
        raise NotGenerating(f"generators span {rank(Q)} of {c} dimensions")
    return Q


def descend(qs: Sequence[Matrix], images: Sequence[Matrix], c: int) -> Matrix:
    """The map T on C with T∘q_i = images_i for every generator"""
    Q = require_generating(qs, c)
    R = hstack(*images)
    try:
        return transpose(solve(transpose(Q), transpose(R)))
    except Inconsistent as exc:
        raise WellDefinednessFailure("prescribed values do not factor through the generators") from exc


def opposite_from_generators(S: SquaredCoalgebra, gens: Sequence[tuple[Matrix, Matrix]]) -> SquaredCoalgebra:
    """C_op on PC from pairs (q_X, ζ_X): Δ^op∘q = (q⊗q)∘Dop_X and ε^op∘q = φ(ζx)"""
    c = S.dim
    qs = [q for q, _ in gens]
    comults, counits = [], []
    for q, z in gens:
        d = z.shape[0]
        comults.append(matmul(kron(q, q), opposite_comult_block(d, z)))
        counits.append(opposite_counit_block(d, z))
    delta = descend(qs, comults, c)
    eps = descend(qs, counits, c)
    logger.debug(f"opposite of {S.name} from {len(gens)} generators")
    return SquaredCoalgebra(permute(S.C, [1, 0]), delta, eps, f"{S.name}_op")


def right_opposite(H: HopfCoalgebra, gens: Sequence[AntipodeGenerator]) -> SquaredCoalgebra:
    return opposite_from_generators(H.base, [(g.q, g.zeta) for g in gens])


def left_opposite(H: HopfCoalgebra, gens: Sequence[AntipodeGenerator]) -> SquaredCoalgebra:
    return opposite_from_generators(H.base, [(g.q, transpose(g.xi)) for g in gens])


def check_antipode(H: HopfCoalgebra, gens: Sequence[AntipodeGenerator]) -> VerificationReport:
    S, K, c = H.base, H.domain, H.dim
    m, eta = H.bi.mult, H.bi.unit
    Ic = identity(c, K)
    flip = swap(c, c, K)
    qs = [g.q for g in gens]
    require_generating(qs, c)
    report = VerificationReport()
    for g, q in zip(gens, qs):
        d = g.comodule.dim
        tag = f"[{g.name}]"
        qq = kron(q, q)
        diagonal = canonical_comult_block(d, K)
        xi_t = transpose(g.xi)
        lhs = matmul(m, matmul(kron(Ic, H.gamma_r), matmul(flip, matmul(qq, opposite_comult_block(d, g.zeta)))))
        report.compare("f112i" + tag, lhs, matmul(eta, matmul(S.eps, q)))
        lhs = matmul(m, matmul(kron(H.gamma_r, Ic), matmul(qq, diagonal)))
        report.compare("f112ii" + tag, lhs, matmul(eta, opposite_counit_block(d, g.zeta)))
        lhs = matmul(m, matmul(kron(H.gamma_l, Ic), matmul(flip, matmul(qq, diagonal))))
        report.compare("f113iii" + tag, lhs, matmul(eta, opposite_counit_block(d, xi_t)))
        lhs = matmul(m, matmul(kron(Ic, H.gamma_l), matmul(qq, opposite_comult_block(d, xi_t))))
        report.compare("f113iv" + tag, lhs, matmul(eta, matmul(S.eps, q)))
    opposite_C = permute(S.C, [1, 0])
    report.extend(check_morphism(ComodMorphism(opposite_C, S.C, H.gamma_r), "gamma-r-intertwines"))
    report.extend(check_morphism(ComodMorphism(opposite_C, S.C, H.gamma_l), "gamma-l-intertwines"))
    report.record("gamma-r-invertible", is_invertible(H.gamma_r))
    report.record("gamma-l-invertible", is_invertible(H.gamma_l))
    report.compare("P125", matmul(H.gamma_l, H.gamma_r), Ic)
    report.compare("P125-inverse", matmul(H.gamma_r, H.gamma_l), Ic)
    for label, op, gamma in (("right", right_opposite(H, gens), H.gamma_r),
                             ("left", left_opposite(H, gens), H.gamma_l)):
        report.compare(f"P113-{label}-comult", matmul(S.delta, gamma), matmul(kron(gamma, gamma), op.delta))
        report.compare(f"P113-{label}-counit", matmul(S.eps, gamma), op.eps)
    return report


def left_from_right(bi: Bicoalgebra, gamma_r: Matrix, source: ZetaSource = "rform") -> HopfCoalgebra:
    """′γ as the inverse of γ′; raises Singular when γ′ is not invertible"""
    return HopfCoalgebra(bi, gamma_r, inverse(gamma_r), source)


def _reshape_coaction(images: Matrix, c: int, d: int) -> Matrix:
    """δ[(t, k), j] = images[t, k·d + j]"""
    K = images.domain
    rows = images.to_list()
    data = [[rows[t][k * d + j] for j in range(d)] for t in range(c) for k in range(d)]
    return from_rows(data, K, d)


def dual_over_H(H: HopfCoalgebra, g: AntipodeGenerator, side: str = "right") -> SquaredComodule:
    """X^∨ (or ^∨X) as a comodule over H; ev and coev are those of V"""
    M = g.comodule
    d, c, K = M.dim, H.dim, H.domain
    q = g.q
    if side == "right":
        D, _, _ = dual(M.X)
        images = matmul(H.gamma_r, matmul(q, kron(inverse(g.zeta), identity(d, K))))
    elif side == "left":
        D, _, _ = dual(M.X, "left")
        images = matmul(H.gamma_l, matmul(q, kron(identity(d, K), inverse(g.xi))))
    else:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    return SquaredComodule(M.over, D, _reshape_coaction(images, c, d), D.name)


def check_dual_over_H(H: HopfCoalgebra, g: AntipodeGenerator, side: str = "right") -> VerificationReport:
    M = g.comodule
    D = dual_over_H(H, g, side)
    d, K = M.dim, H.domain
    report = check_squared_comodule(D)
    ev, coev = pairing(d, K), copairing(d, K)
    if side == "right":
        ev_src, coev_dst = bicomodule_tensor(H.bi, M, D), bicomodule_tensor(H.bi, D, M)
    else:
        ev_src, coev_dst = bicomodule_tensor(H.bi, D, M), bicomodule_tensor(H.bi, M, D)
    report.compare(f"ev-comodule-map[{side}]", matmul(H.bi.unit, ev),
                   apply_on_factors([H.dim, d * d], 1, 2, ev, ev_src.delta))
    report.compare(f"coev-comodule-map[{side}]", matmul(coev_dst.delta, coev), kron(H.bi.unit, coev))
    return report
