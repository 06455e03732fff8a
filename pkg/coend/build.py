"""Coend coalgebras of finite diagrams of comodules.

The coend of a diagram is the quotient of ⊕_X X⊙X^∨ by the relations
x⊗fᵗψ − fx⊗ψ, one block for every listed f: X → Y. Relations of a
composite g∘f are sums of relations of f and g (on u: r_{g∘f}(u) =
r_f((1⊗gᵗ)u) + r_g((f⊗1)u)), so listing a spanning set of each Hom space
suffices. Structure maps are then fixed by their values on the
projections q_X, see ``descend``.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from exactla import (
    Matrix,
    add,
    apply_on_factors,
    cokernel,
    from_rows,
    hstack,
    identity,
    is_zero,
    kernel_basis,
    kron,
    matmul,
    rank,
    rows_of,
    solve,
    transpose,
    vstack,
    zeros,
)
from comod import Comodule, copairing, direct_sum, dual, exterior, hom_space, pairing, tensor_V, trivial
from squared import (
    Bicoalgebra,
    CoalgebraHom,
    HopfCoalgebra,
    QTHopfCoalgebra,
    RibbonHopfCoalgebra,
    SquaredCoalgebra,
    SquaredComodule,
    canonical,
    check_coalgebra_hom,
    check_squared,
    descend,
    iota,
)
from squared.hopf_coalgebra import canonical_comult_block
from coend.diagram import Arrow, Diagram
from utils.errors import NotGenerating, WellDefinednessFailure
from utils.report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CoendCoalgebra:
    C: SquaredCoalgebra
    q: dict[str, Matrix]
    diagram: Diagram
    bi: Optional[Bicoalgebra] = None
    hopf: Optional[HopfCoalgebra] = None
    qt: Optional[QTHopfCoalgebra] = None
    ribbon: Optional[RibbonHopfCoalgebra] = None

    @property
    def dim(self) -> int:
        return self.C.dim

    @property
    def domain(self):
        return self.C.domain

    def generators(self) -> list[Matrix]:
        return [self.q[key] for key in self.diagram.names]


def _relation_block(D: Diagram, arrow: Arrow, offsets: dict[str, int], total: int) -> Matrix:
    """Columns of (1⊗fᵗ) − (f⊗1) from X⊗Y^∨ into ⊕ Z⊗Z^∨"""
    X, Y = D.objects[arrow.src], D.objects[arrow.dst]
    K = X.domain
    f = arrow.matrix
    width = X.dim * Y.dim
    rows = zeros(total, width, K).to_list()
    pieces = (
        (offsets[arrow.src], kron(identity(X.dim, K), transpose(f)), K.one),
        (offsets[arrow.dst], kron(f, identity(Y.dim, K)), -K.one),
    )
    for start, block, sign in pieces:
        for i, row in enumerate(block.to_list()):
            for j, v in enumerate(row):
                rows[start + i][j] += sign * v
    return from_rows(rows, K, width)


def relation_map(D: Diagram) -> Matrix:
    K = D.hopf.domain
    offsets, total = {}, 0
    for key, X in D.objects.items():
        offsets[key] = total
        total += X.dim * X.dim
    arrows = D.relation_arrows()
    logger.debug(f"{D.name}: {len(arrows)} relation blocks on a {total}-dim space")
    if not arrows:
        return zeros(total, 0, K)
    return hstack(*[_relation_block(D, a, offsets, total) for a in arrows])


def build_coend(D: Diagram) -> CoendCoalgebra:
    K = D.hopf.domain
    blocks = [exterior(X, dual(X)[0]).renamed(f"{key}⊙{key}^∨") for key, X in D.objects.items()]
    V, inclusions, _ = direct_sum(blocks, "V")
    R = relation_map(D)
    proj, section = cokernel(R)
    dims = [V.legs, V.dim]
    if not is_zero(apply_on_factors(dims, 1, 2, proj, matmul(V.coaction, R))):
        raise WellDefinednessFailure(f"relations of {D.name} do not span a subcomodule")
    c = proj.shape[0]
    coaction = apply_on_factors(dims, 1, 2, proj, matmul(V.coaction, section))
    C = Comodule(D.hopf, 2, c, coaction, f"∫{D.name}")
    q = {key: matmul(proj, inc) for key, inc in zip(D.names, inclusions)}
    qs = [q[key] for key in D.names]
    comults = [matmul(kron(q[key], q[key]), canonical_comult_block(X.dim, K)) for key, X in D.objects.items()]
    counits = [pairing(X.dim, K) for X in D.objects.values()]
    S = SquaredCoalgebra(C, descend(qs, comults, c), descend(qs, counits, c), f"coend({D.name})")
    logger.info(f"coend of {D.name}: {V.dim} generators, relation rank {rank(R)}, dimension {c}")
    return CoendCoalgebra(S, q, D)


def check_coend(E: CoendCoalgebra, paranoid: bool = False) -> VerificationReport:
    D, K = E.diagram, E.domain
    report = check_squared(E.C, paranoid)
    for a in D.arrows:
        X, Y = D.objects[a.src], D.objects[a.dst]
        lhs = matmul(E.q[a.src], kron(identity(X.dim, K), transpose(a.matrix)))
        rhs = matmul(E.q[a.dst], kron(a.matrix, identity(Y.dim, K)))
        report.compare(f"dinatural[{a.name}]", lhs, rhs)
    for key, X in D.objects.items():
        hom = CoalgebraHom(canonical(X), E.C, E.q[key], f"q_{key}")
        report.extend(check_coalgebra_hom(hom), f"q[{key}]:")
    span = rank(hstack(*E.generators()))
    report.record("generating", span == E.dim, "" if span == E.dim else f"rank deficit {E.dim - span}")
    return report


def reconstruct_comodule(E: CoendCoalgebra, key: str) -> SquaredComodule:
    """X with δ_X = (q_X⊗1)∘(1⊙coev); the underlying object is X itself"""
    X = E.diagram.object(key)
    K, d = X.domain, X.dim
    delta = matmul(kron(E.q[key], identity(d, K)), kron(identity(d, K), copairing(d, K)))
    return SquaredComodule(E.C, X, delta, key)


def reconstructed(E: CoendCoalgebra) -> list[SquaredComodule]:
    return [reconstruct_comodule(E, key) for key in E.diagram.names]


def _embedding(E: CoendCoalgebra, W: Comodule) -> list[tuple[str, Matrix]]:
    return [(key, f) for key, X in E.diagram.objects.items() for f in hom_space(W, X)]


def embedding_deficit(E: CoendCoalgebra, W: Comodule) -> int:
    """dim W minus the rank of W → ⊕ listed objects through all Hom maps"""
    if any(X.same_as(W) for X in E.diagram.objects.values()):
        return 0
    maps = _embedding(E, W)
    if not maps:
        return W.dim
    return W.dim - rank(vstack(*[f for _, f in maps]))


def generator_for(E: CoendCoalgebra, W: Comodule) -> Matrix:
    """The projection W⊙W^∨ → C for a comodule W

    A listed object gives its own q. Otherwise W is embedded into the listed
    objects by Hom maps f_j and q_W(w⊗ψ) = Σ_j q_j(f_j w⊗L_j ψ) for any lift L
    of ψ along the transposed embedding; the value may not depend on the lift.
    """
    for key, X in E.diagram.objects.items():
        if X.same_as(W):
            return E.q[key]
    K, d = W.domain, W.dim
    maps = _embedding(E, W)
    F = vstack(*[f for _, f in maps]) if maps else None
    if F is None or rank(F) < d:
        raise NotGenerating(f"{W.name or 'comodule'} does not embed into the objects of {E.diagram.name}")
    lift = solve(transpose(F), identity(d, K))
    free = kernel_basis(transpose(F))
    q_W = zeros(E.dim, d * d, K)
    leak = zeros(E.dim, d * free.shape[1], K)
    offset = 0
    for key, f in maps:
        n = f.shape[0]
        block = list(range(offset, offset + n))
        q_W = add(q_W, matmul(E.q[key], kron(f, rows_of(lift, block))))
        if free.shape[1]:
            leak = add(leak, matmul(E.q[key], kron(f, rows_of(free, block))))
        offset += n
    if not is_zero(leak):
        raise WellDefinednessFailure(f"generator for {W.name or 'comodule'} depends on the chosen lift")
    return q_W


def c58_report(E: CoendCoalgebra, monoidal: bool = True, duals: bool = True) -> VerificationReport:
    """Joint surjectivity of the q_X and rank deficits of the tensor and dual closures"""
    D = E.diagram
    report = VerificationReport()
    span = rank(hstack(*E.generators()))
    report.record("c58-generating", span == E.dim, f"rank deficit {E.dim - span}" if span < E.dim else "")
    candidates = []
    if monoidal:
        candidates.append(("I", trivial(D.hopf)))
        for a, X in D.objects.items():
            for b, Y in D.objects.items():
                candidates.append((f"{a}⊗{b}", tensor_V(X, Y)))
    if duals:
        for a, X in D.objects.items():
            candidates.append((f"{a}^∨", dual(X)[0]))
            candidates.append((f"^∨{a}", dual(X, "left")[0]))
    for label, W in candidates:
        deficit = embedding_deficit(E, W)
        report.record(f"c58-closure[{label}]", deficit == 0, f"rank deficit {deficit}" if deficit else "")
    return report


def h_morphism(C: SquaredCoalgebra, comodules: Sequence[SquaredComodule],
               arrows: Sequence[Arrow] = (), name: str = "P") -> tuple[CoendCoalgebra, CoalgebraHom]:
    """h: coend of the underlying diagram → C with h∘q_X = ï_X"""
    D = Diagram(C.hopf, {M.name: M.X for M in comodules}, tuple(arrows), name=name)
    E = build_coend(D)
    h = descend(E.generators(), [iota(M).matrix for M in comodules], E.dim)
    return E, CoalgebraHom(E.C, C, h, f"h_{C.name}")


def check_h_morphism(hom: CoalgebraHom, check_c58: bool = False) -> VerificationReport:
    report = check_coalgebra_hom(hom)
    if check_c58:
        r, c = rank(hom.matrix), hom.dst.dim
        report.record("c58-surjective", r == c, f"rank deficit {c - r}" if r < c else "")
    return report
