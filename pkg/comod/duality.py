from exactla import Matrix, apply_on_factors, from_rows, identity, kron, matmul, permute_factors, transpose
from hopf import antipode_inverse
from comod.comodule import ComodMorphism, Comodule, check_morphism, tensor_V, trivial
from utils.errors import LevelMismatch
from utils.report import VerificationReport


def _dual_coaction(X: Comodule, antipode: Matrix) -> Matrix:
    """e^i ↦ Σ_a s(c_ia) ⊗ e^a where δ(e_a) = Σ_i c_ia ⊗ e_i"""
    h, d = X.hopf.dim, X.dim
    rows = X.coaction.to_list()
    K = X.domain
    flipped = [[K.zero] * d for _ in range(h * d)]
    for t in range(h):
        for i in range(d):
            for a in range(d):
                flipped[t * d + a][i] = rows[t * d + i][a]
    return apply_on_factors([h, d], 0, 1, antipode, from_rows(flipped, K, d))


def pairing(d: int, K) -> Matrix:
    """x⊗φ ↦ φ(x) as a 1×d² row"""
    return from_rows([[1 if c // d == c % d else 0 for c in range(d * d)]], K)


def copairing(d: int, K) -> Matrix:
    """1 ↦ Σ_j e^j ⊗ e_j as a d²×1 column"""
    return transpose(pairing(d, K))


def dual(X: Comodule, side: str = "right") -> tuple[Comodule, ComodMorphism, ComodMorphism]:
    """Right dual X^∨ with ev: X⊗X^∨ → I, coev: I → X^∨⊗X; left dual ^∨X with
    ev: ^∨X⊗X → I, coev: I → X⊗^∨X."""
    if X.level != 1:
        raise LevelMismatch("duals exist for level-1 comodules")
    H = X.hopf
    K = X.domain
    if side == "right":
        D = Comodule(H, 1, X.dim, _dual_coaction(X, H.antipode), f"{X.name}^∨")
        ev_src, coev_dst = tensor_V(X, D), tensor_V(D, X)
    elif side == "left":
        D = Comodule(H, 1, X.dim, _dual_coaction(X, antipode_inverse(H)), f"^∨{X.name}")
        ev_src, coev_dst = tensor_V(D, X), tensor_V(X, D)
    else:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    unit = trivial(H)
    ev = ComodMorphism(ev_src, unit, pairing(X.dim, K), f"ev_{X.name}")
    coev = ComodMorphism(unit, coev_dst, copairing(X.dim, K), f"coev_{X.name}")
    return D, ev, coev


def dual_morphism(f: ComodMorphism, side: str = "right") -> ComodMorphism:
    """f^∨: Y^∨ → X^∨ is the transpose"""
    src, _, _ = dual(f.dst, side)
    dst, _, _ = dual(f.src, side)
    return ComodMorphism(src, dst, transpose(f.matrix), f"{f.name}^∨")


def double_dual(X: Comodule, side: str = "right") -> Comodule:
    first, _, _ = dual(X, side)
    second, _, _ = dual(first, side)
    return second


def check_duality(X: Comodule, side: str = "right") -> VerificationReport:
    """Zig-zags plus the comodule-morphism property of ev and coev"""
    D, ev, coev = dual(X, side)
    d, K = X.dim, X.domain
    I = identity(d, K)
    report = VerificationReport()
    report.extend(check_morphism(ev, "ev-intertwines"))
    report.extend(check_morphism(coev, "coev-intertwines"))
    if side == "right":
        # (ev⊗1)(1⊗coev) = id_X and (1⊗ev)(coev⊗1) = id_{X^∨}
        report.compare("zigzag-object", matmul(kron(ev.matrix, I), kron(I, coev.matrix)), I)
        report.compare("zigzag-dual", matmul(kron(I, ev.matrix), kron(coev.matrix, I)), I)
    else:
        # (1⊗ev)(coev⊗1) = id_X and (ev⊗1)(1⊗coev) = id_{^∨X}
        report.compare("zigzag-object", matmul(kron(I, ev.matrix), kron(coev.matrix, I)), I)
        report.compare("zigzag-dual", matmul(kron(ev.matrix, I), kron(I, coev.matrix)), I)
    return report


def jplus(X: Comodule, Y: Comodule) -> ComodMorphism:
    """j₊: Y^∨⊗X^∨ → (X⊗Y)^∨, ψ⊗φ ↦ (x⊗y ↦ φ(x)ψ(y))"""
    Xd, _, _ = dual(X)
    Yd, _, _ = dual(Y)
    XYd, _, _ = dual(tensor_V(X, Y))
    m = permute_factors([Y.dim, X.dim], [1, 0], K=X.domain)
    return ComodMorphism(tensor_V(Yd, Xd), XYd, m, f"j+_{X.name},{Y.name}")


def jminus(X: Comodule, Y: Comodule) -> ComodMorphism:
    """j₋: ^∨Y⊗^∨X → ^∨(X⊗Y)"""
    Xd, _, _ = dual(X, "left")
    Yd, _, _ = dual(Y, "left")
    XYd, _, _ = dual(tensor_V(X, Y), "left")
    m = permute_factors([Y.dim, X.dim], [1, 0], K=X.domain)
    return ComodMorphism(tensor_V(Yd, Xd), XYd, m, f"j-_{X.name},{Y.name}")


def check_jplus(X: Comodule, Y: Comodule) -> VerificationReport:
    K = X.domain
    dx, dy = X.dim, Y.dim
    j = jplus(X, Y)
    report = check_morphism(j, "jplus-intertwines")
    _, ev_x, coev_x = dual(X)
    _, ev_y, coev_y = dual(Y)
    _, ev_xy, coev_xy = dual(tensor_V(X, Y))
    # ev_{X⊗Y}∘(1⊗j₊) = ev_X∘(1⊗ev_Y⊗1) on X⊗Y⊗Y^∨⊗X^∨
    lhs = matmul(ev_xy.matrix, kron(identity(dx * dy, K), j.matrix))
    rhs = matmul(ev_x.matrix, kron(kron(identity(dx, K), ev_y.matrix), identity(dx, K)))
    report.compare("jplus-pairing", lhs, rhs)
    # coev_{X⊗Y} = (j₊⊗1⊗1)∘(1⊗coev_X⊗1)∘coev_Y
    inner = matmul(kron(kron(identity(dy, K), coev_x.matrix), identity(dy, K)), coev_y.matrix)
    rhs = matmul(kron(j.matrix, identity(dx * dy, K)), inner)
    report.compare("jplus-coev", coev_xy.matrix, rhs)
    return report


def check_jminus(X: Comodule, Y: Comodule) -> VerificationReport:
    K = X.domain
    dx, dy = X.dim, Y.dim
    j = jminus(X, Y)
    report = check_morphism(j, "jminus-intertwines")
    _, ev_x, _ = dual(X, "left")
    _, ev_y, _ = dual(Y, "left")
    _, ev_xy, _ = dual(tensor_V(X, Y), "left")
    # ev_{X⊗Y}∘(j₋⊗1) = ev_Y∘(1⊗ev_X⊗1) on ^∨Y⊗^∨X⊗X⊗Y
    lhs = matmul(ev_xy.matrix, kron(j.matrix, identity(dx * dy, K)))
    rhs = matmul(ev_y.matrix, kron(kron(identity(dy, K), ev_x.matrix), identity(dy, K)))
    report.compare("jminus-pairing", lhs, rhs)
    return report
