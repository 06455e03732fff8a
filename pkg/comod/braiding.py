import logging
from itertools import product
from typing import Sequence, Union

from exactla import Matrix, apply_on_factors, first_difference, identity, is_invertible, kron, matmul, permute_factors
from hopf import rform_inverse
from comod.comodule import (
    ComodMorphism,
    Comodule,
    check_morphism,
    intertwining_sides,
    same_hopf,
    swap,
    tensor_V,
)
from comod.duality import dual
from utils.errors import NotNatural, ShcError
from utils.report import VerificationReport

logger = logging.getLogger(__name__)

U_VARIANTS = ("u1^2", "u-1^2", "u1^-2", "u-1^-2")


def form_on_legs(X: Comodule, Y: Comodule, form: Matrix) -> Matrix:
    """y⊗x ↦ form(y₋₁⊗x₋₁) y₀⊗x₀ on Y⊗X"""
    H = same_hopf(X, Y)
    h = H.dim
    m = kron(Y.coaction, X.coaction)
    m = permute_factors([h, Y.dim, h, X.dim], [0, 2, 1, 3], m)
    return apply_on_factors([h, h, Y.dim * X.dim], 0, 2, form, m)


def braiding(X: Comodule, Y: Comodule) -> ComodMorphism:
    """c_{X,Y}(x⊗y) = r(y₋₁⊗x₋₁) y₀⊗x₀"""
    rho = X.hopf.require_rform()
    m = matmul(form_on_legs(X, Y, rho), swap(X.dim, Y.dim, X.domain))
    return ComodMorphism(tensor_V(X, Y), tensor_V(Y, X), m, f"c_{X.name},{Y.name}")


def braiding_inverse(X: Comodule, Y: Comodule) -> ComodMorphism:
    """c_{X,Y}⁻¹: Y⊗X → X⊗Y, y⊗x ↦ r̄(y₋₁⊗x₋₁) x₀⊗y₀"""
    rho_bar = rform_inverse(X.hopf)
    m = matmul(swap(Y.dim, X.dim, X.domain), form_on_legs(X, Y, rho_bar))
    return ComodMorphism(tensor_V(Y, X), tensor_V(X, Y), m, f"c^-1_{X.name},{Y.name}")


def check_braiding(objects: Sequence[Comodule],
                   morphisms: Sequence[ComodMorphism] = ()) -> VerificationReport:
    """Intertwining, invertibility, naturality and both hexagons over a fixture set"""
    report = VerificationReport()
    K = objects[0].domain
    for X, Y in product(objects, repeat=2):
        tag = f"[{X.name},{Y.name}]"
        c = braiding(X, Y)
        report.extend(check_morphism(c, "braiding-intertwines" + tag))
        c_inv = braiding_inverse(X, Y)
        report.compare("braiding-inverse" + tag, matmul(c_inv.matrix, c.matrix),
                       identity(X.dim * Y.dim, K))
    for X, Y, Z in product(objects, repeat=3):
        tag = f"[{X.name},{Y.name},{Z.name}]"
        dx, dy, dz = X.dim, Y.dim, Z.dim
        lhs = braiding(X, tensor_V(Y, Z)).matrix
        rhs = matmul(kron(identity(dy, K), braiding(X, Z).matrix),
                     kron(braiding(X, Y).matrix, identity(dz, K)))
        report.compare("hexagon-left" + tag, lhs, rhs)
        lhs = braiding(tensor_V(X, Y), Z).matrix
        rhs = matmul(kron(braiding(X, Z).matrix, identity(dy, K)),
                     kron(identity(dx, K), braiding(Y, Z).matrix))
        report.compare("hexagon-right" + tag, lhs, rhs)
    for f in morphisms:
        for Y in objects:
            tag = f"[{f.name},{Y.name}]"
            dy = Y.dim
            lhs = matmul(braiding(f.dst, Y).matrix, kron(f.matrix, identity(dy, K)))
            rhs = matmul(kron(identity(dy, K), f.matrix), braiding(f.src, Y).matrix)
            report.compare("naturality-left" + tag, lhs, rhs)
            lhs = matmul(braiding(Y, f.dst).matrix, kron(identity(dy, K), f.matrix))
            rhs = matmul(kron(f.matrix, identity(dy, K)), braiding(Y, f.src).matrix)
            report.compare("naturality-right" + tag, lhs, rhs)
    return report


def drinfeld_u(X: Comodule, variant: str = "u1^2") -> ComodMorphism:
    """The four pictured isomorphisms X → X^∨∨ (u₁², u₋₁²) and X → ^∨^∨X (u₁⁻², u₋₁⁻²)"""
    K = X.domain
    d = X.dim
    I = identity(d, K)
    if variant in ("u1^2", "u-1^2"):
        Xd, ev, _ = dual(X)
        Xdd, _, coev_d = dual(Xd)
        if variant == "u1^2":
            cross = braiding(X, Xdd).matrix
        else:
            cross = braiding_inverse(Xdd, X).matrix
        # X → X⊗X^∨∨⊗X^∨ → X^∨∨⊗X⊗X^∨ → X^∨∨
        m = matmul(kron(I, ev.matrix), matmul(kron(cross, I), kron(I, coev_d.matrix)))
        return ComodMorphism(X, Xdd, m, f"{variant}_{X.name}")
    if variant in ("u1^-2", "u-1^-2"):
        Xd, ev_l, _ = dual(X, "left")
        Xdd, _, coev_l = dual(Xd, "left")
        if variant == "u1^-2":
            cross = braiding(Xdd, X).matrix
        else:
            cross = braiding_inverse(X, Xdd).matrix
        # X → ^∨X⊗^∨^∨X⊗X → ^∨X⊗X⊗^∨^∨X → ^∨^∨X
        m = matmul(kron(ev_l.matrix, I), matmul(kron(I, cross), kron(coev_l.matrix, I)))
        return ComodMorphism(X, Xdd, m, f"{variant}_{X.name}")
    raise ShcError(f"unknown u-variant {variant!r}; expected one of {U_VARIANTS}")


def check_naturality(maps: dict, morphisms: Sequence[ComodMorphism], label: str) -> VerificationReport:
    """η_Y∘f = f∘η_X for families whose target functor acts on maps as the identity matrix"""
    report = VerificationReport()
    for f in morphisms:
        if f.src.name not in maps or f.dst.name not in maps:
            continue
        lhs = matmul(maps[f.dst.name], f.matrix)
        rhs = matmul(f.matrix, maps[f.src.name])
        report.compare(f"{label}-natural[{f.name}]", lhs, rhs)
    return report


def zeta(X: Comodule, source: Union[str, Matrix] = "rform") -> ComodMorphism:
    """ζ_X: X → X^∨∨ from the r-form (u₁²) or from a grouplike character φ: x ↦ φ(x₋₁)x₀"""
    if isinstance(source, str):
        if source != "rform":
            raise ShcError(f"unknown zeta source {source!r}")
        z = drinfeld_u(X, "u1^2")
    else:
        H = X.hopf
        m = apply_on_factors([H.dim, X.dim], 0, 1, source, X.coaction)
        Xdd = dual(dual(X)[0])[0]
        lhs, rhs = intertwining_sides(X, Xdd, m)
        witness = first_difference(lhs, rhs)
        if witness is not None:
            raise NotNatural(f"grouplike zeta is not a comodule map on {X.name} at {witness}")
        z = ComodMorphism(X, Xdd, m, f"zeta_{X.name}")
    if not is_invertible(z.matrix):
        raise NotNatural(f"zeta on {X.name} is not invertible")
    return z


def zeta_matrices(objects: Sequence[Comodule], source: Union[str, Matrix] = "rform",
                  morphisms: Sequence[ComodMorphism] = ()) -> dict:
    """ζ for each object, checked for naturality against the supplied morphisms"""
    maps = {X.name: zeta(X, source).matrix for X in objects}
    report = check_naturality(maps, morphisms, "zeta")
    if not report.ok:
        bad = report.failures[0]
        raise NotNatural(f"zeta fails naturality: {bad.name} at {bad.witness}")
    return maps
