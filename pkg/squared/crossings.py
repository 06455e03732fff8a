"""Braidings of V between single legs of a squared coalgebra.

For C at level 2, C̄ is C with both legs merged, C^{[1]} and C^{[2]} keep one
leg each. Maps below act on C⊗C in the order a⊗b.
"""
from functools import lru_cache

from exactla import Matrix, apply_on_factors, identity, kron, matmul, permute_factors
from comod import Comodule, braiding, braiding_inverse, leg_restriction, restrict_ot, swap
from squared.coalgebra import SquaredCoalgebra


@lru_cache(maxsize=32)
def bar_object(S: SquaredCoalgebra) -> Comodule:
    return restrict_ot(S.C, 1).renamed(f"{S.name}̄")


@lru_cache(maxsize=32)
def first_leg(S: SquaredCoalgebra) -> Comodule:
    return leg_restriction(S.C, [1]).renamed(f"{S.name}^[1]")


@lru_cache(maxsize=32)
def second_leg(S: SquaredCoalgebra) -> Comodule:
    return leg_restriction(S.C, [2]).renamed(f"{S.name}^[2]")


def _flip(S: SquaredCoalgebra) -> Matrix:
    return swap(S.dim, S.dim, S.domain)


def double_braiding(S: SquaredCoalgebra) -> Matrix:
    """Ω: a⊗b ↦ leg 2 of a braided twice around leg 1 of b"""
    A2, B1 = second_leg(S), first_leg(S)
    return matmul(braiding(B1, A2).matrix, braiding(A2, B1).matrix)


def crossing_minus(S: SquaredCoalgebra) -> Matrix:
    """a⊗b ↦ r̄(b^{[1]}₋₁⊗a^{[2]}₋₁) a₀⊗b₀"""
    return matmul(braiding_inverse(second_leg(S), first_leg(S)).matrix, _flip(S))


def crossing_plus(S: SquaredCoalgebra) -> Matrix:
    """a⊗b ↦ r(a^{[2]}₋₁⊗b^{[1]}₋₁) a₀⊗b₀"""
    return matmul(braiding(first_leg(S), second_leg(S)).matrix, _flip(S))


def product_crossing(S: SquaredCoalgebra) -> Matrix:
    """φ: a⊗b ↦ r((ot b)₋₁⊗a^{[2]}₋₁) a₀⊗b₀, the comparison C⊗̄C → C̄⊗C̄ on underlying spaces"""
    return matmul(_flip(S), braiding(second_leg(S), bar_object(S)).matrix)


def bar_braiding(S: SquaredCoalgebra) -> Matrix:
    """c_{C̄,C̄}"""
    Cbar = bar_object(S)
    return braiding(Cbar, Cbar).matrix


def bar_braiding_inverse(S: SquaredCoalgebra) -> Matrix:
    Cbar = bar_object(S)
    return braiding_inverse(Cbar, Cbar).matrix


def partial_self_braiding(S: SquaredCoalgebra) -> Matrix:
    """C^{12} → C^{21}: a ↦ r(a^{[2]}₋₁⊗a^{[1]}₋₁) a₀"""
    H = S.hopf
    h = H.dim
    form = matmul(H.require_rform(), swap(h, h, H.domain))
    return apply_on_factors([h, h, S.dim], 0, 2, form, S.C.coaction)


def on_outer_factors(S: SquaredCoalgebra, m: Matrix) -> Matrix:
    """m acting on factors 1 and 3 of C⊗C⊗C"""
    c = S.dim
    P = permute_factors([c, c, c], [0, 2, 1], K=S.domain)
    return matmul(P, matmul(kron(m, identity(c, S.domain)), P))
