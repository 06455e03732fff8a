from typing import Optional

from exactla import Matrix, kron, permute_factors
from comod import barotimes, same_hopf, tensor_V
from squared.coalgebra import SquaredCoalgebra, SquaredComodule


def barotimes_coalg(A: SquaredCoalgebra, B: SquaredCoalgebra) -> SquaredCoalgebra:
    """A⊗̄B: Δ(a⊗b) = (a₁⊗b₁)⊗(a₂⊗b₂), ε = ε_A⊗ε_B"""
    same_hopf(A.C, B.C)
    a, b = A.dim, B.dim
    delta = permute_factors([a, a, b, b], [0, 2, 1, 3], kron(A.delta, B.delta))
    return SquaredCoalgebra(barotimes(A.C, B.C), delta, kron(A.eps, B.eps), f"{A.name}⊗̄{B.name}")


def comodule_barotimes(M: SquaredComodule, N: SquaredComodule, over: Optional[SquaredCoalgebra] = None) -> SquaredComodule:
    """M⊗N over A⊗̄B with δ(m⊗n) = (m₋₁⊗n₋₁)⊗m₀⊗n₀"""
    target = over if over is not None else barotimes_coalg(M.over, N.over)
    return SquaredComodule(target, tensor_V(M.X, N.X), barotimes_coaction(M, N), f"{M.name}⊗{N.name}")


def barotimes_coaction(M: SquaredComodule, N: SquaredComodule) -> Matrix:
    dims = [M.over.dim, M.dim, N.over.dim, N.dim]
    return permute_factors(dims, [0, 2, 1, 3], kron(M.delta, N.delta))
