import logging
from dataclasses import dataclass
from typing import Mapping, Optional

from exactla import Matrix, first_difference, identity, inverse, kron_all, matmul, permute_factors
from comod import ComodMorphism, Comodule, exterior, intertwining_sides, permute, restrict_ot, same_hopf, trivial
from hopf import HopfAlgebra
from placement.parser import UNIT_NAME, PlacementExpr, Slot, parse
from utils.errors import ArityMismatch, NotAMorphism, ShcError, UnknownObject

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trace:
    """How a realization was assembled from its operands"""
    operand_order: tuple[int, ...]    # text positions of the operands in underlying order
    operand_dims: tuple[int, ...]     # dims in text order
    leg_permutation: tuple[int, ...]  # sorted leg k came from exterior leg leg_permutation[k]
    merges: tuple[int, ...]           # 1-based merge positions, applied in order

    def text_to_underlying(self, K) -> Matrix:
        """Reorders text-order operand spaces into underlying order"""
        return permute_factors(list(self.operand_dims), list(self.operand_order), K=K)


def _as_expr(e) -> PlacementExpr:
    return parse(e) if isinstance(e, str) else e


def _resolve(name: str, arity: int, bind: Mapping[str, Comodule], hopf: Optional[HopfAlgebra]) -> Comodule:
    if name in bind:
        X = bind[name]
        if X.level != arity:
            raise ArityMismatch(f"{name} has level {X.level} but is placed with {arity} indices")
        return X
    if name == UNIT_NAME:
        if hopf is None:
            raise ShcError("cannot place the unit without a Hopf algebra")
        return trivial(hopf, level=arity)
    raise UnknownObject(f"no comodule bound to {name!r}")


def _hopf_of(bind: Mapping[str, Comodule], hopf: Optional[HopfAlgebra]) -> Optional[HopfAlgebra]:
    if hopf is not None:
        return hopf
    for X in bind.values():
        return X.hopf
    return None


def realize(e, bind: Mapping[str, Comodule], hopf: Optional[HopfAlgebra] = None) -> tuple[Comodule, Trace]:
    expr = _as_expr(e)
    H = _hopf_of(bind, hopf)
    operands = [_resolve(op.name, op.arity, bind, H) for op in expr.operands]
    same_hopf(*operands)
    H = operands[0].hopf

    order = sorted(range(len(expr.operands)), key=lambda i: min(expr.operands[i].slots))
    slots: list[Slot] = []
    X = None
    for i in order:
        X = operands[i] if X is None else exterior(X, operands[i])
        slots.extend(expr.operands[i].slots)
    sorted_legs = sorted(range(len(slots)), key=lambda k: slots[k])
    if sorted_legs != list(range(len(slots))):
        X = permute(X, sorted_legs)
    merges = []
    ordered = [slots[k] for k in sorted_legs]
    for target in range(1, expr.arity + 1):
        count = sum(1 for s in ordered if s.target == target)
        for _ in range(count - 1):
            X = restrict_ot(X, target)
            merges.append(target)
    name = " ⊗ ".join(op.name for op in expr.operands)
    realized = Comodule(H, X.level, X.dim, X.coaction, name)
    trace = Trace(tuple(order), tuple(op.dim for op in operands), tuple(sorted_legs), tuple(merges))
    logger.debug(f"realized {expr.text or name} at level {realized.level}, dim {realized.dim}")
    return realized, trace


def realize_morphism(src, dst, bind: Mapping[str, Comodule],
                     base_maps: Optional[Mapping[str, Matrix]] = None,
                     matrix: Optional[Matrix] = None,
                     hopf: Optional[HopfAlgebra] = None,
                     name: str = "") -> ComodMorphism:
    """Place a linear map between two realizations and check it intertwines.

    ``matrix`` is given in text operand order on both sides; otherwise
    ``base_maps`` substitutes operandwise (identity where a name is unchanged).
    """
    src_expr, dst_expr = _as_expr(src), _as_expr(dst)
    X, src_trace = realize(src_expr, bind, hopf)
    Y, dst_trace = realize(dst_expr, bind, hopf)
    K = X.domain
    if matrix is None:
        matrix = _substitute(src_expr, dst_expr, src_trace, dst_trace, base_maps or {}, K)
    if matrix.shape != (Y.dim, X.dim):
        raise ArityMismatch(f"placed map has shape {matrix.shape}, expected {(Y.dim, X.dim)}")
    into_src = src_trace.text_to_underlying(K)
    into_dst = dst_trace.text_to_underlying(K)
    placed = matmul(into_dst, matmul(matrix, inverse(into_src)))
    lhs, rhs = intertwining_sides(X, Y, placed)
    witness = first_difference(lhs, rhs)
    if witness is not None:
        raise NotAMorphism(f"{name or 'placed map'} is not a morphism {src_expr} → {dst_expr}", witness)
    return ComodMorphism(X, Y, placed, name)


def _substitute(src: PlacementExpr, dst: PlacementExpr, src_trace: Trace, dst_trace: Trace,
                base_maps: Mapping[str, Matrix], K) -> Matrix:
    if len(src.operands) != len(dst.operands):
        raise ArityMismatch("operandwise substitution needs the same number of operands on both sides")
    pieces = []
    for a, b, da, db in zip(src.operands, dst.operands, src_trace.operand_dims, dst_trace.operand_dims):
        if a.name in base_maps:
            pieces.append(base_maps[a.name])
        elif a.name == b.name and da == db:
            pieces.append(identity(da, K))
        else:
            raise ArityMismatch(f"no base map sends {a.name} to {b.name}")
    return kron_all(pieces, K)


def placement_sides(src, dst, bind: Mapping[str, Comodule], matrix: Matrix,
                    hopf: Optional[HopfAlgebra] = None) -> tuple[Matrix, Matrix]:
    """Both sides of the intertwining square of a placed map, without raising"""
    src_expr, dst_expr = _as_expr(src), _as_expr(dst)
    X, src_trace = realize(src_expr, bind, hopf)
    Y, dst_trace = realize(dst_expr, bind, hopf)
    K = X.domain
    placed = matmul(dst_trace.text_to_underlying(K), matmul(matrix, inverse(src_trace.text_to_underlying(K))))
    return intertwining_sides(X, Y, placed)
