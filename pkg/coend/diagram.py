import logging
import random
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from exactla import Matrix, add, equal, identity, is_invertible, scale, transpose, zeros
from hopf import HopfAlgebra
from comod import Comodule, dual, hom_space, intertwining_sides, same_hopf, tensor_V, trivial
from utils.errors import NotAMorphism, NotDualClosed, NotMonoidalDiagram, ShcError, UnknownObject

logger = logging.getLogger(__name__)

ZetaSource = Union[str, Matrix]


@dataclass(frozen=True, eq=False)
class Arrow:
    """A listed morphism between two diagram objects, referenced by name"""
    name: str
    src: str
    dst: str
    matrix: Matrix


@dataclass(frozen=True, eq=False)
class Diagram:
    hopf: HopfAlgebra
    objects: dict[str, Comodule]
    arrows: tuple[Arrow, ...] = ()
    unit_object: Optional[str] = None
    tensor_table: dict[tuple[str, str], str] = field(default_factory=dict)
    dual_table: dict[str, str] = field(default_factory=dict)
    zeta_source: ZetaSource = "rform"
    name: str = "D"
    # key ↦ invertible comodule map key^∨ → dual_table[key]; missing ones are searched for
    dual_witnesses: dict[str, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        if not self.objects:
            raise ShcError(f"diagram {self.name} has no objects")
        same_hopf(*self.objects.values())
        for key, X in self.objects.items():
            if X.level != 1:
                raise ShcError(f"diagram object {key} is not a level-1 comodule")
        for a in self.arrows:
            src, dst = self.object(a.src), self.object(a.dst)
            if a.matrix.shape != (dst.dim, src.dim):
                raise NotAMorphism(f"arrow {a.name} has shape {a.matrix.shape}", None)
            lhs, rhs = intertwining_sides(src, dst, a.matrix)
            if not equal(lhs, rhs):
                raise NotAMorphism(f"arrow {a.name}: {a.src} → {a.dst} is not a comodule map", None)
        if self.unit_object is not None and not self.object(self.unit_object).same_as(trivial(self.hopf)):
            raise NotMonoidalDiagram(f"unit object {self.unit_object} is not the trivial comodule")
        for (left, right), target in self.tensor_table.items():
            product = tensor_V(self.object(left), self.object(right))
            if not self.object(target).same_as(product):
                raise NotMonoidalDiagram(f"{target} is not literally {left}⊗{right}")
        unknown = [key for key in self.dual_witnesses if key not in self.dual_table]
        if unknown:
            raise NotDualClosed(f"dual witnesses given for unlisted {', '.join(unknown)}")
        witnesses = {}
        for key, target in self.dual_table.items():
            D, _, _ = dual(self.object(key))
            T = self.object(target)
            phi = self.dual_witnesses.get(key)
            if phi is None:
                phi = _find_isomorphism(D, T, self.hopf.field.p)
            elif not _is_isomorphism(D, T, phi):
                raise NotDualClosed(f"the witness for {key} is not an isomorphism {key}^∨ → {target}")
            if phi is None:
                raise NotDualClosed(f"{target} is not isomorphic to the dual of {key}")
            witnesses[key] = phi
        object.__setattr__(self, "dual_witnesses", witnesses)

    def object(self, key: str) -> Comodule:
        try:
            return self.objects[key]
        except KeyError:
            raise UnknownObject(f"diagram {self.name} has no object {key!r}") from None

    @property
    def names(self) -> list[str]:
        return list(self.objects)

    def relation_arrows(self) -> list[Arrow]:
        """Arrows whose relations do not vanish; identities are dropped"""
        out = []
        for a in self.arrows:
            X = self.objects[a.src]
            if a.src == a.dst and equal(a.matrix, identity(X.dim, X.domain)):
                continue
            out.append(a)
        return out

    def with_full_homs(self) -> "Diagram":
        """The same objects with every listed Hom space replaced by a basis"""
        arrows = []
        for src, X in self.objects.items():
            for dst, Y in self.objects.items():
                for k, f in enumerate(hom_space(X, Y)):
                    arrows.append(Arrow(f"{src}→{dst}#{k}", src, dst, f))
        logger.debug(f"full Hom spaces of {self.name}: {len(arrows)} arrows")
        return replace(self, arrows=tuple(arrows))

    def require_dual_table(self):
        missing = [key for key in self.objects if key not in self.dual_table]
        if missing:
            raise NotDualClosed(f"no dual listed for {', '.join(missing)}")

    def right_dual(self, key: str) -> tuple[str, Matrix]:
        """The listed dual of key with an isomorphism key^∨ → target"""
        self.require_dual_table()
        return self.dual_table[key], self.dual_witnesses[key]

    def left_dual(self, key: str) -> tuple[str, Matrix]:
        """An object L with ^∨key ≅ L, read backwards off the dual table

        When φ: L^∨ → key is the listed witness, its transpose is a comodule
        isomorphism ^∨key → ^∨(L^∨) = L.
        """
        self.require_dual_table()
        for source, target in self.dual_table.items():
            if target == key:
                psi = transpose(self.dual_witnesses[source])
                D, _, _ = dual(self.object(key), "left")
                if not _is_isomorphism(D, self.object(source), psi):
                    raise NotDualClosed(f"the witness for {source} does not transpose to ^∨{key} → {source}")
                return source, psi
        raise NotDualClosed(f"no object of {self.name} lists {key} as its dual")


def _is_isomorphism(src: Comodule, dst: Comodule, f: Matrix) -> bool:
    if f.shape != (dst.dim, src.dim) or src.dim != dst.dim:
        return False
    return equal(*intertwining_sides(src, dst, f)) and is_invertible(f)


def _find_isomorphism(src: Comodule, dst: Comodule, p: Optional[int], attempts: int = 32) -> Optional[Matrix]:
    """An invertible comodule map src → dst, or None when the search finds none"""
    if src.dim != dst.dim:
        return None
    if src.same_as(dst):
        return identity(src.dim, src.domain)
    basis = hom_space(src, dst)
    for f in basis:
        if is_invertible(f):
            return f
    if len(basis) < 2:
        return None
    # a random combination is singular only on a hypersurface of the span
    rng = random.Random(0)
    top = p - 1 if p else 1000
    for _ in range(attempts):
        f = zeros(dst.dim, src.dim, src.domain)
        for b in basis:
            f = add(f, scale(b, rng.randint(1, top)))
        if is_invertible(f):
            return f
    logger.debug(f"no isomorphism {src.name} → {dst.name} among {attempts} combinations")
    return None
