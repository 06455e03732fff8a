"""Builtin Hopf algebras.

Names: trivial, kZ2, kZn (rational, symmetric r-form for n > 2),
kZn:q (over GF(q) with the bicharacter ω^{ab}), sweedler4, functionsZn.
"""
import logging
import re
from itertools import product
from typing import Optional

from sympy.ntheory import primitive_root

from exactla import Field, Matrix, from_rows
from hopf.algebra import HopfAlgebra
from utils.errors import MissingRoot, UnknownFixture

logger = logging.getLogger(__name__)

_GROUP_PATTERN = re.compile(r"^kZ(\d+)(?::(\d+))?$")
_FUNCTIONS_PATTERN = re.compile(r"^functionsZ(\d+)$")


def _from_table(K, rows: int, cols: int, entries: dict) -> Matrix:
    data = [[K.zero] * cols for _ in range(rows)]
    for (i, j), value in entries.items():
        data[i][j] += K(value) if isinstance(value, int) else value
    return from_rows(data, K, cols)


def trivial(field: Optional[Field] = None) -> HopfAlgebra:
    field = field or Field.rational()
    one = from_rows([[1]], field.domain)
    return HopfAlgebra(field, 1, one, one, one, one, one, rform=one, ribbon_form=one,
                       name="trivial", basis=("1",))


def group_algebra(n: int, field: Optional[Field] = None, root=None) -> HopfAlgebra:
    """k[Z/n]; ``root`` is the n-th root of unity used for χ(gᵃ, gᵇ) = root^{ab}"""
    field = field or Field.rational()
    K = field.domain
    mult, comult, antipode = {}, {}, {}
    for a, b in product(range(n), repeat=2):
        mult[((a + b) % n, a * n + b)] = 1
    for a in range(n):
        comult[(a * n + a, a)] = 1
        antipode[((-a) % n, a)] = 1
    rform = None
    if root is not None:
        omega = K(root) if isinstance(root, int) else root
        rform = from_rows([[omega ** ((a * b) % n) for a in range(n) for b in range(n)]], K)
    return HopfAlgebra(
        field=field,
        dim=n,
        mult=_from_table(K, n, n * n, mult),
        unit=_from_table(K, n, 1, {(0, 0): 1}),
        comult=_from_table(K, n * n, n, comult),
        counit=from_rows([[1] * n], K),
        antipode=_from_table(K, n, n, antipode),
        rform=rform,
        name=f"kZ{n}",
        basis=tuple("e" if a == 0 else f"g^{a}" for a in range(n)),
    )


def kz2(field: Optional[Field] = None) -> HopfAlgebra:
    field = field or Field.rational()
    H = group_algebra(2, field, root=-1)
    K = field.domain
    return HopfAlgebra(H.field, 2, H.mult, H.unit, H.comult, H.counit, H.antipode,
                       rform=H.rform, ribbon_form=from_rows([[1, -1]], K), name="kZ2",
                       basis=("e", "g"))


def cyclic_over_prime(n: int, q: int) -> HopfAlgebra:
    field = Field.prime(q)
    if (q - 1) % n:
        raise MissingRoot(f"GF({q}) has no primitive {n}-th root of unity")
    omega = pow(primitive_root(q), (q - 1) // n, q)
    H = group_algebra(n, field, root=omega)
    logger.debug(f"kZ{n} over GF({q}) uses root {omega}")
    return HopfAlgebra(H.field, n, H.mult, H.unit, H.comult, H.counit, H.antipode,
                       rform=H.rform, name=f"kZ{n}:{q}", basis=H.basis)


def functions_on_cyclic(n: int, field: Optional[Field] = None) -> HopfAlgebra:
    """k^{Z/n}, the dual of the group algebra, on the basis of point masses δ_a"""
    field = field or Field.rational()
    K = field.domain
    mult, comult, antipode = {}, {}, {}
    for a in range(n):
        mult[(a, a * n + a)] = 1
        antipode[((-a) % n, a)] = 1
    for b, c in product(range(n), repeat=2):
        comult[(b * n + c, (b + c) % n)] = 1
    return HopfAlgebra(
        field=field,
        dim=n,
        mult=_from_table(K, n, n * n, mult),
        unit=_from_table(K, n, 1, {(a, 0): 1 for a in range(n)}),
        comult=_from_table(K, n * n, n, comult),
        counit=_from_table(K, 1, n, {(0, 0): 1}),
        antipode=_from_table(K, n, n, antipode),
        name=f"functionsZ{n}",
        basis=tuple(f"d{a}" for a in range(n)),
    )


# Sweedler's algebra: gᵃxᵇ with g² = 1, x² = 0, xg = −gx, stored at index a + 2b.
_SWEEDLER_BASIS = ("1", "g", "x", "gx")


def _sw_index(a: int, b: int) -> int:
    return a + 2 * b


def _sw_mul(u: dict, v: dict) -> dict:
    """Product of two elements given as {(a, b): coefficient}"""
    out = {}
    for (a, b), s in u.items():
        for (c, d), t in v.items():
            if b + d >= 2:
                continue
            sign = -1 if (b * c) % 2 else 1
            key = ((a + c) % 2, b + d)
            out[key] = out.get(key, 0) + sign * s * t
    return {k: c for k, c in out.items() if c}


def _sw_tensor_mul(u: dict, v: dict) -> dict:
    """Factorwise product in H⊗H of elements {((a, b), (c, d)): coefficient}"""
    out = {}
    for (p, q), s in u.items():
        for (r, w), t in v.items():
            for left, lc in _sw_mul({p: 1}, {r: 1}).items():
                for right, rc in _sw_mul({q: 1}, {w: 1}).items():
                    key = (left, right)
                    out[key] = out.get(key, 0) + s * t * lc * rc
    return {k: c for k, c in out.items() if c}


def _sw_comult(a: int, b: int) -> dict:
    result = {((0, 0), (0, 0)): 1}
    g = {((1, 0), (1, 0)): 1}
    x = {((0, 1), (0, 0)): 1, ((1, 0), (0, 1)): 1}
    for _ in range(a):
        result = _sw_tensor_mul(result, g)
    for _ in range(b):
        result = _sw_tensor_mul(result, x)
    return result


def sweedler4(field: Optional[Field] = None) -> HopfAlgebra:
    field = field or Field.rational()
    K = field.domain
    basis = [(a, b) for b in range(2) for a in range(2)]
    mult, comult = {}, {}
    for u, v in product(basis, repeat=2):
        col = _sw_index(*u) * 4 + _sw_index(*v)
        for key, c in _sw_mul({u: 1}, {v: 1}).items():
            mult[(_sw_index(*key), col)] = mult.get((_sw_index(*key), col), 0) + c
    for u in basis:
        for (left, right), c in _sw_comult(*u).items():
            row = _sw_index(*left) * 4 + _sw_index(*right)
            comult[(row, _sw_index(*u))] = comult.get((row, _sw_index(*u)), 0) + c
    antipode = {(0, 0): 1, (1, 1): 1, (3, 2): -1, (2, 3): 1}
    rform = [
        [1, 1, 0, 0],
        [1, -1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, -1, 1],
    ]
    return HopfAlgebra(
        field=field,
        dim=4,
        mult=_from_table(K, 4, 16, mult),
        unit=_from_table(K, 4, 1, {(0, 0): 1}),
        comult=_from_table(K, 16, 4, comult),
        counit=from_rows([[1, 1, 0, 0]], K),
        antipode=_from_table(K, 4, 4, antipode),
        rform=from_rows([[v for row in rform for v in row]], K),
        name="sweedler4",
        basis=_SWEEDLER_BASIS,
    )


def sweedler_zeta_character(field: Optional[Field] = None) -> Matrix:
    """Grouplike φ = evaluation at g; φ(h₁)S²(h₂) = h₁φ(h₂) on sweedler4"""
    field = field or Field.rational()
    return from_rows([[1, -1, 0, 0]], field.domain)


def builtin(name: str, field: Optional[Field] = None) -> HopfAlgebra:
    field = field or Field.rational()
    if name == "trivial":
        return trivial(field)
    if name == "sweedler4":
        return sweedler4(field)
    match = _GROUP_PATTERN.match(name)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise UnknownFixture(f"kZ{n} needs n >= 1")
        if match.group(2):
            return cyclic_over_prime(n, int(match.group(2)))
        if n == 2:
            return kz2(field)
        return group_algebra(n, field, root=1)
    match = _FUNCTIONS_PATTERN.match(name)
    if match:
        return functions_on_cyclic(int(match.group(1)), field)
    raise UnknownFixture(f"no builtin Hopf algebra named {name!r}")
