"""Dense exact matrices on top of sympy's DomainMatrix.

Every structure map is one matrix acting on column vectors, so g∘f is
``matmul(g, f)``. Tensor factors are flattened with the left factor most
significant: basis vector (i, j) of k^a ⊗ k^b sits at index i*b + j.
"""
import logging
from itertools import product
from math import prod
from typing import Iterable, Optional, Sequence

from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from utils.errors import BadPermutation, Inconsistent, ShapeMismatch, ShcError, Singular

logger = logging.getLogger(__name__)

Matrix = DomainMatrix


def _dense(rows: list, m: int, n: int, K: Domain) -> Matrix:
    return DomainMatrix(rows, (m, n), K)


def from_rows(rows: Sequence[Sequence], K: Domain, cols: Optional[int] = None) -> Matrix:
    """Build a matrix from ints, 'p/q' strings or domain elements"""
    m = len(rows)
    n = len(rows[0]) if m else (cols or 0)
    converted = []
    for row in rows:
        if len(row) != n:
            raise ShapeMismatch(f"ragged row of length {len(row)}, expected {n}")
        converted.append([_scalar(x, K) for x in row])
    return _dense(converted, m, n, K)


def _scalar(x, K: Domain):
    if isinstance(x, str):
        text = x.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return K(int(num)) / K(int(den))
        return K(int(text))
    if isinstance(x, int):
        return K(x)
    return K.convert(x)


def to_rows(m: Matrix) -> list[list[str]]:
    K = m.domain
    return [[str(K.to_sympy(x)) for x in row] for row in m.to_list()]


def zeros(m: int, n: int, K: Domain) -> Matrix:
    return _dense([[K.zero] * n for _ in range(m)], m, n, K)


def identity(n: int, K: Domain) -> Matrix:
    return _dense([[K.one if i == j else K.zero for j in range(n)] for i in range(n)], n, n, K)


def scalar_matrix(value, K: Domain) -> Matrix:
    return _dense([[value]], 1, 1, K)


def shape(m: Matrix) -> tuple[int, int]:
    return m.shape


def entry(m: Matrix, i: int, j: int):
    return m.to_list()[i][j] if m.shape[0] and m.shape[1] else None


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if 0 in (a.shape[0], a.shape[1], b.shape[1]):
        return zeros(a.shape[0], b.shape[1], a.domain)
    return a * b


def compose(*maps: Matrix) -> Matrix:
    """compose(g, f) = g∘f; maps are listed outermost first"""
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = matmul(m, result)
    return result


def add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot add {a.shape} and {b.shape}")
    if 0 in a.shape:
        return a
    return a + b


def scale(m: Matrix, s) -> Matrix:
    K = m.domain
    s = _scalar(s, K) if isinstance(s, (int, str)) else s
    return _dense([[s * x for x in row] for row in m.to_list()], *m.shape, K)


def transpose(m: Matrix) -> Matrix:
    rows, cols = m.shape
    if 0 in m.shape:
        return zeros(cols, rows, m.domain)
    return m.transpose()


def kron(a: Matrix, b: Matrix) -> Matrix:
    K = a.domain
    (ar, ac), (br, bc) = a.shape, b.shape
    al, bl = a.to_list(), b.to_list()
    rows = [
        [al[i][j] * bl[k][l] for j in range(ac) for l in range(bc)]
        for i in range(ar)
        for k in range(br)
    ]
    return _dense(rows, ar * br, ac * bc, K)


def kron_all(ms: Iterable[Matrix], K: Domain) -> Matrix:
    result = identity(1, K)
    for m in ms:
        result = kron(result, m)
    return result


def hstack(*ms: Matrix, rows: Optional[int] = None, K: Optional[Domain] = None) -> Matrix:
    if not ms:
        return zeros(rows or 0, 0, K)
    m = ms[0].shape[0]
    for x in ms:
        if x.shape[0] != m:
            raise ShapeMismatch(f"hstack of {x.shape} onto {m} rows")
    lists = [x.to_list() for x in ms]
    data = [[v for part in lists for v in part[i]] for i in range(m)]
    return _dense(data, m, sum(x.shape[1] for x in ms), ms[0].domain)


def vstack(*ms: Matrix, cols: Optional[int] = None, K: Optional[Domain] = None) -> Matrix:
    if not ms:
        return zeros(0, cols or 0, K)
    n = ms[0].shape[1]
    for x in ms:
        if x.shape[1] != n:
            raise ShapeMismatch(f"vstack of {x.shape} onto {n} columns")
    data = [row for x in ms for row in x.to_list()]
    return _dense(data, len(data), n, ms[0].domain)


def submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    data = m.to_list()
    return _dense([[data[i][j] for j in cols] for i in rows], len(rows), len(cols), m.domain)


def columns(m: Matrix, cols: Sequence[int]) -> Matrix:
    return submatrix(m, range(m.shape[0]), cols)


def rows_of(m: Matrix, rows: Sequence[int]) -> Matrix:
    return submatrix(m, rows, range(m.shape[1]))


def _check_sigma(dims: Sequence[int], sigma: Sequence[int]):
    if sorted(sigma) != list(range(len(dims))):
        raise BadPermutation(f"{list(sigma)} is not a permutation of {len(dims)} positions")


def _permutation_index(dims: Sequence[int], sigma: Sequence[int]) -> list[int]:
    """index[out] = in, where output factor k is input factor sigma[k]"""
    out_dims = [dims[s] for s in sigma]
    index = []
    for y in product(*(range(d) for d in out_dims)):
        x = [0] * len(dims)
        for k, s in enumerate(sigma):
            x[s] = y[k]
        flat = 0
        for xi, d in zip(x, dims):
            flat = flat * d + xi
        index.append(flat)
    return index


def permute_factors(dims: Sequence[int], sigma: Sequence[int], m: Optional[Matrix] = None,
                    K: Optional[Domain] = None) -> Matrix:
    """Permutation of tensor factors: output factor k is input factor sigma[k].

    Without ``m`` this is the permutation matrix; with ``m`` it returns P·m by
    reindexing rows.
    """
    _check_sigma(dims, sigma)
    n = prod(dims)
    index = _permutation_index(dims, sigma)
    if m is None:
        if K is None:
            raise ShcError("permutation matrix needs a field when no matrix is given")
        data = [[K.zero] * n for _ in range(n)]
        for out, src in enumerate(index):
            data[out][src] = K.one
        return _dense(data, n, n, K)
    if m.shape[0] != n:
        raise ShapeMismatch(f"permutation on {n}-dim space applied to {m.shape}")
    data = m.to_list()
    return _dense([data[src] for src in index], n, m.shape[1], m.domain)


def apply_on_factors(dims: Sequence[int], start: int, stop: int, a: Matrix, m: Matrix) -> Matrix:
    """(I ⊗ a ⊗ I)·m where a acts on factors start..stop-1 of the row space of m."""
    pre = prod(dims[:start])
    mid = prod(dims[start:stop])
    post = prod(dims[stop:])
    if m.shape[0] != pre * mid * post or a.shape[1] != mid:
        raise ShapeMismatch(f"map {a.shape} on factors {start}:{stop} of {list(dims)} against {m.shape}")
    K = m.domain
    cols = m.shape[1]
    data = m.to_list()
    width = pre * post * cols
    stacked = [[K.zero] * width for _ in range(mid)]
    for p in range(pre):
        for j in range(mid):
            for q in range(post):
                row = data[(p * mid + j) * post + q]
                base = (p * post + q) * cols
                stacked[j][base:base + cols] = row
    out_mid = a.shape[0]
    image = matmul(a, _dense(stacked, mid, width, K)).to_list() if width else [[] for _ in range(out_mid)]
    result = []
    for p in range(pre):
        for j in range(out_mid):
            for q in range(post):
                base = (p * post + q) * cols
                result.append(image[j][base:base + cols])
    return _dense(result, pre * out_mid * post, cols, K)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    if 0 in m.shape:
        return m, ()
    return m.rref()


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning ker m, one per free column of the reduced echelon form"""
    K = m.domain
    rows, cols = m.shape
    reduced, pivots = rref(m)
    data = reduced.to_list() if rows and cols else []
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        v = [K.zero] * cols
        v[f] = K.one
        for r, p in enumerate(pivots):
            v[p] = -data[r][f]
        basis.append(v)
    if not basis:
        return zeros(cols, 0, K)
    return _dense([[basis[k][i] for k in range(len(basis))] for i in range(cols)], cols, len(basis), K)


def cokernel(m: Matrix) -> tuple[Matrix, Matrix]:
    """(proj, section) with proj·m = 0, ker proj = im m and proj·section = I.

    proj is read off a kernel basis of mᵀ in reduced form, so it restricts to
    the identity on its free coordinates; section picks those coordinates.
    """
    K = m.domain
    n = m.shape[0]
    if m.shape[1] == 0:
        return identity(n, K), identity(n, K)
    left_kernel = kernel_basis(transpose(m))
    proj = transpose(left_kernel)
    reduced, pivots = rref(transpose(m))
    free = [j for j in range(n) if j not in pivots]
    section = zeros(n, len(free), K) if not free else _dense(
        [[K.one if i == f else K.zero for f in free] for i in range(n)], n, len(free), K)
    return proj, section


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Some x with a·x = b; raises Inconsistent when b leaves the column span"""
    K = a.domain
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ShapeMismatch(f"solve with {a.shape} and right side {b.shape}")
    nb = b.shape[1]
    if rows == 0:
        return zeros(cols, nb, K)
    augmented = hstack(a, b) if cols else b
    reduced, pivots = rref(augmented)
    for p in pivots:
        if p >= cols:
            raise Inconsistent("right-hand side is not in the column span")
    data = reduced.to_list()
    x = [[K.zero] * nb for _ in range(cols)]
    for r, p in enumerate(pivots):
        x[p] = list(data[r][cols:])
    return _dense(x, cols, nb, K)


def inverse(m: Matrix) -> Matrix:
    if m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"cannot invert non-square {m.shape}")
    if m.shape[0] == 0:
        return m
    try:
        return m.inv()
    except DMNonInvertibleMatrixError as exc:
        raise Singular("matrix is not invertible") from exc


def is_invertible(m: Matrix) -> bool:
    return m.shape[0] == m.shape[1] and rank(m) == m.shape[0]


def is_zero(m: Matrix) -> bool:
    K = m.domain
    return all(x == K.zero for row in m.to_list() for x in row)


def equal(a: Matrix, b: Matrix) -> bool:
    return a.shape == b.shape and a.to_list() == b.to_list()


def first_difference(a: Matrix, b: Matrix) -> Optional[tuple[int, int, str, str]]:
    """(row, col, lhs, rhs) of the first differing entry, None if equal"""
    if a.shape != b.shape:
        raise ShapeMismatch(f"comparing {a.shape} with {b.shape}")
    K = a.domain
    for i, (ra, rb) in enumerate(zip(a.to_list(), b.to_list())):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return i, j, str(K.to_sympy(x)), str(K.to_sympy(y))
    return None
