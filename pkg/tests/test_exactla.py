import pytest

from exactla import (
    Field,
    cokernel,
    equal,
    from_rows,
    identity,
    inverse,
    kernel_basis,
    kron,
    matmul,
    permute_factors,
    rank,
    solve,
    to_rows,
    zeros,
)
from utils.errors import Inconsistent, ShapeMismatch, ShcError, Singular


@pytest.mark.parametrize("spec, expected", [
    ("QQ", "QQ"), ("Q", "QQ"), ("GF(7)", "GF(7)"), ("F5", "GF(5)"), ("11", "GF(11)"),
])
def test_field_parse(spec, expected):
    assert str(Field.parse(spec)) == expected


@pytest.mark.parametrize("spec", ["GF(4)", "GF(1)", "reals", ""])
def test_field_parse_rejects(spec):
    with pytest.raises(ShcError):
        Field.parse(spec)


def test_field_scalars():
    QQ = Field.rational()
    assert QQ.format(QQ("-1/2") + QQ(1)) == "1/2"
    F5 = Field.prime(5)
    assert F5.format(F5(3) * F5(4)) == "2"


def test_matmul(mat):
    assert to_rows(matmul(identity(2, mat([[1]]).domain), mat([[2], [3]]))) == [["2"], ["3"]]
    assert to_rows(matmul(mat([[1, 1]]), mat([[1], [1]]))) == [["2"]]
    with pytest.raises(ShapeMismatch):
        matmul(mat([[1, 1]]), mat([[1, 1]]))


def test_matmul_prime_field():
    K = Field.prime(5).domain
    assert to_rows(matmul(from_rows([[3]], K), from_rows([[4]], K))) == [["2"]]


def test_kron(mat, K):
    assert to_rows(kron(identity(2, K), mat([[2]]))) == [["2", "0"], ["0", "2"]]
    assert to_rows(kron(mat([[1], [0]]), mat([[0], [1]]))) == [["0"], ["1"], ["0"], ["0"]]
    a, b, c = mat([[1, 2], [3, 4]]), mat([[0, 1], [-1, 5]]), mat([[2, -3], [7, 1]])
    assert equal(kron(kron(a, b), c), kron(a, kron(b, c)))
    u, v = mat([[1, -1], [2, 0]]), mat([["1/2", 3], [1, 1]])
    assert equal(matmul(kron(a, b), kron(u, v)), kron(matmul(a, u), matmul(b, v)))


def test_permute_factors(mat, K):
    P = permute_factors([2, 3], [1, 0], K=K)
    x, y = mat([[1], [2]]), mat([[3], [4], [5]])
    assert equal(matmul(P, kron(x, y)), kron(y, x))
    assert equal(permute_factors([2, 2], [0, 1], K=K), identity(4, K))
    cycle = permute_factors([2, 2, 2], [1, 2, 0], K=K)
    assert equal(matmul(cycle, matmul(cycle, cycle)), identity(8, K))
    with pytest.raises(ShcError):
        permute_factors([2, 2], [1, 0])


def test_kernel_basis(mat):
    assert to_rows(kernel_basis(mat([[1, 0]]))) == [["0"], ["1"]]
    assert kernel_basis(mat([[1, 2], [3, 4]])).shape == (2, 0)
    k = kernel_basis(mat([[1, 1], [1, 1]]))
    assert k.shape == (2, 1)
    assert to_rows(matmul(mat([[1, 1], [1, 1]]), k)) == [["0"], ["0"]]


def test_cokernel(mat, K):
    proj, section = cokernel(mat([[1], [0]]))
    assert to_rows(proj) == [["0", "1"]]
    assert to_rows(section) == [["0"], ["1"]]
    proj, _ = cokernel(zeros(2, 1, K))
    assert equal(proj, identity(2, K))
    m = mat([[1, 1], [1, 1]])
    proj, section = cokernel(m)
    assert proj.shape == (1, 2)
    assert to_rows(matmul(proj, m)) == [["0", "0"]]
    assert equal(matmul(proj, section), identity(1, K))


def test_solve(mat, K):
    b = mat([[1, 2], [3, 4]])
    assert equal(solve(identity(2, K), b), b)
    assert to_rows(solve(mat([[2]]), mat([[1]]))) == [["1/2"]]
    with pytest.raises(Inconsistent):
        solve(mat([[1], [1]]), mat([[1], [0]]))


def test_inverse_and_rank(mat):
    assert to_rows(inverse(mat([[2, 0], [0, 4]]))) == [["1/2", "0"], ["0", "1/4"]]
    with pytest.raises(Singular):
        inverse(mat([[1, 1], [1, 1]]))
    assert rank(mat([[1, 1], [1, 1]])) == 1


def test_ragged_rows_rejected(K):
    with pytest.raises(ShapeMismatch):
        from_rows([[1, 2], [3]], K)
