from exactla import equal, identity, scale, to_rows
from comod import trivial
from squared import (
    CoalgebraHom,
    SquaredCoalgebra,
    bar_object,
    barotimes_coalg,
    canonical,
    canonical_comodule,
    check_coalgebra_hom,
    check_squared,
    check_squared_comodule,
    comodule_barotimes,
    comodule_from_hom,
    iota,
    trivial_comodule,
    unit_coalgebra,
)


def test_comatrix_coalgebra(k2):
    S = canonical(k2)
    assert S.dim == 4
    report = check_squared(S, paranoid=True)
    assert report.ok, [e.name for e in report.failures]
    assert to_rows(S.eps) == [["1", "0", "0", "1"]]


def test_canonical_of_odd(v_odd):
    S = canonical(v_odd)
    assert S.dim == 1
    assert to_rows(S.C.coaction) == [["0"], ["0"], ["0"], ["1"]]
    assert check_squared(S).ok


def test_corrupted_counit_fails(k2):
    S = canonical(k2)
    broken = SquaredCoalgebra(S.C, S.delta, scale(S.eps, 2), "broken")
    report = check_squared(broken)
    assert not report.passed("e23b")
    assert not report.passed("e23c")
    assert report.passed("d23a")


def test_canonical_comodule(k2, v_odd):
    for M in (k2, v_odd):
        N = canonical_comodule(M)
        assert check_squared_comodule(N).ok
        assert equal(iota(N).matrix, identity(N.over.dim, M.domain))


def test_comodule_from_hom_inverts_iota(k2):
    N = canonical_comodule(k2)
    rebuilt = comodule_from_hom(k2, N.over, iota(N).matrix)
    assert equal(rebuilt.delta, N.delta)


def test_coalgebra_hom_check(k2):
    S = canonical(k2)
    assert check_coalgebra_hom(CoalgebraHom(S, S, S.identity())).ok
    report = check_coalgebra_hom(CoalgebraHom(S, S, scale(S.identity(), 2)))
    assert not report.passed("hom-counit")


def test_unit_coalgebra(kz2):
    U = unit_coalgebra(kz2)
    assert check_squared(U).ok
    one = trivial_comodule(U, identity(1, kz2.domain))
    assert check_squared_comodule(one).ok


def test_barotimes_of_coalgebras(k2, v_odd):
    for M in (k2, v_odd):
        A = canonical(M)
        AA = barotimes_coalg(A, A)
        assert AA.dim == A.dim ** 2
        assert check_squared(AA).ok
        N = canonical_comodule(M)
        assert check_squared_comodule(comodule_barotimes(N, N)).ok


def test_barotimes_with_unit(kz2, v_odd):
    A = canonical(v_odd)
    AU = barotimes_coalg(A, unit_coalgebra(kz2))
    assert AU.C.same_as(A.C)
    assert equal(AU.delta, A.delta)
    assert trivial(kz2, level=2).same_as(unit_coalgebra(kz2).C)


def test_bar_object_cache_is_bounded(v_odd):
    bars = [bar_object(canonical(v_odd)) for _ in range(40)]
    assert all(X.level == 1 and X.dim == 1 for X in bars)
    info = bar_object.cache_info()
    assert info.maxsize is not None
    assert info.currsize <= info.maxsize
