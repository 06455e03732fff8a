import pytest

from exactla import equal, from_rows, identity, to_rows
from hopf import sweedler_zeta_character
from comod import (
    ComodMorphism,
    barotimes,
    braiding,
    braiding_inverse,
    check_braiding,
    check_comodule,
    check_duality,
    check_jminus,
    check_jplus,
    check_morphism,
    cokernel,
    direct_sum,
    double_dual,
    drinfeld_u,
    dual,
    dual_morphism,
    exterior,
    from_coefficients,
    hom_space,
    kernel,
    leg_restriction,
    morphism,
    permute,
    restrict_ot,
    tensor_V,
    tensor_all,
    trivial,
    zeta,
    zeta_matrices,
)
from utils.errors import BadPosition, HopfMismatch, LevelMismatch, NotAMorphism, NotNatural


def test_trivial_and_odd_are_comodules(kz2, v_odd):
    assert check_comodule(trivial(kz2)).ok
    assert check_comodule(trivial(kz2, level=3, dim=2)).ok
    assert check_comodule(v_odd).ok


def test_garbage_coaction_fails_counit(kz2):
    garbage = from_coefficients(kz2, [[{0: 1, 1: 1}]], "W")
    report = check_comodule(garbage)
    assert not report.passed("coaction-counit")


def test_exterior_of_odd(v_odd):
    W = exterior(v_odd, v_odd)
    assert W.level == 2
    assert to_rows(W.coaction) == [["0"], ["0"], ["0"], ["1"]]
    assert check_comodule(W).ok


def test_restrict_merges_legs(kz2, v_odd):
    W = restrict_ot(exterior(v_odd, v_odd), 1)
    assert W.level == 1
    assert W.same_as(trivial(kz2))
    with pytest.raises(BadPosition):
        restrict_ot(v_odd, 1)


def test_tensor_V(kz2, v_odd, k2):
    assert tensor_V(v_odd, v_odd).same_as(trivial(kz2))
    assert tensor_V(trivial(kz2), v_odd).same_as(v_odd)
    assert tensor_V(k2, k2).dim == 4
    assert tensor_all([v_odd, v_odd, v_odd], kz2).same_as(v_odd)
    with pytest.raises(HopfMismatch):
        tensor_V(k2, v_odd)


def test_permute_legs(kz2, v_odd):
    W = exterior(v_odd, trivial(kz2))
    flipped = permute(W, [1, 0])
    assert flipped.same_as(exterior(trivial(kz2), v_odd))
    assert permute(flipped, [1, 0]).same_as(W)


def test_leg_restriction(kz2, v_odd):
    W = exterior(v_odd, trivial(kz2))
    assert leg_restriction(W, [1]).same_as(v_odd)
    assert leg_restriction(W, [2]).same_as(trivial(kz2))


def test_barotimes_levels(kz2, v_odd):
    A = exterior(v_odd, v_odd)
    B = exterior(v_odd, trivial(kz2))
    assert check_comodule(barotimes(A, B)).ok
    with pytest.raises(LevelMismatch):
        barotimes(v_odd, v_odd)


def test_morphisms(kz2, v_odd, K):
    f = from_rows([[3]], K)
    assert check_morphism(ComodMorphism(v_odd, v_odd, f)).ok
    with pytest.raises(NotAMorphism):
        morphism(v_odd, trivial(kz2), f)
    assert len(hom_space(v_odd, v_odd)) == 1
    assert hom_space(v_odd, trivial(kz2)) == []


def test_kernel_and_cokernel(kz2, v_odd, K):
    S, _, _ = direct_sum([v_odd, trivial(kz2)])
    proj = ComodMorphism(S, v_odd, from_rows([[1, 0]], K))
    ker, inclusion = kernel(proj)
    assert ker.same_as(trivial(kz2))
    assert check_morphism(inclusion).ok
    coker, _ = cokernel(ComodMorphism(v_odd, v_odd, identity(1, K)))
    assert coker.dim == 0


def test_duals(kz2, v_odd, k2):
    Vd, ev, coev = dual(v_odd)
    assert Vd.same_as(v_odd)
    assert to_rows(ev.matrix) == [["1"]]
    for X in (v_odd, k2, trivial(kz2)):
        assert check_duality(X).ok
        assert check_duality(X, "left").ok
    assert double_dual(v_odd).same_as(v_odd)
    f = ComodMorphism(k2, k2, from_rows([[1, 2], [0, 1]], k2.domain))
    assert equal(dual_morphism(f).matrix, from_rows([[1, 0], [2, 1]], k2.domain))


def test_sweedler_left_and_right_duals_differ(sweedler):
    X = from_coefficients(sweedler, [[{0: 1}, {2: 1}], [{}, {1: 1}]], "X")
    assert check_comodule(X).ok
    right, _, _ = dual(X)
    left, _, _ = dual(X, "left")
    assert not right.same_as(left)
    assert check_duality(X).ok
    assert check_duality(X, "left").ok


def test_j_isomorphisms(v_odd, k2):
    for X, Y in ((v_odd, v_odd), (k2, k2)):
        assert check_jplus(X, Y).ok
        assert check_jminus(X, Y).ok


def test_braiding_on_odd(kz2, v_odd):
    c = braiding(v_odd, v_odd)
    assert to_rows(c.matrix) == [["-1"]]
    assert to_rows(braiding_inverse(v_odd, v_odd).matrix) == [["-1"]]
    scalar = ComodMorphism(v_odd, v_odd, from_rows([[2]], kz2.domain), "two")
    assert check_braiding([trivial(kz2), v_odd], [scalar]).ok


def test_braiding_over_trivial_is_flip(k2):
    c = braiding(k2, k2).matrix
    assert to_rows(c)[1] == ["0", "0", "1", "0"]
    assert check_braiding([k2]).ok


def test_drinfeld_u(v_odd, k2):
    assert to_rows(drinfeld_u(v_odd).matrix) == [["-1"]]
    assert equal(drinfeld_u(k2).matrix, identity(2, k2.domain))
    for variant in ("u1^2", "u-1^2", "u1^-2", "u-1^-2"):
        assert check_morphism(drinfeld_u(v_odd, variant)).ok


def test_zeta_from_character(sweedler, kz2, QQ):
    X = from_coefficients(sweedler, [[{0: 1}, {2: 1}], [{}, {1: 1}]], "X")
    z = zeta(X, sweedler_zeta_character(QQ))
    assert check_morphism(z).ok
    with pytest.raises(NotNatural):
        # S² is not the identity on X
        zeta(X, from_rows([[1, 1, 0, 0]], sweedler.domain))


def test_zeta_family_over_kz2(kz2, v_odd, K):
    one = trivial(kz2)
    maps = zeta_matrices([one, v_odd], morphisms=[ComodMorphism(v_odd, v_odd, identity(1, K), "id")])
    assert to_rows(maps["I"]) == [["1"]]
    assert to_rows(maps["V"]) == [["-1"]]
    with pytest.raises(NotNatural):
        zeta_matrices([one, v_odd], morphisms=[ComodMorphism(one, v_odd, from_rows([[1]], K), "f")])
