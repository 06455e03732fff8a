from dataclasses import replace

import pytest

from exactla import Field, equal, from_rows, identity, inverse, scale, zeros
from hopf import builtin
from comod import trivial
from squared import (
    bar,
    braiding_R,
    braiding_R_inverse,
    cbar_braidings,
    check_antipode,
    check_bicoalgebra,
    check_braided_bialgebra,
    check_cbar_braidings,
    check_cbar_comodule,
    check_comparison,
    check_dual_over_H,
    check_qt,
    check_quasiclassical_antipode,
    check_ribbon,
    check_tensor_associative,
    check_tensor_unit,
    is_comodule_morphism,
    left_from_right,
    right_opposite,
    tensor_comodules,
)
from coend import (
    DEMOS,
    Diagram,
    antipode_generators,
    build_coend,
    builtin_diagram,
    check_opposite,
    check_structures,
    default_twists,
    induce_ribbon,
    induce_rmatrix,
    opposite_coend,
    reconstructed,
    run_demo,
)
from coend.fixtures import kz2_qt
from utils.errors import Inconsistent, NoRForm, NoRibbonData, UnknownFixture


@pytest.fixture(scope="module")
def ribbon_coend():
    return induce_ribbon(build_coend(kz2_qt()))


@pytest.fixture(scope="module")
def comodules(ribbon_coend):
    return {M.name: M for M in reconstructed(ribbon_coend)}


def _failed(report):
    return {e.name.split("[")[0] for e in report.failures}


def test_ribbon_coend_structures(ribbon_coend):
    assert ribbon_coend.dim == 2
    report = check_structures(ribbon_coend, paranoid=True)
    assert report.ok, [e.name for e in report.failures]
    assert report.passed("braiding-R-matches-V[V,V]")


def test_unit_is_the_unit_projection(ribbon_coend):
    assert equal(ribbon_coend.bi.unit, ribbon_coend.q["I"])


def test_default_twists(ribbon_coend, K):
    thetas = default_twists(ribbon_coend)
    assert equal(thetas["I"], from_rows([[1]], K))
    assert equal(thetas["V"], from_rows([[-1]], K))


def test_twist_on_unit_must_be_one(K):
    E = induce_rmatrix(build_coend(kz2_qt()))
    with pytest.raises(Inconsistent):
        induce_ribbon(E, {"I": from_rows([[-1]], K), "V": from_rows([[1]], K)})
    with pytest.raises(NoRibbonData):
        induce_ribbon(E, {"I": from_rows([[1]], K)})


def test_rmatrix_needs_an_rform():
    H = builtin("functionsZ2")
    E = build_coend(Diagram(H, {"I": trivial(H)}))
    with pytest.raises(NoRForm):
        induce_rmatrix(E)


def test_tensor_of_reconstructed_comodules(ribbon_coend, comodules):
    B = ribbon_coend.bi
    I, V = comodules["I"], comodules["V"]
    assert check_tensor_unit(B, V).ok
    assert check_tensor_associative(B, V, V, I).ok
    assert equal(tensor_comodules(B, []).delta, B.unit)
    # V⊗V is the unit object
    assert equal(tensor_comodules(B, [V, V]).delta, B.unit)
    assert is_comodule_morphism(V, V, identity(1, ribbon_coend.domain))


def test_left_antipode_from_the_right_one(ribbon_coend):
    H = ribbon_coend.hopf
    assert equal(left_from_right(H.bi, H.gamma_r).gamma_l, H.gamma_l)
    assert equal(inverse(H.gamma_r), H.gamma_l)


def test_duals_over_the_coend(ribbon_coend):
    for g in antipode_generators(ribbon_coend):
        for side in ("right", "left"):
            report = check_dual_over_H(ribbon_coend.hopf, g, side)
            assert report.ok, (g.name, side, [e.name for e in report.failures])


def test_braiding_of_the_odd_comodule(ribbon_coend, comodules, K):
    Q = ribbon_coend.qt
    V = comodules["V"]
    minus_one = from_rows([[-1]], K)
    assert equal(braiding_R(Q, V, V).matrix, minus_one)
    assert equal(braiding_R_inverse(Q, V, V), minus_one)


def test_underlying_braided_bialgebra(ribbon_coend):
    report = check_braided_bialgebra(bar(ribbon_coend.bi))
    assert report.ok, [e.name for e in report.failures]
    assert check_quasiclassical_antipode(ribbon_coend.hopf).ok


def test_comparison_with_the_opposite(ribbon_coend):
    op = right_opposite(ribbon_coend.hopf, antipode_generators(ribbon_coend))
    report = check_comparison(ribbon_coend.C, op)
    assert report.ok, [e.name for e in report.failures]


def test_sweedler_rmatrix_coend():
    E = induce_rmatrix(build_coend(builtin_diagram("sweedler4-hopf")))
    report = check_structures(E, paranoid=True)
    assert report.ok, [e.name for e in report.failures]
    op = right_opposite(E.hopf, antipode_generators(E))
    comparison = check_comparison(E.C, op)
    assert comparison.ok, [e.name for e in comparison.failures]
    assert check_quasiclassical_antipode(E.hopf).ok


def test_ordinary_comodules_of_the_bar_coalgebra(ribbon_coend, comodules, v_odd):
    V = comodules["V"]
    assert check_cbar_comodule(V, v_odd).ok
    pairs = [(comodules["I"], v_odd), (V, v_odd)]
    report = check_cbar_braidings(ribbon_coend.qt, pairs, hexagons=True)
    assert report.ok, [e.name for e in report.failures]
    for side in ("left", "right"):
        assert len([n for n in report.names() if n.startswith(f"cbar-hexagon-{side}[")]) == 8
    mixed = check_cbar_braidings(ribbon_coend.qt, pairs, ("-", "+"), hexagons=True)
    assert mixed.ok, [e.name for e in mixed.failures]
    assert cbar_braidings(ribbon_coend.qt, pairs[1], pairs[1]).shape == (1, 1)


def test_opposite_coend(ribbon_coend):
    E_dual, z = opposite_coend(ribbon_coend)
    assert E_dual.dim == 2
    assert E_dual.diagram.names == ["I^∨", "V^∨"]
    report = check_opposite(ribbon_coend, E_dual, z, paranoid=True)
    assert report.ok, [e.name for e in report.failures]
    assert report.passed("d107[V]")


def test_doubled_multiplication_breaks_the_unit_laws(ribbon_coend):
    bi = ribbon_coend.bi
    report = check_bicoalgebra(replace(bi, mult=scale(bi.mult, 2)))
    assert _failed(report) == {"left-unit", "right-unit", "comult-multiplicative", "counit-multiplicative"}
    assert report.passed("associativity")


def test_zero_right_antipode_is_caught(ribbon_coend, K):
    H = replace(ribbon_coend.hopf, gamma_r=zeros(2, 2, K))
    report = check_antipode(H, antipode_generators(ribbon_coend, H.zeta_source))
    assert _failed(report) == {"f112i", "f112ii", "gamma-r-invertible", "P125", "P125-inverse", "P113-right-counit"}
    assert report.passed("P113-right-comult")
    assert report.passed("gamma-l-invertible")


def test_negated_rmatrix_is_caught(ribbon_coend):
    Q = ribbon_coend.qt
    report = check_qt(replace(Q, r_plus=scale(Q.r_plus, -1)))
    assert _failed(report) == {"e160a", "e160b", "e160c", "e160d"}
    assert report.passed("e160e")


@pytest.mark.parametrize("factor, broken", [(0, {"e171a"}), (-1, {"e171a", "e171c"})])
def test_rescaled_twist_is_caught(ribbon_coend, factor, broken):
    Rb = ribbon_coend.ribbon
    report = check_ribbon(replace(Rb, theta=scale(Rb.theta, factor)))
    assert _failed(report) == broken


@pytest.mark.parametrize("name", sorted(DEMOS))
def test_demos(name):
    report = run_demo(name)
    assert report.ok, [e.name for e in report.failures]


def test_demo_over_a_prime_field():
    assert run_demo("trivial-comatrix", Field.prime(7)).ok


def test_unknown_demo():
    with pytest.raises(UnknownFixture):
        run_demo("sweedler8")
