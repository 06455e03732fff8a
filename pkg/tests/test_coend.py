import pytest

from exactla import Field, equal, from_rows, identity, is_invertible, rank, to_rows, zeros
from comod import from_coefficients, trivial
from squared import canonical, canonical_comodule, check_squared_comodule
from coend import (
    Arrow,
    Diagram,
    build_coend,
    builtin_diagram,
    c58_report,
    check_coend,
    check_structures,
    check_h_morphism,
    embedding_deficit,
    generator_for,
    h_morphism,
    induce_antipode,
    induce_multiplication,
    reconstruct_comodule,
    relation_map,
)
from coend.fixtures import kz2_odd, trivial_k2
from utils.errors import (
    NotAMorphism,
    NotDualClosed,
    NotMonoidalDiagram,
    ShcError,
    UnknownFixture,
    UnknownObject,
    WellDefinednessFailure,
)


@pytest.mark.parametrize("generators, expected", [("id", 4), ("e11", 2), ("end", 1)])
def test_trivial_comatrix_dimensions(generators, expected):
    E = build_coend(trivial_k2(generators=generators))
    assert E.dim == expected
    report = check_coend(E)
    assert report.ok, [e.name for e in report.failures]


def test_identity_only_coend_is_the_comatrix_coalgebra(k2):
    E = build_coend(trivial_k2())
    assert equal(E.q["M"], identity(4, E.domain))
    assert to_rows(E.C.eps) == to_rows(canonical(k2).eps)


def test_odd_line_coend():
    E = build_coend(kz2_odd())
    assert E.dim == 1
    assert to_rows(E.C.C.coaction) == [["0"], ["0"], ["0"], ["1"]]
    assert check_coend(E, paranoid=True).ok


def test_composites_do_not_change_the_coend(K):
    D = trivial_k2()
    M = D.objects["M"]
    e12 = Arrow("E12", "M", "M", from_rows([[0, 1], [0, 0]], K))
    e21 = Arrow("E21", "M", "M", from_rows([[0, 0], [1, 0]], K))
    e11 = Arrow("E11", "M", "M", from_rows([[1, 0], [0, 0]], K))
    small = Diagram(M.hopf, {"M": M}, (e12, e21), name="small")
    large = Diagram(M.hopf, {"M": M}, (e12, e21, e11), name="large")
    assert rank(relation_map(small)) == rank(relation_map(large))
    assert build_coend(small).dim == build_coend(large).dim == 1


def test_reconstructed_comodule():
    E = build_coend(trivial_k2())
    M = reconstruct_comodule(E, "M")
    assert M.X.same_as(E.diagram.objects["M"])
    assert check_squared_comodule(M).ok


def test_h_morphism_of_a_comatrix_coalgebra(k2):
    N = canonical_comodule(k2)
    E, h = h_morphism(N.over, [N])
    assert E.dim == 4
    assert is_invertible(h.matrix)
    assert check_h_morphism(h, check_c58=True).ok


def test_generator_for_unlisted_unit():
    E = build_coend(trivial_k2(generators="end"))
    one = trivial(E.diagram.hopf)
    q = generator_for(E, one)
    assert q.shape == (1, 1)
    assert embedding_deficit(E, one) == 0


def test_generator_for_depends_on_lift_without_relations():
    E = build_coend(trivial_k2())
    with pytest.raises(WellDefinednessFailure):
        generator_for(E, trivial(E.diagram.hopf))


def test_c58_report_on_odd_line(kz2):
    E = build_coend(kz2_odd())
    report = c58_report(E)
    assert report.passed("c58-generating")
    assert not report.passed("c58-closure[I]")
    assert report.entry("c58-closure[I]").note == "rank deficit 1"
    assert report.passed("c58-closure[V^∨]")
    assert embedding_deficit(E, trivial(kz2)) == 1


def test_odd_line_has_no_induced_structures():
    E = build_coend(kz2_odd())
    with pytest.raises(NotMonoidalDiagram):
        induce_multiplication(E)
    with pytest.raises(NotDualClosed):
        induce_antipode(E)


def test_diagram_rejects_non_morphisms(kz2, v_odd, K):
    objects = {"I": trivial(kz2), "V": v_odd}
    with pytest.raises(NotAMorphism):
        Diagram(kz2, objects, (Arrow("f", "I", "V", from_rows([[1]], K)),))
    with pytest.raises(NotAMorphism):
        Diagram(kz2, objects, (Arrow("g", "V", "V", identity(2, K)),))


def test_diagram_rejects_bad_tables(kz2, v_odd):
    objects = {"I": trivial(kz2), "V": v_odd}
    with pytest.raises(NotMonoidalDiagram):
        Diagram(kz2, objects, unit_object="V")
    with pytest.raises(NotMonoidalDiagram):
        Diagram(kz2, objects, tensor_table={("V", "V"): "V"})
    with pytest.raises(NotDualClosed):
        Diagram(kz2, objects, dual_table={"V": "I"})


def _split_lines(kz2):
    even_odd = from_coefficients(kz2, [[{0: 1}, {}], [{}, {1: 1}]], "X")
    odd_even = from_coefficients(kz2, [[{1: 1}, {}], [{}, {0: 1}]], "Y")
    return even_odd, odd_even


def test_dual_table_needs_an_isomorphism(kz2, v_odd, K):
    X, _ = _split_lines(kz2)
    lines = {"X": X, "II": trivial(kz2, dim=2, name="II")}
    # Hom(X^∨, k²) is nonzero and the dimensions agree, yet X^∨ has an odd line
    with pytest.raises(NotDualClosed):
        Diagram(kz2, lines, dual_table={"X": "II", "II": "II"})
    objects = {"I": trivial(kz2), "V": v_odd}
    with pytest.raises(NotDualClosed):
        Diagram(kz2, objects, dual_table={"I": "I", "V": "V"}, dual_witnesses={"V": zeros(1, 1, K)})
    with pytest.raises(NotDualClosed):
        Diagram(kz2, objects, dual_table={"I": "I"}, dual_witnesses={"V": identity(1, K)})


def test_dual_witnesses_are_found(K):
    D = builtin_diagram("kZ2-qt")
    assert equal(D.dual_witnesses["V"], identity(1, K))
    key, psi = D.left_dual("V")
    assert key == "V"
    assert equal(psi, identity(1, K))
    S = builtin_diagram("sweedler4-hopf")
    assert sorted(S.dual_witnesses) == sorted(S.names)
    assert all(is_invertible(phi) for phi in S.dual_witnesses.values())
    assert S.right_dual("X")[0] == "X'"
    assert S.left_dual("X")[0] == "X'"


def test_antipode_through_a_non_literal_dual(kz2):
    X, Y = _split_lines(kz2)
    D = Diagram(kz2, {"X": X, "Y": Y}, dual_table={"X": "Y", "Y": "X"}, name="lines").with_full_homs()
    assert not equal(D.dual_witnesses["X"], identity(2, kz2.domain))
    E = induce_antipode(build_coend(D))
    assert E.dim == 2
    report = check_structures(E)
    assert report.ok, [e.name for e in report.failures]


def test_diagram_rejects_bad_objects(kz2, v_odd):
    with pytest.raises(ShcError):
        Diagram(kz2, {})
    with pytest.raises(ShcError):
        Diagram(kz2, {"T": trivial(kz2, level=2)})
    with pytest.raises(UnknownObject):
        Diagram(kz2, {"V": v_odd}).object("W")


def test_builtin_diagrams():
    assert builtin_diagram("kZ2-qt").names == ["I", "V"]
    D = builtin_diagram("trivial-k2-e11", Field.prime(5))
    assert build_coend(D).dim == 2
    with pytest.raises(UnknownFixture):
        builtin_diagram("kZ5-qt")


def test_full_homs_of_the_sweedler_objects():
    D = builtin_diagram("sweedler4-hopf")
    E = build_coend(D)
    report = check_coend(E)
    assert report.ok, [e.name for e in report.failures]
    assert report.passed("generating")


def test_regular_comodule_coend():
    E = build_coend(builtin_diagram("sweedler4-regular"))
    assert E.dim == 4
    assert check_coend(E).ok


def test_finite_field_coend():
    E = build_coend(trivial_k2(Field.prime(3), "end"))
    assert E.dim == 1
    assert E.domain.mod == 3
