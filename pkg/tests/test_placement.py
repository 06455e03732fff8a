import pytest

from exactla import equal, from_rows, identity, to_rows
from comod import exterior, from_coefficients, trivial
from placement import Slot, normalize, parse, print_expr, realize, realize_morphism
from squared import canonical
from utils.errors import ArityMismatch, BadOrderSet, DuplicateIndex, NonContiguousTargets, ParseError, UnknownObject


def test_parse_unit_placement():
    expr = parse("C_{13} (.) I_2")
    assert expr.names() == ["C", "I"]
    assert expr.operands[0].slots == (Slot(1, 0), Slot(3, 0))
    assert expr.operands[1].slots == (Slot(2, 0),)
    assert expr.arity == 3


def test_parse_orders():
    expr = parse("C_{12'} (x) C_{2''3}")
    assert expr.operands[0].slots == (Slot(1, 0), Slot(2, 1))
    assert expr.operands[1].slots == (Slot(2, 2), Slot(3, 0))
    assert parse("C_{1′1″}").operands[0].slots == (Slot(1, 1), Slot(1, 2))
    assert parse("C_{1,2^1} ⊗ C_{2^2,3}") == expr
    wide = parse("X_{1,2,3,4,5,6,7,8,9,10}")
    assert wide.arity == 10
    assert wide.operands[0].slots[-1] == Slot(10, 0)


@pytest.mark.parametrize("text, error", [
    ("C_{11'}", BadOrderSet),
    ("X_1 ⊗ Y_1", DuplicateIndex),
    ("X_1 ⊗ Y_3", NonContiguousTargets),
    ("C_", ParseError),
    ("C_{12", ParseError),
    ("C_{}", ParseError),
    ("X_1 + Y_2", ParseError),
    ("X_0", ParseError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("X_1 ⊗ 2")
    assert info.value.position == 6


def test_normalize():
    assert normalize("C_{12'} (x) C_{2''3}") == "C_{1,2^1} ⊗ C_{2^2,3}"
    assert normalize("X_1 (.) I_2") == "X_{1} ⊗ I_{2}"
    assert normalize(normalize("C_{12'} (x) C_{2''3}")) == "C_{1,2^1} ⊗ C_{2^2,3}"


def test_realize_merged_legs(kz2, v_odd):
    C = exterior(v_odd, v_odd)
    X, trace = realize("C_{1'1''}", {"C": C})
    assert X.level == 1
    assert X.same_as(trivial(kz2))
    assert trace.merges == (1,)


def test_realize_unit_placement(v_odd):
    X, _ = realize("X_1 (.) I_2", {"X": v_odd})
    assert X.level == 2
    assert to_rows(X.coaction) == [["0"], ["0"], ["1"], ["0"]]


def test_realize_comatrix_product(k2):
    C = canonical(k2).C
    X, _ = realize("C_{12'} (x) C_{2''3}", {"C": C})
    assert X.level == 3
    assert X.dim == 16


def test_realize_errors(v_odd):
    with pytest.raises(ArityMismatch):
        realize("X_{12}", {"X": v_odd})
    with pytest.raises(UnknownObject):
        realize("Y_1", {"X": v_odd})


def test_realize_identity_morphism(v_odd):
    f = realize_morphism("X_1", "X_1", {"X": v_odd})
    assert equal(f.matrix, identity(1, v_odd.domain))


PLACEMENTS = [
    "X_1",
    "X_{1}",
    "X_1 ⊗ Y_2",
    "X_2 ⊗ Y_1",
    "C_{12}",
    "C_{21}",
    "C_{13} ⊙ I_2",
    "C_{13} (.) I_2",
    "C_{12'} (x) C_{2''3}",
    "C_{1′1″}",
    "C_{1'1''}",
    "B_{1′3″}⊗B_{1″3′}⊙I_2",
    "B_{1′3″}(x)B_{1″3′}(.)I_2",
    "H_{1′2″}⊗H_{1″2′}",
    "H_{1′2′}⊗H_{1″2″}",
    "C_{1^1,2} ⊗ C_{1^2,3}",
    "C_{1,2^1} ⊗ C_{2^2,3}",
    "X_{1,2,3,4,5,6,7,8,9,10}",
    "X_{10,} ⊗ Y_{1,2,3,4,5,6,7,8,9}",
    "A_{1^{1}} ⊗ B_{1^{2}}",
    "A_{1^1} ⊗ B_{1^2}",
    "A_1 ⊗ B_2 ⊗ C_3 ⊗ D_4",
    "D_4 ⊗ C_3 ⊗ B_2 ⊗ A_1",
    "I_{12}",
    "C_{1‴2} ⊗ D_{1′} ⊗ E_{1″}",
    "X1_1 ⊗ Y2_2",
    "  X_1   ⊗   Y_2  ",
    "M_{1 2}",
    "C_{3,1,2}",
    "P_{1'} ⊗ Q_{1''} ⊗ R_{2}",
    "Z_{1^1,1^2,1^3}",
]


@pytest.mark.parametrize("text", PLACEMENTS)
def test_printed_placement_parses_back(text):
    expr = parse(text)
    printed = print_expr(expr)
    assert parse(printed) == expr
    assert normalize(printed) == printed


@pytest.mark.parametrize("text, expected", [
    ("B_{1′3″}⊗B_{1″3′}⊙I_2", "B_{1^1,3^2} ⊗ B_{1^2,3^1} ⊗ I_{2}"),
    ("H_{1′2″}⊗H_{1″2′}", "H_{1^1,2^2} ⊗ H_{1^2,2^1}"),
    ("X_{10,} ⊗ Y_{1,2,3,4,5,6,7,8,9}", "X_{10,} ⊗ Y_{1,2,3,4,5,6,7,8,9}"),
    ("A_{1^{1}} ⊗ B_{1^{2}}", "A_{1^1} ⊗ B_{1^2}"),
    ("M_{1 2}", "M_{1,2}"),
    ("C_{1‴2} ⊗ D_{1′} ⊗ E_{1″}", "C_{1^3,2} ⊗ D_{1^1} ⊗ E_{1^2}"),
])
def test_normal_forms(text, expected):
    assert normalize(text) == expected


@pytest.mark.parametrize("text, error, position", [
    ("X_1 ⊗ 2", ParseError, 6),
    ("X_1 + Y_2", ParseError, 4),
    ("C_", ParseError, 2),
    ("C_{12", ParseError, 2),
    ("C_{}", ParseError, 2),
    ("X_0", ParseError, 2),
    ("X1", ParseError, 2),
    ("_1", ParseError, 0),
    ("X_1 ⊗ Y_{2^}", ParseError, 11),
    ("X_{1^{}}", ParseError, 6),
    ("X_1 ⊗ Y_2 ⊗", ParseError, 11),
    ("X_1 ⊗ Y_1", DuplicateIndex, 6),
    ("C_{11'}", BadOrderSet, 0),
])
def test_error_positions(text, error, position):
    with pytest.raises(error) as info:
        parse(text)
    assert info.value.position == position
    assert info.value.text == text


@pytest.fixture
def split_line(kz2):
    """k ⊕ k_odd over kZ2 and the same lines in the other order"""
    return (from_coefficients(kz2, [[{0: 1}, {}], [{}, {1: 1}]], "A"),
            from_coefficients(kz2, [[{1: 1}, {}], [{}, {0: 1}]], "A2"))


@pytest.mark.parametrize("text, reordered", [
    ("B_{1′3″}⊗B_{1″3′}⊙I_2", "I_2 ⊙ B_{1″3′} ⊗ B_{1′3″}"),
    ("H_{1′2″}⊗H_{1″2′}", "H_{1″2′}⊗H_{1′2″}"),
    ("B_{13} ⊗ A_2", "A_2 ⊗ B_{13}"),
])
def test_realize_ignores_operand_order(text, reordered, split_line, v_odd):
    A, _ = split_line
    bind = {"A": A, "B": exterior(A, v_odd), "H": exterior(A, v_odd)}
    X, _ = realize(text, bind)
    Y, _ = realize(reordered, bind)
    assert X.same_as(Y)


def test_realize_morphism_ignores_operand_order(split_line, v_odd, K):
    A, A2 = split_line
    bind = {"A": A, "A2": A2, "B": exterior(A, v_odd)}
    swap_lines = {"A": from_rows([[0, 1], [1, 0]], K)}
    f = realize_morphism("B_{13} ⊗ A_2", "B_{13} ⊗ A2_2", bind, swap_lines)
    g = realize_morphism("A_2 ⊗ B_{13}", "A2_2 ⊗ B_{13}", bind, swap_lines)
    assert f.src.same_as(g.src)
    assert f.dst.same_as(g.dst)
    assert equal(f.matrix, g.matrix)
