import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qweil import cliffordq as clq
from qweil import weil
from qweil.parser import BinOp, Name, Num, ParseError, Pow, SortError, evaluate_text, parse, same_value, sort_name, tokenize
from qweil.scalars import ZERO, c, q
from qweil.uqsl2 import E, F, Ki, casimir


def test_precedence():
    tree = parse("E + F*K^2 ox v2")
    assert isinstance(tree, BinOp) and tree.op == "+"
    right = tree.right
    assert right.op == "ox"
    assert right.left == BinOp("*", Name("F"), Pow(Name("K"), 2), right.left.line, right.left.column)
    assert parse("2") == Num(2)


def test_tokens_carry_positions():
    toks = tokenize("E *\n  F")
    assert [(x.text, x.line, x.column) for x in toks] == [("E", 1, 1), ("*", 1, 3), ("F", 2, 3), ("", 2, 4)]


@pytest.mark.parametrize(
    "text, line, column",
    [("E +", 1, 4), ("(E", 1, 3), ("E $ F", 1, 3), ("E\n+ foo", 2, 3), ("K^2^3", 1, 4), ("K^F", 1, 3)],
)
def test_syntax_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert str(err.value).startswith(f"syntax error at line {line}, column {column}")


def test_defining_relations_evaluate_to_zero():
    for rel in ("K*E - q^2*E*K", "E*F - F*E - (K - Ki)/(q - q^-1)", "v0*v2 + q^-2*v2*v0", "v2*v2"):
        assert same_value(evaluate_text(rel), ZERO)


def test_values():
    assert evaluate_text("C") == casimir()
    assert evaluate_text("K^-2") == Ki * Ki
    assert evaluate_text("t^2") == c * (q ** 2 + 1) / q
    assert evaluate_text("E ox v2") == weil.tensor(E, clq.v2)
    assert evaluate_text("(1 ox v2)*(E ox 1)") == weil.tensor(None, clq.v2) * weil.tensor(E, None)
    assert evaluate_text("-F") == F * -1


@pytest.mark.parametrize(
    "text",
    ["E ox v2 + v2", "v2 ox E", "E*v2", "(E ox v2)*F", "e + v2", "E/F", "v2^-1", "E^-1"],
)
def test_sort_errors(text):
    with pytest.raises(SortError):
        evaluate_text(text)


def test_division_by_zero():
    with pytest.raises(ValueError, match="zero divisor"):
        evaluate_text("E/(q - q)")


def test_sort_names():
    assert sort_name(evaluate_text("q")) == "Scalar"
    assert sort_name(evaluate_text("E")) == "UqElem"
    assert sort_name(evaluate_text("v0")) == "ClqElem"
    assert sort_name(evaluate_text("h")) == "ClElem"
    assert sort_name(evaluate_text("E ox v0")) == "WqElem"


ROUND_TRIP = [
    "E*F",
    "C",
    "(q^2 - 1)/(q + c)*K^-1",
    "v0*v0",
    "h*h",
    "e*f*h",
    "K ox v2*vm2 + t*F ox v0",
]


@pytest.mark.parametrize("text", ROUND_TRIP)
def test_printed_values_reparse(text):
    value = evaluate_text(text)
    assert same_value(evaluate_text(str(value)), value)


def test_printed_dirac_reparses():
    for value in (weil.dirac(), weil.dirac_squared_rhs(), clq.gamma(), clq.phi(clq.v0)):
        assert same_value(evaluate_text(str(value)), value)


atoms = st.sampled_from(["E", "F", "K", "Ki", "q", "2", "(q + 1)"])


@st.composite
def uq_expressions(draw, depth=2):
    if depth == 0:
        return draw(atoms)
    left, right = draw(uq_expressions(depth=depth - 1)), draw(uq_expressions(depth=depth - 1))
    return f"({left} {draw(st.sampled_from(['+', '-', '*']))} {right})"


@settings(max_examples=40, deadline=None)
@given(uq_expressions())
def test_round_trip_property(text):
    value = evaluate_text(text)
    assert same_value(evaluate_text(str(value)), value)
