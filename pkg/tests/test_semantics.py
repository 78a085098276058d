import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from godelchi.formula import And, Bot, Implies, Neg, Or, Top, Var, parse
from godelchi.semantics import LevelAssignment, boolean_models, evaluate, evaluate_levels, is_true

from helpers import formulas


def test_implication_returns_consequent_when_it_fails():
    assert evaluate("X1 -> X2", LevelAssignment(2, (2, 1))) == 1


def test_double_negation_of_half_is_one():
    assert evaluate("~~X1", LevelAssignment(2, (1,))) == 2


def test_excluded_middle_at_half():
    assert evaluate("X1 | ~X1", LevelAssignment(2, (1,))) == 1


@pytest.mark.parametrize(
    "text, a, expected",
    [
        ("~~X1", LevelAssignment(2, (1,)), True),
        ("X1", LevelAssignment(1, (0,)), False),
        ("1", LevelAssignment(3, (0, 2)), True),
        ("1", LevelAssignment(1, ()), True),
    ],
)
def test_is_true(text, a, expected):
    assert is_true(text, a) is expected


@pytest.mark.parametrize("text, n, expected", [("X1 & X2", 2, 1), ("X1 | ~X1", 1, 2), ("0", 3, 0)])
def test_boolean_models(text, n, expected):
    assert boolean_models(text, n) == expected


def test_boolean_models_rejects_small_n():
    with pytest.raises(ValueError):
        boolean_models("X3", 2)


def test_eval_rejects_unassigned_variable():
    with pytest.raises(ValueError):
        evaluate("X2", LevelAssignment(1, (1,)))


def test_assignment_validation():
    with pytest.raises(ValueError):
        LevelAssignment(0, (0,))
    with pytest.raises(ValueError):
        LevelAssignment(2, (3,))


@st.composite
def assignment_and_embedding(draw, n=3):
    top = draw(st.integers(1, 5))
    values = tuple(draw(st.lists(st.integers(0, top), min_size=n, max_size=n)))
    extra = draw(st.integers(0, 5))
    new_top = top + extra
    # strictly increasing map {0..top} -> {0..new_top} fixing both ends
    inner = sorted(draw(st.lists(st.integers(1, new_top - 1), min_size=top - 1, max_size=top - 1, unique=True))) if top > 1 else []
    embedding = [0, *inner, new_top]
    return LevelAssignment(top, values), embedding, new_top


@given(formulas(3), assignment_and_embedding())
def test_order_embedding_invariance(f, data):
    a, e, new_top = data
    assert evaluate(f, a.relabel(e, new_top)) == e[evaluate(f, a)]


@given(formulas(3), st.integers(1, 6), st.data())
def test_value_is_zero_one_or_a_variable_value(f, top, data):
    values = tuple(data.draw(st.lists(st.integers(0, top), min_size=3, max_size=3)))
    assert evaluate(f, LevelAssignment(top, values)) in {0, top, *values}


def _classical(f, bits):
    if isinstance(f, Var):
        return bits[f.index - 1]
    if isinstance(f, Bot):
        return False
    if isinstance(f, Top):
        return True
    if isinstance(f, Neg):
        return not _classical(f.child, bits)
    a, b = _classical(f.left, bits), _classical(f.right, bits)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    return (not a) or b


@given(formulas(3))
def test_two_valued_case_is_classical(f):
    for bits in itertools.product((False, True), repeat=3):
        assert evaluate(f, LevelAssignment(1, tuple(map(int, bits)))) == int(_classical(f, bits))


@given(formulas(3), st.integers(1, 4))
def test_vectorised_matches_scalar(f, top):
    grid = np.array(list(itertools.product(range(top + 1), repeat=3)), dtype=np.int8)
    got = evaluate_levels(f, grid, top)
    want = [evaluate(f, LevelAssignment(top, tuple(row))) for row in grid.tolist()]
    assert got.tolist() == want


def test_deep_formula_evaluates():
    f = parse("~" * 20001 + "X1")
    assert evaluate(f, LevelAssignment(2, (1,))) == 0
