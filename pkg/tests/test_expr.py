from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratnewforms import expr as E
from ratnewforms.qseries import QSeries, eisenstein
from ratnewforms.rings import evaluate_expression

SERIES = {"Q": eisenstein("Q", 20), "R": eisenstein("R", 20)}


def test_frac_normalizes():
    assert E.frac(Fraction(4, 2)) == 2
    assert E.frac(Fraction(-1, 6)) == ["frac", -1, 6]


def test_delta_from_q_and_r():
    e = ["*", ["frac", 1, 1728], ["+", ["^", "Q", 3], ["*", -1, ["^", "R", 2]]]]
    g = E.evaluate(e, SERIES.__getitem__, 20)
    assert g.truncate(6) == QSeries([0, 1, -24, 252, -1472, 4830])
    assert E.weight(e, {"Q": 4, "R": 6}) == 12
    assert E.symbols(e) == {"Q", "R"}
    assert E.to_text(e) == "1/1728*(Q^3 - R^2)"


def test_inhomogeneous_weight():
    assert E.weight(["+", "Q", "R"], {"Q": 4, "R": 6}) is None


def test_constants():
    assert E.constant_value(["^", 2, -6]) == Fraction(1, 64)
    assert E.constant_value(["*", 3, "Q"]) is None
    with pytest.raises(ValueError):
        E.constant_value(True)


def test_malformed_node():
    with pytest.raises(ValueError):
        E.symbols(["?", 1])
    with pytest.raises(ValueError):
        E.evaluate(["^", "Q", -1], SERIES.__getitem__, 10)


def test_monomial_and_combination():
    assert E.monomial({"Q": 3, "R": 0}) == ["^", "Q", 3]
    assert E.monomial({"Q": 0}) == 1
    assert E.linear_combination([(1, "Q"), (0, "R")]) == "Q"
    assert E.linear_combination([]) == 0


def test_substitute():
    e = ["*", "Q", ["^", "R", 2]]
    assert E.substitute(e, {"Q": "Q2"}) == ["*", "Q2", ["^", "R", 2]]


def test_evaluate_expression_uses_generators():
    assert evaluate_expression(["*", "Q", "Delta"], 4) == QSeries([0, 1, 216, -3348])


small = st.integers(-5, 5)
atoms = st.one_of(small, st.sampled_from(["Q", "R"]))
exprs = st.recursive(
    atoms,
    lambda inner: st.one_of(
        st.lists(inner, min_size=1, max_size=3).map(lambda xs: ["+", *xs]),
        st.lists(inner, min_size=1, max_size=3).map(lambda xs: ["*", *xs]),
        st.tuples(inner, st.integers(0, 3)).map(lambda t: ["^", t[0], t[1]]),
    ),
    max_leaves=6,
)


@given(exprs, exprs)
def test_evaluation_is_a_ring_map(a, b):
    ev = lambda e: E.evaluate(e, SERIES.__getitem__, 12)
    assert ev(["+", a, b]) == ev(a) + ev(b)
    assert ev(["*", a, b]) == ev(a) * ev(b)


@given(exprs)
def test_substituting_a_symbol_for_itself(e):
    assert E.substitute(e, {"Q": "Q"}) == e
