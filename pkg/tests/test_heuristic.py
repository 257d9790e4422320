import math

import pytest
from hypothesis import given, strategies as st

from oracle import lattice_points_oracle
from ratnewforms.heuristic import (
    EnsembleParams,
    count_quadratics,
    log_prob_split,
    pr_of_weight,
    prob_split,
    prob_split_printed,
    quadratic_points,
    volume,
)


def test_area_of_quadratic_region():
    w = 2**2.5
    assert volume(2, w) == pytest.approx(32 * w**3 / 3, rel=1e-12)
    assert abs(volume(2, w) - 1930.9) <= 0.05


def test_volume_degree_one():
    assert volume(1, 3.0) == pytest.approx(12.0)


def test_figure2_counts():
    assert count_quadratics(2**2.5) == (1951, 276)


@pytest.mark.parametrize("w", [0.5, 1.0, 1.7, 2**1.5, 3.3])
def test_counts_against_brute_force(w):
    assert count_quadratics(w) == lattice_points_oracle(w)


def test_split_points_are_pairs_of_integers():
    w = 2**2.5
    split = {(p.b, p.c) for p in quadratic_points(w) if p.split}
    bound = math.floor(2 * w)
    pairs = {(-(a1 + a2), a1 * a2) for a1 in range(-bound, bound + 1) for a2 in range(a1, bound + 1)}
    assert split == pairs


def test_counts_approach_volumes():
    errs = []
    for m in range(5, 16):
        w = 2 ** (m / 2)
        total, split = count_quadratics(w)
        errs.append((abs(total / volume(2, w) - 1), abs(split / (volume(1, w) ** 2 / 2) - 1)))
    assert errs[-1][0] < errs[0][0] and errs[-1][1] < errs[0][1]
    assert errs[-1][0] < 0.01 and errs[-1][1] < 0.01


@given(st.floats(1.0, 1e6))
def test_linear_times_linear(w):
    assert prob_split(1, 1, w) == pytest.approx(3 / (4 * w), rel=1e-12)
    assert prob_split_printed(1, 1, w) == pytest.approx(prob_split(1, 1, w), rel=1e-12)


@given(st.integers(1, 8), st.integers(1, 8), st.floats(1.0, 100.0))
def test_closed_form_equals_volume_ratio(r, s, w):
    assert math.log(prob_split(r, s, w)) == pytest.approx(log_prob_split(r, s, w), rel=1e-12, abs=1e-9)


@given(st.integers(1, 12), st.integers(1, 12), st.floats(1.0, 1e4))
def test_symmetric_in_r_and_s(r, s, w):
    assert prob_split(r, s, w) == prob_split(s, r, w)


@given(st.integers(1, 6), st.integers(1, 6), st.floats(2.0, 1e3))
def test_probability_decreases_with_w(r, s, w):
    assert prob_split(r, s, 2 * w) < prob_split(r, s, w)


def test_printed_closed_form_disagrees_beyond_1_1():
    assert prob_split_printed(2, 1, 8.0) != pytest.approx(prob_split(2, 1, 8.0))


def test_weight_probabilities():
    assert f"{100 * pr_of_weight(1, 1, 6):.1f}" == "13.3"
    assert f"{100 * pr_of_weight(1, 1, 16):.1f}" == "0.4"
    assert f"{100 * pr_of_weight(1, 1, 22):.2f}" == "0.05"
    assert f"{pr_of_weight(1, 12, 10):.1e}" == "2.2e-16"
    assert f"{pr_of_weight(1, 83, 4):.1e}" == "3.4e-37"
    assert f"{pr_of_weight(1, 4, 6):.1e}" == "2.4e-03"


def test_ensemble_params():
    e = EnsembleParams(2, 6, 1, 1)
    assert e.d == 2 and e.w == pytest.approx(2**2.5)
    assert e.probability() == pytest.approx(pr_of_weight(1, 1, 6))
    with pytest.raises(ValueError):
        EnsembleParams(2, 6, 2, 1)
