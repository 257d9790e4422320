from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratnewforms.catalog import load_catalog
from ratnewforms.dims import (
    SUPPORTED_LEVELS,
    dim_cusp_level1,
    dim_full_approx,
    dim_new_approx,
    dim_new_signed_exact,
    format_signs,
    local_mass,
    mass,
    parse_signs,
    prime_powers,
    sign_strings,
)

TABLE2 = load_catalog().table2


def test_level1_examples():
    assert dim_cusp_level1(12) == 1
    assert dim_cusp_level1(2) == 0
    assert dim_cusp_level1(24) == 2
    assert [k for k in range(2, 30, 2) if dim_cusp_level1(k) == 1] == [12, 16, 18, 20, 22, 26]


@given(st.integers(0, 500).map(lambda x: 2 * x))
def test_level1_against_monomial_count(k):
    count = sum(1 for a in range(k // 4 + 1) for b in range(k // 6 + 1) if 4 * a + 6 * b == k)
    assert dim_cusp_level1(k) == max(count - 1, 0)


def test_approximations():
    assert dim_full_approx(12, 1) == Fraction(11, 12)
    assert dim_full_approx(12, 6) == 11
    assert dim_full_approx(20, 1) == Fraction(19, 12)


def test_mass_examples():
    assert mass(8, "+") == mass(8, "-") == Fraction(3, 2)
    assert mass(4, "+") == 0
    assert all(mass(6, eps) == Fraction(1, 2) for eps in sign_strings(6))


def test_mass_needs_one_sign_per_prime():
    with pytest.raises(ValueError):
        mass(6, "+")


@pytest.mark.parametrize("N", SUPPORTED_LEVELS)
def test_signed_masses_sum_to_unsigned(N):
    total = sum(mass(N, eps) for eps in sign_strings(N))
    unsigned = Fraction(1)
    for p, e in prime_powers(N):
        unsigned *= local_mass(p, e)
    assert total == unsigned


@pytest.mark.parametrize(
    "N,k,eps,want",
    [(8, 16, "-", 2), (2, 16, "+", 1), (2, 16, "-", 0), (3, 10, "+", 1), (3, 10, "-", 1), (6, 4, "++", 1)],
)
def test_signed_examples(N, k, eps, want):
    assert dim_new_signed_exact(N, k, eps) == want


@pytest.mark.parametrize("row", TABLE2, ids=lambda r: f"N{r.N}{r.eps or '_'}")
def test_table2_row(row):
    for k in range(2, 51, 2):
        assert dim_new_signed_exact(row.N, k, row.eps) == row.dim(k), k
    assert mass(row.N, row.eps) == row.mass


@given(st.sampled_from(SUPPORTED_LEVELS), st.integers(1, 200).map(lambda x: 2 * x))
def test_signed_dims_are_near_the_mass_line(N, k):
    # the exact dimension stays within a bounded distance of m (k - 1)/12
    for eps in sign_strings(N):
        d = dim_new_signed_exact(N, k, eps)
        assert d >= 0
        assert abs(d - mass(N, eps) * Fraction(k - 1, 12)) <= 3


@given(st.sampled_from(SUPPORTED_LEVELS), st.integers(1, 200).map(lambda x: 2 * x))
def test_signed_dims_sum_to_full_new_dimension(N, k):
    total = sum(dim_new_signed_exact(N, k, eps) for eps in sign_strings(N))
    assert abs(total - dim_new_approx(k, N)) <= 4


def test_unsupported_level():
    with pytest.raises(ValueError):
        dim_new_signed_exact(5, 12, "+")


@given(st.lists(st.sampled_from([1, -1]), max_size=4))
def test_sign_text_roundtrip(signs):
    assert parse_signs(format_signs(signs)) == tuple(signs)
