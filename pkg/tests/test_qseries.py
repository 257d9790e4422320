from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from oracle import eta_oracle, sigma
from ratnewforms.qseries import (
    EtaSpec,
    QSeries,
    al_sign_from_ap,
    convolve,
    eisenstein,
    eta_product,
    hecke_Tp,
    multiplicative_extend,
    naive_twist,
    push_up,
    series_mul,
    sigma_sum,
    theta_hex,
    theta_sq,
    to_dense_list,
    to_sparse_text,
    verify_eigenform,
)
from ratnewforms.arith import primes_upto

ints = st.integers(-10**6, 10**6)
fracs = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


def series(min_size=1, max_size=30, elements=ints):
    return st.lists(elements, min_size=min_size, max_size=max_size).map(QSeries)


# --- construction and printing ----------------------------------------------


def test_indexing_past_precision_raises():
    g = QSeries([1, 2, 3])
    assert g[2] == 3
    with pytest.raises(IndexError):
        g[3]


def test_fractional_coefficients_are_exact():
    g = QSeries([Fraction(1, 3), Fraction(-1, 6)], 4)
    assert g.coeffs == (Fraction(1, 3), Fraction(-1, 6), 0, 0)
    assert g.denominator == 6 and not g.is_integral()


def test_text_forms():
    g = QSeries([0, 1, -24], 4)
    assert to_sparse_text(g) == "q^1*1 + q^2*-24 + O(q^4)"
    assert to_dense_list(QSeries([Fraction(1, 2), 3])) == ["1/2", "3"]


def test_zero_precision_rejected():
    with pytest.raises(ValueError):
        QSeries([], 0)


# --- multiplication ----------------------------------------------------------


def test_telescoping_product():
    assert series_mul(QSeries([1, 1], 5), QSeries([1, -1], 5)) == QSeries([1, 0, -1], 5)


def test_q_cubed_minus_r_squared():
    Q, R = eisenstein("Q", 10), eisenstein("R", 10)
    assert (Q**3 - R**2)[1] == 1728


def test_theta_squared_first_coefficient():
    T = theta_hex(10)
    assert (T * T)[1] == 12


@given(st.lists(ints, min_size=1, max_size=80), st.lists(ints, min_size=1, max_size=80))
def test_kronecker_matches_schoolbook(a, b):
    n = min(len(a), len(b))
    school = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]
    assert convolve(a, b, n) == school


@given(series(), series(), series())
def test_multiplication_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series(elements=fracs), series(elements=fracs))
def test_precision_is_minimum(a, b):
    assert (a * b).precision == min(a.precision, b.precision)
    assert (a + b).precision == min(a.precision, b.precision)


@given(series(min_size=2, elements=fracs))
def test_inverse_of_unit(g):
    if g[0] == 0:
        g = g + 1
    assert g * g.inverse() == QSeries.one(g.precision)


@given(series(min_size=3), st.integers(1, 3))
def test_divide_exact_undoes_shifted_product(g, v):
    d = QSeries([0] * v + [1, 2, 3], g.precision + v)
    h = QSeries([0] * v + list(g.coeffs), g.precision + v) * QSeries([1, 2, 3], g.precision + v)
    quo = h.divide_exact(d)
    assert quo.precision == g.precision
    assert quo == g


# --- divisor sums and Eisenstein series ---------------------------------------


@pytest.mark.parametrize("j,n,want", [(3, 1, 1), (3, 2, 9), (5, 3, 244)])
def test_sigma_examples(j, n, want):
    assert sigma_sum(j, n) == want


@given(st.integers(1, 5), st.integers(1, 3000))
def test_sigma_against_sympy(j, n):
    assert sigma_sum(j, n) == sigma(j, n)


def test_eisenstein_heads():
    assert eisenstein("Q", 4) == QSeries([1, 240, 2160, 6720])
    assert eisenstein("R", 4) == QSeries([1, -504, -16632, -122976])
    assert 240 * sigma_sum(3, 2) == 2160 and 504 * sigma_sum(5, 3) == 122976


def test_eisenstein_unknown_kind():
    with pytest.raises(ValueError):
        eisenstein("E8")


# --- eta products and theta series --------------------------------------------


@pytest.mark.parametrize(
    "exps,head",
    [
        ({1: 24}, [0, 1, -24, 252, -1472, 4830, -6048]),
        ({1: 6, 3: 6}, [0, 1, -6, 9, 4]),
        ({2: 12}, [0, 1, 0, -12, 0, 54, 0, -88]),
    ],
)
def test_eta_heads(exps, head):
    assert eta_product(exps, len(head)) == QSeries(head)


@pytest.mark.parametrize("exps", [{1: 24}, {1: 8, 2: 8}, {1: 4, 2: 2, 4: 4}, {2: 4, 4: 4}, {1: 2, 2: 2, 3: 2, 6: 2}])
def test_eta_against_product_oracle(exps):
    assert eta_product(exps, 25).int_coeffs() == eta_oracle(exps, 25)


def test_eta_spec_weight_and_lead():
    s = EtaSpec.of({1: 4, 2: 2, 4: 4})
    assert s.weight == 5 and s.leading_exponent == 1


def test_eta_fractional_lead_rejected():
    with pytest.raises(ValueError):
        eta_product({1: 1})


def test_theta_heads():
    assert theta_hex(8) == QSeries([1, 6, 0, 6, 6, 0, 0, 12])
    assert theta_hex(3)[2] == 0
    t = theta_sq(17)
    assert [n for n in range(17) if t[n]] == [0, 1, 4, 9, 16] and t[16] == 2


@given(st.integers(1, 150))
def test_theta_hex_counts_lattice_points(n):
    brute = sum(1 for x in range(-15, 16) for y in range(-15, 16) if x * x + x * y + y * y == n)
    assert theta_hex(n + 1)[n] == brute


# --- push-up and Hecke ----------------------------------------------------------


def test_push_up_examples():
    T = theta_hex(20)
    assert push_up(T, 1) is T
    assert push_up(T, 2)[2] == 6
    D = eta_product({1: 24}, 20)
    assert push_up(D, 2)[3] == 0


@given(series(min_size=4), st.integers(1, 5))
def test_push_up_is_ring_map(g, t):
    assert push_up(g * g, t) == push_up(g, t) * push_up(g, t)


def test_delta_hecke():
    D = eta_product({1: 24}, 200)
    assert hecke_Tp(D, 2, 12)[1] == -24
    t3 = hecke_Tp(D, 3, 12)
    assert t3.precision == 66
    assert t3 == (D * 252).truncate(66)
    assert verify_eigenform(D, 12, 1, 50) is None


def test_hecke_of_zero_and_bad_input():
    assert hecke_Tp(QSeries.zero(20), 5, 12) == QSeries.zero(4)
    with pytest.raises(ValueError):
        hecke_Tp(QSeries.zero(20), 4, 12)


def test_non_eigenform_detected():
    # Q^3 Delta is not an eigenform in the two-dimensional S_24(1)
    g = eta_product({1: 24}, 60) * eisenstein("Q", 60) ** 3
    assert verify_eigenform(g, 24, 1, 20) == 2


# --- Euler products ---------------------------------------------------------------


def test_delta_from_its_prime_coefficients():
    D = eta_product({1: 24}, 200)
    ap = {p: int(D[p]) for p in primes_upto(199)}
    rebuilt = multiplicative_extend(ap, [], 12, 200)
    assert rebuilt == D
    assert rebuilt[6] == -6048 == -24 * 252
    assert rebuilt[4] == (-24) ** 2 - 2**11
    assert rebuilt[1] == 1


def test_missing_prime_raises():
    with pytest.raises(KeyError):
        multiplicative_extend({2: 1}, [], 4, 10)


@given(st.dictionaries(st.sampled_from(primes_upto(60)), st.integers(-50, 50)), st.sampled_from([2, 4, 6]))
def test_multiplicative_extend_is_multiplicative(vals, k):
    ap = {p: vals.get(p, 1) for p in primes_upto(59)}
    g = multiplicative_extend(ap, [2], k, 60)
    for m in range(1, 60):
        for n in range(1, 60 // m + 1):
            if m * n < 60 and gcd(m, n) == 1:
                assert g[m * n] == g[m] * g[n]


# --- Atkin-Lehner signs and twists -------------------------------------------------


def test_al_signs():
    assert al_sign_from_ap(9, 3, 1, 6) == -1
    assert al_sign_from_ap(-8, 2, 1, 8) == 1
    assert al_sign_from_ap(0, 2, 2, 8) is None
    with pytest.raises(ValueError):
        al_sign_from_ap(5, 3, 1, 6)


def test_twists():
    g = eta_product({2: 4, 4: 4}, 30)
    same = naive_twist(g, 1, 8)
    assert same.series == g and same.level_bound == 8
    tw = naive_twist(g, -4, 8)
    assert 16 % tw.level_bound == 0 and tw.level_bound == 16
    assert all(tw.series[n] == 0 for n in range(0, 30, 2))
    with pytest.raises(ValueError):
        naive_twist(g, 3, 8)
