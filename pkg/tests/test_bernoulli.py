from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from lrstirling.bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    check_stirling_bernoulli,
    faulhaber,
    jacobi_sum,
    power_sum,
    stirling_bernoulli_lhs,
    stirling_bernoulli_sides,
)
from lrstirling.symfun import power_sum_via_newton, power_weights


def egf_bernoulli_numbers(m_max):
    """B_0..B_m_max as coefficients of t/(e^t - 1), by inverting (e^t - 1)/t."""
    a = [Fraction(1, factorial(j + 1)) for j in range(m_max + 1)]
    inv = [Fraction(0)] * (m_max + 1)
    inv[0] = 1 / a[0]
    for m in range(1, m_max + 1):
        inv[m] = -sum(a[j] * inv[m - j] for j in range(1, m + 1)) / a[0]
    return [inv[m] * factorial(m) for m in range(m_max + 1)]


def test_polynomials_small():
    assert bernoulli_poly(0).coefficients == (1,)
    assert bernoulli_poly(1).coefficients == (Fraction(-1, 2), 1)
    assert bernoulli_poly(3).coefficients == (0, Fraction(1, 2), Fraction(-3, 2), 1)
    assert str(bernoulli_poly(3)) == "x^3 - (3/2)x^2 + (1/2)x"


def test_against_egf_expansion():
    numbers = egf_bernoulli_numbers(25)
    for m in range(26):
        poly = bernoulli_poly(m)
        expected = [comb(m, j) * numbers[m - j] for j in range(m + 1)]
        assert list(poly.coefficients) == expected
        assert bernoulli_number(m) == numbers[m]


def test_monic_and_endpoint_property():
    for m in range(0, 30):
        b = bernoulli_poly(m)
        assert b.coefficients[-1] == 1
        assert b.degree == m
        if m >= 2:
            assert b(1) == b(0)
    assert bernoulli_poly(1)(1) - bernoulli_poly(1)(0) == 1


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        bernoulli_poly(-1)


def test_faulhaber_examples():
    assert faulhaber(3, 2) == 14
    assert (bernoulli_poly(3)(4) - bernoulli_poly(3)(0)) == 42
    assert faulhaber(5, 1) == 15
    for m in range(10):
        assert faulhaber(0, m) == 0


def test_faulhaber_full_range():
    for n in range(51):
        for m in range(21):
            assert faulhaber(n, m) == power_sum(n, m)


def test_jacobi_lower_limit_zero():
    for n in range(51):
        for m in range(1, 21):
            assert jacobi_sum(n, m) == power_sum(n, m)
    # at m = 0 the lower limit 0 also counts 0**0
    for n in range(10):
        assert jacobi_sum(n, 0) == n + 1


def test_result_is_integer_valued():
    for n in range(20):
        for m in range(12):
            assert faulhaber(n, m).denominator == 1


@pytest.mark.parametrize(
    "n, k, l, expected",
    [(3, 0, 1, 6), (3, 1, 2, 98), (1, 0, 1, 1), (1, 4, 3, 1)],
)
def test_stirling_bernoulli_examples(n, k, l, expected):
    lhs, rhs = stirling_bernoulli_sides(n, k, l)
    assert lhs == rhs == expected
    assert check_stirling_bernoulli(n, k, l)


def test_stirling_bernoulli_full_range():
    for n in range(1, 13):
        for k in range(7):
            for l in range(1, 5):
                assert check_stirling_bernoulli(n, k, l)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, 12), k=st.integers(0, 6), l=st.integers(1, 4))
def test_newton_bridge(n, k, l):
    w = power_weights(1, n, l)
    assert stirling_bernoulli_lhs(n, k, l) == power_sum_via_newton(k + 1, w)
    assert stirling_bernoulli_lhs(n, k, l) == power_sum(n, l * (k + 1))


def test_stirling_bernoulli_preconditions():
    with pytest.raises(ValueError):
        stirling_bernoulli_sides(0, 1, 1)
    with pytest.raises(ValueError):
        stirling_bernoulli_sides(2, -1, 1)
