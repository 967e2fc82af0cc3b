import math
from fractions import Fraction
from itertools import combinations

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from lrstirling.core import first_kind
from lrstirling.mzv import (
    DivergenceError,
    chain_sum,
    chain_sum_approx,
    closed_form,
    mzv_estimate,
    nested_sum,
    render,
    stirling_bridge,
    stirling_ratio,
    to_mpf,
)


def brute_chain(l, depth, lo, n):
    return sum(
        (Fraction(1, math.prod(c) ** l) for c in combinations(range(lo, n + 1), depth)),
        Fraction(0),
    )


@settings(max_examples=150, deadline=None)
@given(l=st.integers(1, 4), depth=st.integers(0, 4), lo=st.integers(1, 4), n=st.integers(0, 14))
def test_chain_sum_matches_enumeration(l, depth, lo, n):
    assert chain_sum(l, depth, lo, n) == brute_chain(l, depth, lo, n)


def test_nested_sum_examples():
    assert nested_sum(2, 1, 1, 3) == Fraction(49, 36)
    assert nested_sum(2, 2, 1, 3) == Fraction(7, 18)
    assert nested_sum(3, 4, 1, 3) == 0
    assert nested_sum(2, 1, 1, 3) == Fraction(first_kind(4, 2, (2, 1)), 36)
    assert nested_sum(2, 2, 1, 3) == Fraction(first_kind(4, 3, (2, 1)), 36)


def test_nested_sum_preconditions():
    with pytest.raises(ValueError):
        nested_sum(2, 1, 2, 5)
    with pytest.raises(ValueError):
        nested_sum(0, 1, 1, 5)


def test_bridge_full_range():
    for n in range(0, 61):
        for k in range(1, 7):
            for l in range(1, 5):
                for r in range(1, 4):
                    if r <= k <= n:
                        lhs, rhs = stirling_bridge(l, k, r, n)
                        assert lhs == rhs, (n, k, l, r)


def test_r_above_one_uses_depth_k_minus_r_plus_1():
    # first(n+1, k+1; l, r) is e_{n-k} of (r^l .. n^l): chains of length k - r + 1
    assert nested_sum(2, 3, 2, 6) == brute_chain(2, 2, 2, 6)
    assert nested_sum(2, 3, 2, 6) * (math.factorial(6) // 1) ** 2 == first_kind(7, 4, (2, 2))


def test_depth_recursion():
    for l in range(1, 4):
        for k in range(2, 5):
            for n in range(k, 20):
                rhs = sum(
                    (Fraction(1, j**l) * nested_sum(l, k - 1, 1, j - 1) for j in range(k, n + 1)),
                    Fraction(0),
                )
                assert nested_sum(l, k, 1, n) == rhs


def test_stirling_ratio_is_nested_sum():
    for l in range(1, 4):
        for k in range(1, 4):
            for n in range(k, 25):
                assert stirling_ratio(l, k, n) == nested_sum(l, k, 1, n)


def test_closed_form_examples():
    with mpmath.workdps(40):
        assert abs(closed_form(2, 1, 20) - mpmath.pi**2 / 6) < mpmath.mpf(10) ** -30
        assert abs(closed_form(4, 1, 20) - mpmath.pi**4 / 90) < mpmath.mpf(10) ** -30
        assert abs(closed_form(6, 1, 20) - mpmath.pi**6 / 945) < mpmath.mpf(10) ** -30
        assert abs(closed_form(2, 2, 20) - mpmath.pi**4 / 120) < mpmath.mpf(10) ** -30
    assert render(closed_form(2, 1, 11), 11) == "1.6449340668"
    assert render(closed_form(4, 1, 11), 11) == "1.0823232337"
    assert render(closed_form(6, 1, 11), 11) == "1.017343062"


@pytest.mark.parametrize("l", [2, 4, 6, 8])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_closed_form_against_zeta_values(l, k):
    # depth <= 3 MZVs of a constant string reduce to single zeta values
    with mpmath.workdps(50):
        z1, z2, z3 = mpmath.zeta(l), mpmath.zeta(2 * l), mpmath.zeta(3 * l)
        expected = {1: z1, 2: (z1**2 - z2) / 2, 3: (z1**3 - 3 * z1 * z2 + 2 * z3) / 6}[k]
        assert abs(closed_form(l, k, 30) - expected) < mpmath.mpf(10) ** -35


@pytest.mark.parametrize("l", [1, 3, 5, 10])
def test_closed_form_rejects_other_weights(l):
    with pytest.raises(ValueError):
        closed_form(l, 1)


def test_estimate_examples():
    est = mzv_estimate(2, 1, 3, 10)
    assert est.value == Fraction(49, 36)
    assert est.decimal == "1.361111111"
    assert render(est.closed_form, 7) == "1.644934"
    one = mzv_estimate(2, 1, 1, 12)
    assert one.value == 1
    assert one.decimal == "1.0"


def test_estimate_flags_empty_range():
    est = mzv_estimate(2, 5, 3)
    assert est.empty and est.value == 0


def test_estimate_rejects_divergent_and_bad_depth():
    with pytest.raises(DivergenceError):
        mzv_estimate(1, 2, 100)
    with pytest.raises(ValueError):
        mzv_estimate(2, 0, 100)


def test_estimate_without_closed_form():
    est = mzv_estimate(3, 1, 50)
    assert est.closed_form is None and est.gap is None
    with mpmath.workdps(40):
        tail = mpmath.zeta(3) - to_mpf(est.value, 40)
        assert 0 < tail < mpmath.mpf(1) / (2 * 49**2)


def test_monotone_and_below_target():
    for l in (2, 4, 6, 8):
        for k in (1, 2, 3):
            prev = None
            for n in range(k, 40):
                est = mzv_estimate(l, k, n, 30)
                assert est.gap > 0
                if prev is not None:
                    assert est.value > prev
                prev = est.value


def test_euler_tail_bracket_small_n():
    # integral test: 1/(n+1) < zeta(2) - partial_n < 1/n
    with mpmath.workdps(40):
        target = mpmath.pi**2 / 6
        for n in range(1, 201):
            gap = target - to_mpf(nested_sum(2, 1, 1, n), 40)
            assert mpmath.mpf(1) / (n + 1) < gap < mpmath.mpf(1) / n


def test_approximate_path_agrees_with_exact():
    for l, k, n in [(2, 1, 500), (2, 2, 300), (4, 3, 200), (3, 2, 100)]:
        exact = mzv_estimate(l, k, n, 30, exact=True)
        approx = mzv_estimate(l, k, n, 30, exact=False)
        assert approx.value is None and not approx.exact
        with mpmath.workdps(50):
            assert abs(exact.approx - approx.approx) < mpmath.mpf(10) ** -40
        assert exact.decimal == approx.decimal


def test_chain_sum_approx_edge_cases():
    assert chain_sum_approx(2, 0, 1, 10, 30) == 1
    assert chain_sum_approx(2, 5, 1, 3, 30) == 0


def test_large_n_default_goes_approximate():
    est = mzv_estimate(2, 1, 20_000, 15)
    assert not est.exact
    with mpmath.workdps(30):
        assert mpmath.mpf(1) / 20_001 < est.gap < mpmath.mpf(1) / 20_000
