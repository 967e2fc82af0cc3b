"""Exact Bernoulli polynomials, power sums, and the alternating Stirling-product power-sum identity."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import StirlingParams, first_kind, second_kind


@dataclass(frozen=True)
class BernoulliPolynomial:
    degree: int
    coefficients: tuple[Fraction, ...]  # index = power of x

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        out = ""
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            mag = abs(c)
            if not mono:
                coeff = str(mag)
            elif mag == 1:
                coeff = ""
            elif mag.denominator != 1:
                coeff = f"({mag})"
            else:
                coeff = str(mag)
            if not out:
                out = ("-" if c < 0 else "") + coeff + mono
            else:
                out += (" - " if c < 0 else " + ") + coeff + mono
        return out or "0"


_CACHE: list[BernoulliPolynomial] = []
_CACHE_LOCK = threading.Lock()


def bernoulli_poly(m: int) -> BernoulliPolynomial:
    """Degree-m Bernoulli polynomial (exponential generating function t e^{xt}/(e^t - 1)).

    Built from ``B_m(x) = x^m - sum_{j<m} C(m, j) B_j(x) / (m - j + 1)``,
    which comes from integrating ``B_m`` over ``[x, x+1]``.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m < len(_CACHE):
        return _CACHE[m]
    with _CACHE_LOCK:
        while len(_CACHE) <= m:
            d = len(_CACHE)
            coeffs = [Fraction(0)] * (d + 1)
            coeffs[d] = Fraction(1)
            for j in range(d):
                scale = Fraction(comb(d, j), d - j + 1)
                for power, c in enumerate(_CACHE[j].coefficients):
                    coeffs[power] -= scale * c
            _CACHE.append(BernoulliPolynomial(d, tuple(coeffs)))
    return _CACHE[m]


def bernoulli_number(m: int) -> Fraction:
    """B_m = B_m(0), so B_1 = -1/2."""
    return bernoulli_poly(m).coefficients[0]


def power_sum(n: int, m: int) -> int:
    """Direct ``sum_{j=1}^{n} j**m``."""
    return sum(j**m for j in range(1, n + 1))


def faulhaber(n: int, m: int) -> Fraction:
    """``sum_{j=1}^{n} j**m`` evaluated as ``(B_{m+1}(n+1) - B_{m+1}(1)) / (m+1)``.

    For m >= 1 this is the same as subtracting ``B_{m+1}(0)``, since the
    Bernoulli polynomials of degree >= 2 agree at 0 and 1.  At m = 0 the
    ``B_1(0)`` form counts the extra term ``0**0`` and returns n + 1.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    b = bernoulli_poly(m + 1)
    return (b(n + 1) - b(1)) / (m + 1)


def jacobi_sum(n: int, m: int) -> Fraction:
    """``(B_{m+1}(n+1) - B_{m+1}(0)) / (m+1)``, the lower limit taken at 0."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    b = bernoulli_poly(m + 1)
    return (b(n + 1) - b(0)) / (m + 1)


def stirling_bernoulli_lhs(n: int, k: int, l: int) -> int:
    """``sum_{j=0}^{k} (-1)^j (j+1) [n+1, n-j]^{(l)} {n+k-j, n}^{(l)}`` with r = 1."""
    p = StirlingParams(l, 1)
    return sum(
        (-1) ** j * (j + 1) * first_kind(n + 1, n - j, p) * second_kind(n + k - j, n, p)
        for j in range(k + 1)
    )


def stirling_bernoulli_sides(n: int, k: int, l: int) -> tuple[int, Fraction]:
    if n < 1 or k < 0 or l < 1:
        raise ValueError(f"need n >= 1, k >= 0, l >= 1; got n={n}, k={k}, l={l}")
    return stirling_bernoulli_lhs(n, k, l), jacobi_sum(n, l * k + l)


def check_stirling_bernoulli(n: int, k: int, l: int) -> bool:
    lhs, rhs = stirling_bernoulli_sides(n, k, l)
    return lhs == rhs
