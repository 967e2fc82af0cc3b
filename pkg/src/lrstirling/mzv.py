"""Partial sums of multiple zeta values zeta({l}_k) through Stirling numbers.

For r <= k <= n,

    first(n+1, k+1; l, r) = (n! / (r-1)!)**l * S

where S sums ``1 / (j_r j_{r+1} ... j_k)**l`` over chains
``r <= j_r < j_{r+1} < ... < j_k <= n`` (k - r + 1 indices).  With r = 1
S is the depth-k truncation of zeta({l}_k), so dividing the Stirling
number by (n!)**l converges to the multiple zeta value as n grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from .core import StirlingParams, first_kind

# Extra decimal digits carried beyond the requested output precision.
CLOSED_FORM_GUARD_DIGITS = 16
APPROX_GUARD_DIGITS = 20
# Largest n evaluated with exact rationals by default.
EXACT_N_LIMIT = 10_000

CLOSED_FORM_WEIGHTS = (2, 4, 6, 8)


class DivergenceError(ValueError):
    pass


def _lcm_range(lo: int, hi: int) -> int:
    out = 1
    for j in range(max(lo, 1), hi + 1):
        out = out * j // math.gcd(out, j)
    return out


def chain_sum(l: int, depth: int, lo: int, n: int) -> Fraction:
    """Exact ``sum 1/(j_1 ... j_depth)**l`` over ``lo <= j_1 < ... < j_depth <= n``.

    Depth-by-depth prefix sums over a common denominator ``L**(l*depth)``
    with ``L = lcm(lo..n)``, so all intermediate work is integer.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    lo = max(lo, 1)
    if depth == 0:
        return Fraction(1)
    if n - lo + 1 < depth:
        return Fraction(0)
    big_l = _lcm_range(lo, n)
    weight = [0] * (n + 1)
    for j in range(lo, n + 1):
        weight[j] = (big_l // j) ** l
    # prefix[j] = scaled sum over chains of the current depth with last index <= j
    prefix = [1] * (n + 1)
    for d in range(1, depth + 1):
        nxt = [0] * (n + 1)
        acc = 0
        for j in range(lo, n + 1):
            if j - lo + 1 >= d:
                acc += weight[j] * prefix[j - 1]
            nxt[j] = acc
        prefix = nxt
    return Fraction(prefix[n], big_l ** (l * depth))


def chain_sum_approx(l: int, depth: int, lo: int, n: int, dps: int) -> mpmath.mpf:
    """Floating counterpart of :func:`chain_sum` at ``dps`` decimal digits.

    Every term is positive, so with about 2 * n * depth roundings the
    relative error stays below ``2 * n * depth * 10**(1 - dps)``.
    """
    lo = max(lo, 1)
    with mpmath.workdps(dps):
        if depth == 0:
            return mpmath.mpf(1)
        if n - lo + 1 < depth:
            return mpmath.mpf(0)
        # level[d] = sum over chains of depth d with last index <= current j
        level = [mpmath.mpf(1)] + [mpmath.mpf(0)] * depth
        for j in range(lo, n + 1):
            w = mpmath.mpf(1) / mpmath.mpf(j) ** l
            for d in range(depth, 0, -1):
                level[d] += w * level[d - 1]
        return +level[depth]


def nested_sum(l: int, k: int, r: int, n: int) -> Fraction:
    """Exact nested sum with ``first(n+1, k+1) == (n!/(r-1)!)**l * nested_sum``.

    Returns 0 when k > n (empty index range).
    """
    if l < 1 or r < 1:
        raise ValueError(f"l and r must be >= 1, got l={l}, r={r}")
    if k < r:
        raise ValueError(f"need k >= r, got k={k}, r={r}")
    if k > n:
        return Fraction(0)
    return chain_sum(l, k - r + 1, r, n)


def stirling_bridge(l: int, k: int, r: int, n: int) -> tuple[Fraction, int]:
    """``(nested_sum * (n!/(r-1)!)**l, first(n+1, k+1))``; equal for every r <= k <= n."""
    scale = Fraction(math.factorial(n), math.factorial(r - 1)) ** l
    return nested_sum(l, k, r, n) * scale, first_kind(n + 1, k + 1, StirlingParams(l, r))


def stirling_ratio(l: int, k: int, n: int) -> Fraction:
    """``first(n+1, k+1; l, 1) / (n!)**l``, the quantity whose limit is zeta({l}_k)."""
    return Fraction(first_kind(n + 1, k + 1, StirlingParams(l, 1)), math.factorial(n) ** l)


def closed_form(l: int, k: int, precision: int = 30) -> mpmath.mpf:
    """Known closed form of zeta({l}_k) for l in {2, 4, 6, 8}.

    Evaluated with ``CLOSED_FORM_GUARD_DIGITS`` extra digits; the returned
    mpf carries that working precision.
    """
    if l not in CLOSED_FORM_WEIGHTS:
        raise ValueError(f"no closed form for l={l}; available for l in {CLOSED_FORM_WEIGHTS}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    with mpmath.workdps(precision + CLOSED_FORM_GUARD_DIGITS):
        pi = mpmath.pi
        fac = mpmath.factorial
        if l == 2:
            return pi ** (2 * k) / fac(2 * k + 1)
        if l == 4:
            return 4 * (2 * pi) ** (4 * k) / fac(4 * k + 2) * mpmath.mpf(2) ** -(2 * k + 1)
        if l == 6:
            return 6 * (2 * pi) ** (6 * k) / fac(6 * k + 3)
        s = 1 / mpmath.sqrt(2)
        return (
            pi ** (8 * k) / fac(8 * k + 4) * mpmath.mpf(2) ** (8 * k + 3)
            * ((1 + s) ** (4 * k + 2) + (1 - s) ** (4 * k + 2))
        )


def to_mpf(value: Fraction, dps: int) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return mpmath.mpf(value.numerator) / value.denominator


def render(x, precision: int) -> str:
    return mpmath.nstr(x, precision, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


@dataclass(frozen=True)
class MzvEstimate:
    l: int
    k: int
    n: int
    precision: int
    value: Optional[Fraction]  # None on the approximate path
    approx: mpmath.mpf = field(repr=False)
    closed_form: Optional[mpmath.mpf] = field(default=None, repr=False)
    empty: bool = False

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def decimal(self) -> str:
        return render(self.approx, self.precision)

    @property
    def gap(self) -> Optional[mpmath.mpf]:
        """``closed_form - value`` at working precision, or None."""
        if self.closed_form is None:
            return None
        with mpmath.workdps(self.precision + CLOSED_FORM_GUARD_DIGITS):
            return self.closed_form - self.approx


def mzv_estimate(l: int, k: int, n: int, precision: int = 30, exact: Optional[bool] = None) -> MzvEstimate:
    """Depth-k, weight-l partial sum truncated at n, with its closed-form target.

    ``exact`` defaults to True for n <= EXACT_N_LIMIT.  The approximate path
    works at ``precision + APPROX_GUARD_DIGITS`` digits.
    """
    if l < 2:
        raise DivergenceError(f"zeta({{{l}}}_{k}) diverges; need l >= 2")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    if exact is None:
        exact = n <= EXACT_N_LIMIT
    dps = precision + CLOSED_FORM_GUARD_DIGITS
    empty = k > n
    if exact:
        value = nested_sum(l, k, 1, n)
        approx = to_mpf(value, dps)
    else:
        value = None
        approx = chain_sum_approx(l, k, 1, n, precision + APPROX_GUARD_DIGITS)
    target = closed_form(l, k, precision) if l in CLOSED_FORM_WEIGHTS else None
    return MzvEstimate(l, k, n, precision, value, approx, target, empty)
