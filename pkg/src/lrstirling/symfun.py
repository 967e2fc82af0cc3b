"""Elementary / complete homogeneous symmetric functions and their Stirling links.

With weights ``x_i = i**l`` the (l,r)-Stirling numbers are symmetric
functions of consecutive powers:

    first(n, k)       = e_{n-k}(r^l, ..., (n-1)^l)
    second(n + k, n)  = h_k(r^l, ..., n^l)

e_0 = h_0 = 1 for every weight list, including the empty one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import StirlingParams, _params, first_kind, second_kind


@dataclass(frozen=True)
class PolySeries:
    """Integer coefficients indexed by power; ``order`` set when truncated."""

    coefficients: tuple[int, ...]
    order: Optional[int] = None

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        if self.order is not None and power > self.order:
            raise IndexError(f"coefficient z^{power} lies beyond truncation order {self.order}")
        return 0

    def __len__(self):
        return len(self.coefficients)


def poly_mul(a: Sequence[int], b: Sequence[int], order: Optional[int] = None) -> list[int]:
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if order is not None:
        size = min(size, order + 1)
    out = [0] * size
    for i, ai in enumerate(a):
        if ai == 0 or i >= size:
            continue
        for j in range(min(len(b), size - i)):
            out[i + j] += ai * b[j]
    return out


def series_div(num: Sequence[int], den: Sequence[int], order: int) -> list[int]:
    """Truncated quotient ``num / den`` through z^order; ``den[0]`` must be +-1."""
    if not den or den[0] not in (1, -1):
        raise ValueError("series division needs a unit constant term")
    c0 = den[0]
    out = [0] * (order + 1)
    for m in range(order + 1):
        acc = num[m] if m < len(num) else 0
        for j in range(1, min(m, len(den) - 1) + 1):
            acc -= den[j] * out[m - j]
        out[m] = acc * c0
    return out


def elementary_all(weights: Sequence[int]) -> list[int]:
    """Coefficients of prod(1 + x t), i.e. ``[e_0, ..., e_len]``."""
    e = [1]
    for x in weights:
        e.append(0)
        for j in range(len(e) - 1, 0, -1):
            e[j] += x * e[j - 1]
    return e


def elementary(k: int, weights: Sequence[int]) -> int:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k > len(weights):
        return 0
    return elementary_all(weights)[k]


def homogeneous_all(k_max: int, weights: Sequence[int]) -> list[int]:
    """``[h_0, ..., h_{k_max}]``.

    Adds one weight at a time: h_j(x_1..x_m) = h_j(x_1..x_{m-1}) + x_m h_{j-1}(x_1..x_m).
    """
    h = [1] + [0] * k_max
    for x in weights:
        for j in range(1, k_max + 1):
            h[j] += x * h[j - 1]
    return h


def homogeneous(k: int, weights: Sequence[int]) -> int:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return homogeneous_all(k, weights)[k]


def power_weights(lo: int, hi: int, l: int) -> list[int]:
    """``[lo**l, (lo+1)**l, ..., hi**l]`` (empty when hi < lo)."""
    return [i**l for i in range(lo, hi + 1)]


def first_kind_via_e(n: int, k: int, p) -> int:
    p = _params(p)
    if n < p.r:
        raise ValueError(f"need n >= r, got n={n}, r={p.r}")
    if k > n:
        return 0
    return elementary(n - k, power_weights(p.r, n - 1, p.l))


def second_kind_via_h(n_plus_k: int, n: int, p) -> int:
    p = _params(p)
    if n < p.r:
        raise ValueError(f"need n >= r, got n={n}, r={p.r}")
    if n_plus_k < n:
        raise ValueError(f"need n_plus_k >= n, got {n_plus_k} < {n}")
    return homogeneous(n_plus_k - n, power_weights(p.r, n, p.l))


def gf_first_row(n: int, p) -> PolySeries:
    """Expand ``z^r * prod_{i=r}^{n-1} (z + i^l)``; coefficient of z^k is first(n, k)."""
    p = _params(p)
    if n < p.r:
        raise ValueError(f"need n >= r, got n={n}, r={p.r}")
    poly = [0] * p.r + [1]
    for i in range(p.r, n):
        poly = poly_mul(poly, [i**p.l, 1])
    return PolySeries(tuple(poly))


def gf_second_column(k: int, p, order: int) -> PolySeries:
    """Expand ``z^k / prod_{i=r}^{k} (1 - i^l z)`` through z^order."""
    p = _params(p)
    if k < p.r:
        raise ValueError(f"need k >= r, got k={k}, r={p.r}")
    if order < k:
        raise ValueError(f"need order >= k, got order={order}, k={k}")
    den = [1]
    for i in range(p.r, k + 1):
        den = poly_mul(den, [1, -(i**p.l)], order)
    num = [0] * k + [1]
    return PolySeries(tuple(series_div(num, den, order)), order)


def weighted_compositions(k: int, l: int):
    """Tuples ``(i_0, ..., i_l) >= 0`` with ``sum_s 2**s * i_s == k``.

    i_l varies slowest, then i_{l-1}, and so on down to i_0 (which is forced).
    """

    def rec(s, remaining):
        if s == 0:
            yield (remaining,)
            return
        step = 1 << s
        for i in range(remaining // step + 1):
            for rest in rec(s - 1, remaining - step * i):
                yield rest + (i,)

    yield from rec(l, k)


def convolution_terms(n: int, k: int, p):
    """Yield ``(composition, term)`` for the 2^s-power convolution sum.

    ``p.l`` selects the number of doubling stages; the target is the plain
    r-Stirling number ``second(n + k, n)`` with tuple length 1.
    """
    p = _params(p)
    l, r = p.l, p.r
    for comp in weighted_compositions(k, l):
        term = second_kind(n + comp[l], n, StirlingParams(2**l, r))
        for s in range(l):
            if term == 0:
                break
            term *= first_kind(n + 1, n + 1 - comp[s], StirlingParams(2**s, r))
        yield comp, term


def convolution_sides(n: int, k: int, p) -> tuple[int, int]:
    p = _params(p)
    lhs = sum(term for _, term in convolution_terms(n, k, p))
    rhs = second_kind(n + k, n, StirlingParams(1, p.r))
    return lhs, rhs


def check_convolution(n: int, k: int, p) -> bool:
    lhs, rhs = convolution_sides(n, k, p)
    return lhs == rhs


def corollary_sides(n: int, k: int, r: int) -> tuple[int, int]:
    """The l = 1 case written out with a single summation index."""
    lhs = sum(
        second_kind(n + i, n, StirlingParams(2, r)) * first_kind(n + 1, n + 1 + 2 * i - k, StirlingParams(1, r))
        for i in range(k // 2 + 1)
    )
    return lhs, second_kind(n + k, n, StirlingParams(1, r))


def newton_residual(m: int, weights: Sequence[int]) -> int:
    """``sum_{j=0}^{m} (-1)^j e_j h_{m-j}``; zero for every m >= 1."""
    e = elementary_all(weights)
    h = homogeneous_all(m, weights)
    return sum((-1) ** j * (e[j] if j < len(e) else 0) * h[m - j] for j in range(m + 1))


def power_sum_via_newton(m: int, weights: Sequence[int]) -> int:
    """p_m from ``sum_{j=0}^{m-1} (-1)^j (j+1) e_{j+1} h_{m-1-j}``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    e = elementary_all(weights)
    h = homogeneous_all(m - 1, weights)
    return sum(
        (-1) ** j * (j + 1) * (e[j + 1] if j + 1 < len(e) else 0) * h[m - 1 - j]
        for j in range(m)
    )
