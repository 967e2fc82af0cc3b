"""(l,r)-Stirling numbers of both kinds.

``first_kind(n, k, p)`` counts l-tuples of permutations of [n] with k cycles,
a common cycle-leader set, and 1..r all leading.  ``second_kind`` is the
analogous count for l-tuples of set partitions into k blocks.

Both are computed from the one-row-back recurrences

    first(n, k)  = first(n-1, k-1) + (n-1)**l * first(n-1, k)
    second(n, k) = second(n-1, k-1) + k**l * second(n-1, k)

for n > r, starting from row n = r where the value is 1 at k = r and 0
elsewhere.  Rows below r are identically zero.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass


class StirlingKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"

    @classmethod
    def parse(cls, value) -> "StirlingKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown Stirling kind {value!r}; expected 'first' or 'second'") from None


@dataclass(frozen=True, order=True)
class StirlingParams:
    """Tuple length ``l`` and number of forced leaders ``r`` (both >= 1)."""

    l: int
    r: int

    def __post_init__(self):
        for name in ("l", "r"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {type(value).__name__}")
            if value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")


def _params(p=None, l=None, r=None) -> StirlingParams:
    if isinstance(p, StirlingParams):
        return p
    if p is not None:
        l, r = p
    return StirlingParams(l, r)


class StirlingTriangle:
    """Row-by-row memoized table for one (kind, l, r).

    Row ``n`` is stored as a list indexed by k in ``0..n``.  Rows are only
    ever appended, so a row handed out by :meth:`row` never changes.
    """

    def __init__(self, kind: StirlingKind, params: StirlingParams):
        self.kind = StirlingKind.parse(kind)
        self.params = params
        r = params.r
        self._rows: list[tuple[int, ...]] = [(0,) * (n + 1) for n in range(r)]
        self._rows.append(tuple(1 if k == r else 0 for k in range(r + 1)))
        self._lock = threading.Lock()

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def extend(self, n_max: int) -> None:
        if n_max <= self.n_max:
            return
        l = self.params.l
        with self._lock:
            while len(self._rows) <= n_max:
                n = len(self._rows)
                prev = self._rows[-1]
                if self.kind is StirlingKind.FIRST:
                    w = (n - 1) ** l
                    row = [0] * (n + 1)
                    for k in range(1, n):
                        row[k] = prev[k - 1] + w * prev[k]
                    row[n] = prev[n - 1]
                else:
                    row = [0] * (n + 1)
                    for k in range(1, n):
                        row[k] = prev[k - 1] + k**l * prev[k]
                    row[n] = prev[n - 1]
                self._rows.append(tuple(row))

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            return ()
        self.extend(n)
        return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]

    def items(self, n_max: int):
        """Yield ``(n, k, value)`` for r <= n <= n_max, r <= k <= n."""
        r = self.params.r
        for n in range(r, n_max + 1):
            row = self.row(n)
            for k in range(r, n + 1):
                yield n, k, row[k]


_TRIANGLES: dict[tuple[StirlingKind, StirlingParams], StirlingTriangle] = {}
_TRIANGLES_LOCK = threading.Lock()


def triangle(kind, p) -> StirlingTriangle:
    """Shared memoized triangle for ``(kind, p)``."""
    kind = StirlingKind.parse(kind)
    p = _params(p)
    key = (kind, p)
    tri = _TRIANGLES.get(key)
    if tri is None:
        with _TRIANGLES_LOCK:
            tri = _TRIANGLES.setdefault(key, StirlingTriangle(kind, p))
    return tri


def first_kind(n: int, k: int, p) -> int:
    """(l,r)-Stirling number of the first kind; 0 outside the triangle."""
    return triangle(StirlingKind.FIRST, p).value(n, k)


def second_kind(n: int, k: int, p) -> int:
    """(l,r)-Stirling number of the second kind; 0 outside the triangle."""
    return triangle(StirlingKind.SECOND, p).value(n, k)


def stirling(kind, n: int, k: int, p) -> int:
    return triangle(kind, p).value(n, k)


def special_first_diagonal(n: int, p) -> int:
    """``(r (r+1) ... (n-1)) ** l``, the k = r entry of the first kind."""
    p = _params(p)
    if n < p.r:
        raise ValueError(f"need n >= r, got n={n}, r={p.r}")
    return math.prod(range(p.r, n)) ** p.l


def special_second_diagonal(n: int, p) -> int:
    """``r ** (l (n - r))``, the k = r entry of the second kind."""
    p = _params(p)
    if n < p.r:
        raise ValueError(f"need n >= r, got n={n}, r={p.r}")
    return p.r ** (p.l * (n - p.r))


def _require_cross_r(n: int, p: StirlingParams) -> None:
    if p.r < 2:
        raise ValueError("cross-r identities need r >= 2 (the r = 1 form divides by zero)")
    if n < p.r:
        raise ValueError(f"need n >= r, got n={n}, r={p.r}")


def cross_r_first_sides(n: int, k: int, p) -> tuple[int, int]:
    """Both sides of ``(r-1)^l [n,k]_r = [n,k-1]_{r-1} - [n,k-1]_r``."""
    p = _params(p)
    _require_cross_r(n, p)
    lower = StirlingParams(p.l, p.r - 1)
    lhs = (p.r - 1) ** p.l * first_kind(n, k, p)
    rhs = first_kind(n, k - 1, lower) - first_kind(n, k - 1, p)
    return lhs, rhs


def check_cross_r_first(n: int, k: int, p) -> bool:
    lhs, rhs = cross_r_first_sides(n, k, p)
    return lhs == rhs


def cross_r_second_sides(n: int, k: int, p) -> tuple[int, int]:
    """Both sides of ``{n,k}_r = {n,k}_{r-1} - (r-1)^l {n-1,k}_{r-1}``."""
    p = _params(p)
    _require_cross_r(n, p)
    lower = StirlingParams(p.l, p.r - 1)
    lhs = second_kind(n, k, p)
    rhs = second_kind(n, k, lower) - (p.r - 1) ** p.l * second_kind(n - 1, k, lower)
    return lhs, rhs


def check_cross_r_second(n: int, k: int, p) -> bool:
    lhs, rhs = cross_r_second_sides(n, k, p)
    return lhs == rhs


def _orthogonality_target(n: int, k: int, r: int) -> int:
    if n < r or n != k:
        return 0
    return -1 if n % 2 else 1


def orthogonality_sums(n: int, k: int, p) -> tuple[int, int, int]:
    """Return ``(first_sum, second_sum, target)`` for the two orthogonality relations.

    ``first_sum``  = sum_j first(n, j) * second(j, k) * (-1)**j
    ``second_sum`` = sum_j first(j, n) * second(k, j) * (-1)**j

    The first sum has support r <= j <= n, the second n <= j <= k.
    """
    p = _params(p)
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    s1 = sum(
        (-1) ** j * first_kind(n, j, p) * second_kind(j, k, p)
        for j in range(p.r, n + 1)
    )
    s2 = sum(
        (-1) ** j * first_kind(j, n, p) * second_kind(k, j, p)
        for j in range(n, k + 1)
    )
    return s1, s2, _orthogonality_target(n, k, p.r)


def check_orthogonality(n: int, k: int, p) -> bool:
    s1, s2, target = orthogonality_sums(n, k, p)
    return s1 == target and s2 == target
