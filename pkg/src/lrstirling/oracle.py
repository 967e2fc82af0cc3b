"""Brute-force counts straight from the leader-set definitions.

A valid l-tuple is any l independent picks from one leader class (the
single permutations, or partitions, sharing an exact leader set), so the
count is a sum of class sizes raised to the l-th power.  Tuples are never
built.
"""

from __future__ import annotations

import functools
import itertools
import os
from collections import Counter
from dataclasses import dataclass

from .core import StirlingKind, _params

MAX_PERMUTATION_N = 10
MAX_PARTITION_N = 12
GUARD_ENV = "LR_STIRLING_ORACLE_MAX_N"
_GUARD_CEILING = 12


class EnumerationTooLarge(ValueError):
    pass


def enumeration_guard(kind) -> int:
    kind = StirlingKind.parse(kind)
    override = os.environ.get(GUARD_ENV)
    if override:
        try:
            value = int(override)
        except ValueError:
            raise ValueError(f"{GUARD_ENV} must be an integer, got {override!r}") from None
        return max(0, min(value, _GUARD_CEILING))
    return MAX_PERMUTATION_N if kind is StirlingKind.FIRST else MAX_PARTITION_N


@dataclass(frozen=True)
class CycleDecomposition:
    """Permutation of [n] as disjoint cycles; each cycle lists successors in order."""

    n: int
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = [x for c in self.cycles for x in c]
        if any(len(c) == 0 for c in self.cycles):
            raise ValueError("cycles must be nonempty")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"cycles do not partition [1..{self.n}]: {self.cycles}")

    @classmethod
    def from_cycles(cls, cycles, n=None) -> "CycleDecomposition":
        cycles = tuple(tuple(c) for c in cycles)
        if n is None:
            n = sum(len(c) for c in cycles)
        return cls(n, cycles)

    @classmethod
    def from_one_line(cls, image) -> "CycleDecomposition":
        """``image[i-1]`` is the image of ``i`` (1-based values)."""
        n = len(image)
        seen = [False] * (n + 1)
        cycles = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = image[x - 1]
            cycles.append(tuple(cycle))
        return cls(n, tuple(cycles))


@dataclass(frozen=True)
class SetPartition:
    """Partition of [n]; blocks kept sorted and ordered by their minima."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(len(b) == 0 for b in blocks):
            raise ValueError("blocks must be nonempty")
        if sorted(x for b in blocks for x in b) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition [1..{self.n}]: {self.blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks, n=None) -> "SetPartition":
        blocks = tuple(tuple(b) for b in blocks)
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(n, blocks)

    @classmethod
    def from_rgs(cls, rgs) -> "SetPartition":
        blocks: dict[int, list[int]] = {}
        for i, label in enumerate(rgs, start=1):
            blocks.setdefault(label, []).append(i)
        return cls(len(rgs), tuple(tuple(b) for b in blocks.values()))


def cycle_leaders(perm: CycleDecomposition) -> frozenset[int]:
    return frozenset(min(c) for c in perm.cycles)


def block_leaders(part: SetPartition) -> frozenset[int]:
    return frozenset(min(b) for b in part.blocks)


def restricted_growth_strings(n: int):
    """All restricted growth strings of length n (first entry 0)."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n
    maxes = [0] * n  # maxes[i] = max(rgs[:i+1])

    def rec(i):
        if i == n:
            yield tuple(rgs)
            return
        for label in range(maxes[i - 1] + 2):
            rgs[i] = label
            maxes[i] = max(maxes[i - 1], label)
            yield from rec(i + 1)

    yield from rec(1)


def _permutation_leaders(image: tuple[int, ...]) -> frozenset[int]:
    # i leads iff no element of its cycle is smaller: walk the cycle from i
    n = len(image)
    seen = bytearray(n)
    leaders = []
    for i in range(n):
        if seen[i]:
            continue
        leaders.append(i + 1)
        x = i
        while not seen[x]:
            seen[x] = 1
            x = image[x]
    return frozenset(leaders)


def _rgs_leaders(rgs: tuple[int, ...]) -> frozenset[int]:
    leaders = []
    top = -1
    for i, label in enumerate(rgs, start=1):
        if label > top:
            leaders.append(i)
            top = label
    return frozenset(leaders)


def _check_guard(n: int, kind: StirlingKind) -> None:
    limit = enumeration_guard(kind)
    if n > limit:
        what = "permutations" if kind is StirlingKind.FIRST else "partitions"
        raise EnumerationTooLarge(f"refusing to enumerate {what} of [{n}]: guard is n <= {limit} (set {GUARD_ENV})")


@functools.lru_cache(maxsize=None)
def _histogram(n: int, kind: StirlingKind) -> tuple[tuple[frozenset[int], int], ...]:
    counts: Counter = Counter()
    if kind is StirlingKind.FIRST:
        for image in itertools.permutations(range(n)):
            counts[_permutation_leaders(image)] += 1
    else:
        for rgs in restricted_growth_strings(n):
            counts[_rgs_leaders(rgs)] += 1
    return tuple(sorted(counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))


def histogram(n: int, kind) -> dict[frozenset[int], int]:
    """Map each exact leader set to the number of single objects having it."""
    kind = StirlingKind.parse(kind)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_guard(n, kind)
    return dict(_histogram(n, kind))


def oracle_count(n: int, k: int, p, kind) -> int:
    """Number of valid l-tuples with k cycles/blocks and 1..r leading."""
    kind = StirlingKind.parse(kind)
    p = _params(p)
    if n < 1:
        return 0
    forced = set(range(1, p.r + 1))
    return sum(
        count**p.l
        for leaders, count in histogram(n, kind).items()
        if len(leaders) == k and forced <= leaders
    )


def merge_histograms(*parts: dict) -> dict:
    out: Counter = Counter()
    for part in parts:
        out.update(part)
    return dict(out)
