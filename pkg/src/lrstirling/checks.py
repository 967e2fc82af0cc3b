"""Identity suites: enumerate every instance in a range and compare both sides.

Each suite yields ``(instance, lhs, rhs)`` triples; :func:`run_suite`
collects them into a :class:`SuiteResult`.  Default ranges reproduce the
ranges the library is tested over.
"""

from __future__ import annotations

import inspect
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import bernoulli, core, mzv, oracle, symfun
from .core import StirlingKind, StirlingParams


@dataclass
class SuiteResult:
    name: str
    ranges: dict
    checked: int = 0
    failures: list = field(default_factory=list)
    instances: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _orthogonality(n_max=25, k_max=25, l_max=3, r_max=4):
    for l in range(1, l_max + 1):
        for r in range(1, r_max + 1):
            p = StirlingParams(l, r)
            for n in range(0, n_max + 1):
                for k in range(0, k_max + 1):
                    s1, s2, target = core.orthogonality_sums(n, k, p)
                    yield {"relation": "first", "n": n, "k": k, "l": l, "r": r}, s1, target
                    yield {"relation": "second", "n": n, "k": k, "l": l, "r": r}, s2, target


def _cross_r(n_max=20, l_max=3, r_max=5):
    for l in range(1, l_max + 1):
        for r in range(2, r_max + 1):
            p = StirlingParams(l, r)
            for n in range(r, n_max + 1):
                for k in range(0, n + 2):
                    lhs, rhs = core.cross_r_first_sides(n, k, p)
                    yield {"kind": "first", "n": n, "k": k, "l": l, "r": r}, lhs, rhs
                    lhs, rhs = core.cross_r_second_sides(n, k, p)
                    yield {"kind": "second", "n": n, "k": k, "l": l, "r": r}, lhs, rhs


def _symfun(n_max=30, l_max=5, r_max=5):
    for l in range(1, l_max + 1):
        for r in range(1, r_max + 1):
            p = StirlingParams(l, r)
            for n in range(r, n_max + 1):
                e = symfun.elementary_all(symfun.power_weights(r, n - 1, l))
                for k in range(r, n + 1):
                    inst = {"kind": "first", "n": n, "k": k, "l": l, "r": r}
                    yield inst, core.first_kind(n, k, p), e[n - k]
                h = symfun.homogeneous_all(n_max - n, symfun.power_weights(r, n, l))
                for m in range(n, n_max + 1):
                    inst = {"kind": "second", "n": m, "k": n, "l": l, "r": r}
                    yield inst, core.second_kind(m, n, p), h[m - n]


def _gf(n_max=30, l_max=5, r_max=5):
    for l in range(1, l_max + 1):
        for r in range(1, r_max + 1):
            p = StirlingParams(l, r)
            tri1 = core.triangle(StirlingKind.FIRST, p)
            for n in range(r, n_max + 1):
                coeffs = symfun.gf_first_row(n, p).coefficients
                yield {"gf": "row", "n": n, "l": l, "r": r}, list(tri1.row(n)), list(coeffs)
            for k in range(r, n_max + 1):
                coeffs = symfun.gf_second_column(k, p, n_max).coefficients
                column = [core.second_kind(m, k, p) for m in range(n_max + 1)]
                yield {"gf": "column", "k": k, "order": n_max, "l": l, "r": r}, column, list(coeffs)


def _convolution(n_max=12, l_max=3, r_max=3):
    for r in range(1, r_max + 1):
        for n in range(r, n_max + 1):
            for k in range(r, n + 1):
                for l in range(1, l_max + 1):
                    lhs, rhs = symfun.convolution_sides(n, k, StirlingParams(l, r))
                    yield {"form": "general", "n": n, "k": k, "l": l, "r": r}, lhs, rhs
                lhs, rhs = symfun.corollary_sides(n, k, r)
                yield {"form": "corollary", "n": n, "k": k, "l": 1, "r": r}, lhs, rhs


def _bernoulli(n_max=12, k_max=6, l_max=4, faulhaber_n_max=50, faulhaber_m_max=20):
    for n in range(0, faulhaber_n_max + 1):
        for m in range(0, faulhaber_m_max + 1):
            yield {"identity": "faulhaber", "n": n, "m": m}, bernoulli.faulhaber(n, m), bernoulli.power_sum(n, m)
    for n in range(1, n_max + 1):
        for k in range(0, k_max + 1):
            for l in range(1, l_max + 1):
                lhs, rhs = bernoulli.stirling_bernoulli_sides(n, k, l)
                yield {"identity": "stirling-bernoulli", "n": n, "k": k, "l": l}, lhs, rhs


def _nested(n_max=60, k_max=6, l_max=4, r_max=3):
    for l in range(1, l_max + 1):
        for r in range(1, r_max + 1):
            for k in range(r, k_max + 1):
                for n in range(k, n_max + 1):
                    lhs, rhs = mzv.stirling_bridge(l, k, r, n)
                    yield {"n": n, "k": k, "l": l, "r": r}, lhs, rhs


def _oracle(n_max=8, l_max=3, r_max=None):
    for kind in StirlingKind:
        for n in range(1, n_max + 1):
            for l in range(1, l_max + 1):
                for r in range(1, (n if r_max is None else min(n, r_max)) + 1):
                    p = StirlingParams(l, r)
                    for k in range(r, n + 1):
                        inst = {"kind": kind.value, "n": n, "k": k, "l": l, "r": r}
                        yield inst, core.stirling(kind, n, k, p), oracle.oracle_count(n, k, p, kind)


SUITES: dict[str, Callable[..., Iterator]] = {
    "orthogonality": _orthogonality,
    "cross-r": _cross_r,
    "symfun": _symfun,
    "gf": _gf,
    "convolution": _convolution,
    "bernoulli": _bernoulli,
    "nested": _nested,
    "oracle": _oracle,
}

# Suites whose instances are always listed in reports.
LISTED_BY_DEFAULT = frozenset({"oracle"})


def suite_ranges(name: str) -> dict:
    """Default keyword ranges of suite ``name``."""
    sig = inspect.signature(SUITES[name])
    return {k: v.default for k, v in sig.parameters.items()}


def run_suite(name: str, keep_instances: bool = False, **ranges) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    accepted = suite_ranges(name)
    used = {k: v for k, v in ranges.items() if k in accepted and v is not None}
    result = SuiteResult(name, {**accepted, **used})
    for inst, lhs, rhs in SUITES[name](**used):
        result.checked += 1
        if lhs != rhs:
            result.failures.append((inst, lhs, rhs))
        if keep_instances:
            result.instances.append((inst, lhs, rhs))
    return result
