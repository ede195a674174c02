"""Exact parameter type and combinatorial primitives shared by every module.

All counts are Python ints, so nothing here overflows. Form indices are
1-based throughout: ``FMonomial`` position ``j - 1`` holds the exponent of
``F_j`` and a ``FormSubset`` holds indices in ``1..s``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from itertools import combinations

from pydantic import BaseModel, ConfigDict, model_validator

from starsym.exc import InvalidMonomialError, InvalidParamsError, InvalidRangeError
from starsym.types import FMonomial, FormSubset, MonomialLike


class StarParams(BaseModel):
    """The star configuration I_c on s forms of degree delta, raised to the m-th
    symbolic power."""

    model_config = ConfigDict(frozen=True)

    s: int
    c: int
    m: int
    delta: int = 1

    @model_validator(mode="after")
    def _check_ranges(self) -> StarParams:
        if self.s < 2:
            raise InvalidParamsError(f"s must be at least 2, got {self.s}")
        if not 1 <= self.c < self.s:
            raise InvalidParamsError(f"need 1 <= c < s, got c={self.c}, s={self.s}")
        if self.m < 1:
            raise InvalidParamsError(f"m must be at least 1, got {self.m}")
        if self.delta < 1:
            raise InvalidParamsError(f"delta must be at least 1, got {self.delta}")
        return self

    def __str__(self) -> str:
        return f"(s={self.s}, c={self.c}, m={self.m}, delta={self.delta})"

    def with_power(self, m: int) -> StarParams:
        return StarParams(s=self.s, c=self.c, m=m, delta=self.delta)

    @property
    def free(self) -> int:
        """s - c: a generator layer has more than this many forms."""
        return self.s - self.c

    @property
    def min_length(self) -> int:
        return -(-self.m // self.c)

    @property
    def lengths(self) -> range:
        """Admissible partition lengths t, from the shortest to m."""
        return range(self.min_length, self.m + 1)

    def generator_degree(self, t: int) -> int:
        """F-degree of the generators whose partition has length t."""
        return t * self.free + self.m

    def quotient_remainder(self) -> tuple[int, int]:
        """m = q*c + r with 1 <= r <= c."""
        q = (self.m - 1) // self.c
        return q, self.m - q * self.c

    def check_length(self, t: int) -> None:
        if t not in self.lengths:
            raise InvalidRangeError(
                f"length t={t} outside [{self.min_length}, {self.m}] for {self}"
            )


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, 0) = 1 and zero whenever k < 0 or k > n.

    >>> binomial(5, 2)
    10
    >>> binomial(7, -1)
    0
    >>> binomial(-1, 0)
    1
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < k:
        return 0
    return math.comb(n, k)


def enumerate_subsets(s: int, k: int) -> list[FormSubset]:
    """All k-subsets of {1..s}, lexicographic in their sorted tuples.

    >>> [sorted(b) for b in enumerate_subsets(3, 2)]
    [[1, 2], [1, 3], [2, 3]]
    """
    if s < 0 or not 0 <= k <= s:
        raise InvalidRangeError(f"need 0 <= k <= s, got k={k}, s={s}")
    return [frozenset(combo) for combo in combinations(range(1, s + 1), k)]


def check_monomial(M: MonomialLike, s: int | None = None) -> FMonomial:
    M = tuple(M)
    if s is not None and len(M) != s:
        raise InvalidMonomialError(f"expected {s} exponents, got {len(M)}: {M}")
    if any(e < 0 for e in M):
        raise InvalidMonomialError(f"negative exponent in {M}")
    return M


def unit(s: int) -> FMonomial:
    return (0,) * s


def f_degree(M: MonomialLike) -> int:
    return sum(M)


def divides(a: MonomialLike, b: MonomialLike) -> bool:
    return all(x <= y for x, y in zip(a, b, strict=True))


def multiply(a: MonomialLike, b: MonomialLike) -> FMonomial:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def lcm(a: MonomialLike, b: MonomialLike) -> FMonomial:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def indicator(subset: Iterable[int], s: int) -> FMonomial:
    """The squarefree monomial prod_{j in subset} F_j."""
    members = set(subset)
    if members and not members <= set(range(1, s + 1)):
        raise InvalidMonomialError(f"indices {sorted(members)} outside 1..{s}")
    return tuple(1 if j in members else 0 for j in range(1, s + 1))


def power(M: MonomialLike, k: int) -> FMonomial:
    return tuple(e * k for e in M)
