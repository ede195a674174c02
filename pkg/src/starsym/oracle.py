"""Brute-force monomial ideal engine used as ground truth.

Forms are treated as independent variables, so every ideal here is an
ordinary monomial ideal and membership is divisibility by a generator.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from functools import partial
from itertools import combinations, combinations_with_replacement

from starsym.config import OracleLimits
from starsym.core import (
    StarParams,
    check_monomial,
    divides,
    enumerate_subsets,
    f_degree,
    lcm,
    unit,
)
from starsym.exc import EmptySubsetError, NonlinearQuotientError, ResourceLimitError
from starsym.order import sort_by_tau
from starsym.types import FMonomial, FormSubset, MonomialLike
from starsym.util.logger import debug
from starsym.util.pool import fan_out


@dataclass(frozen=True)
class MonomialIdeal:
    generators: frozenset[FMonomial]
    s: int

    def __len__(self) -> int:
        return len(self.generators)

    @classmethod
    def unit_ideal(cls, s: int) -> MonomialIdeal:
        return cls(frozenset({unit(s)}), s)

    @classmethod
    def zero(cls, s: int) -> MonomialIdeal:
        return cls(frozenset(), s)


def _check_size(count: int, limits: OracleLimits, what: str) -> None:
    if count > limits.max_generators:
        raise ResourceLimitError(
            f"{what} would handle {count} monomials, above the oracle cap {limits.max_generators}"
        )


def minimalize(gens: Iterable[MonomialLike], s: int | None = None) -> MonomialIdeal:
    """Drop every monomial divisible by another one in the set."""
    pool = sorted({check_monomial(g, s) for g in gens}, key=lambda g: (f_degree(g), g))
    if s is None:
        s = len(pool[0]) if pool else 0
    kept: list[FMonomial] = []
    for g in pool:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(frozenset(kept), s)


def ci_power_ideal(J: Iterable[int], m: int, s: int) -> MonomialIdeal:
    """(F_j : j in J)^m as the monomials of degree m supported in J."""
    J = sorted(J)
    if not J:
        raise EmptySubsetError("J must be nonempty")
    gens = set()
    for combo in combinations_with_replacement(J, m):
        exponents = [0] * s
        for j in combo:
            exponents[j - 1] += 1
        gens.add(tuple(exponents))
    return MonomialIdeal(frozenset(gens), s)


def intersect(
    I1: MonomialIdeal, I2: MonomialIdeal, limits: OracleLimits | None = None
) -> MonomialIdeal:
    limits = limits or OracleLimits()
    _check_size(len(I1) * len(I2), limits, "intersection")
    return minimalize((lcm(a, b) for a in I1.generators for b in I2.generators), I1.s)


def contains(I: MonomialIdeal, M: MonomialLike) -> bool:
    return any(divides(g, M) for g in I.generators)


def symbolic_power_oracle(
    params: StarParams, limits: OracleLimits | None = None, threads: int = 1
) -> MonomialIdeal:
    """Intersection over all c-subsets J of (F_j : j in J)^m."""
    limits = limits or OracleLimits()
    if params.s > limits.max_s or params.m > limits.max_m:
        raise ResourceLimitError(
            f"{params} exceeds oracle caps s <= {limits.max_s}, m <= {limits.max_m}"
        )
    subsets = enumerate_subsets(params.s, params.c)
    components = fan_out(
        partial(ci_power_ideal, m=params.m, s=params.s), subsets, threads
    )
    result = components[0]
    for component in components[1:]:
        result = intersect(result, component, limits)
    debug("Oracle symbolic power {} has {} generators", params, len(result))
    return result


def symbolic_order(M: MonomialLike, params: StarParams) -> int:
    """Largest u with M in every (F_j : j in J)^u, |J| = c."""
    M = check_monomial(M, params.s)
    return min(sum(M[j - 1] for j in J) for J in combinations(range(1, params.s + 1), params.c))


def ordinary_power(
    I: MonomialIdeal, m: int, limits: OracleLimits | None = None
) -> MonomialIdeal:
    limits = limits or OracleLimits()
    gens = sorted(I.generators)
    if not gens:
        return I
    _check_size(math.comb(len(gens) + m - 1, m), limits, "ordinary power")
    products = set()
    for combo in combinations_with_replacement(gens, m):
        product = [0] * I.s
        for g in combo:
            for k, e in enumerate(g):
                product[k] += e
        products.add(tuple(product))
    return minimalize(products, I.s)


def colon_by_monomial(I: MonomialIdeal, M: MonomialLike) -> MonomialIdeal:
    """I : M, generated by g / gcd(g, M)."""
    M = check_monomial(M, I.s)
    return minimalize(
        (tuple(max(0, a - b) for a, b in zip(g, M, strict=True)) for g in I.generators),
        I.s,
    )


def linear_quotients_oracle(
    params: StarParams, limits: OracleLimits | None = None
) -> list[tuple[FMonomial, FormSubset]]:
    """For each generator in tau order, the forms generating the colon by it of
    every generator before it."""
    limits = limits or OracleLimits()
    ordered = sort_by_tau(symbolic_power_oracle(params, limits).generators, params)
    found = []
    for k, N in enumerate(ordered):
        colon = colon_by_monomial(MonomialIdeal(frozenset(ordered[:k]), params.s), N)
        forms = set()
        for g in colon.generators:
            if f_degree(g) != 1:
                raise NonlinearQuotientError(
                    f"colon by {N} at {params} has generator {g} of degree {f_degree(g)}"
                )
            forms.add(g.index(1) + 1)
        found.append((N, frozenset(forms)))
    return found


def set_size_oracle(
    params: StarParams, limits: OracleLimits | None = None
) -> list[tuple[FMonomial, int]]:
    return [(N, len(forms)) for N, forms in linear_quotients_oracle(params, limits)]


def sdefect_oracle(params: StarParams, limits: OracleLimits | None = None) -> int:
    """Generators of the m-th symbolic power that miss the m-th ordinary power."""
    limits = limits or OracleLimits()
    symbolic = symbolic_power_oracle(params, limits)
    ordinary = ordinary_power(symbolic_power_oracle(params.with_power(1), limits), params.m, limits)
    return sum(not contains(ordinary, g) for g in symbolic.generators)
