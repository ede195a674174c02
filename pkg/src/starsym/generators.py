"""Minimal generators of symbolic powers of star configurations.

A minimal generator of I_c^(m) is a product of nested squarefree layers whose
sizes are s - c + d_j for a partition [d_1, ..., d_t] of m with parts at most
c. Counting goes through the distinct parts B = {b_1 < ... < b_h} of that
partition: the multiplicities solve sum(b_k * x_k) = m in positive integers,
and the layer supports form a chain counted by a product of binomials.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from fractions import Fraction
from functools import lru_cache, partial
from itertools import combinations

from starsym import config
from starsym.core import StarParams, binomial, check_monomial, indicator, multiply, power
from starsym.constant import COUNT_CACHE_SIZE
from starsym.exc import (
    FormulaRangeError,
    InvalidRangeError,
    NotAGeneratorError,
    OutOfClosedFormRangeError,
    ResourceLimitError,
    WrongCodimensionError,
)
from starsym.normalform import layer_chain_key, normal_form, support
from starsym.types import DiophantineSolution, FMonomial, FormSubset, Partition
from starsym.util.logger import debug, info
from starsym.util.pool import fan_out


# Partitions


def _partitions(m: int, t: int, cap: int) -> Iterator[Partition]:
    """Partitions of m into exactly t parts, each at most cap, lex-descending."""
    if t == 0:
        if m == 0:
            yield ()
        return
    if m < t or m > t * cap:
        return
    for head in range(min(cap, m - t + 1), -(-m // t) - 1, -1):
        for tail in _partitions(m - head, t - 1, head):
            yield (head, *tail)


def iter_partitions(params: StarParams, t: int | None = None) -> Iterator[Partition]:
    if t is not None:
        params.check_length(t)
    for length in [t] if t is not None else params.lengths:
        yield from _partitions(params.m, length, params.c)


def enumerate_partitions(params: StarParams, t: int | None = None) -> list[Partition]:
    """P_{<=c}(m) in descending alex order: shorter first, lex-descending within
    a length."""
    return list(iter_partitions(params, t))


def _check_weights(B: Iterable[int]) -> tuple[int, ...]:
    weights = tuple(sorted(set(B)))
    if not weights:
        raise InvalidRangeError("the weight set B must be nonempty")
    if weights[0] < 1:
        raise InvalidRangeError(f"weights must be positive, got {weights}")
    return weights


# Diophantine solutions


def diophantine_solutions(
    B: Iterable[int], m: int, t: int | None = None
) -> list[DiophantineSolution]:
    """Positive solutions of sum(b_k * x_k) = m, x indexed by B in increasing
    order, optionally with sum(x_k) = t. Lexicographic order."""
    weights = _check_weights(B)
    found: list[DiophantineSolution] = []

    def descend(k: int, remaining: int, used: int, prefix: tuple[int, ...]):
        if k == len(weights):
            if remaining == 0 and (t is None or used == t):
                found.append(prefix)
            return
        tail_min = sum(weights[k + 1 :])
        for x in range(1, (remaining - tail_min) // weights[k] + 1):
            if t is not None and used + x + len(weights) - k - 1 > t:
                break
            descend(k + 1, remaining - weights[k] * x, used + x, (*prefix, x))

    descend(0, m, 0, ())
    return found


@lru_cache(maxsize=COUNT_CACHE_SIZE)
def _count(weights: tuple[int, ...], m: int, t: int | None) -> int:
    if not weights:
        return int(m == 0 and (t is None or t == 0))
    head, tail = weights[0], weights[1:]
    tail_min = sum(tail)
    total = 0
    for x in range(1, (m - tail_min) // head + 1):
        if t is not None and x + len(tail) > t:
            break
        total += _count(tail, m - head * x, None if t is None else t - x)
    return total


def count_diophantine(B: Iterable[int], m: int, t: int | None = None) -> int:
    """len(diophantine_solutions(B, m, t)) without listing the solutions."""
    return _count(_check_weights(B), m, t)


def chain_count(B: Iterable[int], params: StarParams) -> int:
    """Number of nested support chains with one layer of size s - c + b per b in B."""
    weights = _check_weights(B)
    s, c = params.s, params.c
    total = binomial(s, c - weights[-1])
    for lower, upper in zip(weights, weights[1:], strict=False):
        total *= binomial(s - c + upper, upper - lower)
    return total


def _weight_sets(c: int, m: int) -> list[tuple[int, ...]]:
    """Subsets B of {1..c} whose sum does not exceed m; only these admit
    positive solutions."""
    found: list[tuple[int, ...]] = []

    def grow(start: int, total: int, prefix: tuple[int, ...]):
        if prefix:
            found.append(prefix)
        for b in range(start, c + 1):
            if total + b > m:
                break
            grow(b + 1, total + b, (*prefix, b))

    grow(1, 0, ())
    return found


# Counting


def count_generators_in_degree(params: StarParams, t: int) -> int:
    """Generators of F-degree t(s - c) + m."""
    params.check_length(t)
    return sum(
        count_diophantine(B, params.m, t) * chain_count(B, params)
        for B in _weight_sets(params.c, params.m)
    )


def mu(params: StarParams) -> int:
    """Minimal number of generators of I_c^(m)."""
    return sum(
        count_diophantine(B, params.m) * chain_count(B, params)
        for B in _weight_sets(params.c, params.m)
    )


def sdefect(params: StarParams) -> int:
    """Minimal number of generators of I_c^(m) / I_c^m."""
    return mu(params) - binomial(params.s, params.c - 1)


def degree_histogram(params: StarParams) -> list[tuple[int, int, int]]:
    """(t, F-degree, count) for every admissible length t."""
    return [
        (t, params.generator_degree(t), count_generators_in_degree(params, t))
        for t in params.lengths
    ]


def count_generators_closed(params: StarParams, t: int) -> int:
    """Closed count of generators of F-degree t(s - c) + m, valid for 2t >= m."""
    params.check_length(t)
    s, c, m = params.s, params.c, params.m
    if 2 * t > m:
        return binomial(s, c - 1) * binomial(m - t + c - 2, m - t)
    if 2 * t == m:
        return binomial(s, c - 2) + binomial(s, c - 1) * (
            binomial(c - 2 + t, t) - (c - 1)
        )
    raise OutOfClosedFormRangeError(
        f"no closed count for t={t} < m/2 at {params}; use count_generators_in_degree"
    )


# Enumeration


def _chains(s: int, sizes: tuple[int, ...]) -> Iterator[tuple[FormSubset, ...]]:
    """Nested chains of subsets of {1..s} with the given strictly decreasing sizes."""

    def extend(parent: tuple[int, ...], k: int):
        if k == len(sizes):
            yield ()
            return
        for combo in combinations(parent, sizes[k]):
            for tail in extend(combo, k + 1):
                yield (frozenset(combo), *tail)

    yield from extend(tuple(range(1, s + 1)), 0)


def _generators_for_partition(p: Partition, params: StarParams) -> list[FMonomial]:
    distinct = tuple(sorted(set(p), reverse=True))
    sizes = tuple(params.free + d for d in distinct)
    gens = []
    for chain in _chains(params.s, sizes):
        support_of = dict(zip(distinct, chain, strict=True))
        layers = tuple(support_of[d] for d in p)
        gens.append((layer_chain_key(layers, params.s), layers))
    gens.sort(key=lambda item: item[0])
    s = params.s
    return [tuple(sum(j in L for L in layers) for j in range(1, s + 1)) for _, layers in gens]


def enumerate_generators(
    params: StarParams, limit: int | None = None, threads: int | None = None
) -> list[FMonomial]:
    """All minimal generators of I_c^(m), listed from the tau-largest down."""
    limit = config.LIMIT if limit is None else limit
    threads = config.THREADS if threads is None else threads
    total = mu(params)
    if total > limit:
        raise ResourceLimitError(
            f"{params} has {total} generators, above the enumeration limit {limit}"
        )
    partitions = enumerate_partitions(params)
    debug("Enumerating {} generators over {} partitions for {}", total, len(partitions), params)
    chunks = fan_out(partial(_generators_for_partition, params=params), partitions, threads)
    gens = [g for chunk in chunks for g in chunk]
    info("Enumerated {} generators for {}", len(gens), params)
    return gens


def enumerate_module_generators(
    params: StarParams, limit: int | None = None, threads: int | None = None
) -> list[FMonomial]:
    """Generators of I_c^(m) / I_c^m: those with at least s + 2 - c forms in the support."""
    floor = params.s + 2 - params.c
    return [
        g
        for g in enumerate_generators(params, limit=limit, threads=threads)
        if len(support(g)) >= floor
    ]


def partition_of(M: Iterable[int], params: StarParams) -> Partition:
    """d_j = |S_j| - (s - c) over the normal-form layers of a generator."""
    M = check_monomial(M, params.s)
    if not any(M):
        raise NotAGeneratorError("the unit monomial is not a generator")
    p = tuple(size - params.free for size in normal_form(M).sizes)
    if p[-1] < 1:
        raise NotAGeneratorError(
            f"{M} has a layer with at most s - c = {params.free} forms"
        )
    if sum(p) != params.m:
        raise NotAGeneratorError(f"{M} has symbolic degree {sum(p)}, not {params.m}")
    return p


# Closed formulas


def closed_c2(params: StarParams) -> tuple[int, int]:
    """(mu, sdefect) in codimension two."""
    if params.c != 2:
        raise WrongCodimensionError(f"closed_c2 needs c = 2, got {params}")
    s, m = params.s, params.m
    if m % 2:
        return s * (1 + m // 2), s * (m // 2)
    return 1 + m * s // 2, 1 + s * (m // 2 - 1)


def closed_c3(params: StarParams) -> tuple[int, int]:
    """(mu, sdefect) in codimension three, one quadratic per residue of m mod 6."""
    if params.c != 3:
        raise WrongCodimensionError(f"closed_c3 needs c = 3, got {params}")
    s, m = params.s, Fraction(params.m)
    pairs = binomial(s, 2)
    match params.m % 6:
        case 0:
            coeff, linear, const = m**2 / 6 + m / 3, s * m / 6, 1
        case 1:
            coeff, linear, const = (m - 1) ** 2 / 6 + 2 * (m - 1) / 3 + 1, s * (m - 1) / 6, 0
        case 2:
            coeff, linear, const = (m - 2) ** 2 / 6 + m - 1, s * (1 + (m - 2) / 6), 0
        case 3:
            coeff, linear, const = (m - 3) ** 2 / 6 + 4 * m / 3 - 1, s * (m - 3) / 6, 1
        case 4:
            coeff, linear, const = (m - 4) ** 2 / 6 + 5 * (m - 1) / 3 - 1, s * (1 + (m - 4) / 6), 0
        case _:
            coeff, linear, const = (m - 5) ** 2 / 6 + 2 * m - 4, s * (m + 1) / 6, 0
    mu_value = pairs * coeff + linear + const
    defect = mu_value - pairs
    if mu_value.denominator != 1 or defect.denominator != 1:
        raise FormulaRangeError(f"closed_c3 gave non-integral mu={mu_value} at {params}")
    return int(mu_value), int(defect)


def closed_small_m(params: StarParams) -> tuple[int, int]:
    """(mu, sdefect) for m = 2, 3, 4."""
    s, c, m = params.s, params.c, params.m
    match m:
        case 2:
            mu_value = binomial(s + 1, c - 1)
        case 3:
            mu_value = (
                binomial(s, c - 1)
                + (s - c + 2) * binomial(s, c - 2)
                + binomial(s, c - 3)
            )
        case 4:
            mu_value = (
                binomial(s, c - 1)
                + binomial(s, c - 2) * (s - c + 3)
                + binomial(s, c - 3) * binomial(s - c + 3, 2)
                + binomial(s, c - 4)
            )
        case _:
            raise InvalidRangeError(f"closed_small_m covers 2 <= m <= 4, got {params}")
    return mu_value, mu_value - binomial(s, c - 1)


def closed_generator_set(params: StarParams) -> frozenset[FMonomial]:
    """Explicit generating set for c = 2 or c = 3 as products of G = F_1...F_s,
    G_i = G / F_i and G_ij = G / (F_i F_j)."""
    s, c, m = params.s, params.c, params.m
    full = frozenset(range(1, s + 1))
    G = indicator(full, s)
    found: set[FMonomial] = set()
    if c == 2:
        for j in range(m // 2 + 1):
            for i in full:
                found.add(multiply(power(G, j), power(indicator(full - {i}, s), m - 2 * j)))
        return frozenset(found)
    if c != 3:
        raise WrongCodimensionError(f"explicit generator sets cover c in (2, 3), got {params}")
    for a in range(m // 3 + 1):
        for b in range((m - 3 * a) // 2 + 1):
            e = m - 3 * a - 2 * b
            base = power(G, a)
            if b and e:
                for pair in combinations(sorted(full), 2):
                    for k in pair:
                        found.add(
                            multiply(
                                base,
                                multiply(
                                    power(indicator(full - {k}, s), b),
                                    power(indicator(full - set(pair), s), e),
                                ),
                            )
                        )
            elif b:
                for k in full:
                    found.add(multiply(base, power(indicator(full - {k}, s), b)))
            elif e:
                for pair in combinations(sorted(full), 2):
                    found.add(multiply(base, power(indicator(full - set(pair), s), e)))
            else:
                found.add(base)
    return frozenset(found)
