"""Graded Betti numbers of R / I_c^(m).

Entries are keyed by (i, j) with j the internal degree in the standard grading,
where every form has degree delta. A generator of F-degree d with k colon forms
contributes C(k, i - 1) to (i, delta * (d + i - 1)). Every nonzero entry with
i >= 1 therefore lies on a strand j = delta * (t(s - c) + m + i - 1).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import partial
from itertools import islice
from typing import Any

from starsym import config
from starsym.core import StarParams, binomial
from starsym.enum import SetCase
from starsym.exc import (
    InvalidRangeError,
    OutOfClosedFormRangeError,
    ResourceLimitError,
    UnsupportedRemainderError,
    WrongCaseError,
)
from starsym.generators import iter_partitions
from starsym.order import index_of_overlap, is_maximal_partition
from starsym.types import Partition
from starsym.util.logger import debug, info
from starsym.util.pool import fan_out


@dataclass
class BettiTable:
    params: StarParams
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def add(self, i: int, j: int, value: int) -> None:
        if value:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + value

    @property
    def projdim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_row(self) -> int:
        """Largest j - i over nonzero entries."""
        return max((j - i for i, j in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def degree(self, t: int, i: int) -> int:
        """Internal degree of column i on the strand of length-t generators."""
        return self.params.delta * (self.params.generator_degree(t) + i - 1)

    def strand(self, t: int) -> tuple[int, ...]:
        return tuple(self[(i, self.degree(t, i))] for i in range(1, self.params.c + 1))

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.model_dump(),
            "entries": [
                {"i": i, "j": j, "beta": str(v)} for (i, j), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BettiTable:
        table = cls(params=StarParams(**data["params"]))
        for entry in data["entries"]:
            table.add(int(entry["i"]), int(entry["j"]), int(entry["beta"]))
        return table


@dataclass(frozen=True)
class PartitionContribution:
    """What the generators of one partition add to their strand, by column."""

    partition: Partition
    case: SetCase
    values: tuple[int, ...]


def betti_from_set_sizes(gens: Iterable[tuple[int, int]], params: StarParams) -> BettiTable:
    """Assemble the table from (F-degree, colon size) pairs of a linear-quotient order."""
    table = BettiTable(params=params)
    table.add(0, 0, 1)
    for degree, size in gens:
        for i in range(1, size + 2):
            table.add(i, params.delta * (degree + i - 1), binomial(size, i - 1))
    return table


def chain_binomials(p: Sequence[int], upto: int, params: StarParams) -> int:
    """Number of nested supports for the first `upto` layers of partition p."""
    s, free = params.s, params.free
    total = binomial(s, free + p[0])
    for k in range(1, upto):
        total *= binomial(free + p[k - 1], free + p[k])
    return total


def a_coefficient(p: Sequence[int], i: int, params: StarParams) -> int:
    """Colon-size weighted count of last-layer choices for a partition with d_t < d_{i0}."""
    if len(p) < 2 or is_maximal_partition(p, params):
        raise WrongCaseError(f"{list(p)} is maximal or has length one")
    i0 = index_of_overlap(p)
    d_anchor, d_last = p[i0 - 1], p[-1]
    if d_last == d_anchor:
        raise WrongCaseError(f"{list(p)} has d_t = d_i0 = {d_last}")
    if not 1 <= i <= params.c:
        raise InvalidRangeError(f"column i={i} outside 1..{params.c}")
    s, c = params.s, params.c
    return sum(
        binomial(c - d_anchor + j, i - 1) * binomial(s - c + d_last + j - 1, j)
        for j in range(d_anchor - d_last + 1)
    )


def _maximal_column(params: StarParams, i: int) -> int:
    s, c = params.s, params.c
    _, r = params.quotient_remainder()
    return binomial(s, c - r + 1 - i) * binomial(s - c + r + i - 2, i - 1)


def _contribution(p: Partition, params: StarParams) -> PartitionContribution:
    columns = range(1, params.c + 1)
    if is_maximal_partition(p, params):
        values = tuple(_maximal_column(params, i) for i in columns)
        return PartitionContribution(p, SetCase.MAXIMAL, values)
    i0 = index_of_overlap(p)
    chains = chain_binomials(p, i0, params)
    if p[-1] == p[i0 - 1]:
        values = tuple(chains * binomial(params.c - p[i0 - 1], i - 1) for i in columns)
        return PartitionContribution(p, SetCase.FLAT, values)
    values = tuple(chains * a_coefficient(p, i, params) for i in columns)
    return PartitionContribution(p, SetCase.SPLIT, values)


def partition_contributions(params: StarParams, t: int) -> list[PartitionContribution]:
    return [_contribution(p, params) for p in iter_partitions(params, t)]


def betti_table(
    params: StarParams,
    partition_limit: int | None = None,
    threads: int | None = None,
) -> BettiTable:
    """The table straight from partitions, without listing generators."""
    partition_limit = config.PARTITION_LIMIT if partition_limit is None else partition_limit
    threads = config.THREADS if threads is None else threads
    partitions = list(islice(iter_partitions(params), partition_limit + 1))
    if len(partitions) > partition_limit:
        raise ResourceLimitError(
            f"{params} has more than {partition_limit} partitions"
        )
    debug("Assembling Betti table of {} from {} partitions", params, len(partitions))
    contributions = fan_out(partial(_contribution, params=params), partitions, threads)
    table = BettiTable(params=params)
    table.add(0, 0, 1)
    for contribution in contributions:
        t = len(contribution.partition)
        for i, value in enumerate(contribution.values, start=1):
            table.add(i, table.degree(t, i), value)
    info("Betti table of {} has {} nonzero entries", params, len(table.entries))
    return table


def strand_closed(params: StarParams, t: int, i: int) -> int:
    """Closed value of beta_i on the strand of length-t generators, for 2t >= m."""
    s, c, m = params.s, params.c, params.m
    if c < 2 or m < 2:
        raise OutOfClosedFormRangeError(f"strand formulas need c >= 2 and m > 1, got {params}")
    params.check_length(t)
    if not 1 <= i <= c:
        raise InvalidRangeError(f"column i={i} outside 1..{c}")
    half = -(-m // 2)
    if t < half:
        raise OutOfClosedFormRangeError(f"no closed strand for t={t} < {half} at {params}")
    generic = binomial(c - 1, i - 1) * binomial(c - 2 + m - t, c - 2) * binomial(s, c - 1)
    if t > half:
        return generic
    if m % 2:
        return generic - binomial(c - 2, i - 2) * binomial(s, c - 2)
    if m == 2:
        return binomial(s, c - 1 - i) * binomial(s - c + i, i - 1)
    if m == 4:
        return binomial(c - 2, i - 1) * binomial(s, c - 2) + binomial(s, c - 3) * (
            binomial(c - 3, i - 1)
            + binomial(c - 2, i - 1) * (s - c + 1)
            + binomial(c - 1, i - 1) * binomial(s - c + 2, 2)
        )
    return (
        binomial(c - 2, i - 1) * binomial(s, c - 2)
        + binomial(c - 1, i - 1) * binomial(s, c - 1) * (binomial(c - 2 + t, t) - (c - 1))
        - binomial(c - 2, i - 2) * binomial(s, c - 3) * (s - c + 3)
    )


def top_strand_closed(params: StarParams) -> list[tuple[int, int]]:
    """(i, beta_i) on the first strand, t = ceil(m / c), for every column 1..c."""
    s, c, m = params.s, params.c, params.m
    if m <= c:
        # t = 1; at m = 1 this is the linear resolution of I_c itself
        values = [
            binomial(s, c - m - i + 1) * binomial(s - c + m + i - 2, i - 1)
            for i in range(1, c + 1)
        ]
    else:
        q, r = divmod(m, c)
        extra = s if q >= 2 else 0
        if r == 0:
            values = [1]
        elif r == c - 1:
            values = [s, s - 1]
        elif r == c - 2:
            values = [binomial(s, 2) + s, s * (s - 1), binomial(s - 1, 2)]
        elif r == c - 3:
            values = [
                binomial(s, 3) + s * (s - 1) + extra,
                binomial(s, 2) * (s - 3) + (2 * s * s - 3 * s) + extra,
                s * binomial(s - 2, 2) + (s * s - 2 * s),
                binomial(s - 1, 3),
            ]
        else:
            raise UnsupportedRemainderError(
                f"no closed top strand for remainder r={r} at {params}; use betti_table"
            )
    values += [0] * (c - len(values))
    return list(enumerate(values[:c], start=1))


def closed_betti_table(params: StarParams) -> BettiTable:
    """The table from the closed strand formulas alone.

    Strands with t >= ceil(m / 2) come from strand_closed and the first strand
    from top_strand_closed. Any strand strictly between them has no closed form,
    so such parameters raise OutOfClosedFormRangeError; c = 2 and c <= 4 with
    m <= 6 are always covered.
    """
    c, m = params.c, params.m
    half = -(-m // 2)
    table = BettiTable(params=params)
    table.add(0, 0, 1)
    for t in params.lengths:
        if c >= 2 and m >= 2 and t >= half:
            values = [strand_closed(params, t, i) for i in range(1, c + 1)]
        elif t == params.min_length:
            values = [v for _, v in top_strand_closed(params)]
        else:
            raise OutOfClosedFormRangeError(
                f"no closed strand for t={t} at {params}; use betti_table"
            )
        for i, value in enumerate(values, start=1):
            table.add(i, table.degree(t, i), value)
    debug("Closed Betti table of {} has {} nonzero entries", params, len(table.entries))
    return table


def regularity(params: StarParams) -> int:
    s, c, m, delta = params.s, params.c, params.m, params.delta
    return delta * m * (s - c + 1) + (c - 1) * (delta - 1) - 1


def strand_count(params: StarParams) -> int:
    return params.m - params.min_length + 1


def is_koszul_stranded(table: BettiTable) -> bool:
    params = table.params
    for i, j in table.entries:
        if i == 0:
            if j != 0:
                return False
            continue
        if not 1 <= i <= params.c:
            return False
        if not any(j == table.degree(t, i) for t in params.lengths):
            return False
    return True
