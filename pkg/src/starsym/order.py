from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from starsym.core import StarParams, check_monomial, f_degree, indicator
from starsym.enum import Ordering, SetCase
from starsym.exc import (
    DegreeMismatchError,
    EmptyMonomialError,
    InvalidMonomialError,
    LengthOneError,
    MismatchedWeightError,
    PartitionMismatchError,
    SupportOutsideError,
)
from starsym.generators import enumerate_partitions, partition_of
from starsym.normalform import layer_chain_key, normal_form, support
from starsym.types import FMonomial, FormSubset, LayerChain, MonomialLike, Partition


@dataclass(frozen=True)
class TauKey:
    partition: Partition
    layer_chain: LayerChain
    s: int

    def sort_key(self) -> tuple:
        """Ascending order of this key is descending tau order."""
        return (
            len(self.partition),
            tuple(-d for d in self.partition),
            layer_chain_key(self.layer_chain, self.s),
        )


def alex_compare(p: Sequence[int], q: Sequence[int]) -> Ordering:
    """Anti-graded lex: the shorter partition is larger, lex decides equal lengths."""
    if sum(p) != sum(q):
        raise MismatchedWeightError(f"{list(p)} and {list(q)} partition different integers")
    if len(p) != len(q):
        return Ordering.GREATER if len(p) < len(q) else Ordering.LESS
    return Ordering.of(tuple(p), tuple(q))


def revlex_compare(A: MonomialLike, B: MonomialLike) -> Ordering:
    """Degree revlex with F_1 > ... > F_s on monomials of equal degree."""
    A, B = check_monomial(A), check_monomial(B)
    if len(A) != len(B):
        raise InvalidMonomialError(f"{A} and {B} live in different numbers of forms")
    if f_degree(A) != f_degree(B):
        raise DegreeMismatchError(f"{A} and {B} have different degrees")
    for a, b in zip(reversed(A), reversed(B), strict=True):
        if a != b:
            return Ordering.GREATER if a < b else Ordering.LESS
    return Ordering.EQUAL


def ggrevlex_compare(M: MonomialLike, N: MonomialLike, params: StarParams) -> Ordering:
    """Compare normal forms layer by layer; the first differing layer decides by revlex."""
    M, N = check_monomial(M, params.s), check_monomial(N, params.s)
    left, right = normal_form(M), normal_form(N)
    if left.sizes != right.sizes:
        raise PartitionMismatchError(
            f"layer sizes {left.sizes} and {right.sizes} differ for {M} and {N}"
        )
    for a, b in zip(left.layers, right.layers, strict=True):
        if a != b:
            return revlex_compare(indicator(a, params.s), indicator(b, params.s))
    return Ordering.EQUAL


def tau_compare(M: MonomialLike, N: MonomialLike, params: StarParams) -> Ordering:
    order = alex_compare(partition_of(M, params), partition_of(N, params))
    if order is not Ordering.EQUAL:
        return order
    return ggrevlex_compare(M, N, params)


def tau_key(M: MonomialLike, params: StarParams) -> TauKey:
    p = partition_of(M, params)
    return TauKey(partition=p, layer_chain=normal_form(M).layers, s=params.s)


def sort_by_tau(gens: Iterable[MonomialLike], params: StarParams) -> list[FMonomial]:
    """Generators from the tau-largest down."""
    return sorted(
        (tuple(g) for g in gens), key=lambda g: tau_key(g, params).sort_key()
    )


def index_of_overlap(p: Sequence[int]) -> int:
    """Position of the last strict descent among d_1..d_{t-1}, with d_0 infinite."""
    t = len(p)
    if t < 2:
        raise LengthOneError(f"{list(p)} has length one")
    for j in range(t - 1, 1, -1):
        if p[j - 1] < p[j - 2]:
            return j
    return 1


def overlap_by_definition(p: Sequence[int], params: StarParams) -> int | None:
    """Largest j such that some alex-larger partition agrees with p before j.

    None when p is the alex maximum.
    """
    p = tuple(p)
    larger = [
        b for b in enumerate_partitions(params) if alex_compare(b, p) is Ordering.GREATER
    ]
    if not larger:
        return None
    return max(
        j for j in range(1, len(p) + 1) if any(b[: j - 1] == p[: j - 1] for b in larger)
    )


def is_maximal_partition(p: Sequence[int], params: StarParams) -> bool:
    q, r = params.quotient_remainder()
    return tuple(p) == (params.c,) * q + (r,)


def _position_of_last(B: Iterable[int], subset: FormSubset) -> int:
    ordered = sorted(B)
    if not subset:
        raise EmptyMonomialError("the unit monomial has no last form")
    if not subset <= frozenset(ordered):
        raise SupportOutsideError(f"{sorted(subset)} is not inside {ordered}")
    return ordered.index(max(subset)) + 1


def m_index(B: Iterable[int], M: MonomialLike) -> int:
    """Position, within B listed increasingly, of the highest-index form dividing M."""
    return _position_of_last(B, support(M))


def set_case(M: MonomialLike, params: StarParams) -> tuple[SetCase, Partition, int | None]:
    """Which colon-quotient branch M falls in, with its partition and index of overlap."""
    p = partition_of(M, params)
    if is_maximal_partition(p, params):
        return SetCase.MAXIMAL, p, None
    i0 = index_of_overlap(p)
    if p[-1] == p[i0 - 1]:
        return SetCase.FLAT, p, i0
    return SetCase.SPLIT, p, i0


def set_elements(M: MonomialLike, params: StarParams) -> FormSubset:
    """Forms generating the colon of all tau-earlier generators by M."""
    M = check_monomial(M, params.s)
    case, p, i0 = set_case(M, params)
    layers = normal_form(M).layers
    last = layers[-1]
    if case is SetCase.MAXIMAL:
        return frozenset(j for j in range(1, max(last)) if j not in last)
    anchor = layers[i0 - 1]
    outside = frozenset(range(1, params.s + 1)) - anchor
    if case is SetCase.FLAT:
        return outside
    bound = _position_of_last(anchor, last)
    below = frozenset(
        form
        for position, form in enumerate(sorted(anchor), start=1)
        if position < bound and form not in last
    )
    return outside | below


def set_size(M: MonomialLike, params: StarParams) -> int:
    M = check_monomial(M, params.s)
    case, p, i0 = set_case(M, params)
    s, c = params.s, params.c
    layers = normal_form(M).layers
    if case is SetCase.MAXIMAL:
        _, r = params.quotient_remainder()
        return max(layers[-1]) - s + c - r
    d_anchor = p[i0 - 1]
    if case is SetCase.FLAT:
        return c - d_anchor
    bound = _position_of_last(layers[i0 - 1], layers[-1])
    return c - d_anchor + bound - (s - c + p[-1])
