from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from starsym.constant import FORM_PREFIX
from starsym.core import StarParams, check_monomial
from starsym.exc import (
    EmptyLayerError,
    EmptyMonomialError,
    InvalidMonomialError,
    NotNestedError,
)
from starsym.types import FMonomial, FormSubset, LayerChain, MonomialLike


@dataclass(frozen=True)
class NormalForm:
    """Layered factorization M = M^(1) * ... * M^(t) into squarefree factors
    with supports S_1 ⊇ S_2 ⊇ ... ⊇ S_t."""

    layers: LayerChain
    s: int

    @property
    def length(self) -> int:
        return len(self.layers)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def to_monomial(self) -> FMonomial:
        return from_layers(self.layers, self.s)

    def __str__(self) -> str:
        return format_layers(self.layers)


def format_layers(layers: Sequence[FormSubset]) -> str:
    """Render layers as "(F1 F2 F3)(F1 F2)"."""
    return "".join(
        "(" + " ".join(f"{FORM_PREFIX}{j}" for j in sorted(layer)) + ")"
        for layer in layers
    )


def support(M: MonomialLike) -> FormSubset:
    return frozenset(j for j, e in enumerate(M, start=1) if e > 0)


def normal_form(M: MonomialLike) -> NormalForm:
    """Peel off the support of M one layer at a time until nothing is left."""
    rest = list(check_monomial(M))
    if not any(rest):
        raise EmptyMonomialError("the unit monomial has no normal form")
    layers = []
    while any(rest):
        layer = support(rest)
        layers.append(layer)
        rest = [e - 1 if e else 0 for e in rest]
    return NormalForm(layers=tuple(layers), s=len(rest))


def from_layers(layers: Sequence[Iterable[int]], s: int) -> FMonomial:
    if not layers:
        raise EmptyMonomialError("no layers given")
    chain = [frozenset(layer) for layer in layers]
    for k, layer in enumerate(chain):
        if not layer:
            raise EmptyLayerError(f"layer {k + 1} is empty")
        if not layer <= frozenset(range(1, s + 1)):
            raise InvalidMonomialError(
                f"layer {k + 1} {sorted(layer)} has indices outside 1..{s}"
            )
        if k and not layer <= chain[k - 1]:
            raise NotNestedError(
                f"layer {k + 1} {sorted(layer)} is not inside layer {k} {sorted(chain[k - 1])}"
            )
    return tuple(sum(j in layer for layer in chain) for j in range(1, s + 1))


def normal_length(M: MonomialLike) -> int:
    """Number of layers in the normal form, i.e. the largest exponent."""
    M = check_monomial(M)
    if not any(M):
        raise EmptyMonomialError("the unit monomial has no normal form")
    return max(M)


def sdeg(M: MonomialLike, params: StarParams) -> int:
    """Symbolic degree: the largest u with M in the u-th symbolic power.

    Each layer k counts the forms with exponent at least k and contributes
    max(0, c - s + |S_k|).
    """
    M = check_monomial(M, params.s)
    total = 0
    for k in range(1, max(M, default=0) + 1):
        total += max(0, params.c - params.s + sum(e >= k for e in M))
    return total


def layer_chain_key(layers: Sequence[FormSubset], s: int) -> tuple[tuple[int, ...], ...]:
    """Ascending sort key that lists layer chains from revlex-largest to smallest.

    Layers are compared position by position; for two squarefree layers of the
    same size the revlex-larger one lacks the form of highest index where they
    differ, which is what reading the indicator backwards puts first.
    """
    return tuple(tuple(int(j in layer) for j in range(s, 0, -1)) for layer in layers)
