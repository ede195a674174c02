"""Cross-check every formula against the brute-force oracle on a grid of cells."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import partial
from itertools import product
from typing import Any

from starsym import betti, generators, normalform, oracle, order
from starsym.config import OracleLimits
from starsym.constant import VERIFY_MONOMIAL_BOUND, VERIFY_SAMPLE_CAP
from starsym.core import StarParams, f_degree
from starsym.enum import Suite
from starsym.exc import (
    ConfigurationError,
    NonlinearQuotientError,
    ResourceLimitError,
    VerificationError,
)
from starsym.types import FMonomial
from starsym.util.logger import debug, info
from starsym.util.pool import fan_out


@dataclass(frozen=True)
class Mismatch:
    params: StarParams
    suite: Suite
    monomial: FMonomial | None
    expected: Any
    actual: Any

    def __str__(self) -> str:
        where = f" at monomial {self.monomial}" if self.monomial is not None else ""
        return (
            f"{self.suite} mismatch for {self.params}{where}: "
            f"expected {self.expected}, got {self.actual}"
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.model_dump(),
            "suite": str(self.suite),
            "monomial": list(self.monomial) if self.monomial is not None else None,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


@dataclass
class CellResult:
    params: StarParams
    suites: list[Suite] = field(default_factory=list)
    mismatch: Mismatch | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


@dataclass
class VerificationReport:
    cells: list[CellResult]

    @property
    def ok(self) -> bool:
        return all(cell.ok for cell in self.cells)

    @property
    def first_mismatch(self) -> Mismatch | None:
        return next((cell.mismatch for cell in self.cells if cell.mismatch), None)

    def raise_for_mismatch(self) -> None:
        if mismatch := self.first_mismatch:
            raise VerificationError(mismatch)

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "cells": [
                {
                    "params": cell.params.model_dump(),
                    "suites": [str(suite) for suite in cell.suites],
                    "ok": cell.ok,
                }
                for cell in self.cells
            ],
            "first_mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None,
        }


def iter_cells(max_s: int, max_m: int) -> list[StarParams]:
    return [
        StarParams(s=s, c=c, m=m)
        for s in range(2, max_s + 1)
        for c in range(1, s)
        for m in range(1, max_m + 1)
    ]


def _monomials(params: StarParams, seed: int | None) -> list[FMonomial]:
    space = list(product(range(VERIFY_MONOMIAL_BOUND + 1), repeat=params.s))
    if seed is not None and len(space) > VERIFY_SAMPLE_CAP:
        return random.Random(seed).sample(space, VERIFY_SAMPLE_CAP)
    return space


def _check_generators(params: StarParams, limits: OracleLimits) -> Mismatch | None:
    expected = oracle.symbolic_power_oracle(params, limits).generators
    actual = frozenset(generators.enumerate_generators(params))
    if expected == actual:
        return None
    witness = min(expected ^ actual)
    return Mismatch(params, Suite.GENERATORS, witness, witness in expected, witness in actual)


def _check_sdeg(params: StarParams, seed: int | None) -> Mismatch | None:
    for M in _monomials(params, seed):
        expected = oracle.symbolic_order(M, params)
        actual = normalform.sdeg(M, params)
        if expected != actual:
            return Mismatch(params, Suite.SDEG, M, expected, actual)
    return None


def _check_set_sizes(
    params: StarParams, quotients: list[tuple[FMonomial, frozenset[int]]]
) -> Mismatch | None:
    for N, forms in quotients:
        elements = order.set_elements(N, params)
        if elements != forms:
            return Mismatch(params, Suite.SET_SIZES, N, sorted(forms), sorted(elements))
        size = order.set_size(N, params)
        if size != len(forms):
            return Mismatch(params, Suite.SET_SIZES, N, len(forms), size)
    return None


def _check_sdefect(params: StarParams, limits: OracleLimits) -> Mismatch | None:
    expected = oracle.sdefect_oracle(params, limits)
    actual = generators.sdefect(params)
    if expected != actual:
        return Mismatch(params, Suite.SDEFECT, None, expected, actual)
    return None


def _check_betti(
    params: StarParams, quotients: list[tuple[FMonomial, frozenset[int]]]
) -> Mismatch | None:
    expected = betti.betti_from_set_sizes(
        ((f_degree(N), len(forms)) for N, forms in quotients), params
    )
    actual = betti.betti_table(params, threads=1)
    if expected.entries != actual.entries:
        keys = sorted(set(expected.entries) | set(actual.entries))
        key = next(k for k in keys if expected[k] != actual[k])
        return Mismatch(params, Suite.BETTI, None, (key, expected[key]), (key, actual[key]))
    return None


def verify_cell(
    params: StarParams, limits: OracleLimits, seed: int | None = None
) -> CellResult:
    result = CellResult(params)
    quotients: list[tuple[FMonomial, frozenset[int]]] = []

    def check_quotients() -> Mismatch | None:
        try:
            quotients.extend(oracle.linear_quotients_oracle(params, limits))
        except NonlinearQuotientError as e:
            return Mismatch(params, Suite.SET_SIZES, None, "degree-one colon", str(e))
        return _check_set_sizes(params, quotients)

    checks = [(Suite.GENERATORS, lambda: _check_generators(params, limits))]
    # sdeg does not depend on m, so it runs once per (s, c)
    if params.m == 1:
        checks.append((Suite.SDEG, lambda: _check_sdeg(params, seed)))
    checks += [
        (Suite.SET_SIZES, check_quotients),
        (Suite.SDEFECT, lambda: _check_sdefect(params, limits)),
        (Suite.BETTI, lambda: _check_betti(params, quotients)),
    ]
    for suite, check in checks:
        result.suites.append(suite)
        result.mismatch = check()
        if result.mismatch:
            break
    debug("Cell {} ran {} ok={}", params, [str(s) for s in result.suites], result.ok)
    return result


def run_verification(
    max_s: int,
    max_m: int,
    seed: int | None = None,
    limits: OracleLimits | None = None,
    threads: int = 1,
) -> VerificationReport:
    limits = limits or OracleLimits()
    if max_s < 2 or max_m < 1:
        raise ConfigurationError(f"need max_s >= 2 and max_m >= 1, got {max_s}, {max_m}")
    if max_s > limits.max_s or max_m > limits.max_m:
        raise ResourceLimitError(
            f"max_s={max_s}, max_m={max_m} exceed oracle caps {limits.max_s}, {limits.max_m}"
        )
    cells = iter_cells(max_s, max_m)
    results = fan_out(partial(verify_cell, limits=limits, seed=seed), cells, threads)
    report = VerificationReport(results)
    info("Verified {} cells, ok={}", len(results), report.ok)
    return report
