"""Text, JSON and CSV renderings of command results."""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from typing import Any

from starsym.betti import BettiTable
from starsym.constant import SCHEMA
from starsym.core import StarParams, f_degree
from starsym.enum import OutputFormat
from starsym.normalform import normal_form
from starsym.types import FMonomial
from starsym.util.orjson import to_json
from starsym.verify import VerificationReport


def betti_text(table: BettiTable) -> str:
    """Macaulay2 layout: columns are i, rows are j - i, zeros print as '.'."""
    columns = range(table.projdim + 1)
    rows = range(table.max_row + 1)
    cell = {(i, j - i): str(v) for (i, j), v in table.entries.items()}
    totals = [str(table.total(i)) for i in columns]
    widths = [
        max([len(str(i)), len(totals[i])] + [len(cell.get((i, r), ".")) for r in rows])
        for i in columns
    ]
    label_width = max(6, len(f"{table.max_row}:"))

    def line(label: str, values: Sequence[str]) -> str:
        body = " ".join(f"{v:>{w}}" for v, w in zip(values, widths, strict=True))
        return f"{label:>{label_width}} {body}"

    lines = [line("", [str(i) for i in columns]), line("total:", totals)]
    lines += [line(f"{r}:", [cell.get((i, r), ".") for i in columns]) for r in rows]
    return "\n".join(lines) + "\n"


def _document(kind: str, params: StarParams | None, **payload: Any) -> bytes:
    doc: dict[str, Any] = {"schema": SCHEMA, "kind": kind}
    if params is not None:
        doc["params"] = params.model_dump()
    doc.update(payload)
    return to_json(doc, indent=True) + b"\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _exponents(M: FMonomial) -> str:
    return "(" + ", ".join(str(e) for e in M) + ")"


def generators_output(
    gens: Sequence[FMonomial], params: StarParams, module: bool, fmt: OutputFormat
) -> str:
    records = [(M, str(normal_form(M)), params.delta * f_degree(M)) for M in gens]
    match fmt:
        case OutputFormat.JSON:
            return _document(
                "generators",
                params,
                module=module,
                count=str(len(gens)),
                generators=[
                    {"exponents": list(M), "normal_form": nf, "degree": degree}
                    for M, nf, degree in records
                ],
            ).decode("utf-8")
        case OutputFormat.CSV:
            return _csv(
                ["exponents", "normal_form", "degree"],
                [(" ".join(map(str, M)), nf, degree) for M, nf, degree in records],
            )
        case _:
            return "".join(f"{_exponents(M)}  {nf}\n" for M, nf, _ in records)


def invariants_output(
    params: StarParams,
    mu: int,
    sdefect: int,
    regularity: int,
    degrees: Sequence[tuple[int, int, int]],
    fmt: OutputFormat,
) -> str:
    match fmt:
        case OutputFormat.JSON:
            return _document(
                "invariants",
                params,
                mu=str(mu),
                sdefect=str(sdefect),
                regularity=regularity,
                degrees=[
                    {"t": t, "degree": params.delta * d, "count": str(n)}
                    for t, d, n in degrees
                ],
            ).decode("utf-8")
        case OutputFormat.CSV:
            rows: list[tuple[Any, ...]] = [
                ("mu", "", "", mu),
                ("sdefect", "", "", sdefect),
                ("regularity", "", "", regularity),
            ]
            rows += [("count", t, params.delta * d, n) for t, d, n in degrees]
            return _csv(["name", "t", "degree", "value"], rows)
        case _:
            lines = [
                f"params: {params}",
                f"mu: {mu}",
                f"sdefect: {sdefect}",
                f"regularity: {regularity}",
                "degrees:",
            ]
            lines += [f"  t={t} degree={params.delta * d} count={n}" for t, d, n in degrees]
            return "\n".join(lines) + "\n"


def betti_output(table: BettiTable, fmt: OutputFormat) -> str:
    match fmt:
        case OutputFormat.JSON:
            data = table.to_dict()
            return _document("betti", table.params, entries=data["entries"]).decode("utf-8")
        case OutputFormat.CSV:
            return _csv(
                ["i", "j", "row", "beta"],
                [(i, j, j - i, v) for (i, j), v in sorted(table.entries.items())],
            )
        case _:
            return betti_text(table)


def verification_output(report: VerificationReport, fmt: OutputFormat) -> str:
    match fmt:
        case OutputFormat.JSON:
            return _document("verification", None, **report.to_dict()).decode("utf-8")
        case OutputFormat.CSV:
            return _csv(
                ["s", "c", "m", "suites", "ok"],
                [
                    (cell.params.s, cell.params.c, cell.params.m,
                     " ".join(map(str, cell.suites)), cell.ok)
                    for cell in report.cells
                ],
            )
        case _:
            lines = [
                f"s={cell.params.s} c={cell.params.c} m={cell.params.m}: "
                f"{'ok' if cell.ok else 'FAIL'} [{', '.join(map(str, cell.suites))}]"
                for cell in report.cells
            ]
            mismatch = report.first_mismatch
            lines.append(f"first counterexample: {mismatch}" if mismatch else "all checks passed")
            return "\n".join(lines) + "\n"
