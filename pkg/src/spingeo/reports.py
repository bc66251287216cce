"""Deterministic delimited output for coverage reports."""

from __future__ import annotations

from .geography import CoverageRow

CSV_HEADER = "c,chi,sigma,e,group,status,recipe-id"


def coverage_csv(rows: list[CoverageRow]) -> str:
    """Byte-stable CSV: fixed header, rows in the report's (chi, c) order."""
    lines = [CSV_HEADER]
    for row in rows:
        group = str(row.group).replace(" ", "")
        lines.append(
            f"{row.point.c},{row.point.chi},{row.point.sigma},{row.point.e},"
            f"{group},{row.status},{row.recipe_id}"
        )
    return "\n".join(lines) + "\n"


def write_coverage_csv(rows: list[CoverageRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(coverage_csv(rows))
