"""
Output records and their markdown, CSV and JSON renderings.
"""

import json
from dataclasses import dataclass
from typing import Any

import polars as pl

from ..bounds import BoundReport
from ..density_engine import ENGINE_VERSION, ExactDensity

CSV_COLUMNS = ["family", "rank", "m", "numerator", "denominator", "decimal"]
DECIMAL_DIGITS = 6


@dataclass(frozen=True)
class OutputRecord:
    """
    One exact density ready for output.

    Attributes:
        density: The exact density
        bounds: Bound comparison, when requested
    """
    density: ExactDensity
    bounds: BoundReport | None = None

    @property
    def decimal(self) -> str:
        return self.density.decimal(DECIMAL_DIGITS)

    def to_dict(self) -> dict[str, Any]:
        """Cache record fields plus rendering, timing and the enumeration log."""
        record = self.density.to_record(ENGINE_VERSION)
        record["density"] = str(self.density.value)
        record["decimal"] = self.decimal
        record["approximate"] = ["decimal"]
        record["wall_time"] = round(self.density.wall_time, 3)
        record["cached"] = self.density.cached
        record["provenance"] = self.density.provenance
        record["bounds"] = self.bounds.to_dict() if self.bounds is not None else None
        return record


def density_frame(records: list[OutputRecord]) -> pl.DataFrame:
    """Long-form frame with one row per (variant, m)."""
    return pl.DataFrame(
        {
            "family": [r.density.label for r in records],
            "rank": [r.density.rank for r in records],
            "m": [r.density.m for r in records],
            "numerator": [str(r.density.value.numerator) for r in records],
            "denominator": [str(r.density.value.denominator) for r in records],
            "decimal": [r.decimal for r in records],
            "density": [str(r.density.value) for r in records],
        },
        schema={
            "family": pl.String,
            "rank": pl.Int64,
            "m": pl.Int64,
            "numerator": pl.String,
            "denominator": pl.String,
            "decimal": pl.String,
            "density": pl.String,
        },
    )


def render_csv(records: list[OutputRecord]) -> str:
    # numerators outgrow int64, so they travel as strings
    return density_frame(records).select(CSV_COLUMNS).write_csv()


def render_json(records: list[OutputRecord]) -> str:
    return json.dumps([record.to_dict() for record in records], indent=2)


def _markdown(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render_table_markdown(records: list[OutputRecord], ranks: list[int], moduli: list[int]) -> str:
    """Rows m, columns n, entries exact fractions."""
    header = ["m \\ n"] + [str(n) for n in ranks]
    if not records:
        return _markdown(header, [])

    wide = density_frame(records).pivot(
        on="rank", index="m", values="density", aggregate_function="first"
    )
    by_m = {row["m"]: row for row in wide.iter_rows(named=True)}
    rows = []
    for m in moduli:
        row = by_m.get(m, {})
        rows.append([str(m)] + [row.get(str(n)) or "" for n in ranks])
    return _markdown(header, rows)


def render_density_markdown(records: list[OutputRecord]) -> str:
    header = ["variant", "m", "density", "decimal (approx.)", "periods", "points", "seconds"]
    rows = []
    for record in records:
        density = record.density
        periods = ", ".join(
            f"{part.period} (mod {part.q})" for part in density.per_prime_power
        ) or "-"
        rows.append([
            density.label,
            str(density.m),
            str(density.value),
            record.decimal,
            periods,
            str(density.points),
            "cached" if density.cached else f"{density.wall_time:.2f}",
        ])
    return _markdown(header, rows)


def render_bounds_markdown(reports: list[BoundReport]) -> str:
    header = ["variant", "m", "lower", "exact", "upper", "upper (approx.)", "ok"]
    rows = []
    for report in reports:
        data = report.to_dict()
        rows.append([
            report.variant,
            str(report.m),
            data["lower"] or "-",
            data["exact"] or "-",
            data["upper"] or "-",
            data["upper_decimal"] or "-",
            "yes" if report.satisfied else "NO",
        ])
    return _markdown(header, rows)


def render(records: list[OutputRecord], fmt: str) -> str:
    if fmt == "csv":
        return render_csv(records)
    if fmt == "json":
        return render_json(records) + "\n"
    return render_density_markdown(records)
