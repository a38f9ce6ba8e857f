"""Full-pipeline reports: rotate, count, build lines, project, run the
incidence checkers, and render the result as JSON and CSV.

Reports are byte-stable: identical inputs and seeds produce identical bytes.
Counts stay exact; each ratio carries the exact rational when one exists and
a 12-significant-digit decimal for trend reading (base-e logarithm
throughout). Sections whose caps are exceeded come back null together with a
skip notice rather than being dropped.
"""
from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .counting import (
    ORACLE_CAP,
    distinct_areas,
    distinct_dot_products,
    energy,
    quadruple_count_naive,
)
from .geom import PointSet, RotationRecord, format_scalar, normalize_rotation
from .incidence import (
    INTERSECTION_CAP,
    REGULUS_ENUMERATION_LIMIT,
    max_concurrency,
    max_coplanar,
    pairwise_intersections,
    regulus_max,
)
from .io import atomic_write_text
from .lines import build_family, project_family

DECIMAL_DIGITS = 12


def _decimal(value) -> str | None:
    if value is None:
        return None
    return f"{float(value):.{DECIMAL_DIGITS}g}"


@dataclass(frozen=True)
class Ratio:
    """A report ratio: exact rational when the quantity is rational, decimal
    rendering always (None when undefined, e.g. a log of 1 in the
    denominator)."""

    exact: Fraction | None
    decimal: str | None

    @classmethod
    def from_fraction(cls, value: Fraction | None) -> "Ratio":
        if value is None:
            return cls(exact=None, decimal=None)
        return cls(exact=value, decimal=_decimal(value))

    @classmethod
    def from_float(cls, value: float | None) -> "Ratio":
        return cls(exact=None, decimal=_decimal(value))

    def to_json(self):
        return {
            "exact": format_scalar(self.exact) if self.exact is not None else None,
            "decimal": self.decimal,
        }


@dataclass
class Report:
    n_points: int
    distinct_areas: int
    distinct_dots: int
    energy: int
    quadruples_restricted: int | None
    line_count: int
    intersections_4d: int | None
    intersections_3d: int | None
    max_concurrency: int | None
    max_coplanar: int | None
    regulus_max: int | None
    ratios: dict
    rotation_used: RotationRecord
    generator: str | None
    seed: int | None
    skipped: list = field(default_factory=list)


def _skip(skipped: list, section: str, reason: str) -> None:
    skipped.append({"section": section, "reason": reason})


def build_report(
    ps: PointSet,
    oriented: bool = False,
    oracle_cap: int = ORACLE_CAP,
    line_cap: int = INTERSECTION_CAP,
    regulus_cap: int = REGULUS_ENUMERATION_LIMIT,
    generator: str | None = None,
    seed: int | None = None,
) -> Report:
    """Run every pipeline stage that fits under its cap and assemble the
    report. Counting stages always run; the quartic oracle and the incidence
    stages are size-gated."""
    n = len(ps)
    rotated, rotation = normalize_rotation(ps)
    areas = distinct_areas(ps)
    dots = distinct_dot_products(ps)
    erep = energy(ps)
    skipped: list = []

    quadruples = None
    if n <= oracle_cap:
        quadruples = quadruple_count_naive(ps, restricted=True, cap=oracle_cap)
    else:
        _skip(skipped, "quadruples_restricted", f"point count {n} over oracle cap {oracle_cap}")

    family4 = build_family(rotated, oriented=oriented)
    line_count = len(family4)
    inter4 = inter3 = concurrency = coplanar = regulus_count = None
    if line_count <= line_cap:
        family3 = project_family(family4)
        records4 = pairwise_intersections(family4, cap=line_cap)
        records3 = pairwise_intersections(family3, cap=line_cap)
        inter4 = len(records4)
        inter3 = len(records3)
        concurrency = max_concurrency(family3, records=records3)
        coplanar = max_coplanar(family3, cap=line_cap)[0]
        if line_count <= regulus_cap:
            regulus_count = regulus_max(family3).count
        else:
            _skip(skipped, "regulus_max", f"{line_count} lines over regulus cap {regulus_cap}")
    else:
        _skip(skipped, "incidence", f"{line_count} lines over intersection cap {line_cap}")
        _skip(skipped, "regulus_max", f"{line_count} lines over intersection cap {line_cap}")

    log_n = math.log(n) if n > 1 else None
    ratios = {
        "areas_logN_over_N": Ratio.from_float(
            areas * log_n / n if log_n is not None else None
        ),
        "dots_logN_over_N": Ratio.from_float(
            dots * log_n / n if log_n is not None else None
        ),
        "concurrency_over_N": Ratio.from_fraction(
            Fraction(concurrency, n) if concurrency is not None else None
        ),
        "coplanar_over_2N": Ratio.from_fraction(
            Fraction(coplanar, 2 * n) if coplanar is not None else None
        ),
        "energy_over_N3_logN": Ratio.from_float(
            erep.energy / (n**3 * log_n) if log_n is not None else None
        ),
    }
    return Report(
        n_points=n,
        distinct_areas=areas,
        distinct_dots=dots,
        energy=erep.energy,
        quadruples_restricted=quadruples,
        line_count=line_count,
        intersections_4d=inter4,
        intersections_3d=inter3,
        max_concurrency=concurrency,
        max_coplanar=coplanar,
        regulus_max=regulus_count,
        ratios=ratios,
        rotation_used=rotation,
        generator=generator if generator is not None else ps.provenance,
        seed=seed,
        skipped=skipped,
    )


def report_to_dict(report: Report) -> dict:
    """JSON-ready dict in the fixed key order the schema promises."""
    return {
        "n_points": report.n_points,
        "distinct_areas": report.distinct_areas,
        "distinct_dots": report.distinct_dots,
        "energy": report.energy,
        "quadruples_restricted": report.quadruples_restricted,
        "line_count": report.line_count,
        "intersections_4d": report.intersections_4d,
        "intersections_3d": report.intersections_3d,
        "max_concurrency": report.max_concurrency,
        "max_coplanar": report.max_coplanar,
        "regulus_max": report.regulus_max,
        "ratios": {name: ratio.to_json() for name, ratio in report.ratios.items()},
        "rotation_used": {
            "c": format_scalar(report.rotation_used.c),
            "s": format_scalar(report.rotation_used.s),
        },
        "generator": report.generator,
        "seed": report.seed,
        "skipped": report.skipped,
    }


def render_report_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


CSV_COLUMNS = [
    "n_points",
    "distinct_areas",
    "distinct_dots",
    "energy",
    "quadruples_restricted",
    "line_count",
    "intersections_4d",
    "intersections_3d",
    "max_concurrency",
    "max_coplanar",
    "regulus_max",
    "ratio_areas_logN_over_N",
    "ratio_dots_logN_over_N",
    "ratio_concurrency_over_N",
    "ratio_coplanar_over_2N",
    "ratio_energy_over_N3_logN",
    "rotation_c",
    "rotation_s",
    "generator",
    "seed",
]


def report_csv_row(report: Report) -> list[str]:
    def cell(value) -> str:
        return "" if value is None else str(value)

    ratio_cells = [
        cell(report.ratios[name].decimal)
        for name in (
            "areas_logN_over_N",
            "dots_logN_over_N",
            "concurrency_over_N",
            "coplanar_over_2N",
            "energy_over_N3_logN",
        )
    ]
    return [
        cell(report.n_points),
        cell(report.distinct_areas),
        cell(report.distinct_dots),
        cell(report.energy),
        cell(report.quadruples_restricted),
        cell(report.line_count),
        cell(report.intersections_4d),
        cell(report.intersections_3d),
        cell(report.max_concurrency),
        cell(report.max_coplanar),
        cell(report.regulus_max),
        *ratio_cells,
        format_scalar(report.rotation_used.c),
        format_scalar(report.rotation_used.s),
        cell(report.generator),
        cell(report.seed),
    ]


def append_report_csv(report: Report, path) -> None:
    """Append one row, creating the file with a header when absent; the whole
    file is rewritten atomically."""
    path = Path(path)
    existing = path.read_text() if path.exists() else ""
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if not existing:
        writer.writerow(CSV_COLUMNS)
    writer.writerow(report_csv_row(report))
    atomic_write_text(path, existing + buffer.getvalue())
