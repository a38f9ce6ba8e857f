"""Figure rendering for report runs.

Figures are a side channel for humans; every number they show is also in the
JSON/CSV output. Matplotlib is imported lazily with the Agg backend so the
library works headless and nothing here touches the exact-arithmetic core.
"""
from __future__ import annotations

import csv
from pathlib import Path

from .counting import WedgeHistogram
from .report import CSV_COLUMNS, Report


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_histogram_figure(hist: WedgeHistogram, path, title: str | None = None) -> Path:
    """Bar chart of n(s) against s for the positive wedge values."""
    plt = _pyplot()
    pairs = sorted(hist.entries.items())
    xs = [float(s) for s, _ in pairs]
    ys = [n for _, n in pairs]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    if xs:
        width = max(0.02, 0.8 * min(b - a for a, b in zip(xs, xs[1:])) if len(xs) > 1 else 0.4)
        ax.bar(xs, ys, width=width, color="#336699")
    ax.set_xlabel("wedge value s")
    ax.set_ylabel("occurrences n(s)")
    ax.set_title(title or "wedge value histogram")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_ratio_figure(report: Report, path) -> Path:
    """Bar chart of the report's ratio fields for one run."""
    plt = _pyplot()
    labels = []
    values = []
    for name, ratio in report.ratios.items():
        if ratio.decimal is not None:
            labels.append(name)
            values.append(float(ratio.decimal))
    fig, ax = plt.subplots(figsize=(7.2, 4.0))
    ax.bar(range(len(values)), values, color="#993344")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("ratio")
    title = report.generator or f"{report.n_points} points"
    ax.set_title(f"report ratios: {title}")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_trend_figure(csv_path, path) -> Path:
    """Ratio trends against point count, read back from an accumulated report
    CSV (missing cells are simply not plotted)."""
    plt = _pyplot()
    with open(csv_path, newline="") as handle:
        rows = list(csv.DictReader(handle))
    ratio_columns = [name for name in CSV_COLUMNS if name.startswith("ratio_")]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for column in ratio_columns:
        points = [
            (int(row["n_points"]), float(row[column]))
            for row in rows
            if row.get(column)
        ]
        if points:
            points.sort()
            ax.plot(
                [p[0] for p in points],
                [p[1] for p in points],
                marker="o",
                label=column[len("ratio_"):],
            )
    ax.set_xlabel("point count N")
    ax.set_ylabel("ratio")
    ax.set_title("ratio trends across runs")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
