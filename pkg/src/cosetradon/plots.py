"""Figure rendering for the report path.

Whenever the CLI writes a delimited report to a file, a companion matplotlib
figure is rendered next to it (same stem, .png).  Figures are presentation
only: the CSV/JSON artifacts remain the data boundary and the determinism
contract applies to them, not to the images.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .complex_circle import GridRow
from .radon import OperatorMatrix
from .report import FAIL, PASS, RECORDED, CaseReport


def figure_path(out_path: Path) -> Path:
    return out_path.with_suffix(".png")


def save_report_figure(cases: Sequence[CaseReport], out_path: Path) -> Path:
    """Stacked per-family bar chart of claim outcomes."""
    families: dict[str, dict[str, int]] = {}
    for case in cases:
        counts = families.setdefault(case.family, {PASS: 0, FAIL: 0, RECORDED: 0})
        for claim in case.claims:
            counts[claim.status] += 1
    names = sorted(families)
    passes = [families[n][PASS] for n in names]
    fails = [families[n][FAIL] for n in names]
    recorded = [families[n][RECORDED] for n in names]

    fig, ax = plt.subplots(figsize=(8, 0.6 * max(4, len(names))))
    ax.barh(names, passes, color="#2a9d8f", label="pass")
    ax.barh(names, fails, left=passes, color="#e76f51", label="fail")
    ax.barh(
        names,
        recorded,
        left=[p + f for p, f in zip(passes, fails)],
        color="#8d99ae",
        label="recorded",
    )
    ax.set_xlabel("claims")
    ax.set_title("verification outcomes by claim family")
    ax.legend(loc="lower right")
    fig.tight_layout()
    target = figure_path(out_path)
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target


def save_matrix_figure(matrix: OperatorMatrix, out_path: Path) -> Path:
    """Heatmap of the operator entries (as floats), annotated when small."""
    data = [[float(x) for x in row] for row in matrix.entries]
    fig, ax = plt.subplots(figsize=(7, 5))
    image = ax.imshow(data, cmap="RdBu_r", aspect="auto")
    ax.set_xlabel(matrix.domain.label)
    ax.set_ylabel(matrix.codomain.label)
    ax.set_title(f"{matrix.codomain.label} <- {matrix.domain.label}")
    fig.colorbar(image, ax=ax, shrink=0.85)
    if matrix.domain.dim <= 12 and matrix.codomain.dim <= 12:
        for i, row in enumerate(matrix.entries):
            for j, value in enumerate(row):
                ax.text(j, i, str(value), ha="center", va="center", fontsize=8)
    fig.tight_layout()
    target = figure_path(out_path)
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target


def save_example_figure(rows: Sequence[GridRow], out_path: Path) -> Path:
    """Transform vs. original along the radius, with the deviation below."""
    radii = [row.radius for row in rows]
    f_values = [row.f for row in rows]
    radon_values = [row.radon for row in rows]
    deviations = [row.deviation for row in rows]

    fig, (top, bottom) = plt.subplots(
        2, 1, figsize=(7, 6), sharex=True, height_ratios=[3, 1]
    )
    top.plot(radii, f_values, ".", color="#264653", markersize=3, label="f")
    top.plot(
        radii,
        radon_values,
        "x",
        color="#e76f51",
        markersize=3,
        label="fiber average",
    )
    top.set_xscale("log")
    top.set_ylabel("value")
    top.set_title("reconstruction on the complex-circle grid")
    top.legend()
    bottom.plot(radii, deviations, ".", color="#8d99ae", markersize=3)
    bottom.set_xscale("log")
    bottom.set_xlabel("|z|")
    bottom.set_ylabel("|deviation|")
    fig.tight_layout()
    target = figure_path(out_path)
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target
