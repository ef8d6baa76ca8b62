"""Matplotlib figure output for the CLI report path.

Renders the same radar, impact, and progress views as the SVG renderers,
but as PNG files for slide decks and readmes. Imported lazily by the CLI so
the core library stays matplotlib-free.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .aggregation import IMPACT_FACTORS, ImpactProfile
from .reporting import AXIS_LABELS, ProgressReport, RadarSeries

_LINESTYLES = {"solid": "-", "dashed": "--", "dotted": ":"}
_COLORS = {"solid": "#1f6fb2", "dashed": "#d97706", "dotted": "#22863a"}


def _polar_angles(n: int) -> list[float]:
    # First axis up, clockwise; matplotlib handles orientation via the axes.
    return [2 * math.pi * k / n for k in range(n)]


def _radar_axes(labels: Sequence[str], max_value: float, ticks: Sequence[float]):
    fig, ax = plt.subplots(figsize=(6, 6), subplot_kw=dict(polar=True))
    ax.set_theta_zero_location("N")
    ax.set_theta_direction(-1)
    angles = _polar_angles(len(labels))
    ax.set_xticks(angles)
    ax.set_xticklabels(labels)
    ax.set_ylim(0, max_value)
    ax.set_yticks(list(ticks))
    ax.grid(color="gray", linestyle="--", linewidth=0.5)
    return fig, ax, angles


def _plot_series(ax, angles, series: RadarSeries) -> None:
    values = list(series.values) + [series.values[0]]
    closed = angles + angles[:1]
    color = _COLORS.get(series.style, "#1f6fb2")
    ax.plot(
        closed,
        values,
        label=series.label,
        color=color,
        linewidth=2,
        linestyle=_LINESTYLES.get(series.style, "-"),
        marker="o",
        markersize=4,
    )
    ax.fill(closed, values, color=color, alpha=0.1)


def save_radar_png(series: Sequence[RadarSeries], path: str | Path, title: str = "") -> Path:
    fig, ax, angles = _radar_axes(AXIS_LABELS, 9, (3, 6, 9))
    for s in series:
        _plot_series(ax, angles, s)
    if title:
        ax.set_title(title, y=1.08)
    ax.legend(loc="upper right", bbox_to_anchor=(1.25, 1.05))
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_impact_png(profile: ImpactProfile, path: str | Path, title: str = "") -> Path:
    labels = [f.capitalize() for f in IMPACT_FACTORS]
    fig, ax, angles = _radar_axes(labels, 3, (1, 2, 3))
    series = RadarSeries(
        "Impact", tuple(float(getattr(profile, f)) for f in IMPACT_FACTORS), (False,) * 5, "solid"
    )
    _plot_series(ax, angles, series)
    if title:
        ax.set_title(title, y=1.08)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_progress_png(report: ProgressReport, path: str | Path, title: str = "") -> Path:
    fig, ax = plt.subplots(figsize=(7, 0.7 * (len(report.bars) + 2)))
    names = [b.use_case_id for b in report.bars] + [f"{report.service_id} (service)"]
    values = [b.progress or 0.0 for b in report.bars] + [report.service]
    colors = ["#9ecae1" if b.considered else "#d9d9d9" for b in report.bars] + ["#1f6fb2"]
    y = range(len(names))
    ax.barh(y, values, color=colors)
    ax.set_yticks(list(y))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlim(0, 1)
    ax.set_xlabel("Progress (readiness / aspiration)")
    for i, v in enumerate(values):
        ax.text(min(v + 0.02, 0.95), i, f"{v:.0%}", va="center", fontsize=9)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
