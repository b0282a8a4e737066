"""Matplotlib figures for the report path.

Renders the same chart-plane layout as the SVG renderer, but through
matplotlib so the output fits whatever styling and backends a pipeline
already uses. Figures are written as vector SVG with reproducible metadata.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from pg0geo.config_io import ConfigDocument
from pg0geo.render import chart_layout

_MARKER_STYLE = {
    "vertex": dict(color="#111827", s=36, zorder=5),
    "extra": dict(color="#6d28d9", s=24, zorder=5),
}


def render_figure(doc: ConfigDocument, path: str | Path, chart: str = "auto",
                  title: str | None = None) -> Path:
    """Draw the configuration to an SVG file; returns the written path."""
    layout = chart_layout(doc, chart)
    x0, x1, y0, y1 = (float(b) for b in layout.bounds)

    plt.rcParams["svg.hashsalt"] = "pg0geo"
    fig, ax = plt.subplots(figsize=(6, 6))
    for (ua, va), (ub, vb), color in layout.segments:
        ax.plot([float(ua), float(ub)], [float(va), float(vb)],
                color=color, linewidth=1.4, zorder=2)
    for u, v in layout.highlights:
        ax.scatter([float(u)], [float(v)], s=160, facecolors="none",
                   edgecolors="#f59e0b", linewidths=1.8, zorder=4)
    for label, (u, v), kind in layout.markers:
        ax.scatter([float(u)], [float(v)], **_MARKER_STYLE[kind])
        ax.annotate(label, (float(u), float(v)), textcoords="offset points",
                    xytext=(6, 6), fontsize=9, family="monospace")
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    if title:
        ax.set_title(title, fontsize=11)
    path = Path(path)
    fig.savefig(path, format="svg", metadata={"Date": None}, bbox_inches="tight")
    plt.close(fig)
    return path
