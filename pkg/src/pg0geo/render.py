"""Deterministic SVG drawings of line configurations.

The plane is shown in an affine chart. The default behaviour tries the three
coordinate charts and falls back to generic charts until every configuration
line and marked point is visible; identical input yields byte-identical SVG.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from pg0geo.burniat import BurniatConfig, singularity_ledger, SingKind, tertiary_labeling
from pg0geo.config_io import ConfigDocument
from pg0geo.plane_geom import (
    ProjLine,
    ProjPoint,
    _adjugate3,
    arrangement_singular_points,
)


class RenderError(ValueError):
    """No chart can display the configuration."""


class _ChartFail(Exception):
    pass


CHARTS = {
    "xy": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "xz": ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    "yz": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
}

_GENERIC_CHARTS = (
    ((1, 0, 0), (0, 1, 0), (1, 1, 1)),
    ((1, 0, 0), (0, 1, 0), (1, 2, 5)),
    ((1, 0, 0), (0, 1, 0), (2, 3, 7)),
    ((1, 0, 0), (0, 1, 0), (5, 1, 3)),
    ((1, 0, 0), (0, 1, 0), (7, 11, 13)),
)

_CANVAS = 600
_MARGIN = 40
_PENCIL_COLORS = ("#b91c1c", "#1d4ed8", "#047857")


@dataclass(frozen=True)
class _Marker:
    label: str
    point: ProjPoint
    kind: str  # "vertex" | "extra"


def _scene(doc: ConfigDocument):
    """(lines, line colors, markers, highlighted triple points) of a document."""
    if doc.campedelli is not None:
        lines = list(doc.campedelli)
        colors = ["#374151"] * len(lines)
        highlights = [
            sp.point
            for sp in arrangement_singular_points(lines)
            if sp.multiplicity >= 3
        ]
        return lines, colors, [], highlights
    if doc.config is None:
        raise RenderError("document carries no line configuration")
    cfg: BurniatConfig = doc.config
    lines = cfg.all_lines()
    colors = [_PENCIL_COLORS[i // 3] for i in range(9)]
    markers = [
        _Marker(f"P{i + 1}", v, "vertex") for i, v in enumerate(cfg.vertices)
    ]
    primed = tertiary_labeling(cfg) if cfg.m == 3 else None
    if primed is not None:
        markers += [_Marker(f"P'{i + 1}", q, "extra") for i, q in enumerate(primed)]
    else:
        markers += [
            _Marker(f"P{i + 4}", q, "extra") for i, q in enumerate(cfg.extra_points)
        ]
    ledger = singularity_ledger(cfg)
    highlights = [e.point for e in ledger.entries if e.kind is SingKind.TYPE_111]
    return lines, colors, markers, highlights


def _chart_point(matrix, p: ProjPoint) -> tuple[Fraction, Fraction]:
    coords = [
        sum(row[j] * p.coords[j] for j in range(3)) for row in matrix
    ]
    if coords[2] == 0:
        raise _ChartFail(f"point {p} at infinity in this chart")
    return Fraction(coords[0], coords[2]), Fraction(coords[1], coords[2])


def _chart_line(adj, line: ProjLine) -> tuple[int, int, int]:
    a, b, c = line.coeffs
    coeffs = tuple(
        a * adj[0][j] + b * adj[1][j] + c * adj[2][j] for j in range(3)
    )
    if coeffs[0] == 0 and coeffs[1] == 0:
        raise _ChartFail(f"line {line} at infinity in this chart")
    return coeffs


def _clip(coeffs, x0, x1, y0, y1):
    """Endpoints of an affine line a*u + b*v + c = 0 clipped to a box."""
    a, b, c = (Fraction(v) for v in coeffs)
    hits: list[tuple[Fraction, Fraction]] = []

    def _consider(u, v):
        if x0 <= u <= x1 and y0 <= v <= y1 and (u, v) not in hits:
            hits.append((u, v))

    for u in (x0, x1):
        if b != 0:
            _consider(u, -(c + a * u) / b)
    for v in (y0, y1):
        if a != 0:
            _consider(-(c + b * v) / a, v)
    if len(hits) < 2:
        return None
    hits.sort()
    return hits[0], hits[-1]


@dataclass(frozen=True)
class Layout:
    """Chart-plane scene: clipped segments, markers, highlights, and bounds."""

    segments: tuple  # ((u_a, v_a), (u_b, v_b), color) per drawn line
    markers: tuple  # (label, (u, v), kind)
    highlights: tuple  # (u, v) per highlighted triple point
    bounds: tuple  # (x0, x1, y0, y1) in chart coordinates


def _build_layout(doc: ConfigDocument, matrix) -> Layout:
    lines, colors, markers, highlights = _scene(doc)
    adj = _adjugate3(matrix)
    chart_lines = [_chart_line(adj, line) for line in lines]
    chart_markers = [(m, _chart_point(matrix, m.point)) for m in markers]
    chart_highlights = [
        _chart_point(matrix, p) for p in sorted(highlights, key=lambda p: p.coords)
    ]

    anchor_points = [pos for _, pos in chart_markers] + list(chart_highlights)
    for sp in arrangement_singular_points(lines):
        try:
            anchor_points.append(_chart_point(matrix, sp.point))
        except _ChartFail:
            continue
    if not anchor_points:
        anchor_points = [(Fraction(0), Fraction(0))]

    xs = [p[0] for p in anchor_points]
    ys = [p[1] for p in anchor_points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    half = span / 2 + span / 4
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2
    bounds = (cx - half, cx + half, cy - half, cy + half)

    segments = []
    for coeffs, color in zip(chart_lines, colors):
        segment = _clip(coeffs, *bounds)
        if segment is not None:
            segments.append((segment[0], segment[1], color))
    return Layout(
        segments=tuple(segments),
        markers=tuple((m.label, pos, m.kind) for m, pos in chart_markers),
        highlights=tuple(chart_highlights),
        bounds=bounds,
    )


def chart_layout(doc: ConfigDocument, chart: str = "auto") -> Layout:
    """Layout in the first chart that shows every line and marked point."""
    if chart == "auto":
        candidates = [CHARTS["xy"], CHARTS["xz"], CHARTS["yz"], *_GENERIC_CHARTS]
    elif chart in CHARTS:
        candidates = [CHARTS[chart]]
    else:
        raise ValueError(f"unknown chart {chart!r}; pick xy, xz, yz or auto")
    failures = []
    for matrix in candidates:
        try:
            return _build_layout(doc, matrix)
        except _ChartFail as exc:
            failures.append(str(exc))
    raise RenderError("every chart failed: " + "; ".join(failures))


def render_svg(doc: ConfigDocument, chart: str = "auto") -> str:
    """Deterministic SVG for a configuration document.

    `chart` is one of xy, xz, yz (fixed affine chart) or auto, which also
    tries generic charts so that triangles containing the coordinate lines
    stay drawable. Identical documents produce byte-identical output.
    """
    layout = chart_layout(doc, chart)
    x0, x1, y0, _ = layout.bounds
    scale = Fraction(_CANVAS - 2 * _MARGIN) / (x1 - x0)

    def to_screen(u, v) -> tuple[float, float]:
        sx = _MARGIN + float((u - x0) * scale)
        sy = _CANVAS - _MARGIN - float((v - y0) * scale)
        return sx, sy

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_CANVAS}" height="{_CANVAS}" viewBox="0 0 {_CANVAS} {_CANVAS}">',
        f'<rect x="0" y="0" width="{_CANVAS}" height="{_CANVAS}" fill="#ffffff"/>',
    ]
    for (u_a, v_a), (u_b, v_b), color in layout.segments:
        xa, ya = to_screen(u_a, v_a)
        xb, yb = to_screen(u_b, v_b)
        parts.append(
            f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
    for u, v in layout.highlights:
        sx, sy = to_screen(u, v)
        parts.append(
            f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="8" fill="none" '
            f'stroke="#f59e0b" stroke-width="2" class="triple-point"/>'
        )
    for label, (u, v), kind in layout.markers:
        sx, sy = to_screen(u, v)
        radius = 4 if kind == "vertex" else 3
        fill = "#111827" if kind == "vertex" else "#6d28d9"
        parts.append(
            f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="{radius}" fill="{fill}"/>'
        )
        parts.append(
            f'<text x="{sx + 7:.2f}" y="{sy - 7:.2f}" font-family="monospace" '
            f'font-size="14" fill="#111827">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
