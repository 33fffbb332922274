"""Deterministic SVG dot chart comparing Rao-Stirling and DIV per portfolio.

One row per portfolio, two marks per row on a shared [0, 1] axis, and a
min-max range bar per indicator underneath. Output is plain text built from
fixed-precision coordinates, so identical tables give identical bytes.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from portdiv.dataio import OutputTable

__all__ = ["render_range_svg"]

_ROW_H = 22
_LEFT = 140
_PLOT_W = 460
_TOP = 50
_RIGHT = 80
_COLORS = {"rao_stirling": "#1f77b4", "div": "#d62728"}
_TITLES = {"rao_stirling": "Rao-Stirling", "div": "DIV"}


def _x(value: float) -> str:
    v = min(1.0, max(0.0, value))
    return f"{_LEFT + v * _PLOT_W:.2f}"


def render_range_svg(
    table: OutputTable,
    labels: Sequence[str] | None = None,
    title: str = "Rao-Stirling diversity and DIV per portfolio",
) -> str:
    """Return the chart as an SVG document string.

    Row labels come from ``labels``, then from the table's own labels, then
    fall back to the 1-based column index.
    """
    n = len(table)
    if labels is not None and len(labels) != n:
        raise ValueError(f"{len(labels)} labels for {n} rows")
    names = [labels[i] if labels is not None else table.label_of(i) for i in range(n)]

    axis_y = _TOP + n * _ROW_H
    range_y = axis_y + 45
    height = range_y + 2 * _ROW_H + 20
    width = _LEFT + _PLOT_W + _RIGHT
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<title>{escape(title)}</title>',
        f'<text class="title" x="{width / 2:.2f}" y="20" text-anchor="middle" '
        f'font-size="14">{escape(title)}</text>',
    ]

    legend_x = _LEFT
    for key in ("rao_stirling", "div"):
        out.append(
            f'<circle class="legend" cx="{legend_x + 5}" cy="36" r="4" fill="{_COLORS[key]}"/>'
            f'<text class="legend" x="{legend_x + 14}" y="40">{_TITLES[key]}</text>'
        )
        legend_x += 110

    for i in range(n):
        rec = table.records[i]
        y = _TOP + i * _ROW_H + _ROW_H / 2
        out.append(
            f'<g class="row">'
            f'<text class="label" x="{_LEFT - 8}" y="{y + 4:.2f}" text-anchor="end">'
            f"{escape(names[i])}</text>"
            f'<line class="guide" x1="{_LEFT}" y1="{y:.2f}" x2="{_LEFT + _PLOT_W}" '
            f'y2="{y:.2f}" stroke="#dddddd"/>'
            f'<circle class="mark rao_stirling" cx="{_x(rec.rao_stirling)}" cy="{y:.2f}" '
            f'r="5" fill="{_COLORS["rao_stirling"]}"/>'
            f'<circle class="mark div" cx="{_x(rec.div)}" cy="{y:.2f}" r="5" '
            f'fill="{_COLORS["div"]}"/>'
            "</g>"
        )

    out.append(
        f'<line class="axis" x1="{_LEFT}" y1="{axis_y}" x2="{_LEFT + _PLOT_W}" '
        f'y2="{axis_y}" stroke="black"/>'
    )
    for k in range(11):
        t = k / 10
        out.append(
            f'<line class="tick" x1="{_x(t)}" y1="{axis_y}" x2="{_x(t)}" '
            f'y2="{axis_y + 5}" stroke="black"/>'
            f'<text class="tick" x="{_x(t)}" y="{axis_y + 18}" text-anchor="middle">'
            f"{t:.1f}</text>"
        )

    for k, key in enumerate(("rao_stirling", "div")):
        vals = [getattr(r, key) for r in table.records]
        lo, hi = min(vals), max(vals)
        y = range_y + k * _ROW_H
        out.append(
            f'<g class="range {key}">'
            f'<text x="{_LEFT - 8}" y="{y + 4}" text-anchor="end">{_TITLES[key]} range</text>'
            f'<line x1="{_x(lo)}" y1="{y}" x2="{_x(hi)}" y2="{y}" '
            f'stroke="{_COLORS[key]}" stroke-width="4"/>'
            f'<text x="{_LEFT + _PLOT_W + 4}" y="{y + 4}">{lo:.2f}-{hi:.2f}</text>'
            "</g>"
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
