"""Deterministic SVG drawing of a chord diagram.

Position k of 2n sits at angle 2*pi*k/(2n) on the circle, counterclockwise
from the positive x axis.  SVG's y axis points down, so y is negated.
"""

from __future__ import annotations

import math
from typing import Mapping
from xml.sax.saxutils import escape, quoteattr

from .diagram import ChordDiagram, Window
from .graph import BLUE, RED

STROKE = {RED: "#d62728", BLUE: "#1f77b4", None: "#333333"}
HIGHLIGHT = "#f2c744"


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    def __init__(self, size: float):
        self.size = size
        self.center = size / 2
        self.radius = size * 0.38

    def point(self, angle: float, scale: float = 1.0) -> tuple[str, str]:
        r = self.radius * scale
        return (_fmt(self.center + r * math.cos(angle)),
                _fmt(self.center - r * math.sin(angle)))


def render_svg(d: ChordDiagram, coloring: Mapping[str, str] | None = None,
               window: Window | None = None, size: int = 400) -> str:
    cv = _Canvas(size)
    m = d.size
    step = 2 * math.pi / m if m else 0.0
    c = _fmt(cv.center)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<circle cx="{c}" cy="{c}" r="{_fmt(cv.radius)}" fill="none" stroke="#999999" stroke-width="1.5"/>',
    ]

    if window is not None and window.length:
        lo = (window.start - 0.5) * step
        hi = (window.start + window.length - 0.5) * step
        x0, y0 = cv.point(lo)
        x1, y1 = cv.point(hi)
        large = 1 if hi - lo > math.pi else 0
        r = _fmt(cv.radius)
        # sweep-flag 0 is counterclockwise on screen once y is flipped
        out.append(
            f'<path class="window" d="M {x0} {y0} A {r} {r} 0 {large} 0 {x1} {y1}" '
            f'fill="none" stroke="{HIGHLIGHT}" stroke-width="8" stroke-opacity="0.7"/>'
        )
        # extend the separating chord 15% past the circle on both sides
        p = (math.cos(lo), math.sin(lo))
        q = (math.cos(hi), math.sin(hi))
        ext = 0.15
        a = (p[0] + (p[0] - q[0]) * ext, p[1] + (p[1] - q[1]) * ext)
        b = (q[0] + (q[0] - p[0]) * ext, q[1] + (q[1] - p[1]) * ext)
        out.append(
            f'<line class="separator" x1="{_fmt(cv.center + cv.radius * a[0])}" '
            f'y1="{_fmt(cv.center - cv.radius * a[1])}" '
            f'x2="{_fmt(cv.center + cv.radius * b[0])}" '
            f'y2="{_fmt(cv.center - cv.radius * b[1])}" '
            f'stroke="#555555" stroke-width="1.5" stroke-dasharray="6 4"/>'
        )

    for label, (p, q) in sorted(d.chords().items(), key=lambda kv: kv[1]):
        color = coloring.get(label) if coloring else None
        x0, y0 = cv.point(p * step)
        x1, y1 = cv.point(q * step)
        out.append(
            f'<line class="chord" data-label={quoteattr(label)} x1="{x0}" y1="{y0}" '
            f'x2="{x1}" y2="{y1}" stroke="{STROKE.get(color, STROKE[None])}" stroke-width="2"/>'
        )

    for k, label in enumerate(d.labels):
        x, y = cv.point(k * step)
        tx, ty = cv.point(k * step, 1.12)
        out.append(f'<circle class="endpoint" cx="{x}" cy="{y}" r="3.5" fill="#222222"/>')
        out.append(
            f'<text x="{tx}" y="{ty}" font-family="sans-serif" font-size="13" '
            f'text-anchor="middle" dominant-baseline="central">{escape(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
