"""SVG 1.1 rendering of geodesic polygons.

The unit disk fills a 1000 x 1000 viewBox with the y axis flipped, so
``x + iy`` is drawn at ``(500 + 500 x, 500 - 500 y)``.  Output depends
only on the polygon, so identical input gives identical bytes.
"""

from __future__ import annotations

from typing import Optional

from .polygon import HyperbolicPolygon, SideKind, classify_side

SIZE = 1000
SCALE = 500.0

STYLE = {
    SideKind.INWARD: 'stroke="#b03a2e" stroke-width="3" fill="none"',
    SideKind.OUTWARD: 'stroke="#1f618d" stroke-width="3" stroke-dasharray="12 6" fill="none"',
}
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _xy(z: complex) -> str:
    return f"{SCALE + SCALE * z.real:.4f} {SCALE - SCALE * z.imag:.4f}"


def _segment(side) -> str:
    """Path command drawing ``side`` from its start point (the caller emits the M)."""
    if side.arc.is_diameter:
        return f"L {_xy(side.end)}"
    r = side.arc.radius * SCALE
    # a positive cross product turns clockwise about the centre; after the y flip that is
    # increasing screen angle, which SVG calls sweep 1
    sweep = 1 if side.cross > 0 else 0
    return f"A {r:.4f} {r:.4f} 0 0 {sweep} {_xy(side.end)}"


def render_svg(p: HyperbolicPolygon, title: Optional[str] = None) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
    ]
    if title:
        lines.append(f"<title>{_escape(title)}</title>")
    lines.append(f'<circle class="unit-circle" cx="{SCALE:.4f}" cy="{SCALE:.4f}" r="{SCALE:.4f}" '
                 'fill="#fbfcfc" stroke="#000000" stroke-width="2"/>')
    region = [f"M {_xy(p.vertices[0])}"] + [_segment(s) for s in p.sides] + ["Z"]
    lines.append(f'<path class="region" d="{" ".join(region)}" fill="#f7dc6f" fill-opacity="0.35" '
                 'stroke="none"/>')
    lines.append('<g id="sides">')
    for k, s in enumerate(p.sides):
        kind = classify_side(p, k).kind
        lines.append(f'<path class="side {kind.value}" d="M {_xy(s.start)} {_segment(s)}" {STYLE[kind]}/>')
    lines.append("</g>")
    lines.append('<g id="vertices" font-family="serif" font-size="24" text-anchor="middle">')
    centroid = sum(p.vertices) / p.n
    for k, z in enumerate(p.vertices):
        away = z - centroid
        away = away / abs(away) if abs(away) > 1e-12 else 1j
        label = z + away * (28 / SCALE)
        lines.append(f'<circle class="vertex" cx="{SCALE + SCALE * z.real:.4f}" '
                     f'cy="{SCALE - SCALE * z.imag:.4f}" r="5" fill="#000000"/>')
        lines.append(f'<text x="{SCALE + SCALE * label.real:.4f}" y="{SCALE - SCALE * label.imag + 8:.4f}">'
                     f'z{str(k + 1).translate(_SUB)}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
