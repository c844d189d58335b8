"""Arc-diagram rendering of book embeddings: SVG and DOT.

The spine is drawn as a horizontal line (the circular order cut at position
0), each page gets one color, and each edge becomes a semicircle above the
line.  A valid embedding therefore renders with no two same-colored arcs
touching or crossing.
"""

from __future__ import annotations

import colorsys
from xml.sax.saxutils import escape

from .embedding import BookEmbedding

_SPACING = 46
_MARGIN = 30
_BASE_RADIUS = 4


def page_colors(count: int) -> list[str]:
    """Visually distinct hex colors, one per page."""
    out = []
    for i in range(count):
        hue = (i / max(count, 1)) % 1.0
        r, g, b = colorsys.hsv_to_rgb(hue, 0.85, 0.80 if i % 2 else 0.95)
        out.append(f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}")
    return out


def render_svg(emb: BookEmbedding, labels: dict[int, str] | None = None) -> str:
    if labels is None:
        labels = {v: str(v) for v in emb.spine}
    seq = emb.spine.sequence
    n = len(seq)
    xs = {v: _MARGIN + i * _SPACING for i, v in enumerate(seq)}
    max_span = 0
    for page in emb.pages:
        for a, b in page:
            max_span = max(max_span, abs(xs[a] - xs[b]))
    legend_height = 18 * emb.page_count + 10
    arc_height = max_span / 2 + 10
    baseline = legend_height + arc_height + 10
    width = _MARGIN * 2 + max(n - 1, 0) * _SPACING
    height = baseline + 40
    colors = page_colors(emb.page_count)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height:.0f}" '
        f'viewBox="0 0 {width} {height:.0f}">',
        f'<line x1="{_MARGIN - 10}" y1="{baseline:.1f}" x2="{width - _MARGIN + 10}" '
        f'y2="{baseline:.1f}" stroke="#444" stroke-width="1"/>',
    ]
    for k, page in enumerate(emb.pages):
        color = colors[k]
        for a, b in sorted(page):
            x1, x2 = sorted((xs[a], xs[b]))
            r = (x2 - x1) / 2
            parts.append(
                f'<path d="M {x1} {baseline:.1f} A {r:.1f} {r:.1f} 0 0 1 {x2} {baseline:.1f}" '
                f'fill="none" stroke="{color}" stroke-width="1.6"/>'
            )
    for v in seq:
        x = xs[v]
        parts.append(f'<circle cx="{x}" cy="{baseline:.1f}" r="{_BASE_RADIUS}" fill="#222"/>')
        parts.append(
            f'<text x="{x}" y="{baseline + 20:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{escape(labels[v])}</text>'
        )
    for k in range(emb.page_count):
        y = 12 + 18 * k
        parts.append(f'<rect x="8" y="{y - 9}" width="12" height="12" fill="{colors[k]}"/>')
        parts.append(
            f'<text x="26" y="{y + 2}" font-family="sans-serif" font-size="12">page {k}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_dot(emb: BookEmbedding, labels: dict[int, str] | None = None) -> str:
    if labels is None:
        labels = {v: str(v) for v in emb.spine}
    colors = page_colors(emb.page_count)
    lines = ["graph embedding {"]
    lines.append(f'  // spine order: {" ".join(labels[v] for v in emb.spine)}')
    for v in emb.spine:
        lines.append(f'  "{labels[v]}";')
    for k, page in enumerate(emb.pages):
        for a, b in sorted(page):
            lines.append(f'  "{labels[a]}" -- "{labels[b]}" [page={k} color="{colors[k]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
