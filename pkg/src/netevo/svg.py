"""Minimal SVG line charts for normalized measure series."""

from __future__ import annotations

from typing import Mapping, Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 60, 20, 40, 40
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")
DASHES = ("", "6,3", "2,3", "8,3,2,3", "1,1")


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def line_chart(lines: Mapping[str, Sequence[float]], title: str = "", xlabel: str = "pair index") -> str:
    """Render one polyline per entry of ``lines`` on a fixed 800x400 canvas.

    Values are plotted on a 0..1 vertical axis (ticks at 0, 0.5, 1) against
    their 1-based position.  Values above 1 are clipped to the frame.
    """
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    n = max((len(v) for v in lines.values()), default=0)

    def x_of(i: int) -> float:
        if n <= 1:
            return MARGIN_LEFT + plot_w / 2
        return MARGIN_LEFT + plot_w * (i - 1) / (n - 1)

    def y_of(v: float) -> float:
        v = min(max(v, 0.0), 1.0)
        return MARGIN_TOP + plot_h * (1.0 - v)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:g}" y="24" text-anchor="middle" font-family="sans-serif" font-size="14">{escape(title)}</text>')

    bottom = MARGIN_TOP + plot_h
    right = MARGIN_LEFT + plot_w
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>')
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{bottom}" stroke="black"/>')
    for tick in (0.0, 0.5, 1.0):
        y = _fmt(y_of(tick))
        out.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{y}" x2="{MARGIN_LEFT}" y2="{y}" stroke="black"/>')
        out.append(f'<line x1="{MARGIN_LEFT}" y1="{y}" x2="{right}" y2="{y}" stroke="#dddddd"/>')
        out.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{y}" text-anchor="end" dominant-baseline="middle" '
            f'font-family="sans-serif" font-size="11">{tick:g}</text>'
        )
    if n:
        for i in sorted({1, n, (n + 1) // 2}):
            x = _fmt(x_of(i))
            out.append(f'<line x1="{x}" y1="{bottom}" x2="{x}" y2="{bottom + 5}" stroke="black"/>')
            out.append(f'<text x="{x}" y="{bottom + 18}" text-anchor="middle" font-family="sans-serif" font-size="11">{i}</text>')
    out.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:g}" y="{HEIGHT - 6}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">{escape(xlabel)}</text>'
    )

    for k, (name, values) in enumerate(lines.items()):
        color = COLORS[k % len(COLORS)]
        dash = DASHES[k % len(DASHES)]
        pts = " ".join(f"{_fmt(x_of(i))},{_fmt(y_of(v))}" for i, v in enumerate(values, start=1))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash_attr} points="{pts}">'
            f"<title>{escape(name)}</title></polyline>"
        )
        if len(lines) > 1:
            ly = MARGIN_TOP + 14 * k
            out.append(f'<text x="{right - 4}" y="{ly}" text-anchor="end" font-family="sans-serif" font-size="11" fill="{color}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
