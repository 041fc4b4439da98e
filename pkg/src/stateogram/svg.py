"""Deterministic SVG rendering of state-o-gram layouts.

Output is byte-identical for identical inputs: coordinates are formatted
at fixed 4-decimal precision, element order is fixed, and only a generic
``sans-serif`` font family is named. ``width_px``/``height_px`` size the
plot area itself; label gutters and the vanishing-state box extend the
canvas around it.

The x axis maps (-pi, pi] onto the plot width minus an inner pad of
``max(margin_px, bar_width_px/2)`` per side, so a bar centered exactly
at +/-pi stays fully inside the plot instead of wrapping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import DomainError
from .layout import StateogramLayout

#: Vanishing-box entries beyond this count are elided to "... and K more".
VANISHING_BOX_LIMIT = 16

_X_TICKS = [
    (-math.pi, "-π"),
    (-math.pi / 2, "-π/2"),
    (0.0, "0"),
    (math.pi / 2, "π/2"),
    (math.pi, "π"),
]
_Y_TICKS = [(0.0, "0%"), (0.25, "25%"), (0.5, "50%"), (0.75, "75%"), (1.0, "100%")]


@dataclass(frozen=True)
class RenderStyle:
    """Pixel-level knobs for the renderer; layout semantics stay untouched."""

    width_px: int = 640
    height_px: int = 400
    bar_width_px: int = 14
    margin_px: int = 10
    font_size_px: int = 12
    show_vanishing_box: bool = True
    title: str | None = None

    def __post_init__(self):
        for name in ("width_px", "height_px", "bar_width_px", "margin_px", "font_size_px"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        if self.bar_width_px >= self.width_px / 8:
            raise DomainError(
                f"bar_width_px {self.bar_width_px} too wide for plot width {self.width_px}"
            )


@dataclass(frozen=True)
class ChartGeometry:
    """Pixel mapping of one chart panel; invertible for audits."""

    left: float
    top: float
    plot_w: float
    plot_h: float
    pad: float
    x_label_h: float
    box_h: float
    box_gap: float

    def x_center(self, angle: float) -> float:
        usable = self.plot_w - 2 * self.pad
        return self.left + self.pad + (angle + math.pi) / (2 * math.pi) * usable

    def angle_at(self, x: float) -> float:
        usable = self.plot_w - 2 * self.pad
        return (x - self.left - self.pad) / usable * 2 * math.pi - math.pi

    def y_px(self, prob: float) -> float:
        return self.top + self.plot_h * (1.0 - prob)

    def prob_at(self, y: float) -> float:
        return 1.0 - (y - self.top) / self.plot_h


def chart_geometry(style: RenderStyle) -> ChartGeometry:
    left = style.margin_px + 4 * style.font_size_px
    top = style.margin_px + (style.font_size_px + 10 if style.title else 0)
    return ChartGeometry(
        left=float(left),
        top=float(top),
        plot_w=float(style.width_px),
        plot_h=float(style.height_px),
        pad=float(max(style.margin_px, style.bar_width_px / 2)),
        x_label_h=float(style.font_size_px + 8),
        box_h=float(style.font_size_px + 12),
        box_gap=6.0,
    )


def _fmt(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _vanishing_text(vanishing: tuple[str, ...]) -> str:
    if len(vanishing) > VANISHING_BOX_LIMIT:
        shown = " ".join(vanishing[:VANISHING_BOX_LIMIT])
        return f"{shown} … and {len(vanishing) - VANISHING_BOX_LIMIT} more"
    return " ".join(vanishing)


def _panel_elements(
    layout: StateogramLayout, style: RenderStyle, geom: ChartGeometry, box_y: float
) -> list[str]:
    """Elements of one chart panel in fixed z-order: axes, bars, labels, box."""
    font = style.font_size_px
    out: list[str] = []
    # plot frame
    out.append(
        f'<rect x="{_fmt(geom.left)}" y="{_fmt(geom.top)}" width="{_fmt(geom.plot_w)}"'
        f' height="{_fmt(geom.plot_h)}" fill="#ffffff" stroke="#000000" stroke-width="1"/>'
    )
    # x gridlines, ticks, labels
    y_bottom = geom.top + geom.plot_h
    for angle, text in _X_TICKS:
        x = geom.x_center(angle)
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(geom.top)}" x2="{_fmt(x)}"'
            f' y2="{_fmt(y_bottom)}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(y_bottom)}" x2="{_fmt(x)}"'
            f' y2="{_fmt(y_bottom + 4)}" stroke="#000000" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y_bottom + font + 6)}" font-family="sans-serif"'
            f' font-size="{font}" text-anchor="middle">{escape(text)}</text>'
        )
    # y gridlines, ticks, labels
    for prob, text in _Y_TICKS:
        y = geom.y_px(prob)
        out.append(
            f'<line x1="{_fmt(geom.left)}" y1="{_fmt(y)}" x2="{_fmt(geom.left + geom.plot_w)}"'
            f' y2="{_fmt(y)}" stroke="#dddddd" stroke-width="1"/>'
        )
        out.append(
            f'<line x1="{_fmt(geom.left - 4)}" y1="{_fmt(y)}" x2="{_fmt(geom.left)}"'
            f' y2="{_fmt(y)}" stroke="#000000" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(geom.left - 6)}" y="{_fmt(y + 0.35 * font)}" font-family="sans-serif"'
            f' font-size="{font}" text-anchor="end">{escape(text)}</text>'
        )
    if style.title:
        out.append(
            f'<text x="{_fmt(geom.left + geom.plot_w / 2)}" y="{_fmt(style.margin_px + 0.8 * font)}"'
            f' font-family="sans-serif" font-size="{font}" text-anchor="middle">'
            f"{escape(style.title)}</text>"
        )
    # bars
    for bar in layout.bars:
        x = geom.x_center(bar.angle) - style.bar_width_px / 2
        y = geom.y_px(bar.y_offset + bar.height)
        h = bar.height * geom.plot_h
        r, g, b = bar.color
        out.append(
            f'<rect class="bar" x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(float(style.bar_width_px))}"'
            f' height="{_fmt(h)}" fill="rgb({r},{g},{b})"/>'
        )
    # ket labels at the top edge of each bar's band
    for bar in layout.bars:
        x = geom.x_center(bar.angle)
        y = geom.y_px(bar.y_offset + bar.height) + 0.9 * font
        out.append(
            f'<text class="bar-label" x="{_fmt(x)}" y="{_fmt(y)}" font-family="sans-serif"'
            f' font-size="{font}" text-anchor="middle">{escape(bar.ket_label)}</text>'
        )
    # vanishing-state box
    if style.show_vanishing_box and layout.vanishing:
        out.append(
            f'<rect class="vanishing-box" x="{_fmt(geom.left)}" y="{_fmt(box_y)}"'
            f' width="{_fmt(geom.plot_w)}" height="{_fmt(geom.box_h)}"'
            f' fill="#eeeeee" stroke="#999999" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(geom.left + 6)}" y="{_fmt(box_y + geom.box_h - 0.6 * font)}"'
            f' font-family="sans-serif" font-size="{font}" fill="#555555">'
            f"{escape(_vanishing_text(layout.vanishing))}</text>"
        )
    return out


def _svg_document(width: float, height: float, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}"'
        f' height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_svg(layout: StateogramLayout, style: RenderStyle = RenderStyle()) -> str:
    """Render one layout as a standalone SVG document."""
    geom = chart_geometry(style)
    has_box = style.show_vanishing_box and bool(layout.vanishing)
    box_y = geom.top + geom.plot_h + geom.x_label_h + geom.box_gap
    height = geom.top + geom.plot_h + geom.x_label_h + style.margin_px
    if has_box:
        height += geom.box_gap + geom.box_h
    width = geom.left + geom.plot_w + style.margin_px
    return _svg_document(width, height, _panel_elements(layout, style, geom, box_y))


def render_strip(
    layouts: list[StateogramLayout] | tuple[StateogramLayout, ...],
    style: RenderStyle = RenderStyle(),
) -> str:
    """Render layouts side by side with "(1)", "(2)", ... panel markers."""
    if not layouts:
        raise DomainError("render_strip needs at least one layout")
    geom = chart_geometry(style)
    font = style.font_size_px
    marker_h = float(font + 8)
    any_box = style.show_vanishing_box and any(lay.vanishing for lay in layouts)
    box_y = geom.top + geom.plot_h + geom.x_label_h + marker_h + geom.box_gap
    panel_w = geom.left + geom.plot_w + style.margin_px
    height = geom.top + geom.plot_h + geom.x_label_h + marker_h + style.margin_px
    if any_box:
        height += geom.box_gap + geom.box_h
    body: list[str] = []
    for i, layout in enumerate(layouts):
        body.append(f'<g transform="translate({_fmt(i * panel_w)},0)">')
        body.extend(_panel_elements(layout, style, geom, box_y))
        marker_y = geom.top + geom.plot_h + geom.x_label_h + font
        body.append(
            f'<text class="panel-number" x="{_fmt(geom.left + geom.plot_w / 2)}"'
            f' y="{_fmt(marker_y)}" font-family="sans-serif" font-size="{font}"'
            f' text-anchor="middle">({i + 1})</text>'
        )
        body.append("</g>")
    return _svg_document(panel_w * len(layouts), height, body)
