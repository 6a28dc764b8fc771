"""Hand-rolled static SVG output for the report commands.

Plots are batch artifacts, so there is no display dependency: each helper
returns a complete SVG document as a string. All coordinates are formatted
with fixed precision, which keeps output byte-identical across runs.
"""

from __future__ import annotations

import numpy as np

_COLORS = ("#2f7d4f", "#e08214", "#3a5fa8", "#b2182b", "#6a51a3", "#636363")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Canvas:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">',
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        ]

    def line(self, x1, y1, x2, y2, stroke="#333333", width=1.0, dashed=False):
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        self.parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{width}"{dash}/>'
        )

    def polyline(self, points, stroke, width=1.5, dashed=False):
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        self.parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}"{dash}/>'
        )

    def rect(self, x, y, w, h, fill, opacity=1.0):
        self.parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}" '
            f'fill="{fill}" fill-opacity="{_fmt(opacity)}"/>'
        )

    def circle(self, x, y, r, fill):
        self.parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{fill}"/>'
        )

    def text(self, x, y, content, size=11, anchor="start", color="#222222"):
        self.parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{size}" '
            f'font-family="sans-serif" text-anchor="{anchor}" '
            f'fill="{color}">{_escape(content)}</text>'
        )

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _escape(text: str) -> str:
    return (
        str(text).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )


class _Axes:
    """Maps data coordinates onto a pixel box with a simple frame."""

    def __init__(self, canvas, x0, y0, w, h, xlim, ylim):
        self.c = canvas
        self.x0, self.y0, self.w, self.h = x0, y0, w, h
        self.xlim, self.ylim = xlim, ylim

    def px(self, x):
        lo, hi = self.xlim
        span = hi - lo if hi > lo else 1.0
        return self.x0 + (x - lo) / span * self.w

    def py(self, y):
        lo, hi = self.ylim
        span = hi - lo if hi > lo else 1.0
        return self.y0 + self.h - (y - lo) / span * self.h

    def frame(self):
        self.c.line(self.x0, self.y0, self.x0, self.y0 + self.h)
        self.c.line(self.x0, self.y0 + self.h, self.x0 + self.w, self.y0 + self.h)


def everest_svg(result, title: str = "") -> str:
    """Group index vs event rate, one polyline per outcome definition."""
    names = sorted(result.group_rates)
    max_rate = max(
        [max(rates) for rates in result.group_rates.values()] + [0.01]
    )
    canvas = _Canvas(640, 400)
    axes = _Axes(canvas, 70, 50, 430, 300, (1, result.n_group), (0.0, max_rate * 1.1))
    axes.frame()
    canvas.text(320, 24, title or f"Event rates by {result.feature_name} group", 14, "middle")
    canvas.text(285, 390, "group (ordered by feature value)", 11, "middle")
    canvas.text(16, 200, "event rate", 11)
    for g in range(1, result.n_group + 1):
        canvas.text(axes.px(g), axes.y0 + axes.h + 16, str(g), 10, "middle")
    for frac in (0.0, 0.5, 1.0):
        y = frac * max_rate * 1.1
        canvas.text(axes.x0 - 6, axes.py(y) + 4, f"{y:.3f}", 9, "end")
    for idx, name in enumerate(names):
        color = _COLORS[idx % len(_COLORS)]
        rates = result.group_rates[name]
        points = [(axes.px(g + 1), axes.py(r)) for g, r in enumerate(rates)]
        canvas.polyline(points, color, 2.0, dashed=(idx == 0))
        for x, y in points:
            canvas.circle(x, y, 3.0, color)
        canvas.text(510, 70 + 18 * idx, name, 11, "start", color)
    return canvas.render()


def histogram_pair_svg(panels, n_bins: int = 20) -> str:
    """Stacked panels of two-class value histograms with a threshold line.

    ``panels`` is a list of (feature_name, values0, values1, threshold).
    Class 0 draws gray, class 1 black-green; the fitted threshold is the
    dashed vertical line.
    """
    panel_h = 180
    canvas = _Canvas(640, 40 + panel_h * len(panels))
    for p_idx, (name, values0, values1, threshold) in enumerate(panels):
        top = 40 + p_idx * panel_h
        allv = np.concatenate([np.asarray(values0, float), np.asarray(values1, float)])
        lo, hi = float(allv.min()), float(allv.max())
        if hi <= lo:
            hi = lo + 1.0
        edges = np.linspace(lo, hi, n_bins + 1)
        h0, _ = np.histogram(values0, bins=edges, density=True)
        h1, _ = np.histogram(values1, bins=edges, density=True)
        peak = max(float(h0.max()), float(h1.max()), 1e-12)
        axes = _Axes(canvas, 70, top + 24, 500, panel_h - 70, (lo, hi), (0.0, peak * 1.05))
        axes.frame()
        canvas.text(70, top + 14, name, 12)
        width_px = axes.w / n_bins
        for k in range(n_bins):
            x = axes.px(edges[k])
            for hist, color, opacity in ((h0, "#999999", 0.55), (h1, "#2f7d4f", 0.55)):
                if hist[k] > 0:
                    y = axes.py(hist[k])
                    canvas.rect(x, y, width_px, axes.y0 + axes.h - y, color, opacity)
        tx = axes.px(threshold)
        canvas.line(tx, axes.y0, tx, axes.y0 + axes.h, "#111111", 1.5, dashed=True)
        canvas.text(axes.x0 - 6, axes.py(0.0) + 4, "0", 9, "end")
        canvas.text(axes.px(lo), axes.y0 + axes.h + 14, f"{lo:.4g}", 9, "middle")
        canvas.text(axes.px(hi), axes.y0 + axes.h + 14, f"{hi:.4g}", 9, "middle")
    return canvas.render()


def ranking_bar_svg(rankings, title: str = "feature |R| ranking") -> str:
    """Horizontal bars of |R| per feature, best first."""
    bar_h = 22
    canvas = _Canvas(640, 70 + bar_h * len(rankings))
    canvas.text(320, 24, title, 14, "middle")
    max_r = max([abs(r.r) for r in rankings] + [1e-12])
    for idx, item in enumerate(rankings):
        y = 50 + idx * bar_h
        w = 320 * abs(item.r) / max_r
        color = _COLORS[2] if item.r >= 0 else _COLORS[3]
        canvas.rect(250, y, w, bar_h - 6, color, 0.8)
        canvas.text(244, y + 12, item.name, 10, "end")
        canvas.text(254 + w, y + 12, f"R={item.r:+.3f} p={item.p_value:.4g}", 9)
    return canvas.render()
