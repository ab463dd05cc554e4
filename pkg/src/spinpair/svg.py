"""Byte-deterministic SVG rendering: line plots, heatmaps, phase rasters.

No plotting library is involved; every coordinate is formatted with a
fixed number of decimals so identical data gives identical bytes.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .export import atomic_write_text
from .sweep import SweepResult

WIDTH, HEIGHT = 800, 600
LEFT, RIGHT, TOP, BOTTOM = 80, 150, 40, 70
PLOT_W = WIDTH - LEFT - RIGHT
PLOT_H = HEIGHT - TOP - BOTTOM

# viridis sampled at k/7
VIRIDIS_STOPS = (
    (0x44, 0x01, 0x54),
    (0x46, 0x32, 0x7E),
    (0x36, 0x5C, 0x8D),
    (0x27, 0x7F, 0x8E),
    (0x1F, 0xA1, 0x87),
    (0x4A, 0xC1, 0x6D),
    (0xA0, 0xDA, 0x39),
    (0xFD, 0xE7, 0x25),
)
SERIES_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
PHASE_COLORS = {
    "Phi1": "#4daf4a",
    "Phi2": "#ffd92f",
    "Phi3": "#e41a1c",
    "Phi4": "#377eb8",
    "DegenerateBoundary": "#000000",
}
AXIS_NAMES = {"temp": "T", "log_temp": "log10 T", "j": "J", "dx": "Dx", "gx": "Gx"}


def colormap(c: float) -> str:
    """Linear interpolation through the 8 viridis stops, clipped to [0, 1]."""
    c = min(max(float(c), 0.0), 1.0)
    pos = c * (len(VIRIDIS_STOPS) - 1)
    i = min(int(pos), len(VIRIDIS_STOPS) - 2)
    f = pos - i
    lo, hi = VIRIDIS_STOPS[i], VIRIDIS_STOPS[i + 1]
    rgb = (round(a + (b - a) * f) for a, b in zip(lo, hi))
    return "#" + "".join(f"{v:02x}" for v in rgb)


def _n(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _tick(v: float) -> str:
    s = f"{v:.3g}"
    return "0" if s == "-0" else s


def _axis_label(param: str, lo: float, hi: float) -> str:
    return f"{AXIS_NAMES.get(param, param)} in [{_tick(lo)}, {_tick(hi)}]"


class _Canvas:
    def __init__(self, xlo, xhi, ylo, yhi):
        self.xlo, self.xhi, self.ylo, self.yhi = xlo, xhi, ylo, yhi
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        ]

    def px(self, x):
        return LEFT + (x - self.xlo) / (self.xhi - self.xlo) * PLOT_W

    def py(self, y):
        return TOP + PLOT_H - (y - self.ylo) / (self.yhi - self.ylo) * PLOT_H

    def add(self, s):
        self.parts.append(s)

    def text(self, x, y, s, anchor="middle", extra=""):
        self.add(f'<text x="{_n(x)}" y="{_n(y)}" text-anchor="{anchor}"{extra}>{escape(s)}</text>')

    def frame(self, xlabel, ylabel, title=None, nticks=5):
        self.add(
            f'<rect x="{LEFT}" y="{TOP}" width="{PLOT_W}" height="{PLOT_H}" '
            'fill="none" stroke="#000000" stroke-width="1"/>'
        )
        for k in range(nticks + 1):
            xv = self.xlo + (self.xhi - self.xlo) * k / nticks
            yv = self.ylo + (self.yhi - self.ylo) * k / nticks
            X, Y = self.px(xv), self.py(yv)
            self.add(f'<line x1="{_n(X)}" y1="{TOP + PLOT_H}" x2="{_n(X)}" y2="{TOP + PLOT_H + 5}" stroke="#000000"/>')
            self.text(X, TOP + PLOT_H + 20, _tick(xv))
            self.add(f'<line x1="{LEFT - 5}" y1="{_n(Y)}" x2="{LEFT}" y2="{_n(Y)}" stroke="#000000"/>')
            self.text(LEFT - 8, Y + 4, _tick(yv), anchor="end")
        self.text(LEFT + PLOT_W / 2, HEIGHT - 20, xlabel)
        cy = TOP + PLOT_H / 2
        self.text(20, cy, ylabel, extra=f' transform="rotate(-90 20 {_n(cy)})"')
        if title:
            self.text(LEFT + PLOT_W / 2, TOP - 14, title)

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def line_plot(series: list[tuple[str, SweepResult]], title: str | None = None) -> str:
    """One polyline per ``(label, result)``; all results must share the axis."""
    axis = series[0][1].axes[0]
    cv = _Canvas(axis.lo, axis.hi, 0.0, 1.0)
    cv.frame(_axis_label(axis.param, axis.lo, axis.hi), "concurrence C", title)
    for k, (label, res) in enumerate(series):
        color = SERIES_COLORS[k % len(SERIES_COLORS)]
        pts = " ".join(f"{_n(cv.px(x))},{_n(cv.py(c))}" for x, c in zip(res.axes[0].values(), res.values))
        cv.add(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = TOP + 20 + 18 * k
        cv.add(f'<line x1="{LEFT + PLOT_W + 15}" y1="{ly}" x2="{LEFT + PLOT_W + 35}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        cv.text(LEFT + PLOT_W + 40, ly + 4, label, anchor="start")
    return cv.render()


def _cells(cv: _Canvas, fills: list[list[str]], x_edges, y_edges):
    # merge horizontal runs of one colour to keep large rasters small
    for iy, row in enumerate(fills):
        y0, y1 = cv.py(y_edges[iy + 1]), cv.py(y_edges[iy])
        ix = 0
        while ix < len(row):
            end = ix
            while end + 1 < len(row) and row[end + 1] == row[ix]:
                end += 1
            x0, x1 = cv.px(x_edges[ix]), cv.px(x_edges[end + 1])
            cv.add(
                f'<rect x="{_n(x0)}" y="{_n(y0)}" width="{_n(x1 - x0)}" height="{_n(y1 - y0)}" '
                f'fill="{row[ix]}" shape-rendering="crispEdges"/>'
            )
            ix = end + 1


def _edges(lo, hi, n):
    return [lo + (hi - lo) * k / n for k in range(n + 1)]


def _centered_edges(axis):
    # endpoint-inclusive samples: each sample owns a cell centred on it
    v = axis.values()
    step = (axis.hi - axis.lo) / (axis.steps - 1)
    return [float(v[0]) - step / 2] + [float(x) + step / 2 for x in v]


def heatmap(result: SweepResult, title: str | None = None) -> str:
    ax, ay = result.axes
    xe, ye = _centered_edges(ax), _centered_edges(ay)
    cv = _Canvas(xe[0], xe[-1], ye[0], ye[-1])
    grid = result.grid()
    _cells(cv, [[colormap(c) for c in row] for row in grid], xe, ye)
    cv.frame(_axis_label(ax.param, ax.lo, ax.hi), _axis_label(ay.param, ay.lo, ay.hi), title)
    # colour bar
    bx, bw = LEFT + PLOT_W + 30, 20
    for k in range(50):
        c0 = k / 50
        y0 = TOP + PLOT_H - (k + 1) * PLOT_H / 50
        cv.add(f'<rect x="{bx}" y="{_n(y0)}" width="{bw}" height="{_n(PLOT_H / 50)}" fill="{colormap(c0 + 0.01)}" shape-rendering="crispEdges"/>')
    for v in (0.0, 0.5, 1.0):
        cv.text(bx + bw + 6, TOP + PLOT_H - v * PLOT_H + 4, _tick(v), anchor="start")
    cv.text(bx + bw / 2, TOP - 8, "C")
    return cv.render()


def phase_raster(grid, x_axis, y_axis, title: str | None = None) -> str:
    xe = _edges(x_axis.lo, x_axis.hi, x_axis.steps)
    ye = _edges(y_axis.lo, y_axis.hi, y_axis.steps)
    cv = _Canvas(x_axis.lo, x_axis.hi, y_axis.lo, y_axis.hi)
    _cells(cv, [[PHASE_COLORS[c.label] for c in row] for row in grid], xe, ye)
    cv.frame(_axis_label(x_axis.param, x_axis.lo, x_axis.hi), _axis_label(y_axis.param, y_axis.lo, y_axis.hi), title)
    present = {c.label for row in grid for c in row}
    k = 0
    for label, color in PHASE_COLORS.items():
        if label not in present:
            continue
        ly = TOP + 20 + 20 * k
        cv.add(f'<rect x="{LEFT + PLOT_W + 15}" y="{ly - 10}" width="14" height="14" fill="{color}" stroke="#000000"/>')
        cv.text(LEFT + PLOT_W + 35, ly + 2, "boundary" if label == "DegenerateBoundary" else label, anchor="start")
        k += 1
    return cv.render()


def emit_svg(obj, path, title: str | None = None, x_axis=None, y_axis=None) -> None:
    """Render a 1D/2D SweepResult, a list of labelled 1D results, or a phase raster to *path*."""
    if isinstance(obj, SweepResult):
        text = line_plot([("C", obj)], title) if len(obj.axes) == 1 else heatmap(obj, title)
    elif obj and isinstance(obj[0], tuple):
        text = line_plot(obj, title)
    else:
        if x_axis is None or y_axis is None:
            raise ValueError("phase rasters need their axes")
        text = phase_raster(obj, x_axis, y_axis, title)
    atomic_write_text(path, text)
