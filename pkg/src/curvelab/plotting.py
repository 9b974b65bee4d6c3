"""Deterministic SVG scenes for curves and their singular sets.

A scene is an ordered list of layers, each a polyline (or marker set) with a
fixed style class.  Rendering is fully deterministic: fixed element order,
coordinates rounded to 1e-4, one path element per polyline layer, so byte
output depends only on the scene content.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IoError, SpecError

STYLE_CLASSES = ("base", "evolutoid", "ses", "sigma", "asymptote", "marker")

_STROKES = {
    "base": "#1f77b4",
    "evolutoid": "#8a8a8a",
    "ses": "#d62728",
    "sigma": "#9467bd",
    "asymptote": "#2ca02c",
    "marker": "#ff7f0e",
}


@dataclass(frozen=True)
class Layer:
    points: np.ndarray  # (n, 2)
    style: str
    labels: tuple = ()  # marker classification labels, one per point

    def __post_init__(self):
        if self.style not in STYLE_CLASSES:
            raise SpecError(f"unknown style class {self.style!r}", field="layer.style")
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) == 0:
            raise SpecError("layer needs a non-empty (n, 2) point array", field="layer.points")
        object.__setattr__(self, "points", pts)


@dataclass
class PlotScene:
    layers: list = field(default_factory=list)

    def add(self, points, style: str, labels=()):
        self.layers.append(Layer(points=points, style=style, labels=tuple(labels)))
        return self

    def bounds(self):
        pts = np.vstack([layer.points for layer in self.layers])
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        margin = 0.05 * max(hi[0] - lo[0], hi[1] - lo[1], 1e-9)
        return lo - margin, hi + margin


def _fmt(x: float) -> str:
    # fixed 1e-4 rounding; "-0.0000" would break byte determinism
    s = "%.4f" % x
    return "0.0000" if s == "-0.0000" else s


def render_svg(scene: PlotScene, path) -> None:
    """Write the scene; identical scenes produce byte-identical files."""
    if not scene.layers:
        raise SpecError("scene has no layers", field="layers")
    lo, hi = scene.bounds()
    width = hi[0] - lo[0]
    height = hi[1] - lo[1]
    stroke_w = 0.004 * max(width, height)
    marker_r = 0.012 * max(width, height)

    def sx(x):
        return _fmt(x - lo[0])

    def sy(y):
        return _fmt(hi[1] - y)  # svg y axis points down

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %s %s" '
        'width="800" height="%d">' % (_fmt(width), _fmt(height), round(800 * height / width)),
    ]
    for layer in scene.layers:
        color = _STROKES[layer.style]
        if layer.style == "marker":
            for i, (x, y) in enumerate(layer.points):
                label = layer.labels[i] if i < len(layer.labels) else ""
                parts.append(
                    '<circle cx="%s" cy="%s" r="%s" fill="%s" stroke="none">'
                    % (sx(x), sy(y), _fmt(marker_r), color)
                )
                parts.append("<title>%s</title></circle>" % _escape(label))
            continue
        coords = " L ".join("%s %s" % (sx(x), sy(y)) for x, y in layer.points)
        dash = ' stroke-dasharray="%s %s"' % (_fmt(4 * stroke_w), _fmt(2 * stroke_w)) if layer.style == "asymptote" else ""
        parts.append(
            '<path fill="none" stroke="%s" stroke-width="%s"%s d="M %s"/>'
            % (color, _fmt(stroke_w), dash, coords)
        )
    parts.append("</svg>")
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write("\n".join(parts) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _escape(text: str) -> str:
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
    )
