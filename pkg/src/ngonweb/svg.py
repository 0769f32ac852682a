"""Deterministic SVG rendering of webs, families, and symmetry lines.

A scene is an ordered list of layers drawn back-to-front onto a fixed
viewport.  Output is stable text: fixed number formatting, deterministic
point decimation, no timestamps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .family import (
    Tile,
    build_ngon,
    family_tiles,
    mutation_spec,
    s2_family,
    star_points,
    weave,
)

__all__ = ["SceneSpec", "EmptyScene", "render_svg"]

CANVAS_W = 1000.0


class EmptyScene(ValueError):
    """A scene with no layers cannot be rendered."""


@dataclass
class SceneSpec:
    viewport: tuple              # (x0, y0, x1, y1) world window
    layers: list = field(default_factory=list)
    max_points_render: int = 100_000
    background: Optional[str] = "white"


def _fmt(x: float) -> str:
    return f"{x:.6f}"


class _Canvas:
    def __init__(self, viewport):
        x0, y0, x1, y1 = viewport
        if not (x1 > x0 and y1 > y0):
            raise ValueError("viewport must be a nonempty rectangle")
        self.x0, self.y0, self.x1, self.y1 = x0, y0, x1, y1
        self.sx = CANVAS_W / (x1 - x0)
        self.h = CANVAS_W * (y1 - y0) / (x1 - x0)

    def pt(self, x, y):
        return ((x - self.x0) * self.sx, (self.y1 - y) * self.sx)


def _polyline(cv, pts, style):
    d = []
    for i, (x, y) in enumerate(pts):
        X, Y = cv.pt(x, y)
        d.append(f"{'M' if i == 0 else 'L'} {_fmt(X)} {_fmt(Y)}")
    d.append("Z")
    return f'<path d="{" ".join(d)}" {style}/>'


def _tile_elem(cv, tile: Tile, style):
    if tile.mutation is not None:
        pts = [(float_of(x), float_of(y)) for x, y in weave(tile.mutation, tile)]
    else:
        pts = tile.vertices_float()
    return _polyline(cv, pts, style)


def float_of(c) -> float:
    from .field import to_float
    return float(to_float(c.as_real() if not c.real_flag else c, 30))


def _points_elems(cv, pts: np.ndarray, style, max_render):
    n = pts.shape[0]
    if n == 0:
        return []
    if n > max_render:
        stride = -(-n // max_render)        # ceil: deterministic decimation
        pts = pts[::stride]
    out = []
    for x, y in pts:
        X, Y = cv.pt(float(x), float(y))
        out.append(f'<circle cx="{_fmt(X)}" cy="{_fmt(Y)}" r="0.6" {style}/>')
    return out


def _star_polygon_elems(cv, N, style):
    """The truncated extended-edge segments (the star polygon of Fig-1 use)."""
    tv = math.tan(math.pi / N)
    T = math.tan((N // 2 - 1) * math.pi / N) if N % 2 == 0 \
        else 1.0 / math.tan(math.pi / (2 * N))
    segs = []
    for j in range(N):
        a = 2 * math.pi * j / N
        ca, sa = math.cos(a), math.sin(a)
        p0 = (ca * (-T) - sa * (-1.0), sa * (-T) + ca * (-1.0))
        p1 = (ca * T - sa * (-1.0), sa * T + ca * (-1.0))
        X0, Y0 = cv.pt(*p0)
        X1, Y1 = cv.pt(*p1)
        segs.append(f'<line x1="{_fmt(X0)}" y1="{_fmt(Y0)}" '
                    f'x2="{_fmt(X1)}" y2="{_fmt(Y1)}" {style}/>')
    return segs


def _symmetry_elems(cv, N, style):
    """Mirror axes of the N-gon clipped to the viewport diagonal length."""
    R = math.hypot(cv.x1 - cv.x0, cv.y1 - cv.y0)
    segs = []
    for j in range(N):
        a = math.pi * j / N
        dx, dy = math.cos(a), math.sin(a)
        X0, Y0 = cv.pt(-R * dx, -R * dy)
        X1, Y1 = cv.pt(R * dx, R * dy)
        segs.append(f'<line x1="{_fmt(X0)}" y1="{_fmt(Y0)}" '
                    f'x2="{_fmt(X1)}" y2="{_fmt(Y1)}" {style}/>')
    return segs


_DEFAULTS = {
    "points": 'fill="black" stroke="none"',
    "tile": 'fill="none" stroke="teal" stroke-width="1"',
    "star_polygon": 'stroke="gray" stroke-width="0.5"',
    "symmetry_lines": 'stroke="blue" stroke-width="0.5"',
    "star_points": 'fill="crimson" stroke="none"',
}


def _style_of(layer, key):
    style = layer.get("style")
    return style if style else _DEFAULTS[key]


def render_svg(scene: SceneSpec, clouds: Optional[dict] = None,
               families: Optional[dict] = None) -> str:
    """Render the scene to an SVG document string (deterministic)."""
    if not scene.layers:
        raise EmptyScene("scene has no layers")
    clouds = clouds or {}
    cv = _Canvas(scene.viewport)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(CANVAS_W)}" '
        f'height="{_fmt(cv.h)}" viewBox="0 0 {_fmt(CANVAS_W)} {_fmt(cv.h)}">',
    ]
    if scene.background:
        parts.append(f'<rect width="100%" height="100%" fill="{scene.background}"/>')
    for layer in scene.layers:
        kind = layer["type"]
        if kind == "points":
            pc = clouds[layer["cloud"]]
            pts = pc.points if hasattr(pc, "points") else pc
            parts += _points_elems(cv, pts, _style_of(layer, "points"),
                                   scene.max_points_render)
        elif kind == "ngon":
            parts.append(_tile_elem(cv, build_ngon(layer["N"]), _style_of(layer, "tile")))
        elif kind == "family":
            for t in family_tiles(layer["N"])[1:]:
                parts.append(_tile_elem(cv, t, _style_of(layer, "tile")))
        elif kind == "s2_family":
            ctx = s2_family(layer["N"])
            for t in ctx.left[1:]:
                parts.append(_tile_elem(cv, t, _style_of(layer, "tile")))
        elif kind == "tile":
            parts.append(_tile_elem(cv, layer["tile"], _style_of(layer, "tile")))
        elif kind == "weave":
            ms = mutation_spec(layer["N"], layer["k"], layer["tile_class"])
            if ms is None:
                raise ValueError("layer requests a weave of an unmutated tile")
            side = layer.get("side", "left")
            under = s2_family(layer["N"]).ds(layer["k"], side) \
                if layer["tile_class"].startswith("DS") else family_tiles(layer["N"])[layer["k"]]
            pts = [(float_of(x), float_of(y)) for x, y in weave(ms, under)]
            parts.append(_polyline(cv, pts, _style_of(layer, "tile")))
        elif kind == "star_polygon":
            parts += _star_polygon_elems(cv, layer["N"], _style_of(layer, "star_polygon"))
        elif kind == "symmetry_lines":
            parts += _symmetry_elems(cv, layer["N"], _style_of(layer, "symmetry_lines"))
        elif kind == "star_points":
            tile = layer.get("tile") or family_tiles(layer["N"])[layer.get("k", 2)]
            table = star_points(tile, side=layer.get("side", 1))
            for x, y in table.points:
                X, Y = cv.pt(float_of(x), float_of(y))
                parts.append(f'<circle cx="{_fmt(X)}" cy="{_fmt(Y)}" r="1.2" '
                             f'{_style_of(layer, "star_points")}/>')
        else:
            raise ValueError(f"unknown layer type {kind!r}")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
