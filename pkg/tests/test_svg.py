"""SVG rendering: structure and determinism."""

import numpy as np
import pytest

from ngonweb import dynamics
from ngonweb.svg import EmptyScene, SceneSpec, render_svg


def test_single_ngon_scene():
    scene = SceneSpec(viewport=(-2, -2, 2, 2), layers=[{"type": "ngon", "N": 26}])
    doc = render_svg(scene)
    paths = [ln for ln in doc.splitlines() if ln.startswith("<path")]
    assert len(paths) == 1
    assert paths[0].count("L ") == 25      # closed 26-gon: M + 25 L + Z
    assert doc.startswith("<?xml")


def test_weave_layer_22_vertices():
    scene = SceneSpec(viewport=(-0.45, -1.05, -0.25, -0.85), layers=[
        {"type": "weave", "N": 33, "k": 21, "tile_class": "DS_of_odd_N"}])
    doc = render_svg(scene)
    paths = [ln for ln in doc.splitlines() if ln.startswith("<path")]
    assert len(paths) == 1 and paths[0].count("L ") == 21


def test_render_deterministic():
    pc = dynamics.web_generate(26, "tau", samples_per_edge=1, iters=300,
                               crop=(-4, -4, 4, 4))
    scene = SceneSpec(viewport=(-4, -4, 4, 4), layers=[
        {"type": "points", "cloud": "w"},
        {"type": "ngon", "N": 26},
        {"type": "family", "N": 26},
        {"type": "s2_family", "N": 26},
        {"type": "star_polygon", "N": 26},
        {"type": "symmetry_lines", "N": 26},
        {"type": "star_points", "N": 26, "k": 2},
    ])
    a = render_svg(scene, clouds={"w": pc})
    b = render_svg(scene, clouds={"w": pc})
    assert a == b


def test_empty_scene_raises():
    with pytest.raises(EmptyScene):
        render_svg(SceneSpec(viewport=(-1, -1, 1, 1), layers=[]))


def test_decimation_deterministic():
    pts = np.arange(40000, dtype=np.float64).reshape(20000, 2) / 40000.0
    pc = dynamics.PointCloud(points=pts, crop=(), source={}, iters=0,
                             recorded=0, total=0)
    scene = SceneSpec(viewport=(0, 0, 1, 1), max_points_render=1000,
                      layers=[{"type": "points", "cloud": "w"}])
    a = render_svg(scene, clouds={"w": pc})
    assert a == render_svg(scene, clouds={"w": pc})
    circles = [ln for ln in a.splitlines() if ln.startswith("<circle")]
    assert len(circles) == 1000


def test_bad_viewport():
    with pytest.raises(ValueError):
        render_svg(SceneSpec(viewport=(1, 1, 1, 2),
                             layers=[{"type": "ngon", "N": 8}]))
