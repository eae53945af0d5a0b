import cmath
import math
import re
import xml.etree.ElementTree as ET

import pytest

from hypergon import validate
from hypergon.svg import SCALE, render_svg

from conftest import roots_of_unity

NS = {"svg": "http://www.w3.org/2000/svg"}
ARC = re.compile(r"M (\S+) (\S+) A (\S+) (\S+) 0 0 ([01]) (\S+) (\S+)")


def side_paths(svg):
    root = ET.fromstring(svg)
    return root.findall("svg:g[@id='sides']/svg:path", NS)


def to_disk(x, y):
    return complex((float(x) - SCALE) / SCALE, (SCALE - float(y)) / SCALE)


def arc_center(d):
    """Centre of an SVG elliptical arc with equal radii, following the SVG
    endpoint-to-centre conversion, mapped back to disk coordinates."""
    x1, y1, rx, _, sweep, x2, y2 = ARC.fullmatch(d).groups()
    p1, p2, r = complex(float(x1), float(y1)), complex(float(x2), float(y2)), float(rx)
    mid, half = (p1 + p2) / 2, (p2 - p1) / 2
    h = math.sqrt(max(r * r - abs(half) ** 2, 0.0))
    normal = 1j * half / abs(half)
    # large-arc flag is 0, so the centre sits on the side selected by sweep
    c = mid + (normal * h if sweep == "1" else -normal * h)
    return to_disk(c.real, c.imag), r / SCALE


def test_square_four_inward_arcs(square):
    paths = side_paths(render_svg(square))
    assert len(paths) == 4
    for path, side in zip(paths, square.sides):
        assert path.get("class") == "side inward"
        c, r = arc_center(path.get("d"))
        assert c == pytest.approx(side.arc.center, abs=1e-5)
        assert r == pytest.approx(side.arc.radius, abs=1e-5)


def test_outward_arcs_recover_centre():
    p = validate([0.2 + 0.2j, 0.7 + 0.1j, 0.4 + 0.6j])
    paths = side_paths(render_svg(p))
    assert [x.get("class") for x in paths] == ["side outward", "side inward", "side outward"]
    for path, side in zip(paths, p.sides):
        c, _ = arc_center(path.get("d"))
        assert c == pytest.approx(side.arc.center, abs=1e-5)


def test_styles_differ(square):
    p = validate([0.2 + 0.2j, 0.7 + 0.1j, 0.4 + 0.6j])
    paths = side_paths(render_svg(p))
    inward = {k: v for k, v in paths[1].attrib.items() if k != "d" and k != "class"}
    outward = {k: v for k, v in paths[0].attrib.items() if k != "d" and k != "class"}
    assert inward != outward


def test_collinear_straight_segments(collinear_triangle):
    paths = side_paths(render_svg(collinear_triangle))
    assert len(paths) == 3
    assert all(re.fullmatch(r"M \S+ \S+ L \S+ \S+", x.get("d")) for x in paths)


def test_ideal_triangle_orthogonal(ideal_triangle):
    for path, side in zip(side_paths(render_svg(ideal_triangle)), ideal_triangle.sides):
        c, r = arc_center(path.get("d"))
        assert abs(c) ** 2 == pytest.approx(r ** 2 + 1, abs=1e-4)
        x1, y1 = path.get("d").split()[1:3]
        assert abs(to_disk(x1, y1)) == pytest.approx(1, abs=1e-6)


def test_structure(square):
    svg = render_svg(square, title="a < b")
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "0 0 1000 1000"
    assert root.find("svg:title", NS).text == "a < b"
    circle = root.find("svg:circle[@class='unit-circle']", NS)
    assert float(circle.get("r")) == SCALE
    labels = [t.text for t in root.findall("svg:g[@id='vertices']/svg:text", NS)]
    assert labels == ["z₁", "z₂", "z₃", "z₄"]


def test_vertex_positions(square):
    root = ET.fromstring(render_svg(square))
    dots = root.findall("svg:g[@id='vertices']/svg:circle", NS)
    got = [to_disk(d.get("cx"), d.get("cy")) for d in dots]
    assert got == pytest.approx(list(square.vertices), abs=1e-6)


def test_deterministic():
    p = validate([0.3 * cmath.exp(0.4j) * z for z in roots_of_unity(7)])
    assert render_svg(p) == render_svg(validate(list(p.vertices)))
