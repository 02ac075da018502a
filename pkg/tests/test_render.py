import math
import re
import xml.etree.ElementTree as ET

from chordflip.diagram import Window, parse_dow
from chordflip.render import render_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def _chords(svg):
    root = ET.fromstring(svg)
    return {el.get("data-label"): el for el in root.iter("{http://www.w3.org/2000/svg}line")
            if el.get("class") == "chord"}


def test_two_crossing_segments():
    svg = render_svg(parse_dow("a b a b"))
    chords = _chords(svg)
    assert set(chords) == {"a", "b"}
    # 4 points at 0, 90, 180, 270 degrees: a is horizontal, b vertical
    a, b = chords["a"], chords["b"]
    assert a.get("y1") == a.get("y2") == "200.000"
    assert b.get("x1") == b.get("x2") == "200.000"


def test_window_arc_endpoints():
    svg = render_svg(parse_dow("a b a c b d c d"), window=Window(2, 4, 8))
    path = ET.fromstring(svg).find("svg:path[@class='window']", NS)
    nums = [float(x) for x in re.findall(r"-?\d+\.\d+", path.get("d"))]
    r = 400 * 0.38
    step = 2 * math.pi / 8
    x0, y0 = nums[0], nums[1]
    x1, y1 = nums[-2], nums[-1]
    assert math.isclose(x0, 200 + r * math.cos(1.5 * step), abs_tol=1e-3)
    assert math.isclose(y0, 200 - r * math.sin(1.5 * step), abs_tol=1e-3)
    assert math.isclose(x1, 200 + r * math.cos(5.5 * step), abs_tol=1e-3)
    assert math.isclose(y1, 200 - r * math.sin(5.5 * step), abs_tol=1e-3)
    assert ET.fromstring(svg).find("svg:line[@class='separator']", NS) is not None


def test_coloring_sets_stroke():
    chords = _chords(render_svg(parse_dow("a b a b"), {"a": "R", "b": "B"}))
    assert chords["a"].get("stroke") != chords["b"].get("stroke")


def test_empty_diagram_is_circle_only():
    root = ET.fromstring(render_svg(parse_dow("")))
    assert len(root.findall("svg:circle", NS)) == 1
    assert not root.findall("svg:line", NS)


def test_byte_identical():
    d = parse_dow("a b c a b c")
    assert render_svg(d, window=Window(1, 3, 6)) == render_svg(d, window=Window(1, 3, 6))
