import math
import random
import re

import pytest

from helpers import fixture_mosaics, random_mosaic
from vmosaic.errors import InvalidMosaic, ParseError
from vmosaic.fixtures import find
from vmosaic.mosaic import Mosaic, parse
from vmosaic.render import count_glyphs, read_ascii_grid, render_ascii, render_svg
from vmosaic.surface import count_interlocking
from vmosaic.tiles import Tile

FIXTURES = fixture_mosaics()


@pytest.mark.parametrize("entry_mosaic", FIXTURES, ids=lambda em: em[0].file)
def test_ascii_round_trip(entry_mosaic):
    _, mo = entry_mosaic
    text = render_ascii(mo)
    assert [tuple(r) for r in read_ascii_grid(text)] == [tuple(r) for r in mo.grid]
    assert render_ascii(mo) == text


def test_ascii_blank_and_labels():
    mo = Mosaic([[Tile.T0]], [2, 3, 0, 1])
    text = render_ascii(mo)
    assert [tuple(r) for r in read_ascii_grid(text)] == [(Tile.T0,)]
    fig2 = render_ascii(find("fig2").load())
    for lab in "abcd":
        assert lab in fig2


def test_ascii_marks_mismatched_cells():
    bad = Mosaic([[Tile.T5, Tile.T6]], [5, 4, 3, 2, 1, 0])
    text = render_ascii(bad)
    assert "!" in text
    assert [tuple(r) for r in read_ascii_grid(text)] == [(Tile.T5, Tile.T6)]


def test_ascii_reader_rejects_garbage():
    with pytest.raises(ParseError):
        read_ascii_grid("nothing here\n")
    with pytest.raises(ParseError):
        read_ascii_grid("+---+\n: ? :\n:???:\n: ? :\n+---+\n")


# ---------------------------------------------------------------------------
# independent count of closure crossings from the emitted SVG geometry

_NUM = r"(-?\d+(?:\.\d+)?)"
_CLOSURE = re.compile(rf"M {_NUM} {_NUM} L {_NUM} {_NUM} A {_NUM} {_NUM} 0 (\d) 0 {_NUM} {_NUM} L {_NUM} {_NUM}")


def _svg_size(svg):
    w, h = re.search(r'width="([\d.]+)" height="([\d.]+)"', svg).groups()
    return float(w), float(h)


def _polyline(match, cx, cy):
    x0, y0, x1, y1, r, _, large, x2, y2, x3, y3 = match.groups()
    x1, y1, x2, y2, r = map(float, (x1, y1, x2, y2, r))
    a0 = math.atan2(-(y1 - cy), x1 - cx)
    a1 = math.atan2(-(y2 - cy), x2 - cx)
    while a1 <= a0:
        a1 += 2 * math.pi
    steps = int((a1 - a0) * 24) + 1
    # interior samples sit off the regular grid so none lands on a crossing
    ts = [a0] + [a0 + (a1 - a0) * (k + 0.37) / steps for k in range(steps)] + [a1]
    pts = [(float(x0), float(y0))]
    pts += [(cx + r * math.cos(t), cy - r * math.sin(t)) for t in ts]
    pts.append((float(x3), float(y3)))
    return pts


def _cross(p, q, r, s):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    d1, d2 = orient(r, s, p), orient(r, s, q)
    d3, d4 = orient(p, q, r), orient(p, q, s)
    return d1 * d2 < 0 and d3 * d4 < 0


def geometric_crossings(svg):
    w, h = _svg_size(svg)
    cx, cy = w / 2, h / 2
    lines = [_polyline(m, cx, cy) for m in _CLOSURE.finditer(svg)]
    total = 0
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            a, b = lines[i], lines[j]
            for k in range(len(a) - 1):
                for l in range(len(b) - 1):
                    if _cross(a[k], a[k + 1], b[l], b[l + 1]):
                        total += 1
    return total


def test_fig2_has_one_glyph():
    svg = render_svg(find("fig2").load(), show_closure=True)
    assert count_glyphs(svg) == 1
    assert geometric_crossings(svg) == 1


def test_classical_closure_has_no_glyphs():
    svg = render_svg(find("7_1", "table1").load(), show_closure=True)
    assert count_glyphs(svg) == 0


@pytest.mark.parametrize("entry_mosaic", FIXTURES[::6], ids=lambda em: em[0].file)
def test_glyphs_match_interlocking_on_fixtures(entry_mosaic):
    _, mo = entry_mosaic
    svg = render_svg(mo, show_closure=True)
    assert count_glyphs(svg) == count_interlocking(mo)


def test_glyphs_match_geometry_on_random_mosaics():
    rng = random.Random(12)
    for _ in range(60):
        mo = random_mosaic(rng, max_cells=6)
        svg = render_svg(mo, show_closure=True)
        assert count_glyphs(svg) == count_interlocking(mo) == geometric_crossings(svg)


def test_svg_deterministic_and_plain():
    mo = find("fig9").load()
    a, b = render_svg(mo), render_svg(mo)
    assert a == b and a.startswith("<?xml")
    assert count_glyphs(a) == 0
    blank = render_svg(Mosaic([[Tile.T0]], [2, 3, 0, 1]), show_closure=True)
    assert "<svg" in blank and count_glyphs(blank) == 0


def test_closure_requires_valid_mosaic():
    mo = find("fig2").load()
    broken = Mosaic([[Tile.T5 for _ in row] for row in mo.grid], mo.partner)
    with pytest.raises(InvalidMosaic):
        render_svg(broken, show_closure=True)
