"""ASCII and SVG drawings of mosaics and their closures.

The ASCII form draws each tile as a 3x3 block inside a frame, with boundary
labels in the margins.  Cells touching an edge mismatch get a ``!`` in the
top-left corner of their block.

The SVG closure joins paired boundary edges outside the rectangle.  Every
edge is first carried radially out to a circle around the grid; a pair then
runs along a concentric arc whose radius grows with the pair's span in
boundary order.  Nested and disjoint pairs never meet, and two interleaved
pairs meet exactly once, where a circle glyph marks the virtual crossing.
"""
import math

from .errors import ParseError
from .mosaic import edge_location, require_valid, validate
from .surface import interleaved
from .tiles import Axis, Side, Tile, connections, is_over

_BLOCKS = {
    Tile.T0: ("   ", "   ", "   "),
    Tile.T1: ("   ", "-. ", " | "),
    Tile.T2: ("   ", " .-", " | "),
    Tile.T3: (" | ", " '-", "   "),
    Tile.T4: (" | ", "-' ", "   "),
    Tile.T5: ("   ", "---", "   "),
    Tile.T6: (" | ", " | ", " | "),
    Tile.T7: (" | ", "-\\-", " | "),
    Tile.T8: (" | ", "-/-", " | "),
    Tile.T9: (" | ", "---", " | "),
    Tile.T10: (" | ", "-|-", " | "),
}


def _block_key(block):
    # corners may carry markers, so only the middle cross of the block counts
    return (block[0][1], block[1], block[2][1])


_BY_KEY = {_block_key(b): t for t, b in _BLOCKS.items()}


def render_ascii(mosaic):
    m, n = mosaic.shape
    bad = set()
    for v in validate(mosaic).violations:
        if v.kind == "interior":
            bad.update(v.where)
    sides = mosaic.side_labels()
    pad = max(len(s) for s in sides["left"])
    indent = " " * (pad + 1)

    def label_row(labels):
        return (indent + " " + "".join(f"{lab:^3}" for lab in labels)).rstrip()

    lines = [label_row(sides["top"]), indent + "+" + "-" * (3 * n) + "+"]
    for r in range(m):
        for k in range(3):
            body = ""
            for c in range(n):
                row = _BLOCKS[mosaic.grid[r][c]][k]
                if k == 0 and (r, c) in bad:
                    row = "!" + row[1:]
                body += row
            if k == 1:
                lines.append(f"{sides['left'][r]:>{pad}} :{body}: {sides['right'][r]}")
            else:
                lines.append(f"{indent}:{body}:")
    lines.append(indent + "+" + "-" * (3 * n) + "+")
    lines.append(label_row(sides["bottom"]))
    return "\n".join(lines) + "\n"


def read_ascii_grid(text):
    """Recover the tile grid from :func:`render_ascii` output.

    Lenient: margins, labels, markers and trailing spaces are ignored; only
    the framed body is read.
    """
    lines = text.splitlines()
    frames = [k for k, ln in enumerate(lines) if ln.strip().startswith("+") and ln.strip().endswith("+")
              and len(ln.strip()) >= 2 and set(ln.strip()[1:-1]) <= {"-"}]
    if len(frames) < 2:
        raise ParseError("no framed mosaic body found")
    top, bottom = frames[0], frames[1]
    left = lines[top].index("+")
    width = len(lines[top].strip()) - 2
    if width % 3 or (bottom - top - 1) % 3 or bottom - top == 1:
        raise ParseError("framed body is not a whole number of 3x3 blocks")
    n, m = width // 3, (bottom - top - 1) // 3
    body = [lines[k][left + 1:left + 1 + width].ljust(width) for k in range(top + 1, bottom)]
    grid = []
    for r in range(m):
        row = []
        for c in range(n):
            block = tuple(body[3 * r + k][3 * c:3 * c + 3] for k in range(3))
            tile = _BY_KEY.get(_block_key(block))
            if tile is None:
                raise ParseError(f"unrecognized tile block at ({r}, {c}): {block!r}")
            row.append(tile)
        grid.append(row)
    return grid


# ---------------------------------------------------------------------------
# SVG

CELL = 40
MARGIN = 24
RING_GAP = 14


def _f(x):
    return f"{x:.2f}"


def _side_point(x, y, side):
    h = CELL / 2
    return {Side.N: (x + h, y), Side.E: (x + CELL, y + h),
            Side.S: (x + h, y + CELL), Side.W: (x, y + h)}[side]


def _tile_paths(tile, x, y):
    """Path data strings for the strands of one tile."""
    cx, cy = x + CELL / 2, y + CELL / 2
    out = []
    if tile.is_crossing:
        for axis, (a, b) in ((Axis.NS, (Side.N, Side.S)), (Axis.EW, (Side.W, Side.E))):
            p, q = _side_point(x, y, a), _side_point(x, y, b)
            if is_over(tile, axis):
                out.append(f"M {_f(p[0])} {_f(p[1])} L {_f(q[0])} {_f(q[1])}")
            else:
                gap = CELL * 0.18
                dx, dy = (q[0] - p[0]) / CELL, (q[1] - p[1]) / CELL
                out.append(f"M {_f(p[0])} {_f(p[1])} L {_f(cx - dx * gap)} {_f(cy - dy * gap)}")
                out.append(f"M {_f(cx + dx * gap)} {_f(cy + dy * gap)} L {_f(q[0])} {_f(q[1])}")
        return out
    for a, b in sorted(tuple(sorted(arc)) for arc in connections(tile)):
        p, q = _side_point(x, y, a), _side_point(x, y, b)
        if a.opposite == b:
            out.append(f"M {_f(p[0])} {_f(p[1])} L {_f(q[0])} {_f(q[1])}")
        else:
            out.append(f"M {_f(p[0])} {_f(p[1])} Q {_f(cx)} {_f(cy)} {_f(q[0])} {_f(q[1])}")
    return out


def _closure_geometry(mosaic, ox, oy):
    """Centre, base radius, boundary angles and ranked arc-carrying pairs."""
    m, n = mosaic.shape
    w, h = n * CELL, m * CELL
    cx, cy = ox + w / 2, oy + h / 2
    base = math.hypot(w, h) / 2 + RING_GAP
    mids, angles = {}, {}
    start = None
    for i in range(mosaic.num_edges):
        (r, c), side = edge_location(m, n, i)
        px, py = _side_point(ox + c * CELL, oy + r * CELL, side)
        mids[i] = (px, py)
        theta = math.atan2(-(py - cy), px - cx)  # counterclockwise on screen
        if start is None:
            start = theta
        while theta < start:
            theta += 2 * math.pi
        angles[i] = theta
    pairs = [(i, j) for i, j in mosaic.pairs() if mosaic.edge_has_arc(i)]
    ranked = sorted(pairs, key=lambda p: (p[1] - p[0], p[0]))
    radius = {p: base + RING_GAP * (k + 1) for k, p in enumerate(ranked)}
    return (cx, cy), base, mids, angles, radius


def _polar(cx, cy, r, theta):
    return cx + r * math.cos(theta), cy - r * math.sin(theta)


def closure_crossings(mosaic, ox=MARGIN * 4, oy=MARGIN * 4):
    """Points where two closure chords cross, one per interlocking pair."""
    (cx, cy), _, _, angles, radius = _closure_geometry(mosaic, ox, oy)
    points = []
    pairs = sorted(radius)
    for k, p in enumerate(pairs):
        for q in pairs[k + 1:]:
            if not interleaved(p, q):
                continue
            hi, lo = (p, q) if radius[p] > radius[q] else (q, p)
            end = next(e for e in hi if lo[0] < e < lo[1])
            points.append(_polar(cx, cy, radius[lo], angles[end]))
    return points


def render_svg(mosaic, show_closure=False):
    m, n = mosaic.shape
    if show_closure:
        require_valid(mosaic)
    w, h = n * CELL, m * CELL
    if show_closure:
        outer = math.hypot(w, h) / 2 + RING_GAP * (len(mosaic.pairs()) + 2)
        size_w, size_h = 2 * outer + 2 * MARGIN, 2 * outer + 2 * MARGIN
        ox, oy = size_w / 2 - w / 2, size_h / 2 - h / 2
    else:
        ox = oy = float(MARGIN)
        size_w, size_h = w + 2 * MARGIN, h + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(size_w)}" height="{_f(size_h)}" '
        f'viewBox="0 0 {_f(size_w)} {_f(size_h)}">',
        '<g class="grid" fill="none" stroke="#bbbbbb" stroke-width="1">',
    ]
    for r in range(m):
        for c in range(n):
            out.append(f'<rect x="{_f(ox + c * CELL)}" y="{_f(oy + r * CELL)}" '
                       f'width="{CELL}" height="{CELL}"/>')
    out.append("</g>")
    out.append('<g class="strands" fill="none" stroke="#000000" stroke-width="2.5" stroke-linecap="round">')
    for r in range(m):
        for c in range(n):
            for d in _tile_paths(mosaic.grid[r][c], ox + c * CELL, oy + r * CELL):
                out.append(f'<path d="{d}"/>')
    out.append("</g>")

    labels = mosaic.labels()
    out.append('<g class="labels" font-family="monospace" font-size="10" text-anchor="middle" fill="#444444">')
    for i in range(mosaic.num_edges):
        (r, c), side = edge_location(m, n, i)
        px, py = _side_point(ox + c * CELL, oy + r * CELL, side)
        dx, dy = side.delta[1] * 9, side.delta[0] * 9
        out.append(f'<text x="{_f(px + dx)}" y="{_f(py + dy + 3)}">{labels[i]}</text>')
    out.append("</g>")

    if show_closure:
        (cx, cy), base, mids, angles, radius = _closure_geometry(mosaic, ox, oy)
        out.append('<g class="closure" fill="none" stroke="#1f5fbf" stroke-width="1.5">')
        for (i, j), rad in sorted(radius.items()):
            a0, a1 = angles[i], angles[j]
            p0, p1 = _polar(cx, cy, rad, a0), _polar(cx, cy, rad, a1)
            large = 1 if a1 - a0 > math.pi else 0
            d = (f"M {_f(mids[i][0])} {_f(mids[i][1])} L {_f(p0[0])} {_f(p0[1])} "
                 f"A {_f(rad)} {_f(rad)} 0 {large} 0 {_f(p1[0])} {_f(p1[1])} "
                 f"L {_f(mids[j][0])} {_f(mids[j][1])}")
            out.append(f'<path d="{d}"/>')
        out.append("</g>")
        out.append('<g class="virtual-crossings" fill="none" stroke="#c0392b" stroke-width="1.5">')
        for x, y in closure_crossings(mosaic, ox, oy):
            out.append(f'<circle class="virtual-crossing" cx="{_f(x)}" cy="{_f(y)}" r="5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def count_glyphs(svg):
    return svg.count('class="virtual-crossing"')
