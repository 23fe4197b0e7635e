"""Crossing smoothings, intersection indices and the index polynomial p_t.

Smoothing crossing ``d`` reconnects each incoming strand end to the outgoing
end of the other strand, giving a two-component link.  Component 1 is the
one on the left when both outgoing arcs point upward.  For a crossing ``x``
shared by both components, ``alpha(x) = +1`` when component 1 passes from
left to right across an upward-pointing component 2.
"""
from collections import defaultdict
from dataclasses import dataclass

from .errors import NotACrossingCell, NotAKnot
from .gauss import chords
from .mosaic import require_valid
from .tiles import Axis, Side, Tile, connections, has_side, transit
from .trace import trace, walk

_DOUBLE_ARC = {connections(Tile.T7): Tile.T7, connections(Tile.T8): Tile.T8}


class IndexPolynomial:
    """Integer polynomial in t with nonnegative exponents, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for exp, c in (coeffs or {}).items():
            exp, c = int(exp), int(c)
            if exp < 0:
                raise ValueError("negative exponent")
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.coeffs = {e: c for e, c in sorted(clean.items(), reverse=True) if c}

    @classmethod
    def from_indices(cls, signs, indices):
        """Sum of s(d) (t^|i(d)| - 1)."""
        acc = defaultdict(int)
        for s, i in zip(signs, indices):
            acc[abs(i)] += s
            acc[0] -= s
        return cls(acc)

    def __eq__(self, other):
        if isinstance(other, IndexPolynomial):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t):
        return sum(c * t ** e for e, c in self.coeffs.items())

    def __repr__(self):
        return f"IndexPolynomial({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for exp, c in self.coeffs.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                var = "t" if exp == 1 else f"t^{exp}"
                body = var if mag == 1 else f"{mag}{var}"
            out.append(sign + body)
        text = "".join(out)
        return text[1:] if text[0] == "+" else text

    def to_json(self):
        return {str(e): c for e, c in self.coeffs.items()}


@dataclass
class SmoothedDiagram:
    base: object  # the mosaic with the crossing tile replaced
    cell: tuple
    tile: Tile
    component_of: dict  # (cell, Axis) of each crossing pass -> 1 or 2
    headings: dict  # (cell, Axis) -> heading of that pass


def _single_trace(mosaic):
    result = trace(mosaic)
    if result.components != 1:
        raise NotAKnot(f"mosaic has {result.components} components")
    return result


def _check_cell(mosaic, cell):
    r, c = cell
    if not (0 <= r < mosaic.rows and 0 <= c < mosaic.cols) or not mosaic.grid[r][c].is_crossing:
        raise NotACrossingCell(f"cell {tuple(cell)} does not hold a crossing tile")


def _smooth(mosaic, cell, result):
    cell = tuple(cell)
    heads = [v.heading for v in result.visits[0] if v.cell == cell]
    h1, h2 = heads
    s1, s2 = h1.opposite, h2.opposite  # entry sides
    arcs = frozenset((frozenset((s1, h2)), frozenset((s2, h1))))
    tile = _DOUBLE_ARC[arcs]
    smoothed = mosaic.replace_tile(cell[0], cell[1], tile)

    # the outgoing arc whose heading is the ccw turn of the other one is on the left
    left = h1 if h1 == h2.rot_ccw() else h2
    right = h2 if left == h1 else h1
    component_of, headings = {}, {}
    used = set()
    for label, out in ((1, left), (2, right)):
        steps = walk(smoothed, cell, transit(tile, out), used)
        for (r, c), entry, exit_ in steps:
            if smoothed.grid[r][c].is_crossing:
                key = ((r, c), Axis.of(entry))
                component_of[key] = label
                headings[key] = exit_
    total = sum(1 for r in range(mosaic.rows) for c in range(mosaic.cols)
                for s in Side if has_side(smoothed.grid[r][c], s))
    if len(used) != total:
        raise NotAKnot("smoothing did not produce exactly two components")
    return SmoothedDiagram(smoothed, cell, tile, component_of, headings)


def smooth(mosaic, cell):
    require_valid(mosaic)
    _check_cell(mosaic, cell)
    return _smooth(mosaic, cell, _single_trace(mosaic))


def _index_from_smoothing(sm):
    by_cell = defaultdict(dict)
    for (cell, axis), comp in sm.component_of.items():
        by_cell[cell][comp] = sm.headings[(cell, axis)]
    total = 0
    for cell, heads in by_cell.items():
        if len(heads) == 2:
            total += 1 if heads[1] == heads[2].rot_cw() else -1
    return total


def intersection_index(mosaic, cell):
    return _index_from_smoothing(smooth(mosaic, cell))


def crossing_indices(mosaic):
    """(trace result, {cell: i(d)}) for a single-component mosaic."""
    require_valid(mosaic)
    result = _single_trace(mosaic)
    out = {cell: _index_from_smoothing(_smooth(mosaic, cell, result))
           for cell in sorted(result.crossing_ids, key=result.crossing_ids.get)}
    return result, out


def index_polynomial(mosaic):
    result, idx = crossing_indices(mosaic)
    return IndexPolynomial.from_indices([result.signs[c] for c in idx], list(idx.values()))


# ---------------------------------------------------------------------------
# chord-diagram oracle: works on the Gauss code alone

def chord_indices(code):
    """Intersection index of every crossing, computed from the Gauss code.

    Splitting the cyclic code at both passes of ``d`` gives the two
    components.  Component 1 is the segment after the under pass of a
    positive crossing and after the over pass of a negative one.
    """
    syms = code.symbols
    size = len(syms)
    ch = chords(code)
    out = {}
    for d, (p, q) in ch.items():
        sign = syms[p].sign
        start = next(k for k in (p, q) if syms[k].passing == ("U" if sign > 0 else "O"))
        end = q if start == p else p
        seg1 = set()
        k = (start + 1) % size
        while k != end:
            seg1.add(k)
            k = (k + 1) % size
        total = 0
        for x, (a, b) in ch.items():
            if x == d or ((a in seg1) == (b in seg1)):
                continue
            s = syms[a if a in seg1 else b]
            total += 1 if (s.passing == "O") == (s.sign > 0) else -1
        out[d] = total
    return out


def chord_polynomial(code):
    idx = chord_indices(code)
    signs = code.signs()
    return IndexPolynomial.from_indices([signs[d] for d in idx], list(idx.values()))
