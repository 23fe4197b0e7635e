"""Build a 1 x w row mosaic realizing a signed Gauss code.

The code is rotated to start with a longest run of distinct crossings.  The
first pass through each crossing is laid horizontally, left to right; every
maximal run of first passes (a *piece*) occupies consecutive columns.  Second
passes run vertically through the crossing's column, entering from the top or
bottom edge of the row, whichever realizes the crossing's sign.  Consecutive
pieces are separated by one routing tile (T7 or T8) that sends the strand out
through one horizontal edge and brings it back through the other; it leaves
through the edge opposite to the one the next vertical pass enters by.  All the
jumps between these pieces of strand go through boundary edge pairs.
"""
from dataclasses import dataclass, field

from .errors import EmptyCode
from .gauss import GaussCode, max_nonrepeating, parse_code
from .mosaic import Mosaic, edge_index
from .tiles import Axis, Side, Tile, crossing_tile_with_over


@dataclass
class BuildPlan:
    code: GaussCode  # the rotation actually laid out
    columns: dict = field(default_factory=dict)  # crossing id -> column
    routing: dict = field(default_factory=dict)  # column -> T7 or T8
    tiles: list = field(default_factory=list)
    pairs: list = field(default_factory=list)  # boundary index pairs

    @property
    def width(self):
        return len(self.tiles)


def _pieces(symbols):
    """Number of maximal runs of first passes in a linear symbol sequence."""
    seen, runs, prev_first = set(), 0, False
    for s in symbols:
        first = s.id not in seen
        seen.add(s.id)
        if first and not prev_first:
            runs += 1
        prev_first = first
    return runs


def _best_rotation(code):
    syms = code.symbols
    size = len(syms)
    target = max_nonrepeating(code)
    best = None
    for k in range(size):
        ids = [s.id for s in syms[k:k + target]] if k + target <= size else \
            [s.id for s in (syms[k:] + syms[:k])[:target]]
        if len(set(ids)) != target:
            continue
        rot = syms[k:] + syms[:k]
        score = _pieces(rot)
        if best is None or score < best[0]:
            best = (score, k)
    return code.rotated(best[1])


def _as_code(code):
    return parse_code(code) if isinstance(code, str) else code


def plan_row(code):
    code = _as_code(code)
    if not code.symbols:
        raise EmptyCode("cannot build a mosaic for the empty code")
    code = _best_rotation(code)
    syms = code.symbols

    # split into elements: ("H", [symbols]) pieces and ("V", symbol) passes
    elements, seen = [], set()
    for s in syms:
        if s.id not in seen:
            seen.add(s.id)
            if elements and elements[-1][0] == "H":
                elements[-1][1].append(s)
            else:
                elements.append(("H", [s]))
        else:
            elements.append(("V", s))

    plan = BuildPlan(code)
    col = 0
    piece_cols = []  # (first column, last column) per piece
    for kind, body in elements:
        if kind != "H":
            continue
        if piece_cols:
            plan.tiles.append(None)  # routing tile, decided below
            col += 1
        start = col
        for s in body:
            over_axis = Axis.EW if s.passing == "O" else Axis.NS
            plan.tiles.append(crossing_tile_with_over(over_axis))
            plan.columns[s.id] = col
            col += 1
        piece_cols.append((start, col - 1))
    w = col

    def top(c):
        return edge_index(1, w, 0, c, Side.N)

    def bottom(c):
        return edge_index(1, w, 0, c, Side.S)

    left, right = edge_index(1, w, 0, 0, Side.W), edge_index(1, w, 0, w - 1, Side.E)

    def v_heading(sym):
        # sign +1 iff the under heading is the ccw turn of the over heading;
        # the horizontal pass heads east, and rot_ccw(E) = N, rot_ccw(S) = E
        if sym.passing == "U":
            return Side.N if sym.sign > 0 else Side.S
        return Side.S if sym.sign > 0 else Side.N

    # entry/exit boundary edges of every element, in strand order
    ends = []
    piece, routing_entry = 0, None
    for idx, (kind, body) in enumerate(elements):
        if kind == "H":
            first, last = piece_cols[piece]
            entry = left if piece == 0 else routing_entry
            if piece == len(piece_cols) - 1:
                exit_ = right
            else:
                rcol = last + 1
                nxt = elements[idx + 1][1]  # a piece is always followed by a second pass
                # leave through the edge opposite the one the next pass enters by
                if v_heading(nxt) == Side.N:
                    plan.routing[rcol] = Tile.T8  # W-N, S-E
                    exit_, routing_entry = top(rcol), bottom(rcol)
                else:
                    plan.routing[rcol] = Tile.T7  # W-S, N-E
                    exit_, routing_entry = bottom(rcol), top(rcol)
                plan.tiles[rcol] = plan.routing[rcol]
            ends.append((entry, exit_))
            piece += 1
        else:
            c = plan.columns[body.id]
            if v_heading(body) == Side.N:
                ends.append((bottom(c), top(c)))
            else:
                ends.append((top(c), bottom(c)))
    for k, (_, exit_) in enumerate(ends):
        plan.pairs.append((exit_, ends[(k + 1) % len(ends)][0]))
    return plan


def build_row(code):
    plan = plan_row(code)
    w = plan.width
    partner = [None] * (2 * (w + 1))
    for a, b in plan.pairs:
        partner[a], partner[b] = b, a
    return Mosaic([plan.tiles], partner)


def row_number_upper_bound(code):
    return plan_row(code).width
