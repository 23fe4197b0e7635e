"""Rectangular mosaics: data model, .vmos text format and validation.

Boundary edges are numbered counterclockwise starting at the top edge of
the left side::

    left   (top -> bottom)   0 .. m-1
    bottom (left -> right)   m .. m+n-1
    right  (bottom -> top)   m+n .. 2m+n-1
    top    (right -> left)   2m+n .. 2(m+n)-1

The pairing is stored as ``partner[i] = j``.
"""
import re
from dataclasses import dataclass, field

from .errors import BadDimensions, BadPairing, InvalidMosaic, ParseError
from .tiles import Side, Tile, has_side

SIDE_NAMES = ("top", "right", "bottom", "left")
_LABEL_RE = re.compile(r"^[A-Za-z0-9]+$")


def boundary_label(k):
    """a, b, ..., z, aa, ab, ... for k = 0, 1, ..."""
    out = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        out = chr(ord("a") + r) + out
    return out


def edge_location(m, n, index):
    """Cell (row, col) and cell Side adjacent to boundary edge ``index``."""
    if index < m:
        return (index, 0), Side.W
    index -= m
    if index < n:
        return (m - 1, index), Side.S
    index -= n
    if index < m:
        return (m - 1 - index, n - 1), Side.E
    index -= m
    if index < n:
        return (0, n - 1 - index), Side.N
    raise IndexError("boundary edge index out of range")


def edge_index(m, n, row, col, side):
    """Inverse of :func:`edge_location`; the cell side must be on the boundary."""
    if side == Side.W and col == 0:
        return row
    if side == Side.S and row == m - 1:
        return m + col
    if side == Side.E and col == n - 1:
        return m + n + (m - 1 - row)
    if side == Side.N and row == 0:
        return 2 * m + n + (n - 1 - col)
    raise ValueError(f"cell ({row}, {col}) side {Side(side).name} is not on the boundary")


def side_indices(m, n):
    """Boundary indices of each rectangle side in .vmos reading order."""
    return {
        "top": [2 * m + n + (n - 1 - c) for c in range(n)],
        "right": [m + n + (m - 1 - r) for r in range(m)],
        "bottom": [m + c for c in range(n)],
        "left": list(range(m)),
    }


class Mosaic:
    """An m x n tile grid with a perfect pairing of its boundary edges.

    Instances are treated as immutable values.
    """

    __slots__ = ("rows", "cols", "grid", "partner", "_key")

    def __init__(self, grid, partner):
        grid = tuple(tuple(Tile(t) for t in row) for row in grid)
        if not grid or not grid[0]:
            raise BadDimensions("mosaic needs at least one row and one column")
        m, n = len(grid), len(grid[0])
        if any(len(row) != n for row in grid):
            raise BadDimensions("ragged tile grid")
        partner = tuple(int(p) for p in partner)
        size = 2 * (m + n)
        if len(partner) != size:
            raise BadPairing(f"pairing has {len(partner)} entries, expected {size}")
        for i, j in enumerate(partner):
            if not 0 <= j < size or j == i or partner[j] != i:
                raise BadPairing(f"boundary edge {i} is not properly paired")
        self.rows = m
        self.cols = n
        self.grid = grid
        self.partner = partner
        self._key = (m, n, grid, partner)

    @classmethod
    def from_sides(cls, grid, top, right, bottom, left):
        """Build from label lists in .vmos order (top L->R, right T->B,
        bottom L->R, left T->B)."""
        m, n = len(grid), len(grid[0]) if grid else 0
        sides = {"top": list(top), "right": list(right), "bottom": list(bottom), "left": list(left)}
        expected = {"top": n, "right": m, "bottom": n, "left": m}
        where = {}
        for name, idx in side_indices(m, n).items():
            labels = sides[name]
            if len(labels) != expected[name]:
                raise BadDimensions(f"{name} side has {len(labels)} labels, expected {expected[name]}")
            for label, i in zip(labels, idx):
                where.setdefault(label, []).append(i)
        partner = [None] * (2 * (m + n))
        for label, idxs in where.items():
            if len(idxs) != 2:
                raise BadPairing(f"label {label!r} appears {len(idxs)} times, expected 2")
            a, b = idxs
            partner[a], partner[b] = b, a
        return cls(grid, partner)

    # -- value semantics -------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Mosaic) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Mosaic({self.rows}x{self.cols}, {serialize(self)!r})"

    # -- geometry --------------------------------------------------------
    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def num_edges(self):
        return 2 * (self.rows + self.cols)

    def tile(self, row, col):
        return self.grid[row][col]

    def edge_location(self, index):
        return edge_location(self.rows, self.cols, index)

    def edge_index(self, row, col, side):
        return edge_index(self.rows, self.cols, row, col, side)

    def edge_has_arc(self, index):
        (r, c), side = self.edge_location(index)
        return has_side(self.grid[r][c], side)

    def arc_edges(self):
        return [i for i in range(self.num_edges) if self.edge_has_arc(i)]

    def pairs(self):
        """Sorted list of (i, j) pairs with i < j."""
        return [(i, j) for i, j in enumerate(self.partner) if i < j]

    def labels(self):
        """Canonical label per boundary index (first appearance, ccw order)."""
        out = [None] * self.num_edges
        k = 0
        for i in range(self.num_edges):
            if out[i] is None:
                out[i] = out[self.partner[i]] = boundary_label(k)
                k += 1
        return out

    def side_labels(self):
        labels = self.labels()
        return {name: [labels[i] for i in idx]
                for name, idx in side_indices(self.rows, self.cols).items()}

    def crossing_cells(self):
        return [(r, c) for r in range(self.rows) for c in range(self.cols)
                if self.grid[r][c].is_crossing]

    def replace_tile(self, row, col, tile):
        grid = [list(r) for r in self.grid]
        grid[row][col] = Tile(tile)
        return Mosaic(grid, self.partner)


# ---------------------------------------------------------------------------
# text format

def serialize(mosaic):
    lines = [f"{mosaic.rows} {mosaic.cols}"]
    lines.extend(" ".join(t.token for t in row) for row in mosaic.grid)
    sides = mosaic.side_labels()
    for name in SIDE_NAMES:
        lines.append(f"{name}: " + " ".join(sides[name]))
    return "\n".join(lines) + "\n"


def parse(text):
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty mosaic text")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise ParseError(f"expected 'm n' header, got {lines[0]!r}")
    m, n = int(head[0]), int(head[1])
    if m < 1 or n < 1:
        raise BadDimensions("dimensions must be positive")
    body = lines[1:]
    grid_lines = [ln for ln in body if ":" not in ln]
    side_lines = [ln for ln in body if ":" in ln]
    if len(grid_lines) != m:
        raise BadDimensions(f"expected {m} tile rows, found {len(grid_lines)}")
    grid = []
    for ln in grid_lines:
        toks = ln.split()
        if len(toks) != n:
            raise BadDimensions(f"expected {n} tiles in row {ln!r}")
        try:
            grid.append([Tile.from_token(tok) for tok in toks])
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    sides = {}
    for ln in side_lines:
        name, _, rest = ln.partition(":")
        name = name.strip().lower()
        if name not in SIDE_NAMES:
            raise ParseError(f"unknown side {name!r}")
        if name in sides:
            raise ParseError(f"side {name!r} given twice")
        labels = rest.split()
        for label in labels:
            if not _LABEL_RE.match(label):
                raise ParseError(f"bad boundary label {label!r}")
        sides[name] = labels
    missing = [s for s in SIDE_NAMES if s not in sides]
    if missing:
        raise ParseError(f"missing side line(s): {', '.join(missing)}")
    return Mosaic.from_sides(grid, sides["top"], sides["right"], sides["bottom"], sides["left"])


def load(path):
    with open(path, encoding="ascii") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    kind: str  # "interior" or "pairing"
    where: tuple
    message: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return "VALID"
        return "INVALID\n" + "\n".join("  " + v.message for v in self.violations)


def validate(mosaic):
    report = ValidationReport()
    g = mosaic.grid
    for r in range(mosaic.rows):
        for c in range(mosaic.cols):
            if c + 1 < mosaic.cols and has_side(g[r][c], Side.E) != has_side(g[r][c + 1], Side.W):
                report.violations.append(Violation(
                    "interior", ((r, c), (r, c + 1)),
                    f"cells ({r},{c})|({r},{c + 1}): {g[r][c].name} and {g[r][c + 1].name} disagree on shared edge"))
            if r + 1 < mosaic.rows and has_side(g[r][c], Side.S) != has_side(g[r + 1][c], Side.N):
                report.violations.append(Violation(
                    "interior", ((r, c), (r + 1, c)),
                    f"cells ({r},{c})/({r + 1},{c}): {g[r][c].name} and {g[r + 1][c].name} disagree on shared edge"))
    for i, j in mosaic.pairs():
        if mosaic.edge_has_arc(i) != mosaic.edge_has_arc(j):
            report.violations.append(Violation(
                "pairing", (i, j),
                f"boundary edges {i} and {j}: arc edge paired with blank edge"))
    return report


def require_valid(mosaic):
    report = validate(mosaic)
    if not report.valid:
        raise InvalidMosaic(str(report), report.violations)
    return mosaic
