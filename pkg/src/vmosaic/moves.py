"""Row, column and square injections and their inverse ejections.

An injection inserts two rows (or columns) at a cut.  Each inserted cell is a
straight pass-through where a strand crosses the cut and blank elsewhere.
The two new boundary edges on each side of the band are paired with each
other.
"""
from dataclasses import dataclass

from .errors import NotEjectable, SiteOutOfRange
from .mosaic import Mosaic, edge_index, require_valid
from .tiles import Side, Tile, has_side

ROW, COLUMN, SQUARE = "row", "column", "square"


@dataclass(frozen=True)
class InjectionSite:
    kind: str
    position: object  # int for row/column, (i, j) for square

    @classmethod
    def row(cls, i):
        return cls(ROW, int(i))

    @classmethod
    def column(cls, j):
        return cls(COLUMN, int(j))

    @classmethod
    def square(cls, i, j):
        return cls(SQUARE, (int(i), int(j)))


def _remap(old, grid, cell_map, new_pairs, skip=()):
    """Carry ``old``'s pairing over to ``grid`` and add ``new_pairs``.

    ``cell_map(r, c, side)`` gives the new cell carrying old boundary edge
    ``side`` of cell (r, c);
    ``new_pairs`` lists ((cell, side), (cell, side)) pairs in the new grid;
    old edges in ``skip`` are dropped.
    """
    m, n = len(grid), len(grid[0])
    partner = [None] * (2 * (m + n))

    def new_index(e):
        (r, c), side = old.edge_location(e)
        r2, c2 = cell_map(r, c, side)
        return edge_index(m, n, r2, c2, side)

    for a, b in old.pairs():
        if a in skip or b in skip:
            continue
        x, y = new_index(a), new_index(b)
        partner[x], partner[y] = y, x
    for (c1, s1), (c2, s2) in new_pairs:
        x, y = edge_index(m, n, *c1, s1), edge_index(m, n, *c2, s2)
        partner[x], partner[y] = y, x
    return Mosaic(grid, partner)


def _inject_rows(mosaic, i):
    m, n = mosaic.shape
    g = mosaic.grid
    band = []
    for j in range(n):
        crosses = has_side(g[i - 1][j], Side.S) if i > 0 else has_side(g[0][j], Side.N)
        band.append(Tile.T6 if crosses else Tile.T0)
    grid = [list(row) for row in g[:i]] + [band, list(band)] + [list(row) for row in g[i:]]
    new_pairs = [
        (((i, 0), Side.W), ((i + 1, 0), Side.W)),
        (((i, n - 1), Side.E), ((i + 1, n - 1), Side.E)),
    ]

    def cell_map(r, c, side):
        # a cut on the outer edge leaves that edge on the far side of the band
        if i == 0 and side == Side.N:
            return 0, c
        if i == m and side == Side.S:
            return m + 1, c
        return (r if r < i else r + 2), c

    return _remap(mosaic, grid, cell_map, new_pairs)


def _inject_cols(mosaic, j):
    m, n = mosaic.shape
    g = mosaic.grid
    grid = []
    for r in range(m):
        crosses = has_side(g[r][j - 1], Side.E) if j > 0 else has_side(g[r][0], Side.W)
        t = Tile.T5 if crosses else Tile.T0
        grid.append(list(g[r][:j]) + [t, t] + list(g[r][j:]))
    new_pairs = [
        (((0, j), Side.N), ((0, j + 1), Side.N)),
        (((m - 1, j), Side.S), ((m - 1, j + 1), Side.S)),
    ]

    def cell_map(r, c, side):
        if j == 0 and side == Side.W:
            return r, 0
        if j == n and side == Side.E:
            return r, n + 1
        return r, (c if c < j else c + 2)

    return _remap(mosaic, grid, cell_map, new_pairs)


def _check_site(site, m, n, eject=False):
    hi_r, hi_c = (m - 2, n - 2) if eject else (m, n)
    ok = True
    if site.kind == ROW:
        ok = 0 <= site.position <= hi_r
    elif site.kind == COLUMN:
        ok = 0 <= site.position <= hi_c
    elif site.kind == SQUARE:
        i, j = site.position
        ok = 0 <= i <= hi_r and 0 <= j <= hi_c
    else:
        raise SiteOutOfRange(f"unknown injection kind {site.kind!r}")
    if not ok:
        raise SiteOutOfRange(f"{site.kind} site {site.position} out of range for {m}x{n} mosaic")


def inject(mosaic, site):
    require_valid(mosaic)
    _check_site(site, *mosaic.shape)
    if site.kind == ROW:
        return _inject_rows(mosaic, site.position)
    if site.kind == COLUMN:
        return _inject_cols(mosaic, site.position)
    i, j = site.position
    return _inject_cols(_inject_rows(mosaic, i), j)


def _eject_rows(mosaic, i):
    m, n = mosaic.shape
    g = mosaic.grid
    if m < 3:
        raise NotEjectable("ejecting two rows would leave an empty mosaic", [])
    bad = []
    for j in range(n):
        for r in (i, i + 1):
            if g[r][j] not in (Tile.T0, Tile.T6):
                bad.append((r, j))
    left = (mosaic.edge_index(i, 0, Side.W), mosaic.edge_index(i + 1, 0, Side.W))
    right = (mosaic.edge_index(i, n - 1, Side.E), mosaic.edge_index(i + 1, n - 1, Side.E))
    for a, b in (left, right):
        if mosaic.partner[a] != b:
            bad.append((i, 0 if a == left[0] else n - 1))
    if bad:
        raise NotEjectable(f"rows {i},{i + 1} are not an injected band", bad)
    grid = [list(row) for k, row in enumerate(g) if k not in (i, i + 1)]

    def cell_map(r, c, side):
        if r < i:
            return r, c
        if r >= i + 2:
            return r - 2, c
        # top or bottom edge of a band lying on the outer edge
        return (0 if side == Side.N else m - 3), c

    return _remap(mosaic, grid, cell_map, [], left + right)


def _eject_cols(mosaic, j):
    m, n = mosaic.shape
    g = mosaic.grid
    if n < 3:
        raise NotEjectable("ejecting two columns would leave an empty mosaic", [])
    bad = []
    for r in range(m):
        for c in (j, j + 1):
            if g[r][c] not in (Tile.T0, Tile.T5):
                bad.append((r, c))
    top = (mosaic.edge_index(0, j, Side.N), mosaic.edge_index(0, j + 1, Side.N))
    bottom = (mosaic.edge_index(m - 1, j, Side.S), mosaic.edge_index(m - 1, j + 1, Side.S))
    for a, b in (top, bottom):
        if mosaic.partner[a] != b:
            bad.append((0 if a == top[0] else m - 1, j))
    if bad:
        raise NotEjectable(f"columns {j},{j + 1} are not an injected band", bad)
    grid = [[t for k, t in enumerate(row) if k not in (j, j + 1)] for row in g]

    def cell_map(r, c, side):
        if c < j:
            return r, c
        if c >= j + 2:
            return r, c - 2
        return r, (0 if side == Side.W else n - 3)

    return _remap(mosaic, grid, cell_map, [], top + bottom)


def eject(mosaic, site):
    require_valid(mosaic)
    _check_site(site, *mosaic.shape, eject=True)
    if site.kind == ROW:
        return _eject_rows(mosaic, site.position)
    if site.kind == COLUMN:
        return _eject_cols(mosaic, site.position)
    i, j = site.position
    return _eject_rows(_eject_cols(mosaic, j), i)
