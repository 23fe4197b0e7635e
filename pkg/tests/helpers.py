"""Shared generators and independent oracles for the test suite."""
import itertools
import random

import sympy as sp
from hypothesis import strategies as st

from vmosaic.fixtures import load_manifest
from vmosaic.gauss import GaussCode, Symbol
from vmosaic.mosaic import Mosaic, validate
from vmosaic.surface import genus
from vmosaic.tiles import Side, Tile, has_side
from vmosaic.trace import trace

ALL_TILES = list(Tile)


def tiles_fitting(need_w, need_n):
    return [t for t in ALL_TILES if has_side(t, Side.W) == need_w and has_side(t, Side.N) == need_n]


def _grid_from_choices(m, n, pick):
    grid = []
    for r in range(m):
        row = []
        for c in range(n):
            need_w = has_side(row[c - 1], Side.E) if c else None
            need_n = has_side(grid[r - 1][c], Side.S) if r else None
            opts = [t for t in ALL_TILES
                    if (need_w is None or has_side(t, Side.W) == need_w)
                    and (need_n is None or has_side(t, Side.N) == need_n)]
            row.append(pick(opts))
        grid.append(row)
    return grid


def _pair_up(mosaic_grid, m, n, order_arcs, order_blanks):
    size = 2 * (m + n)
    probe = Mosaic(mosaic_grid, [(i + size // 2) % size for i in range(size)])
    arcs = [i for i in range(size) if probe.edge_has_arc(i)]
    blanks = [i for i in range(size) if not probe.edge_has_arc(i)]
    arcs, blanks = order_arcs(arcs), order_blanks(blanks)
    partner = [None] * size
    for group in (arcs, blanks):
        for a, b in zip(group[::2], group[1::2]):
            partner[a], partner[b] = b, a
    return Mosaic(mosaic_grid, partner)


def random_mosaic(rng, m=None, n=None, crossing_weight=3, max_cells=12):
    """A random VALID mosaic: consistent grid, random arc and blank pairings."""
    if m is None:
        m = rng.randint(1, 3)
    if n is None:
        n = rng.randint(1, max(1, min(4, max_cells // m)))

    def pick(opts):
        weights = [crossing_weight if t.is_crossing else 1 for t in opts]
        return rng.choices(opts, weights)[0]

    grid = _grid_from_choices(m, n, pick)

    def shuffled(xs):
        xs = list(xs)
        rng.shuffle(xs)
        return xs

    return _pair_up(grid, m, n, shuffled, shuffled)


def random_knot_mosaic(rng, min_crossings=1, **kw):
    while True:
        mo = random_mosaic(rng, **kw)
        if mo.arc_edges() or any(t != Tile.T0 for row in mo.grid for t in row):
            try:
                tr = trace(mo)
            except Exception:
                continue
            if tr.components == 1 and tr.crossings >= min_crossings:
                return mo


@st.composite
def mosaics(draw, max_rows=3, max_cols=4, max_cells=9):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max(1, min(max_cols, max_cells // m))))
    grid = _grid_from_choices(m, n, lambda opts: draw(st.sampled_from(opts)))
    perm_arcs = draw(st.randoms(use_true_random=False))
    return _pair_up(grid, m, n,
                    lambda xs: perm_arcs.sample(xs, len(xs)),
                    lambda xs: perm_arcs.sample(xs, len(xs)))


def random_code(rng, k):
    """A random well-formed signed Gauss code with k crossings."""
    slots = [i for i in range(1, k + 1) for _ in (0, 1)]
    rng.shuffle(slots)
    first_pass = {i: rng.choice("OU") for i in range(1, k + 1)}
    sign = {i: rng.choice((1, -1)) for i in range(1, k + 1)}
    seen, syms = set(), []
    for i in slots:
        p = first_pass[i] if i not in seen else ("U" if first_pass[i] == "O" else "O")
        seen.add(i)
        syms.append(Symbol(p, i, sign[i]))
    return GaussCode(tuple(syms))


@st.composite
def codes(draw, min_crossings=1, max_crossings=8):
    k = draw(st.integers(min_crossings, max_crossings))
    return random_code(draw(st.randoms(use_true_random=False)), k)


# ---------------------------------------------------------------------------
# fixtures

def fixture_entries():
    return load_manifest()


def fixture_mosaics():
    return [(e, e.load()) for e in load_manifest()]


# ---------------------------------------------------------------------------
# oracles

_t = sp.symbols("t")


def alexander(code):
    """Alexander polynomial of a classical diagram from its Wirtinger matrix.

    Normalized: no leading/trailing zeros, positive leading coefficient.
    Returns a tuple of integer coefficients, lowest degree first.
    """
    syms = code.symbols
    k = code.crossings
    if k == 0:
        return (1,)
    arc, a = [0] * len(syms), 0
    for i, s in enumerate(syms):
        arc[i] = a
        if s.passing == "U":
            a += 1
    rows = []
    for cid in range(1, k + 1):
        o = next(i for i, s in enumerate(syms) if s.id == cid and s.passing == "O")
        u = next(i for i, s in enumerate(syms) if s.id == cid and s.passing == "U")
        over, arc_in, arc_out = arc[o] % k, arc[u] % k, (arc[u] + 1) % k
        row = [0] * k
        if syms[u].sign > 0:
            row[over] += 1 - _t
            row[arc_in] += _t
            row[arc_out] += -1
        else:
            row[over] += _t - 1
            row[arc_in] += 1
            row[arc_out] += -_t
        rows.append(row)
    det = sp.expand(sp.Matrix(rows)[:-1, :-1].det()) if k > 1 else sp.Integer(1)
    if det == 0:
        return (0,)
    coeffs = sp.Poly(det, _t).all_coeffs()[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(int(c) for c in coeffs)


KNOT_ALEXANDER = {
    (1,): "0_1",
    (1, -1, 1): "3_1",
    (1, -3, 1): "4_1",
    (1, -1, 1, -1, 1): "5_1",
    (2, -3, 2): "5_2",
    (2, -5, 2): "6_1",
    (1, -3, 3, -3, 1): "6_2",
    (1, -3, 5, -3, 1): "6_3",
}


def perfect_matchings(items):
    items = list(items)
    if not items:
        yield []
        return
    a = items[0]
    for k in range(1, len(items)):
        rest = items[1:k] + items[k + 1:]
        for sub in perfect_matchings(rest):
            yield [(a, items[k])] + sub


def reference_mosaics(m, n, blanks="adjacent"):
    """Slow, unpruned enumeration: every grid, every arc-compatible pairing.

    ``blanks`` is "adjacent" (consecutive blank edges paired in index
    order) or "all".
    """
    size = 2 * (m + n)
    for flat in itertools.product(ALL_TILES, repeat=m * n):
        grid = [list(flat[r * n:(r + 1) * n]) for r in range(m)]
        probe = Mosaic(grid, [(i + size // 2) % size for i in range(size)])
        if any(v.kind == "interior" for v in validate(probe).violations):
            continue
        arcs = [i for i in range(size) if probe.edge_has_arc(i)]
        blank = [i for i in range(size) if not probe.edge_has_arc(i)]
        if blanks == "adjacent":
            blank_options = [[(blank[k], blank[k + 1]) for k in range(0, len(blank), 2)]]
        else:
            blank_options = list(perfect_matchings(blank))
        for am in perfect_matchings(arcs):
            for bm in blank_options:
                partner = [None] * size
                for a, b in am + bm:
                    partner[a], partner[b] = b, a
                yield Mosaic(grid, partner)


def is_knot(mosaic):
    try:
        return trace(mosaic).components == 1
    except Exception:
        return False


def genus_of(mosaic):
    return genus(mosaic).genus
