"""Exhaustive enumeration of small mosaics, knot census, tile and row numbers.

Grids are generated by row-major backtracking that abandons a partial grid
as soon as two neighbouring tiles disagree on a shared edge.  For each grid,
arc-carrying boundary edges are paired by following the strand: after a
piece of strand leaves the grid, the search chooses which free boundary edge
it re-enters through.  Blank edges are paired with their counterclockwise
neighbours unless a genus filter asks for all blank pairings.  A genus-0
filter only admits pairings whose chords are pairwise non-crossing, which is
exactly the condition for the glued surface to be a sphere.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ._kernels import core
from .errors import NotFoundWithinBound, SearchSpaceTooLarge
from .gauss import GaussCode, Symbol, is_alternating, is_reduced, parse_code
from .mosaic import Mosaic, serialize

DEFAULT_MAX_CELLS = 12

BLANK_ADJACENT, BLANK_NONCROSSING, BLANK_ALL = 0, 1, 2


def encode(code):
    return tuple(s.id << 2 | (2 if s.passing == "U" else 0) | (1 if s.sign < 0 else 0)
                 for s in code.symbols)


def decode(seq):
    return GaussCode(tuple(Symbol("U" if s >> 1 & 1 else "O", s >> 2, -1 if s & 1 else 1)
                           for s in seq))


def _as_code(code):
    return parse_code(code) if isinstance(code, str) else code


def _guard(m, n, max_cells):
    if max_cells is not None and m * n > max_cells:
        raise SearchSpaceTooLarge(
            f"{m}x{n} has {m * n} cells, above the limit of {max_cells}; pass max_cells to override")


def _blank_mode(genus, enumerate_blanks):
    if genus == 0:
        return BLANK_NONCROSSING
    if genus is not None or enumerate_blanks:
        return BLANK_ALL
    return BLANK_ADJACENT


def _raw(m, n, genus=None, require_knot=False, crossing_range=None,
         enumerate_blanks=None, prefix=()):
    """Yield (grid, partner, components, encoded code, genus) tuples."""
    lo, hi = crossing_range if crossing_range is not None else (0, -1)
    mode = _blank_mode(genus, enumerate_blanks)
    for grid in core.iter_grids(m, n, lo, hi, tuple(prefix)):
        for partner, comps, code, v in core.grid_mosaics(m, n, grid, mode, require_knot):
            g = (1 - v + m + n) // 2
            if genus is not None and g != genus:
                continue
            yield grid, partner, comps, code, g


def _mosaic(m, n, grid, partner):
    return Mosaic([grid[r * n:(r + 1) * n] for r in range(m)], partner)


def enumerate_mosaics(m, n, genus=None, require_knot=False, crossing_range=None,
                      enumerate_blanks=None, max_cells=DEFAULT_MAX_CELLS):
    """Every valid m x n mosaic passing the filters, once each, in a fixed order.

    ``crossing_range`` is an inclusive (lo, hi) bound on crossing tiles.  With
    no genus filter the blank edges are paired with their neighbours unless
    ``enumerate_blanks`` is set.
    """
    if m < 1 or n < 1:
        return
    _guard(m, n, max_cells)
    for grid, partner, _, _, _ in _raw(m, n, genus, require_knot, crossing_range, enumerate_blanks):
        yield _mosaic(m, n, grid, partner)


@dataclass(frozen=True)
class CensusEntry:
    code: GaussCode
    mosaic: Mosaic
    genus: int

    @property
    def crossings(self):
        return self.code.crossings

    @property
    def alternating(self):
        return is_alternating(self.code)

    @property
    def reduced(self):
        return is_reduced(self.code)

    @property
    def tiles(self):
        return self.mosaic.rows * self.mosaic.cols

    def to_json(self):
        return {
            "code": str(self.code),
            "crossings": self.crossings,
            "genus": self.genus,
            "alternating": self.alternating,
            "reduced": self.reduced,
            "tiles": self.tiles,
            "rows": self.mosaic.rows,
            "cols": self.mosaic.cols,
            "mosaic": serialize(self.mosaic),
        }


def _census_part(args):
    m, n, genus, crossing_range, enumerate_blanks, prefix = args
    best = {}
    keys = {}
    for grid, partner, _, code, g in _raw(m, n, genus, True, crossing_range, enumerate_blanks, prefix):
        key = keys.get(code)
        if key is None:
            key = keys[code] = core.canonical_key(code)
        rep = (grid, partner)
        slot = (key, g)
        if slot not in best or rep < best[slot]:
            best[slot] = rep
    return best


def _threads(threads):
    if threads is None:
        threads = int(os.environ.get("VMOSAIC_THREADS", "1") or 1)
    return max(1, threads)


def census(m, n, genus=None, crossing_range=None, enumerate_blanks=None,
           max_cells=DEFAULT_MAX_CELLS, threads=None):
    """Knots on m x n mosaics grouped by canonical Gauss code and genus.

    Each entry keeps the least (grid, pairing) representative.  Entries are
    sorted by crossing count, then canonical code, then genus.
    """
    if m < 1 or n < 1:
        return []
    _guard(m, n, max_cells)
    workers = _threads(threads)
    if workers == 1:
        best = _census_part((m, n, genus, crossing_range, enumerate_blanks, ()))
    else:
        jobs = [(m, n, genus, crossing_range, enumerate_blanks, (t,)) for t in range(11)]
        best = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_census_part, jobs):
                for slot, rep in part.items():
                    if slot not in best or rep < best[slot]:
                        best[slot] = rep
    entries = []
    for (key, g), (grid, partner) in sorted(best.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
        entries.append(CensusEntry(decode(key), _mosaic(m, n, grid, partner), g))
    return entries


# ---------------------------------------------------------------------------
# targeted searches

def find_mosaic(code, m, n, max_cells=DEFAULT_MAX_CELLS):
    """First m x n mosaic (in enumeration order) whose traced code matches ``code``.

    Codes match up to rotation, reversal and relabeling.  Returns None if
    there is none.  Blank edges are paired with their neighbours: the blank
    pairing changes the surface but never the traced code.
    """
    code = _as_code(code)
    _guard(m, n, max_cells)
    k = code.crossings
    if k > m * n:
        return None
    targets = core.alignments(encode(code))
    for grid in core.iter_grids(m, n, k, k, ()):
        found = core.grid_mosaics(m, n, grid, BLANK_ADJACENT, True, targets)
        if found:
            return _mosaic(m, n, grid, found[0][0])
    return None


def tile_number_bound(code, max_area, max_cells=DEFAULT_MAX_CELLS):
    """Least area m*n <= max_area admitting ``code``, with a witness mosaic.

    Within one area, shapes are tried with the fewest rows first.
    """
    code = _as_code(code)
    if not code.symbols:
        raise NotFoundWithinBound("the empty code has no crossings to place")
    if max_cells is not None and max_area > max_cells:
        raise SearchSpaceTooLarge(f"max_area {max_area} exceeds the limit of {max_cells}")
    for area in range(max(1, code.crossings), max_area + 1):
        for m in range(1, area + 1):
            if area % m:
                continue
            found = find_mosaic(code, m, area // m, max_cells)
            if found is not None:
                return area, found
    raise NotFoundWithinBound(f"no mosaic of area <= {max_area} realizes {code}")


def row_number_bound(code, max_width, max_cells=DEFAULT_MAX_CELLS):
    """Least width w <= max_width of a 1 x w mosaic realizing ``code``."""
    code = _as_code(code)
    if not code.symbols:
        raise NotFoundWithinBound("the empty code has no crossings to place")
    if max_cells is not None and max_width > max_cells:
        raise SearchSpaceTooLarge(f"max_width {max_width} exceeds the limit of {max_cells}")
    for w in range(max(1, code.crossings), max_width + 1):
        found = find_mosaic(code, 1, w, max_cells)
        if found is not None:
            return w, found
    raise NotFoundWithinBound(f"no row mosaic of width <= {max_width} realizes {code}")
