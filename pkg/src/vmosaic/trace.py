"""Follow the strands of a mosaic's closure.

Strands start at the lowest-indexed arc-carrying boundary edge; closed
loops that never touch the boundary are picked up afterwards in row-major
order.  Crossings are numbered by first encounter.
"""
from dataclasses import dataclass

from .errors import NoDiagram
from .gauss import GaussCode, Symbol
from .mosaic import require_valid
from .tiles import Axis, Side, has_side, is_over, transit


@dataclass(frozen=True)
class CrossingVisit:
    cell: tuple
    axis: Axis
    heading: Side
    over: bool

    @property
    def role(self):
        return "over" if self.over else "under"


@dataclass
class TraceResult:
    components: int
    visits: list  # one list of CrossingVisit per component
    signs: dict  # cell -> +1 / -1
    crossing_ids: dict  # cell -> id (first encounter)
    gauss: GaussCode = None  # only for knots

    @property
    def crossings(self):
        return len(self.signs)

    def sign_vector(self):
        """Signs ordered by crossing id."""
        order = sorted(self.crossing_ids, key=self.crossing_ids.get)
        return [self.signs[c] for c in order]

    def to_json(self):
        order = sorted(self.crossing_ids, key=self.crossing_ids.get)
        return {
            "components": self.components,
            "crossings": self.crossings,
            "signs": [self.signs[c] for c in order],
            "cells": [list(c) for c in order],
            "gauss": None if self.gauss is None else str(self.gauss),
        }


def crossing_sign(over_heading, under_heading):
    return 1 if Side(over_heading).rot_ccw() == under_heading else -1


def walk(mosaic, start_cell, start_side, used=None):
    """Walk one closed strand entering ``start_cell`` through ``start_side``.

    Returns the list of (cell, entry side, exit side) steps; ``used`` collects
    every consumed (row, col, side) connection point.
    """
    if used is None:
        used = set()
    m, n = mosaic.rows, mosaic.cols
    grid, partner = mosaic.grid, mosaic.partner
    (r, c), entry = start_cell, start_side
    steps = []
    while True:
        tile = grid[r][c]
        exit_ = transit(tile, entry)
        used.add((r, c, entry))
        used.add((r, c, exit_))
        steps.append(((r, c), entry, exit_))
        dr, dc = exit_.delta
        nr, nc = r + dr, c + dc
        if 0 <= nr < m and 0 <= nc < n:
            r, c, entry = nr, nc, exit_.opposite
        else:
            b = mosaic.edge_index(r, c, exit_)
            (r, c), entry = mosaic.edge_location(partner[b])
        if (r, c) == tuple(start_cell) and entry == start_side:
            return steps


def strand_starts(mosaic):
    """Deterministic start points of all components, in trace order."""
    used = set()
    starts = []
    for e in range(mosaic.num_edges):
        (r, c), side = mosaic.edge_location(e)
        if has_side(mosaic.grid[r][c], side) and (r, c, side) not in used:
            starts.append(((r, c), side))
            walk(mosaic, (r, c), side, used)
    for r in range(mosaic.rows):
        for c in range(mosaic.cols):
            for side in Side:
                if has_side(mosaic.grid[r][c], side) and (r, c, side) not in used:
                    starts.append(((r, c), side))
                    walk(mosaic, (r, c), side, used)
    return starts


def trace(mosaic, starts=None):
    require_valid(mosaic)
    if starts is None:
        starts = strand_starts(mosaic)
    if not starts:
        raise NoDiagram("mosaic has no arcs")
    components = []
    for cell, side in starts:
        visits = []
        for (r, c), entry, exit_ in walk(mosaic, cell, side):
            tile = mosaic.grid[r][c]
            if tile.is_crossing:
                axis = Axis.of(entry)
                visits.append(CrossingVisit((r, c), axis, exit_, is_over(tile, axis)))
        components.append(visits)

    ids, over_h, under_h = {}, {}, {}
    for visits in components:
        for v in visits:
            ids.setdefault(v.cell, len(ids) + 1)
            (over_h if v.over else under_h)[v.cell] = v.heading
    signs = {cell: crossing_sign(over_h[cell], under_h[cell]) for cell in ids}
    gauss = None
    if len(components) == 1:
        gauss = GaussCode(tuple(
            Symbol("O" if v.over else "U", ids[v.cell], signs[v.cell]) for v in components[0]))
    return TraceResult(len(components), components, signs, ids, gauss)


def crossing_count(mosaic):
    require_valid(mosaic)
    return len(mosaic.crossing_cells())
