"""The eleven mosaic tiles and how a strand moves through them.

Sides double as headings: ``Side.E`` is both the east edge of a cell and
the direction "moving east".  Rows grow downward, so moving north means
decreasing the row index.
"""
from enum import Enum, IntEnum

from .errors import NotAConnectionPoint, NotACrossingTile


class Side(IntEnum):
    N = 0
    E = 1
    S = 2
    W = 3

    @property
    def opposite(self):
        return Side((self + 2) % 4)

    def rot_ccw(self):
        return Side((self + 3) % 4)

    def rot_cw(self):
        return Side((self + 1) % 4)

    @property
    def delta(self):
        """(drow, dcol) of one step in this direction."""
        return _DELTA[self]


_DELTA = {Side.N: (-1, 0), Side.E: (0, 1), Side.S: (1, 0), Side.W: (0, -1)}


class Axis(Enum):
    NS = "NS"
    EW = "EW"

    @classmethod
    def of(cls, side):
        return cls.NS if side in (Side.N, Side.S) else cls.EW


class Tile(IntEnum):
    T0 = 0
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7
    T8 = 8
    T9 = 9
    T10 = 10

    @property
    def token(self):
        return self.name

    @classmethod
    def from_token(cls, token):
        try:
            return cls[token]
        except KeyError:
            raise ValueError(f"unknown tile token {token!r}") from None

    @property
    def is_crossing(self):
        return self in (Tile.T9, Tile.T10)


N, E, S, W = Side.N, Side.E, Side.S, Side.W

# T9 carries the horizontal over-strand, T10 the vertical one.
_ARCS = {
    Tile.T0: (),
    Tile.T1: ((S, W),),
    Tile.T2: ((S, E),),
    Tile.T3: ((N, E),),
    Tile.T4: ((N, W),),
    Tile.T5: ((E, W),),
    Tile.T6: ((N, S),),
    Tile.T7: ((N, E), (S, W)),
    Tile.T8: ((N, W), (S, E)),
    Tile.T9: ((N, S), (E, W)),
    Tile.T10: ((N, S), (E, W)),
}

_OVER_AXIS = {Tile.T9: Axis.EW, Tile.T10: Axis.NS}

# transit table: _TRANSIT[tile][side] -> other end, or None
_TRANSIT = []
for _t in Tile:
    row = [None] * 4
    for a, b in _ARCS[_t]:
        row[a] = b
        row[b] = a
    _TRANSIT.append(tuple(row))
_TRANSIT = tuple(_TRANSIT)

#: per tile, bitmask of sides with a connection point (bit i = Side(i))
SIDE_MASK = tuple(
    sum(1 << s for arc in _ARCS[t] for s in arc) for t in Tile
)


def connections(tile):
    """Arcs of ``tile`` as a frozenset of frozenset side pairs."""
    return frozenset(frozenset(arc) for arc in _ARCS[Tile(tile)])


def connection_points(tile):
    return frozenset(s for arc in _ARCS[Tile(tile)] for s in arc)


def has_side(tile, side):
    return bool(SIDE_MASK[tile] >> side & 1)


def transit(tile, entry):
    """Side where a strand entering ``tile`` through ``entry`` leaves."""
    out = _TRANSIT[tile][entry]
    if out is None:
        raise NotAConnectionPoint(f"{Tile(tile).name} has no connection on {Side(entry).name}")
    return Side(out)


def is_over(tile, axis):
    tile = Tile(tile)
    if not tile.is_crossing:
        raise NotACrossingTile(f"{tile.name} is not a crossing tile")
    return _OVER_AXIS[tile] is Axis(axis)


def crossing_tile_with_over(axis):
    """The crossing tile whose over-strand runs along ``axis``."""
    return Tile.T10 if Axis(axis) is Axis.NS else Tile.T9
