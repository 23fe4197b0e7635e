import pytest
from hypothesis import given, settings

from helpers import codes, fixture_mosaics
from vmosaic.errors import EmptyCode
from vmosaic.fixtures import find
from vmosaic.gauss import canonicalize, max_nonrepeating, parse_code
from vmosaic.mosaic import validate
from vmosaic.rowbuild import build_row, plan_row, row_number_upper_bound
from vmosaic.surface import count_interlocking, genus
from vmosaic.tiles import Tile
from vmosaic.trace import trace

SIX = "O1-U2+O3+U1-O4-U5+O2+U4-O6+U3+O5+U6+"
TREFOIL = "O1+U2+O3+U1+O2+U3+"
EIGHT_SIXTEEN = "1-8+5-6+2-1+4-5+6-7+3-4+8-2+7-3+"

ROW_FIXTURES = [(e, m) for e, m in fixture_mosaics() if m.rows == 1]


def traced(mo):
    return canonicalize(trace(mo).gauss)


def test_six_crossing_example_matches_figure():
    mo = build_row(SIX)
    assert mo.shape == (1, 7)
    assert sum(t.is_crossing for t in mo.grid[0]) == 6
    assert traced(mo) == canonicalize(parse_code(SIX))
    assert mo == find("K6").load()
    assert row_number_upper_bound(SIX) == 7


def test_trefoil_fills_the_row():
    mo = build_row(TREFOIL)
    assert mo.shape == (1, 3) and all(t.is_crossing for t in mo.grid[0])
    assert row_number_upper_bound(TREFOIL) == 3


def test_eight_sixteen():
    code = parse_code(EIGHT_SIXTEEN)
    mo = build_row(code)
    assert validate(mo).valid and mo.cols <= 9
    assert traced(mo) == canonicalize(code)
    assert genus(mo).genus > 0 or count_interlocking(mo) >= 1


def test_one_crossing_kink():
    assert row_number_upper_bound("O1+U1+") <= 2


def test_empty_code():
    with pytest.raises(EmptyCode):
        build_row("")


@pytest.mark.parametrize("entry_mosaic", ROW_FIXTURES, ids=lambda em: em[0].file)
def test_reproduces_every_row_fixture(entry_mosaic):
    # the builder's layout and routing reproduce the drawn row mosaics exactly
    _, mo = entry_mosaic
    assert build_row(trace(mo).gauss) == mo


@settings(max_examples=400, deadline=None)
@given(codes(max_crossings=8))
def test_round_trip(code):
    mo = build_row(code)
    assert validate(mo).valid
    assert traced(mo) == canonicalize(code)
    k = code.crossings
    assert max_nonrepeating(code) <= mo.cols <= 2 * k
    assert build_row(code) == mo
    if max_nonrepeating(code) == k:
        assert mo.cols == k and all(t.is_crossing for t in mo.grid[0])


@settings(max_examples=200, deadline=None)
@given(codes(max_crossings=8))
def test_plan_is_consistent(code):
    plan = plan_row(code)
    assert plan.width == len(plan.tiles)
    assert sorted(plan.columns.values()) == sorted(set(plan.columns.values()))
    for col, tile in plan.routing.items():
        assert tile in (Tile.T7, Tile.T8) and plan.tiles[col] == tile
    used = set(plan.columns.values()) | set(plan.routing)
    assert used == set(range(plan.width))
