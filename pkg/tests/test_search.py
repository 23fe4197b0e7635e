import pytest

from helpers import genus_of, is_knot, reference_mosaics
from vmosaic.errors import NotFoundWithinBound, SearchSpaceTooLarge
from vmosaic.fixtures import find
from vmosaic.gauss import canonicalize, parse_code, same_diagram
from vmosaic.mosaic import serialize, validate
from vmosaic.search import (census, decode, encode, enumerate_mosaics, find_mosaic,
                            row_number_bound, tile_number_bound)
from vmosaic.trace import trace

SHAPES = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]


def _keys(mosaics):
    return [serialize(m) for m in mosaics]


@pytest.mark.parametrize("shape", SHAPES)
def test_adjacent_blanks_match_reference(shape):
    got = _keys(enumerate_mosaics(*shape))
    assert len(got) == len(set(got))
    assert set(got) == set(_keys(reference_mosaics(*shape, blanks="adjacent")))


@pytest.mark.parametrize("shape", SHAPES)
def test_all_blank_pairings_match_reference(shape):
    got = _keys(enumerate_mosaics(*shape, enumerate_blanks=True))
    assert len(got) == len(set(got))
    assert set(got) == set(_keys(reference_mosaics(*shape, blanks="all")))


@pytest.mark.parametrize("shape", SHAPES)
@pytest.mark.parametrize("g", [0, 1, 2])
def test_genus_filter_matches_reference(shape, g):
    got = set(_keys(enumerate_mosaics(*shape, genus=g)))
    want = {serialize(m) for m in reference_mosaics(*shape, blanks="all") if genus_of(m) == g}
    assert got == want


@pytest.mark.parametrize("shape", [(1, 3), (2, 2)])
def test_knot_filter_and_crossing_range(shape):
    got = set(_keys(enumerate_mosaics(*shape, require_knot=True, crossing_range=(1, 2))))
    want = {serialize(m) for m in reference_mosaics(*shape)
            if is_knot(m) and 1 <= trace(m).crossings <= 2}
    assert got == want


def test_enumerated_mosaics_are_valid():
    for mo in enumerate_mosaics(2, 2, enumerate_blanks=True):
        assert validate(mo).valid


def test_census_matches_reference_codes():
    got = {(str(e.code), e.genus) for e in census(2, 2, enumerate_blanks=True)}
    want = set()
    for mo in reference_mosaics(2, 2, blanks="all"):
        if is_knot(mo):
            want.add((str(canonicalize(trace(mo).gauss)), genus_of(mo)))
    assert got == want


def test_census_entries_are_consistent():
    for e in census(1, 3):
        assert same_diagram(trace(e.mosaic).gauss, e.code)
        assert genus_of(e.mosaic) == e.genus
        assert e.to_json()["crossings"] == e.crossings


def test_trefoil_in_one_by_three_genus_zero():
    codes = {str(e.code) for e in census(1, 3, genus=0)}
    trefoil = canonicalize(trace(find("3_1", "table1").load()).gauss)
    assert str(trefoil) in codes


def test_virtual_two_one_in_one_by_two():
    v21 = canonicalize(trace(find("2.1").load()).gauss)
    assert str(v21) in {str(e.code) for e in census(1, 2)}


def test_census_threads_are_deterministic():
    a = [e.to_json() for e in census(2, 2, enumerate_blanks=True, threads=1)]
    b = [e.to_json() for e in census(2, 2, enumerate_blanks=True, threads=2)]
    assert a == b


def test_guard_and_degenerate_shapes():
    with pytest.raises(SearchSpaceTooLarge):
        list(enumerate_mosaics(4, 4))
    with pytest.raises(SearchSpaceTooLarge):
        census(3, 5)
    assert list(enumerate_mosaics(0, 3)) == []
    assert census(2, 0) == []


def test_encode_round_trip():
    code = parse_code("O1+U2-O3-U1+O2-U3-")
    assert decode(encode(code)) == code


def test_tile_numbers():
    fig8 = trace(find("4_1", "table1").load()).gauss
    area, witness = tile_number_bound(fig8, 6)
    assert area == 4 and same_diagram(trace(witness).gauss, fig8)
    tref = trace(find("3_1", "table1").load()).gauss
    assert tile_number_bound(tref, 6)[0] == 3
    with pytest.raises(NotFoundWithinBound):
        tile_number_bound(parse_code(""), 4)
    with pytest.raises(NotFoundWithinBound):
        tile_number_bound(fig8, 3)


def test_row_numbers():
    fig8 = trace(find("4_1", "table1").load()).gauss
    assert row_number_bound(fig8, 5)[0] == 4
    seven = trace(find("7_1", "table1").load()).gauss
    w, witness = row_number_bound(seven, 8)
    assert w == 7 and witness.rows == 1
    v21 = trace(find("2.1").load()).gauss
    assert row_number_bound(v21, 3)[0] == 2
    with pytest.raises(SearchSpaceTooLarge):
        row_number_bound(v21, 40)


def test_find_mosaic_missing_returns_none():
    seven = trace(find("7_1", "table1").load()).gauss
    assert find_mosaic(seven, 1, 3) is None
