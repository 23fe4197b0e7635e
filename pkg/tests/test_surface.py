import random

import pytest
from hypothesis import given, settings

from helpers import fixture_mosaics, mosaics, random_mosaic
from vmosaic.errors import InvalidMosaic
from vmosaic.gauss import diagram_genus
from vmosaic.mosaic import parse
from vmosaic.surface import (boundary_vertices, count_interlocking, count_vertex_classes, genus,
                             genus_oracle)
from vmosaic.trace import trace

FIXTURES = fixture_mosaics()
BY_FILE = {e.file: m for e, m in FIXTURES}

TORUS = parse("1 1\nT0\ntop: a\nright: b\nbottom: a\nleft: b\n")
SPHERE = parse("1 1\nT0\ntop: a\nright: a\nbottom: b\nleft: b\n")


def test_fig2():
    mo = BY_FILE["figures/fig2.vmos"]
    assert boundary_vertices(mo) == 3
    rep = genus(mo)
    assert (rep.v, rep.genus, rep.virtual_crossings) == (3, 1, 1)
    assert genus_oracle(mo) == 1
    assert str(rep) == "v=3 genus=1 virtual_crossings=1"
    assert rep.to_json() == {"v": 3, "genus": 1, "virtual_crossings": 1}


def test_torus_and_sphere():
    assert boundary_vertices(TORUS) == 1 and genus(TORUS).genus == 1 and genus_oracle(TORUS) == 1
    assert genus(SPHERE).genus == 0 and genus_oracle(SPHERE) == 0


def test_seven_one_row():
    mo = BY_FILE["table1/7_1.vmos"]
    assert boundary_vertices(mo) == 9
    assert genus(mo).genus == 0
    assert count_interlocking(mo) == 0


def test_virtual_entry_4_108_is_genus_zero():
    assert genus(BY_FILE["table3/v4_108.vmos"]).genus == 0


def test_trefoil_has_no_interlocking():
    assert count_interlocking(BY_FILE["table1/3_1.vmos"]) == 0


def test_eight_sixteen_row_has_virtual_crossings():
    assert count_interlocking(BY_FILE["figures/fig_8_16_row.vmos"]) >= 1


def test_invalid_mosaic_is_rejected():
    bad = parse("1 1\nT5\ntop: a\nright: a\nbottom: b\nleft: b\n")
    for f in (boundary_vertices, genus, genus_oracle, count_interlocking):
        with pytest.raises(InvalidMosaic):
            f(bad)


@pytest.mark.parametrize("entry_mosaic", FIXTURES, ids=lambda em: em[0].file)
def test_formula_matches_oracle_on_fixtures(entry_mosaic):
    _, mo = entry_mosaic
    assert genus(mo).genus == genus_oracle(mo)


def test_formula_matches_oracle_on_random_mosaics():
    rng = random.Random(2024)
    for _ in range(500):
        mo = random_mosaic(rng)
        assert genus(mo).genus == genus_oracle(mo)


@settings(max_examples=300, deadline=None)
@given(mosaics())
def test_genus_zero_iff_vertex_count(mo):
    rep = genus(mo)
    assert (rep.genus == 0) == (rep.v == mo.rows + mo.cols + 1)
    assert (1 - rep.v + mo.rows + mo.cols) % 2 == 0


def test_vertex_classes_small_words():
    # aabb on a square: sphere, 3 vertices; abab: torus, 1 vertex
    assert count_vertex_classes(4, [1, 0, 3, 2]) == 3
    assert count_vertex_classes(4, [2, 3, 0, 1]) == 1


def test_no_interlocking_means_classical_on_full_rows():
    checked = 0
    for e, mo in FIXTURES:
        if e.table != "table1" or mo.rows != 1 or len(mo.arc_edges()) != mo.num_edges:
            continue
        if count_interlocking(mo):
            continue
        checked += 1
        assert genus(mo).genus == 0
        assert diagram_genus(trace(mo).gauss) == 0
    assert checked >= 20
