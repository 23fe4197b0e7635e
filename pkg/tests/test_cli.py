import json
import shutil
import subprocess
import sys

import pytest

from vmosaic.cli import main
from vmosaic.fixtures import default_root
from vmosaic.mosaic import load, parse, serialize
from vmosaic.render import read_ascii_grid
from vmosaic.trace import trace
from vmosaic.gauss import same_diagram

SIX = "O1-U2+O3+U1-O4-U5+O2+U4-O6+U3+O5+U6+"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genus_fig2(capsys):
    code, out, _ = run(capsys, "genus", "fixtures/figures/fig2.vmos")
    assert code == 0
    assert out.strip() == "v=3 genus=1 virtual_crossings=1"


def test_genus_json_to_stdout(capsys):
    code, out, _ = run(capsys, "genus", "fig2.vmos", "--json", "-")
    payload = json.loads(out[out.index("{"):])
    assert code == 0 and payload["genus"] == 1


def test_poly_fig9(capsys, tmp_path):
    target = tmp_path / "p.json"
    code, out, _ = run(capsys, "poly", "fig9.vmos", "--json", str(target))
    assert code == 0
    assert out.splitlines() == ["3 -1 -1 -1", "-t^3-3t+4"]
    payload = json.loads(target.read_text())
    assert payload["indices"] == [3, -1, -1, -1]
    assert payload["polynomial"] == "-t^3-3t+4"


def test_validate_and_trace(capsys):
    assert run(capsys, "validate", "fig9.vmos")[0] == 0
    code, out, _ = run(capsys, "trace", "fig9.vmos", "--json", "-")
    assert code == 0 and "components=1 crossings=4" in out


def test_validate_invalid_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad.vmos"
    bad.write_text("1 2\nT5 T6\ntop: a b\nright: c\nbottom: a b\nleft: c\n")
    assert run(capsys, "validate", str(bad))[0] == 1


def test_build_row_round_trip(capsys, tmp_path):
    out_file = tmp_path / "row.vmos"
    code, _, _ = run(capsys, "build-row", SIX, "-o", str(out_file))
    assert code == 0
    mo = load(str(out_file))
    assert mo.rows == 1 and mo.cols == 7
    assert same_diagram(trace(mo).gauss, trace(parse(serialize(mo))).gauss)


def test_build_row_accepts_code_file(capsys, tmp_path):
    f = tmp_path / "code.txt"
    f.write_text(SIX + "\n")
    code, out, _ = run(capsys, "build-row", str(f))
    assert code == 0 and out.startswith("1 7")


def test_bad_code_exits_one(capsys):
    code, _, err = run(capsys, "build-row", "O1+U2")
    assert code == 1 and "error" in err


def test_missing_and_empty_files_exit_two(capsys, tmp_path):
    assert run(capsys, "genus", str(tmp_path / "nope.vmos"))[0] == 2
    empty = tmp_path / "empty.vmos"
    empty.write_text("")
    assert run(capsys, "genus", str(empty))[0] == 2
    garbage = tmp_path / "g.vmos"
    garbage.write_text("hello\n")
    assert run(capsys, "genus", str(garbage))[0] == 2


def test_usage_errors_exit_two(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "census", "--rows", "x", "--cols", "2")[0] == 2
    assert run(capsys, "inject", "fig2.vmos")[0] == 2


def test_inject_then_eject(capsys, tmp_path):
    grown = tmp_path / "grown.vmos"
    assert run(capsys, "inject", "fig2.vmos", "--square", "1", "1", "-o", str(grown))[0] == 0
    assert load(str(grown)).shape == (4, 4)
    code, out, _ = run(capsys, "eject", str(grown), "--square", "1", "1")
    assert code == 0
    assert out == serialize(load(default_root() + "/figures/fig2.vmos"))


def test_eject_refused(capsys):
    code, _, err = run(capsys, "eject", "fig9.vmos", "--row", "0")
    assert code == 1 and "error" in err


def test_census(capsys, tmp_path):
    target = tmp_path / "c.json"
    code, out, _ = run(capsys, "census", "--rows", "1", "--cols", "3", "--genus", "0",
                       "--json", str(target))
    assert code == 0 and out.rstrip().endswith("entries")
    data = json.loads(target.read_text())
    assert data and all(e["genus"] == 0 for e in data)
    assert run(capsys, "census", "--rows", "4", "--cols", "4")[0] == 1


def test_census_is_deterministic(capsys):
    a = run(capsys, "census", "--rows", "2", "--cols", "2")[1]
    b = run(capsys, "census", "--rows", "2", "--cols", "2", "--threads", "2")[1]
    assert a == b


def test_tile_and_row_number(capsys):
    code, out, _ = run(capsys, "tile-number", "fixtures/table1/4_1.vmos", "--max-area", "6")
    assert code == 0 and out.startswith("tile_number<=4")
    code, out, _ = run(capsys, "row-number", "4_1.vmos", "--max-width", "3")
    assert code == 1


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "fig2.vmos")
    assert code == 0
    assert [list(r) for r in read_ascii_grid(out)] == [list(r) for r in load(default_root() + "/figures/fig2.vmos").grid]
    svg = tmp_path / "f.svg"
    assert run(capsys, "render", "fig2.vmos", "--format", "svg", "--closure", "-o", str(svg))[0] == 0
    assert svg.read_text().count('class="virtual-crossing"') == 1


def test_fixtures_check(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures-check")
    assert code == 0 and out.strip().endswith("fixtures pass")
    assert run(capsys, "fixtures-check", "--strict-names")[0] == 1
    root = tmp_path / "fx"
    shutil.copytree(default_root(), root)
    (root / "table3" / "v2_1.vmos").write_text("1 2\nT9 T0\ntop: a b\nright: a\nbottom: b c\nleft: c\n")
    code, out, err = run(capsys, "fixtures-check", "--root", str(root))
    assert code == 1 and "2.1" in out and "179/180" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vmosaic", "genus", "fig2.vmos"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "v=3 genus=1 virtual_crossings=1"
