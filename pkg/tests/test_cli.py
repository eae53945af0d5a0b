import json
import os
import shutil
import subprocess
import sys

import pytest

from hypergon.cli import main
from hypergon.formats import PolygonFile, read_polygon, write_polygon

from conftest import DATA, GOLDEN, SQUARE_AREA, SQUARE_PERIMETER


def run(*args, env=None):
    """Invoke the installed entry point as a subprocess."""
    full_env = dict(os.environ)
    full_env.pop("HYPERGON_SEED", None)
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "hypergon", *map(str, args)],
                          capture_output=True, text=True, env=full_env)


def test_console_script_installed():
    assert shutil.which("hypergon") is not None


# golden files --------------------------------------------------------------------

@pytest.mark.parametrize("name", ["square", "ideal_triangle"])
def test_area_golden(name):
    res = run("area", DATA / f"{name}.json")
    assert res.returncode == 0
    assert res.stdout == (GOLDEN / f"{name}.area.json").read_text()


def test_clockwise_golden():
    res = run("area", DATA / "clockwise_square.json")
    assert res.returncode == 3
    assert res.stdout == (GOLDEN / "clockwise_square.area.out").read_text()
    assert res.stderr == (GOLDEN / "clockwise_square.area.err").read_text()


def test_golden_values_match_oracles():
    square = json.loads((GOLDEN / "square.area.json").read_text())
    for v in square["area"].values():
        v = v[0] if isinstance(v, list) else v
        assert v == pytest.approx(SQUARE_AREA, abs=1e-12)
    assert square["perimeter"] == pytest.approx(SQUARE_PERIMETER, abs=1e-12)
    tri = json.loads((GOLDEN / "ideal_triangle.area.json").read_text())
    assert tri["area"]["computational"] == pytest.approx(3.141592653589793, abs=1e-12)
    assert tri["perimeter"] == "inf"


# area --------------------------------------------------------------------------

def test_area_verify(capsys):
    assert main(["area", str(DATA / "square.json"), "--verify", "--samples", "50000", "--seed", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["oracles"]["line_integral"]["pass"]
    assert out["oracles"]["arclength"]["pass"]
    mc = out["oracles"]["monte_carlo"]
    assert mc["pass"] and mc["samples"] == 50000 and mc["seed"] == 3
    assert out["seed"] == 3


def test_area_verify_deterministic():
    a = run("area", DATA / "square.json", "--verify", "--samples", "20000", "--seed", "11")
    b = run("area", DATA / "square.json", "--verify", "--samples", "20000", "--seed", "11")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_seed_from_environment():
    a = run("area", DATA / "square.json", "--verify", "--samples", "20000", env={"HYPERGON_SEED": "11"})
    b = run("area", DATA / "square.json", "--verify", "--samples", "20000", "--seed", "11")
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["seed"] == 11


def test_auto_orient_override(capsys):
    assert main(["area", str(DATA / "clockwise_square.json"), "--auto-orient"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["orientation"] == "reversed"
    assert out["area"]["computational"] == pytest.approx(SQUARE_AREA, abs=1e-13)


def test_area_discrepancy_exit_1(capsys):
    assert main(["area", str(DATA / "square.json"), "--tol", "0"]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "discrepancy"


def test_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    assert run("area", bad).returncode == 2
    assert run("area", tmp_path / "missing.json").returncode == 2


def test_validation_error_exit_3(tmp_path):
    dup = tmp_path / "dup.json"
    write_polygon(dup, PolygonFile([0.1, 0.1, 0.5j]))
    assert run("area", dup).returncode == 3


def test_report_echo_round_trip(tmp_path, capsys):
    main(["area", str(DATA / "ideal_triangle.json")])
    echo = json.loads(capsys.readouterr().out)["input"]
    path = tmp_path / "echo.json"
    path.write_text(json.dumps(echo))
    assert read_polygon(path) == read_polygon(DATA / "ideal_triangle.json")


# render ------------------------------------------------------------------------

def test_render(tmp_path):
    out = tmp_path / "square.svg"
    assert run("render", DATA / "square.json", out).returncode == 0
    first = out.read_bytes()
    assert first.count(b'class="side inward"') == 4
    assert run("render", DATA / "square.json", out).returncode == 0
    assert out.read_bytes() == first


def test_render_unwritable(tmp_path):
    assert run("render", DATA / "square.json", tmp_path / "no" / "such" / "dir.svg").returncode == 4


def test_render_invalid(tmp_path):
    assert run("render", DATA / "clockwise_square.json", tmp_path / "x.svg").returncode == 3
    assert not (tmp_path / "x.svg").exists()


# isoper ------------------------------------------------------------------------

def test_isoper_square(tmp_path):
    svg = tmp_path / "iso.svg"
    res = run("isoper", 4, 6.7229, "--seed", "0", "--svg", svg)
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["gap"] <= 1e-4
    assert out["optimizer"]["perimeter_residual"] <= 1e-8
    assert out["regular_area"] == pytest.approx(out["bound"], abs=1e-9)
    assert svg.read_text().startswith("<?xml")


def test_isoper_invalid():
    assert run("isoper", 2, 4).returncode == 3
    assert run("isoper", 3, -1).returncode == 3


def test_isoper_gap_exceeded(capsys):
    # no polygon beats the bound by a whole unit of area
    code = main(["isoper", "3", "4", "--starts", "1", "--gap", "-1"])
    assert code == 1
    assert json.loads(capsys.readouterr().out)["status"] == "gap_exceeded"


# verify ------------------------------------------------------------------------

def test_verify_random(capsys):
    assert main(["verify", "--random", "500", "--seed", "7", "--isometries", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["polygons"] == 500
    assert all(c["fail"] == 0 for c in out["suites"].values())
    assert out["worst"]["cross_formula"] <= 1e-9


def test_verify_corpus_reversal(tmp_path, capsys):
    shutil.copy(DATA / "square.json", tmp_path / "a.json")
    write_polygon(tmp_path / "b.json", PolygonFile([0.5, -0.5j, -0.5, 0.5j], auto_orient=True))
    assert main(["verify", str(tmp_path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["reoriented"] == ["b.json"]


def test_verify_corpus_duplicate(tmp_path, capsys):
    shutil.copy(DATA / "square.json", tmp_path / "a.json")
    write_polygon(tmp_path / "dup.json", PolygonFile([0.1, 0.1, 0.5j]))
    assert main(["verify", str(tmp_path)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["validation_failures"] == 1
    assert out["failures"][0]["item"] == "dup.json"
