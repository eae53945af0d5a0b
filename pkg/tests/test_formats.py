import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypergon.formats import ParseError, PolygonFile, dumps, parse_polygon, read_polygon, write_polygon

from conftest import DATA


def test_read_square():
    pf = read_polygon(DATA / "square.json")
    assert pf.vertices == [0.5, 0.5j, -0.5, -0.5j]
    assert pf.auto_orient and pf.allow_ideal


def test_flags():
    pf = read_polygon(DATA / "clockwise_square.json")
    assert pf.auto_orient is False


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"points": []}',
    '{"vertices": [[0, 0], [0.5, 0]]}',
    '{"vertices": [[0, 0], [0.5, 0], [0, "a"]]}',
    '{"vertices": [[0, 0], [0.5, 0], [0, 0.5, 1]]}',
    '{"vertices": [[0, 0], [0.5, 0], [0, 1.5]]}',
    '{"vertices": [[0, 0], [0.5, 0], [0, true]]}',
    '{"vertices": [[0, 0], [0.5, 0], [0, 0.5]], "auto_orient": "yes"}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polygon(text)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        read_polygon(tmp_path / "nope.json")


def test_dumps_floats():
    assert dumps(0.1) == "0.10000000000000001"
    assert dumps(math.inf) == '"inf"'
    assert dumps(-math.inf) == '"-inf"'
    assert dumps(math.nan) == '"nan"'
    assert dumps(1 + 2j) == "[1, 2]"
    assert dumps({"a": [1, 2.5], "b": None, "c": True}) == '{\n  "a": [1, 2.5],\n  "b": null,\n  "c": true\n}'


finite = st.floats(allow_nan=False, allow_infinity=False)


@given(st.lists(finite, min_size=1, max_size=20))
def test_dumps_round_trip(xs):
    assert json.loads(dumps(xs)) == xs


@given(st.lists(st.tuples(st.floats(-0.7, 0.7), st.floats(-0.7, 0.7)), min_size=3, max_size=12),
       st.booleans(), st.booleans())
def test_polygon_file_round_trip(tmp_path_factory, pts, auto, ideal):
    pf = PolygonFile([complex(x, y) for x, y in pts], auto, ideal)
    path = tmp_path_factory.mktemp("rt") / "p.json"
    write_polygon(path, pf)
    assert read_polygon(path) == pf
