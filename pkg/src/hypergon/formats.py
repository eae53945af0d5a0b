"""Polygon input files and the report serializer.

A polygon file is a JSON object::

    {
      "vertices": [[0.5, 0], [0, 0.5], [-0.5, 0], [0, -0.5]],
      "auto_orient": true,
      "allow_ideal": true
    }

``vertices`` is required and holds at least three ``[x, y]`` pairs with
``x^2 + y^2 <= (1 + 1e-12)^2``.  Both flags are optional booleans and
default to true.  Any other key is ignored.

Reports are written by :func:`dumps`: JSON with two-space indentation,
keys in insertion order, every float printed with 17 significant digits
(``format(x, ".17g")``) so doubles round-trip exactly, and non-finite
floats written as the strings ``"inf"``, ``"-inf"`` and ``"nan"``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List

from .core import BOUNDARY_EPS
from .errors import HypergonError


class ParseError(HypergonError):
    pass


@dataclass
class PolygonFile:
    vertices: List[complex]
    auto_orient: bool = True
    allow_ideal: bool = True

    def to_dict(self) -> dict:
        return {
            "vertices": [[z.real, z.imag] for z in self.vertices],
            "auto_orient": self.auto_orient,
            "allow_ideal": self.allow_ideal,
        }


def parse_polygon(text: str) -> PolygonFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError("expected an object with a 'vertices' array")
    raw = data["vertices"]
    if not isinstance(raw, list) or len(raw) < 3:
        raise ParseError("'vertices' must be a list of at least 3 [x, y] pairs")
    verts = []
    for item in raw:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in item)):
            raise ParseError(f"bad vertex entry {item!r}")
        z = complex(float(item[0]), float(item[1]))
        if not abs(z) <= 1 + BOUNDARY_EPS:
            raise ParseError(f"vertex {item!r} lies outside the closed unit disk")
        verts.append(z)
    flags = {}
    for key in ("auto_orient", "allow_ideal"):
        val = data.get(key, True)
        if not isinstance(val, bool):
            raise ParseError(f"'{key}' must be true or false")
        flags[key] = val
    return PolygonFile(verts, **flags)


def read_polygon(path) -> PolygonFile:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_polygon(text)


def write_polygon(path, pf: PolygonFile) -> None:
    Path(path).write_text(dumps(pf.to_dict()) + "\n")


def _float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".17g")


def dumps(obj, indent: int = 0) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float(obj)
    if isinstance(obj, complex):
        return f"[{_float(obj.real)}, {_float(obj.imag)}]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        body = ",\n".join(inner + dumps(v, indent + 1) for v in obj)
        return "[\n" + body + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
