"""JSON encoding of line sets, plane triples, load reports and solutions.

Rationals travel as strings, ``"p/q"`` or ``"p"`` when the denominator is 1.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .constructions import LineSet
from .geometry import SIGN_VECTORS, Axis, AxisPlane, GeneralPlane, Line, LoadReport, PlaneTriple
from .solvers import Solution

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


class DecodeError(ValueError):
    pass


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL.match(text) if isinstance(text, str) else None
    if not match:
        raise DecodeError(f"not a rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise DecodeError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _axis(tag) -> Axis:
    try:
        return Axis.parse(tag)
    except ValueError as exc:
        raise DecodeError(str(exc)) from None


def _field(data, key):
    try:
        return data[key]
    except (KeyError, TypeError):
        raise DecodeError(f"missing field {key!r}") from None


def line_to_data(line: Line) -> dict:
    return {"axis": line.axis.tag, "c1": format_rational(line.c1), "c2": format_rational(line.c2)}


def line_from_data(data) -> Line:
    return Line(_axis(_field(data, "axis")), parse_rational(_field(data, "c1")),
                parse_rational(_field(data, "c2")))


def plane_to_data(plane) -> dict:
    if isinstance(plane, AxisPlane):
        return {"kind": "axis", "axis": plane.axis.tag, "offset": format_rational(plane.offset)}
    return {"kind": "general", "normal": [format_rational(v) for v in plane.normal],
            "offset": format_rational(plane.offset)}


def plane_from_data(data):
    kind = _field(data, "kind")
    offset = parse_rational(_field(data, "offset"))
    if kind == "axis":
        return AxisPlane(_axis(_field(data, "axis")), offset)
    if kind == "general":
        normal = _field(data, "normal")
        if not isinstance(normal, list) or len(normal) != 3:
            raise DecodeError("a general plane needs a three-entry normal")
        normal = tuple(parse_rational(v) for v in normal)
        if not any(normal):
            raise DecodeError("plane normal must be nonzero")
        return GeneralPlane(normal, offset)
    raise DecodeError(f"unknown plane kind {kind!r}")


def _planes_from_data(items) -> PlaneTriple:
    if not isinstance(items, list) or len(items) != 3:
        raise DecodeError("a plane triple needs exactly three planes")
    return PlaneTriple(tuple(plane_from_data(p) for p in items))


def _count(value, what) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DecodeError(f"{what} must be a non-negative integer, got {value!r}")
    return value


def to_data(obj) -> dict:
    if isinstance(obj, LineSet):
        return {"lines": [line_to_data(line) for line in obj]}
    if isinstance(obj, PlaneTriple):
        return {"planes": [plane_to_data(p) for p in obj]}
    if isinstance(obj, LoadReport):
        return {"counts": {s: obj.counts[s] for s in SIGN_VECTORS}, "max_load": obj.max_load,
                "contained": [list(pair) for pair in obj.contained]}
    if isinstance(obj, Solution):
        return {"planes": [plane_to_data(p) for p in obj.triple], "achieved": obj.achieved,
                "bound": obj.bound}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_data(data):
    """Rebuild a value from its JSON data; the type is recognised by its keys."""
    if not isinstance(data, dict):
        raise DecodeError("expected a JSON object")
    if "lines" in data:
        items = data["lines"]
        if not isinstance(items, list):
            raise DecodeError("'lines' must be a list")
        try:
            return LineSet(tuple(line_from_data(item) for item in items))
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
    if "counts" in data:
        counts = _field(data, "counts")
        if not isinstance(counts, dict) or set(counts) != set(SIGN_VECTORS):
            raise DecodeError("counts must have exactly the eight sign vectors as keys")
        counts = {s: _count(counts[s], f"count {s}") for s in SIGN_VECTORS}
        max_load = _count(_field(data, "max_load"), "max_load")
        if max_load != max(counts.values()):
            raise DecodeError("max_load disagrees with counts")
        pairs = _field(data, "contained")
        if not isinstance(pairs, list) or any(not isinstance(p, list) or len(p) != 2 for p in pairs):
            raise DecodeError("contained must be a list of [line, plane] pairs")
        contained = tuple((_count(i, "line index"), _count(j, "plane index")) for i, j in pairs)
        return LoadReport(counts, max_load, contained)
    if "achieved" in data:
        bound = data.get("bound")
        return Solution(_planes_from_data(_field(data, "planes")),
                        _count(data["achieved"], "achieved"),
                        None if bound is None else _count(bound, "bound"))
    if "planes" in data:
        return _planes_from_data(data["planes"])
    raise DecodeError("unrecognised document")


def encode(obj) -> str:
    return json.dumps(to_data(obj), indent=2)


def decode(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"invalid JSON: {exc}") from None
    return from_data(data)


def read(path):
    with open(path) as f:
        return decode(f.read())


def write(obj, path):
    with open(path, "w") as f:
        f.write(encode(obj) + "\n")
