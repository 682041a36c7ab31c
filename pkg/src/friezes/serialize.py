"""JSON encodings of the domain objects.

Formats (all plain JSON objects):

* quiddity:  {"left_period": [...], "core": [...], "right_period": [...],
              "core_start": n}
* polygon:   {"n": n, "chords": [[u, v], ...]}
* strip:     {"window": [lo, hi], "margin": m, "m2_class": "...",
              "arcs": [{"a": ["L", i], "b": ["U", u]}, ...]}
* frieze pattern: {"n": n, "fundamental": [[a, b, value], ...]}

The upper index class is a string: "empty", "finite:N", "nat_right",
"nat_left" or "bi_infinite".  Emission is deterministic: arcs and table rows
are sorted, keys are fixed.  Parsing validates structure and the type
invariants and raises SchemaError with the offending field.
"""

from __future__ import annotations

import json
from typing import Any

from .polygon import FriezePattern, PolygonError, PolygonTriangulation
from .quiddity import QuiddityDescriptor, QuiddityError
from .strip import (LOWER, UPPER, Arc, M2Class, MarkedPoint, StripError,
                    StripTriangulation)


class SchemaError(ValueError):
    """Malformed JSON document for one of the domain types."""


def _require(d: Any, key: str, what: str):
    if not isinstance(d, dict):
        raise SchemaError(f"{what}: expected a JSON object, got {type(d).__name__}")
    if key not in d:
        raise SchemaError(f"{what}: missing field {key!r}")
    return d[key]


def _int_list(x: Any, where: str) -> list[int]:
    if not isinstance(x, list) or any(not isinstance(v, int) or isinstance(v, bool)
                                      for v in x):
        raise SchemaError(f"{where}: expected a list of integers")
    return x


def quiddity_to_json(q: QuiddityDescriptor) -> dict:
    return {"left_period": list(q.left_period), "core": list(q.core),
            "right_period": list(q.right_period), "core_start": q.core_start}


def quiddity_from_json(d: Any) -> QuiddityDescriptor:
    lp = _int_list(_require(d, "left_period", "quiddity"), "quiddity.left_period")
    core = _int_list(_require(d, "core", "quiddity"), "quiddity.core")
    rp = _int_list(_require(d, "right_period", "quiddity"), "quiddity.right_period")
    start = _require(d, "core_start", "quiddity")
    if not isinstance(start, int) or isinstance(start, bool):
        raise SchemaError("quiddity.core_start: expected an integer")
    try:
        return QuiddityDescriptor(tuple(lp), tuple(core), tuple(rp), start)
    except QuiddityError as e:
        raise SchemaError(f"quiddity: {e}") from e


def polygon_to_json(p: PolygonTriangulation) -> dict:
    return {"n": p.n, "chords": [list(c) for c in sorted(p.chords)]}


def polygon_from_json(d: Any) -> PolygonTriangulation:
    n = _require(d, "n", "polygon")
    chords = _require(d, "chords", "polygon")
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("polygon.n: expected an integer")
    if not isinstance(chords, list):
        raise SchemaError("polygon.chords: expected a list of pairs")
    pairs = []
    for c in chords:
        if (not isinstance(c, list) or len(c) != 2
                or any(not isinstance(v, int) or isinstance(v, bool) for v in c)):
            raise SchemaError(f"polygon.chords: bad chord {c!r}")
        pairs.append(tuple(c))
    try:
        return PolygonTriangulation(n, frozenset(pairs))
    except PolygonError as e:
        raise SchemaError(f"polygon: {e}") from e


def m2_to_str(m2: M2Class) -> str:
    return f"finite:{m2.size}" if m2.kind == "finite" else m2.kind


def m2_from_str(s: Any) -> M2Class:
    if not isinstance(s, str):
        raise SchemaError("m2_class: expected a string")
    try:
        if s.startswith("finite:"):
            return M2Class("finite", int(s.split(":", 1)[1]))
        return M2Class(s)
    except (ValueError, StripError) as e:
        raise SchemaError(f"m2_class: {e}") from e


def _point_to_json(p: MarkedPoint) -> list:
    return [p.boundary, p.index]


def _point_from_json(x: Any) -> MarkedPoint:
    if (not isinstance(x, list) or len(x) != 2 or x[0] not in (LOWER, UPPER)
            or not isinstance(x[1], int) or isinstance(x[1], bool)):
        raise SchemaError(f"marked point: expected ['L'|'U', index], got {x!r}")
    return MarkedPoint(x[0], x[1])


def strip_to_json(t: StripTriangulation) -> dict:
    return {
        "window": list(t.window),
        "margin": t.margin,
        "m2_class": m2_to_str(t.m2_class),
        "arcs": [{"a": _point_to_json(a.a), "b": _point_to_json(a.b)}
                 for a in sorted(t.arcs)],
    }


def strip_from_json(d: Any) -> StripTriangulation:
    window = _int_list(_require(d, "window", "strip"), "strip.window")
    if len(window) != 2:
        raise SchemaError("strip.window: expected [lo, hi]")
    margin = _require(d, "margin", "strip")
    if not isinstance(margin, int) or isinstance(margin, bool):
        raise SchemaError("strip.margin: expected an integer")
    m2 = m2_from_str(_require(d, "m2_class", "strip"))
    raw = _require(d, "arcs", "strip")
    if not isinstance(raw, list):
        raise SchemaError("strip.arcs: expected a list")
    arcs = set()
    for entry in raw:
        a = _point_from_json(_require(entry, "a", "strip.arcs[]"))
        b = _point_from_json(_require(entry, "b", "strip.arcs[]"))
        try:
            arcs.add(Arc(a, b))
        except StripError as e:
            raise SchemaError(f"strip.arcs: {e}") from e
    try:
        t = StripTriangulation((window[0], window[1]), margin, m2, frozenset(arcs))
        t.check_pairwise_noncrossing()
    except StripError as e:
        raise SchemaError(f"strip: {e}") from e
    return t


def frieze_pattern_to_json(f: FriezePattern) -> dict:
    rows = [[a, b, v] for (a, b), v in sorted(f.fundamental.items())]
    return {"n": f.n, "fundamental": rows}


def frieze_pattern_from_json(d: Any) -> FriezePattern:
    n = _require(d, "n", "frieze_pattern")
    rows = _require(d, "fundamental", "frieze_pattern")
    if not isinstance(n, int) or isinstance(n, bool):
        raise SchemaError("frieze_pattern.n: expected an integer")
    fundamental = {}
    for row in rows:
        if (not isinstance(row, list) or len(row) != 3
                or any(not isinstance(v, int) or isinstance(v, bool) for v in row)):
            raise SchemaError(f"frieze_pattern.fundamental: bad row {row!r}")
        a, b, v = row
        if not 1 <= a < b <= n:
            raise SchemaError(f"frieze_pattern.fundamental: bad pair ({a}, {b})")
        fundamental[(a, b)] = v
    want = n * (n - 1) // 2
    if len(fundamental) != want:
        raise SchemaError(f"frieze_pattern.fundamental: expected {want} entries")
    return FriezePattern(n, fundamental)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"malformed JSON: {e}") from e
