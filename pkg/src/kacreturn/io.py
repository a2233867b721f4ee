"""JSON encodings of systems, sets and reports.

Systems::

    {"type": "permutation", "weights": ["1/5", ...], "map": [1, 2, ...]}
    {"type": "iet", "lengths": ["2/3", "1/3"], "permutation": [1, 0]}

Sets are ``{"points": [0, 2]}`` for permutation systems and
``{"intervals": [["0", "1/5"], ...]}`` for IETs. Rationals are always strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Union

from .dynamics import Transformation, make_transformation
from .errors import ParseError
from .iet import IET, IntervalSet, interval_set, make_iet
from .measure import FiniteMeasureSpace, PointSet, make_space, parse_rational, point_set, render_rational
from .recurrence import PoincareReport, SeriesReport, Tower, VerificationReport

System = Union[tuple[FiniteMeasureSpace, Transformation], IET]


def _load(document: Union[str, bytes, dict]) -> Any:
    if isinstance(document, dict):
        return document
    try:
        return json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def _field(doc: dict, key: str, kind: type) -> Any:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"field {key!r} must be a {kind.__name__}")
    return value


def _rationals(values: list, key: str) -> list[Fraction]:
    out = []
    for i, v in enumerate(values):
        try:
            out.append(parse_rational(v))
        except ParseError as exc:
            raise ParseError(f"{key}[{i}]: {exc}") from None
    return out


def _ints(values: list, key: str) -> list[int]:
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParseError(f"{key}[{i}] must be an integer, got {v!r}")
    return values


def parse_system(document: Union[str, bytes, dict]) -> System:
    doc = _load(document)
    if not isinstance(doc, dict):
        raise ParseError("system document must be a JSON object")
    kind = doc.get("type")
    if kind == "permutation":
        weights = _rationals(_field(doc, "weights", list), "weights")
        forward = _ints(_field(doc, "map", list), "map")
        space = make_space(weights)
        return space, make_transformation(space, forward)
    if kind == "iet":
        lengths = _rationals(_field(doc, "lengths", list), "lengths")
        perm = _ints(_field(doc, "permutation", list), "permutation")
        return make_iet(lengths, perm)
    raise ParseError(f"unknown system type {kind!r}")


def parse_point_set(document: Union[str, bytes, dict], size: int) -> PointSet:
    doc = _load(document)
    if not isinstance(doc, dict):
        raise ParseError("set document must be a JSON object")
    points = _ints(_field(doc, "points", list), "points")
    for i, p in enumerate(points):
        if not 0 <= p < size:
            raise ParseError(f"points[{i}] = {p} is outside [0, {size})")
    return point_set(points, size)


def parse_interval_set(document: Union[str, bytes, dict]) -> IntervalSet:
    doc = _load(document)
    if not isinstance(doc, dict):
        raise ParseError("set document must be a JSON object")
    raw = _field(doc, "intervals", list)
    pairs = []
    for k, iv in enumerate(raw):
        if not isinstance(iv, list) or len(iv) != 2:
            raise ParseError(f"intervals[{k}] must be a pair of rational strings")
        pairs.append(_rationals(iv, f"intervals[{k}]"))
    return interval_set(pairs)


def system_to_json(system: System) -> dict:
    if isinstance(system, IET):
        return {
            "type": "iet",
            "lengths": [render_rational(v) for v in system.lengths],
            "permutation": list(system.permutation),
        }
    space, T = system
    return {
        "type": "permutation",
        "weights": [render_rational(w) for w in space.weights],
        "map": list(T.forward),
    }


def intervals_to_json(s: IntervalSet) -> list:
    return [[render_rational(a), render_rational(b)] for a, b in s.intervals]


def report_to_json(report: VerificationReport, normalize: bool = False) -> dict:
    out = {
        "lhs": render_rational(report.lhs),
        "rhs": render_rational(report.rhs),
        "equal": report.equal,
        "invariant_closure": list(report.rhs_set.indices),
    }
    if normalize and report.normalized_lhs is not None:
        out["normalized_lhs"] = render_rational(report.normalized_lhs)
    return out


def series_to_json(series: SeriesReport) -> dict:
    return {
        "mu_E": render_rational(series.mu_E),
        "terms_a": [render_rational(v) for v in series.terms_a],
        "terms_b": [render_rational(v) for v in series.terms_b],
        "partial_sums": [render_rational(v) for v in series.partial_sums],
    }


def tower_to_json(tower: Tower) -> dict:
    return {
        "columns": [
            {
                "return_time": col.return_time,
                "base": list(col.base.indices),
                "levels": [list(level.indices) for level in col.levels],
            }
            for col in tower.columns
        ]
    }


def distribution_to_json(dist: list[tuple[int, Fraction]]) -> list:
    return [{"k": k, "mass": render_rational(m)} for k, m in dist]


def poincare_to_json(report: PoincareReport) -> dict:
    return {"all_return": report.all_return, "exceptional": list(report.exceptional.indices)}


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"
