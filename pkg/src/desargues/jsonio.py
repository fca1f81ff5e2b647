"""JSON encodings of values, points, lines, maps, frames and configurations.

Values are strings ``"p/q"`` (or ints) on the rational backend, ints on
GF(p), and ``"hard"``, ``"approx:p/q"`` or a rational literal on the
dyadic backend. A point is ``{"x": v, "y": v}`` or ``[v, v]``; a line is
``{"base": point, "dir": point}``.
"""

from __future__ import annotations

from typing import Any

from . import field as F
from .configcheck.configs import DesarguesConfig, PappusConfig
from .coordinatize import Frame
from .errors import DegenerateDirection, MalformedConfig, PlaneError
from .field import FieldValue
from .plane import Line, Point
from .symmetry import Dilatation, Translation

DESARGUES_KEYS = ("P", "P'", "Q", "Q'", "R", "R'")
PAPPUS_KEYS = ("Q", "Q'", "Q''", "R", "R'", "R''")


def value_from_json(fld: F.Field, raw: Any) -> FieldValue:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise MalformedConfig(f"field value must be a string or integer, got {raw!r}")
    try:
        return fld.parse(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedConfig(f"bad field value {raw!r}: {exc}") from None


def value_to_json(value: FieldValue):
    if isinstance(value, F.Dyadic):
        center, radius = value.approx(value.default_budget)
        return f"{center}±{radius}"
    return value.field.format(value)


def point_from_json(fld: F.Field, raw: Any) -> Point:
    if isinstance(raw, dict):
        try:
            raw = [raw["x"], raw["y"]]
        except KeyError as exc:
            raise MalformedConfig(f"point is missing {exc}") from None
    if not isinstance(raw, list) or len(raw) != 2:
        raise MalformedConfig(f"a point is {{'x': .., 'y': ..}} or a pair, got {raw!r}")
    return Point(value_from_json(fld, raw[0]), value_from_json(fld, raw[1]))


def point_to_json(P: Point) -> dict:
    return {"x": value_to_json(P.x), "y": value_to_json(P.y)}


def line_from_json(fld: F.Field, raw: Any, budget: int | None = None) -> Line:
    if not isinstance(raw, dict) or "base" not in raw or "dir" not in raw:
        raise MalformedConfig(f"a line is {{'base': point, 'dir': point}}, got {raw!r}")
    try:
        return Line.through(point_from_json(fld, raw["base"]), point_from_json(fld, raw["dir"]), budget)
    except DegenerateDirection as exc:
        raise MalformedConfig(str(exc)) from None


def line_to_json(l: Line) -> dict:
    return {"base": point_to_json(l.base), "dir": point_to_json(l.dir)}


def dilatation_from_json(fld: F.Field, raw: Any) -> Dilatation:
    if not isinstance(raw, dict) or "C" not in raw:
        raise MalformedConfig(f"a dilatation is {{'e': value, 'C': point}}, got {raw!r}")
    offset = point_from_json(fld, raw["C"])
    if "e" not in raw:
        return Translation(offset)
    try:
        return Dilatation(value_from_json(fld, raw["e"]), offset)
    except PlaneError as exc:
        raise MalformedConfig(str(exc)) from None


def dilatation_to_json(sigma: Dilatation) -> dict:
    return {"e": value_to_json(sigma.ratio), "C": point_to_json(sigma.offset)}


def frame_from_json(fld: F.Field, raw: Any, budget: int | None = None) -> Frame:
    """``{"O": point, "t1": offset, "t2": offset}``."""
    if not isinstance(raw, dict) or not {"O", "t1", "t2"} <= raw.keys():
        raise MalformedConfig(f"a frame is {{'O', 't1', 't2'}}, got {raw!r}")
    try:
        return Frame.make(point_from_json(fld, raw["O"]), Translation(point_from_json(fld, raw["t1"])),
                          Translation(point_from_json(fld, raw["t2"])), budget)
    except PlaneError as exc:
        if isinstance(exc, MalformedConfig):
            raise
        raise MalformedConfig(f"bad frame: {exc}") from None


def _points(fld: F.Field, raw: Any, keys: tuple[str, ...]) -> list[Point]:
    if not isinstance(raw, dict):
        raise MalformedConfig("'points' must be an object")
    missing = [k for k in keys if k not in raw]
    if missing:
        raise MalformedConfig(f"configuration is missing points {missing}")
    return [point_from_json(fld, raw[k]) for k in keys]


def desargues_from_json(fld: F.Field, raw: Any, variant: str | None = None,
                        budget: int | None = None) -> DesarguesConfig:
    if not isinstance(raw, dict):
        raise MalformedConfig("configuration must be an object")
    variant = (variant or raw.get("variant", "")).upper()
    if variant not in ("D1", "D2"):
        raise MalformedConfig(f"variant must be D1 or D2, got {variant!r}")
    lines = raw.get("lines")
    if not isinstance(lines, list) or len(lines) != 3:
        raise MalformedConfig("a Desargues configuration has exactly three lines")
    lines = tuple(line_from_json(fld, l, budget) for l in lines)
    P, Pp, Q, Qp, R, Rp = _points(fld, raw.get("points"), DESARGUES_KEYS)
    V = None
    if variant == "D2":
        if "V" not in raw:
            raise MalformedConfig("a D2 configuration needs its concurrence point V")
        V = point_from_json(fld, raw["V"])
    return DesarguesConfig(variant, lines, P, Pp, Q, Qp, R, Rp, V)


def desargues_to_json(cfg: DesarguesConfig) -> dict:
    points = dict(zip(DESARGUES_KEYS, (cfg.P, cfg.Pp, cfg.Q, cfg.Qp, cfg.R, cfg.Rp)))
    out = {"variant": cfg.variant, "lines": [line_to_json(l) for l in cfg.lines],
           "points": {k: point_to_json(v) for k, v in points.items()}}
    if cfg.V is not None:
        out["V"] = point_to_json(cfg.V)
    return out


def pappus_from_json(fld: F.Field, raw: Any, budget: int | None = None) -> PappusConfig:
    if not isinstance(raw, dict):
        raise MalformedConfig("configuration must be an object")
    lines = raw.get("lines")
    if not isinstance(lines, dict) or not {"l", "m"} <= lines.keys():
        raise MalformedConfig("a Pappus configuration has lines {'l': .., 'm': ..}")
    if "P" not in raw:
        raise MalformedConfig("a Pappus configuration needs the common point P")
    l, m = line_from_json(fld, lines["l"], budget), line_from_json(fld, lines["m"], budget)
    return PappusConfig(l, m, point_from_json(fld, raw["P"]), *_points(fld, raw.get("points"), PAPPUS_KEYS))


def pappus_to_json(cfg: PappusConfig) -> dict:
    points = dict(zip(PAPPUS_KEYS, (cfg.Q, cfg.Qp, cfg.Qpp, cfg.R, cfg.Rp, cfg.Rpp)))
    return {"lines": {"l": line_to_json(cfg.l), "m": line_to_json(cfg.m)}, "P": point_to_json(cfg.P),
            "points": {k: point_to_json(v) for k, v in points.items()}}
