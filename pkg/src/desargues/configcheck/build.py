"""Constructing configurations: by maps, by completion, exhaustively and at random."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .. import field as F
from .. import plane
from ..plane import Line, Point
from ..symmetry import Dilatation
from .configs import DesarguesConfig, PappusConfig


def _meet_parallel(target: Line, through: Point, direction_of: Line) -> Point:
    return plane.intersect(target, plane.parallel_through(through, direction_of))


def complete_desargues(variant: str, lines: tuple[Line, Line, Line], P: Point, Pp: Point,
                       Q: Point, R: Point, V: Point | None = None) -> DesarguesConfig:
    """Choose ``Q'`` and ``R'`` so that both hypotheses hold."""
    Qp = _meet_parallel(lines[1], Pp, plane.join(P, Q))
    Rp = _meet_parallel(lines[2], Pp, plane.join(P, R))
    return DesarguesConfig(variant, lines, P, Pp, Q, Qp, R, Rp, V)


def image_desargues(variant: str, lines: tuple[Line, Line, Line], P: Point, Q: Point,
                    R: Point, sigma: Dilatation, V: Point | None = None) -> DesarguesConfig:
    """Primed points are the images of ``P, Q, R`` under ``sigma``."""
    return DesarguesConfig(variant, lines, P, sigma(P), Q, sigma(Q), R, sigma(R), V)


def complete_pappus(l: Line, m: Line, P: Point, Q: Point, Qp: Point, R: Point, Rp: Point) -> PappusConfig:
    """Choose ``R''`` and ``Q''`` so that both hypotheses hold."""
    Rpp = _meet_parallel(m, Qp, plane.join(Q, Rp))
    Qpp = _meet_parallel(l, Rp, plane.join(Qp, R))
    return PappusConfig(l, m, P, Q, Qp, Qpp, R, Rp, Rpp)


def pappus_from_dilatations(l: Line, m: Line, P: Point, Q: Point, R: Point,
                            s1: Dilatation, s2: Dilatation) -> PappusConfig:
    """``Q' = s1 Q``, ``Q'' = s2 s1 Q``, ``R' = s2 R``, ``R'' = s1 s2 R`` for ``s1, s2`` fixing ``P``."""
    return PappusConfig(l, m, P, Q, s1(Q), s2(s1(Q)), R, s2(R), s1(s2(R)))


# --------------------------------------------------------------------------
# exhaustive enumeration over a finite plane


def _pencils(fld: F.Field) -> list[list[Line]]:
    groups: dict[tuple, list[Line]] = {}
    for l in plane.all_lines(fld):
        groups.setdefault((l.dir.x, l.dir.y), []).append(l)
    return list(groups.values())


def lines_through(V: Point) -> list[Line]:
    return [Line(V, d, 0 if not F.is_zero(d.x) else 1) for d in plane.all_directions(V.field)]


def _punctured(l: Line, V: Point) -> list[Point]:
    return [X for X in plane.points_on(l) if X != V]


def all_d1(fld: F.Field) -> Iterator[DesarguesConfig]:
    """Every choice of three distinct parallel lines and six points on them."""
    for pencil in _pencils(fld):
        for lines in itertools.permutations(pencil, 3):
            rows = [list(plane.points_on(l)) for l in lines]
            for P, Pp, Q, Qp, R, Rp in itertools.product(rows[0], rows[0], rows[1], rows[1],
                                                         rows[2], rows[2]):
                yield DesarguesConfig("D1", lines, P, Pp, Q, Qp, R, Rp)


def all_d2(fld: F.Field) -> Iterator[DesarguesConfig]:
    """Every choice of ``V``, three distinct lines through it and six points apart from it."""
    for V in plane.all_points(fld):
        for lines in itertools.permutations(lines_through(V), 3):
            rows = [_punctured(l, V) for l in lines]
            for P, Pp, Q, Qp, R, Rp in itertools.product(rows[0], rows[0], rows[1], rows[1],
                                                         rows[2], rows[2]):
                yield DesarguesConfig("D2", lines, P, Pp, Q, Qp, R, Rp, V)


def all_pappus(fld: F.Field) -> Iterator[PappusConfig]:
    """Every choice of ``P``, two distinct lines through it and six points apart from it."""
    for P in plane.all_points(fld):
        for l, m in itertools.permutations(lines_through(P), 2):
            on_l, on_m = _punctured(l, P), _punctured(m, P)
            for Q, Qp, Qpp, R, Rp, Rpp in itertools.product(on_l, on_l, on_l, on_m, on_m, on_m):
                yield PappusConfig(l, m, P, Q, Qp, Qpp, R, Rp, Rpp)


def valid_d1(fld: F.Field) -> Iterator[DesarguesConfig]:
    """Every configuration satisfying the D1 hypotheses (``Q', R'`` are forced)."""
    for pencil in _pencils(fld):
        for lines in itertools.permutations(pencil, 3):
            rows = [list(plane.points_on(l)) for l in lines]
            for P, Pp, Q, R in itertools.product(rows[0], rows[0], rows[1], rows[2]):
                yield complete_desargues("D1", lines, P, Pp, Q, R)


def valid_d2(fld: F.Field) -> Iterator[DesarguesConfig]:
    for V in plane.all_points(fld):
        for lines in itertools.permutations(lines_through(V), 3):
            rows = [_punctured(l, V) for l in lines]
            for P, Pp, Q, R in itertools.product(rows[0], rows[0], rows[1], rows[2]):
                yield complete_desargues("D2", lines, P, Pp, Q, R, V)


def valid_pappus(fld: F.Field) -> Iterator[PappusConfig]:
    for P in plane.all_points(fld):
        for l, m in itertools.permutations(lines_through(P), 2):
            on_l, on_m = _punctured(l, P), _punctured(m, P)
            for Q, Qp, R, Rp in itertools.product(on_l, on_l, on_m, on_m):
                yield complete_pappus(l, m, P, Q, Qp, R, Rp)


# --------------------------------------------------------------------------
# random sampling


def random_point(fld: F.Field, rng: random.Random) -> Point:
    return Point(fld.random(rng), fld.random(rng))


def random_nonzero(fld: F.Field, rng: random.Random):
    while True:
        value = fld.random(rng)
        if not F.is_zero(value):
            return value


def random_direction(fld: F.Field, rng: random.Random) -> Point:
    while True:
        d = random_point(fld, rng)
        if d != plane.origin(fld):
            return d


def random_line(fld: F.Field, rng: random.Random) -> Line:
    return Line.through(random_point(fld, rng), random_direction(fld, rng))


def _random_on(l: Line, rng: random.Random) -> Point:
    return l.at(l.field.random(rng))


def _random_apart(l: Line, V: Point, rng: random.Random) -> Point:
    """A point of ``l`` (which passes through ``V``) other than ``V``."""
    return V + l.dir.scale(random_nonzero(l.field, rng))


def _distinct_directions(fld: F.Field, rng: random.Random, k: int) -> list[Point]:
    chosen: list[Point] = []
    while len(chosen) < k:
        d = random_direction(fld, rng)
        if all(not F.is_zero(plane.cross(d, e)) for e in chosen):
            chosen.append(d)
    return chosen


def sample_d1(fld: F.Field, rng: random.Random) -> DesarguesConfig:
    d = random_direction(fld, rng)
    normal = _distinct_directions_from(fld, rng, d)
    anchor = random_point(fld, rng)
    offsets = _distinct_values(fld, rng, 3)
    lines = tuple(Line.through(anchor + normal.scale(t), d) for t in offsets)
    P, Pp = _random_on(lines[0], rng), _random_on(lines[0], rng)
    return complete_desargues("D1", lines, P, Pp, _random_on(lines[1], rng), _random_on(lines[2], rng))


def sample_d2(fld: F.Field, rng: random.Random) -> DesarguesConfig:
    V = random_point(fld, rng)
    lines = tuple(Line.through(V, d) for d in _distinct_directions(fld, rng, 3))
    P, Pp = _random_apart(lines[0], V, rng), _random_apart(lines[0], V, rng)
    Q, R = _random_apart(lines[1], V, rng), _random_apart(lines[2], V, rng)
    return complete_desargues("D2", lines, P, Pp, Q, R, V)


def sample_pappus(fld: F.Field, rng: random.Random) -> PappusConfig:
    P = random_point(fld, rng)
    l, m = (Line.through(P, d) for d in _distinct_directions(fld, rng, 2))
    Q, Qp = _random_apart(l, P, rng), _random_apart(l, P, rng)
    R, Rp = _random_apart(m, P, rng), _random_apart(m, P, rng)
    return complete_pappus(l, m, P, Q, Qp, R, Rp)


def _distinct_directions_from(fld: F.Field, rng: random.Random, d: Point) -> Point:
    while True:
        e = random_direction(fld, rng)
        if not F.is_zero(plane.cross(d, e)):
            return e


def _distinct_values(fld: F.Field, rng: random.Random, k: int) -> list:
    chosen: list = []
    while len(chosen) < k:
        value = fld.random(rng)
        if value not in chosen:
            chosen.append(value)
    return chosen
