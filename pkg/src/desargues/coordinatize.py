"""Coordinates relative to an origin and two translations of different directions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import field as F
from . import plane
from .errors import BaseIsIdentity, InvalidFrame, Parallel, UndecidedError
from .field import Apart, FieldValue, NotApart
from .plane import Line, Point
from .scalars import Scalar, decompose, scalar_apply
from .symmetry import Translation, compose, translation_between


@dataclass(frozen=True, eq=False)
class Frame:
    origin: Point
    t1: Translation
    t2: Translation
    det_witness: Apart

    @classmethod
    def make(cls, origin: Point, t1: Translation, t2: Translation, budget: int | None = None) -> Frame:
        zero = plane.origin(origin.field)
        for t in (t1, t2):
            outcome = plane.point_apart(t.offset, zero, budget)
            if isinstance(outcome, NotApart):
                raise InvalidFrame("frame translations must differ from the identity")
            if not isinstance(outcome, Apart):
                raise UndecidedError(outcome.budget_spent, "frame translation apart from identity")
        outcome = F.apart_zero(plane.cross(t1.offset, t2.offset), budget)
        if isinstance(outcome, NotApart):
            raise InvalidFrame("frame translations share a direction")
        if not isinstance(outcome, Apart):
            raise UndecidedError(outcome.budget_spent, "frame directions")
        return cls(origin, t1, t2, outcome)

    @classmethod
    def canonical(cls, fld: F.Field) -> Frame:
        O, E1, E2 = plane.canonical_frame(fld)
        return cls.make(O, Translation(E1), Translation(E2))


class LineParams(NamedTuple):
    """The coordinate set ``{(alpha + t*gamma, beta + t*delta)}``."""

    alpha: FieldValue
    beta: FieldValue
    gamma: FieldValue
    delta: FieldValue
    witness: int  # 0: gamma apart from 0, 1: delta apart from 0


class LineEquation(NamedTuple):
    a: FieldValue
    b: FieldValue
    c: FieldValue


def coords(frame: Frame, P: Point, budget: int | None = None) -> tuple[FieldValue, FieldValue]:
    """``(x, y)`` with ``tau_OP = t1^x t2^y``."""
    try:
        x, y = decompose(translation_between(frame.origin, P), frame.t1, frame.t2, budget)
    except (BaseIsIdentity, Parallel) as exc:
        raise InvalidFrame(str(exc)) from None
    return x.ratio, y.ratio


def point_at(frame: Frame, xy: tuple[FieldValue, FieldValue]) -> Point:
    x, y = xy
    tau = compose(scalar_apply(Scalar(x), frame.t1), scalar_apply(Scalar(y), frame.t2))
    return tau.apply(frame.origin)


def line_params(frame: Frame, l: Line, budget: int | None = None) -> LineParams:
    alpha, beta = coords(frame, l.base, budget)
    gamma, delta = decompose(Translation(l.dir), frame.t1, frame.t2, budget)
    index, _ = plane._coordinate_witness(Point(gamma.ratio, delta.ratio),
                                         plane.origin(l.field), budget)
    return LineParams(alpha, beta, gamma.ratio, delta.ratio, index)


def line_from_params(frame: Frame, params: LineParams, budget: int | None = None) -> Line:
    P = point_at(frame, (params.alpha, params.beta))
    tau = compose(scalar_apply(Scalar(params.gamma), frame.t1), scalar_apply(Scalar(params.delta), frame.t2))
    return plane.join(P, tau.apply(P), budget)


def line_equation(frame: Frame, l: Line, budget: int | None = None) -> LineEquation:
    """``a*x + b*y + c = 0`` in frame coordinates, scaled so that the first of
    ``a, b`` witnessed apart from zero equals 1."""
    p = line_params(frame, l, budget)
    a, b = p.delta, -p.gamma
    c = p.gamma * p.beta - p.delta * p.alpha
    if isinstance(F.apart_zero(a, budget), Apart) or p.witness == 1:
        lead = a
    else:
        lead = b
    s = F.inv(lead, None if lead.field.decidable else plane._SEARCH_LIMIT)
    return LineEquation(a * s, b * s, c * s)


def evaluate(eq: LineEquation, xy: tuple[FieldValue, FieldValue]) -> FieldValue:
    return eq.a * xy[0] + eq.b * xy[1] + eq.c
