"""Three equivalent ways of saying that a point is off a line.

(a) the point is outside the line; (c) the left side of the line's equation
is apart from 0 at the point; (b') the squared distance from the point to
the line is apart from 0. The squared distance stays inside field arithmetic
and is positive exactly when the distance is.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import field as F
from .. import plane
from ..coordinatize import Frame, LineEquation, evaluate, line_equation
from ..field import ApartnessOutcome, FieldValue
from ..plane import Line, Point


@dataclass(frozen=True, eq=False)
class DistanceReport:
    equation: LineEquation
    outside: ApartnessOutcome
    equation_value: FieldValue
    equation_apart: ApartnessOutcome
    distance_sq: FieldValue
    distance_apart: ApartnessOutcome

    @property
    def outcomes(self) -> tuple[ApartnessOutcome, ApartnessOutcome, ApartnessOutcome]:
        return self.outside, self.distance_apart, self.equation_apart

    @property
    def agree(self) -> bool:
        return len({type(o) for o in self.outcomes}) == 1


def real1_check(P: Point, l: Line, budget: int | None = None) -> DistanceReport:
    fld = P.field
    frame = Frame.canonical(fld)
    eq = line_equation(frame, l, budget)
    value = evaluate(eq, (P.x, P.y))
    norm = eq.a * eq.a + eq.b * eq.b
    search = None if fld.decidable else plane._SEARCH_LIMIT
    distance_sq = value * value * F.inv(norm, search)
    return DistanceReport(
        equation=eq,
        outside=plane.outside_outcome(P, l, budget),
        equation_value=value,
        equation_apart=F.apart_zero(value, budget),
        distance_sq=distance_sq,
        distance_apart=F.apart_zero(distance_sq, budget),
    )
