"""The coordinate plane over a Heyting field.

Points are pairs of field values; a line is a base point together with a
direction vector one of whose coordinates is witnessed apart from zero.
Every relation with affirmative content (distinct points, a point outside a
line, nonparallel lines) is returned together with the witness that
establishes it. On the dyadic backend such relations are searched for within
a precision budget and may come back undecided.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import field as F
from .errors import (
    DegenerateDirection,
    LinesEqual,
    MissingWitness,
    NotOutside,
    Parallel,
    PointsNotApart,
    UndecidedError,
)
from .field import Apart, FieldValue, NotApart

# upper bound for searches that are known to succeed (dyadic backend)
_SEARCH_LIMIT = 4096


@dataclass(frozen=True)
class Point:
    """A point of the plane; also used as a vector."""

    x: FieldValue
    y: FieldValue

    def __post_init__(self):
        F._common(self.x, self.y)

    @property
    def field(self) -> F.Field:
        return self.x.field

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scale(self, c: FieldValue) -> Point:
        return Point(c * self.x, c * self.y)

    def __iter__(self):
        return iter((self.x, self.y))

    def __str__(self):
        return f"({self.x}, {self.y})"


def point(field: F.Field, x, y) -> Point:
    """Build a point from ints, Fractions or field values."""

    def lift(v):
        if isinstance(v, FieldValue):
            return v
        return field.from_fraction(v)

    return Point(lift(x), lift(y))


def origin(field: F.Field) -> Point:
    return Point(field.zero(), field.zero())


def cross(u: Point, v: Point) -> FieldValue:
    """``u.x * v.y - u.y * v.x``."""
    return u.x * v.y - u.y * v.x


def point_apart(P: Point, Q: Point, budget: int | None = None) -> F.ApartnessOutcome:
    """``P`` and ``Q`` are apart iff one of their coordinates is."""
    first = F.apart(P.x, Q.x, budget)
    if isinstance(first, Apart):
        return first
    second = F.apart(P.y, Q.y, budget)
    if isinstance(second, Apart) or isinstance(first, NotApart):
        return second
    return first


def _coordinate_witness(P: Point, Q: Point, budget: int | None) -> tuple[int, Apart]:
    """Index of a coordinate in which ``P`` and ``Q`` are apart, with witness."""
    outcome = F.apart(P.x, Q.x, budget)
    if isinstance(outcome, Apart):
        return 0, outcome
    second = F.apart(P.y, Q.y, budget)
    if isinstance(second, Apart):
        return 1, second
    if isinstance(outcome, NotApart) and isinstance(second, NotApart):
        raise PointsNotApart(f"{P} and {Q} are not apart")
    raise UndecidedError(F._budget(budget, P.x, P.y, Q.x, Q.y), f"{P} apart {Q}")


def _search_apart(a: FieldValue, b: FieldValue) -> Apart:
    """Witness for an apartness that is already known to hold."""
    if a.field.decidable:
        outcome = F.apart(a, b)
        if not isinstance(outcome, Apart):
            raise AssertionError("expected apart values")
        return outcome
    budget = 16
    while budget <= _SEARCH_LIMIT:
        outcome = F.apart(a, b, budget)
        if isinstance(outcome, Apart):
            return outcome
        budget *= 2
    raise AssertionError("apartness search did not terminate")


# --------------------------------------------------------------------------
# lines


@dataclass(frozen=True, eq=False)
class Line:
    """The line ``{base + t*dir}``; ``dir_witness`` indexes a nonzero coordinate of ``dir``.

    Two ``Line`` objects may describe the same point set; use
    :func:`same_line` (decidable backends) to compare them.
    """

    base: Point
    dir: Point
    dir_witness: int

    @classmethod
    def through(cls, base: Point, direction: Point, budget: int | None = None) -> Line:
        zero = origin(base.field)
        try:
            index, _ = _coordinate_witness(direction, zero, budget)
        except PointsNotApart:
            raise DegenerateDirection(f"direction {direction} is zero") from None
        return cls(base, direction, index)

    @property
    def field(self) -> F.Field:
        return self.base.field

    def at(self, t: FieldValue) -> Point:
        return self.base + self.dir.scale(t)

    def two_points(self) -> tuple[Point, Point]:
        """Two apart points of the line: ``base`` and ``base + dir``."""
        return self.base, self.base + self.dir

    def __str__(self):
        return f"Line({self.base} + t{self.dir})"


def line(field: F.Field, base, direction) -> Line:
    """Convenience constructor from coordinate pairs."""
    return Line.through(point(field, *base), point(field, *direction))


class Incidence(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


def line_cross(P: Point, l: Line) -> FieldValue:
    """``a2*(x - p1) - a1*(y - p2)``: zero iff ``P`` is on ``l``."""
    return l.dir.y * (P.x - l.base.x) - l.dir.x * (P.y - l.base.y)


def on_line(P: Point, l: Line, budget: int | None = None) -> Incidence:
    outcome = F.apart_zero(line_cross(P, l), budget)
    if isinstance(outcome, Apart):
        return Incidence.NO
    if isinstance(outcome, NotApart):
        return Incidence.YES
    return Incidence.UNDECIDED


def lies_on(P: Point, l: Line) -> bool:
    """Incidence on decidable backends."""
    return on_line(P, l) is Incidence.YES


@dataclass(frozen=True, eq=False)
class OutsideWitness:
    """``point`` lies outside ``line``: its cross value is apart from zero."""

    point: Point
    line: Line
    cross: FieldValue
    apart: Apart

    def verify(self, budget: int | None = None) -> bool:
        return isinstance(F.apart_zero(line_cross(self.point, self.line), budget), Apart)


def outside_outcome(P: Point, l: Line, budget: int | None = None) -> F.ApartnessOutcome:
    return F.apart_zero(line_cross(P, l), budget)


def outside(P: Point, l: Line, budget: int | None = None) -> OutsideWitness:
    value = line_cross(P, l)
    outcome = F.apart_zero(value, budget)
    if isinstance(outcome, Apart):
        return OutsideWitness(P, l, value, outcome)
    if isinstance(outcome, NotApart):
        raise NotOutside(f"{P} lies on {l}")
    raise UndecidedError(outcome.budget_spent, f"{P} outside {l}")


def join(P: Point, Q: Point, budget: int | None = None) -> Line:
    """The unique line through the apart points ``P`` and ``Q``."""
    index, _ = _coordinate_witness(P, Q, budget)
    return Line(P, Q - P, index)


def parallel_through(P: Point, l: Line) -> Line:
    return Line(P, l.dir, l.dir_witness)


def direction_det(l: Line, m: Line) -> FieldValue:
    """``a1*b2 - a2*b1`` for the directions of ``l`` and ``m``."""
    return cross(l.dir, m.dir)


@dataclass(frozen=True, eq=False)
class NonparallelWitness:
    first: Line
    second: Line
    det: FieldValue
    apart: Apart


def nonparallel_outcome(l: Line, m: Line, budget: int | None = None) -> F.ApartnessOutcome:
    return F.apart_zero(direction_det(l, m), budget)


def nonparallel(l: Line, m: Line, budget: int | None = None) -> NonparallelWitness:
    det = direction_det(l, m)
    outcome = F.apart_zero(det, budget)
    if isinstance(outcome, Apart):
        return NonparallelWitness(l, m, det, outcome)
    if isinstance(outcome, NotApart):
        raise Parallel(f"{l} and {m} are parallel")
    raise UndecidedError(outcome.budget_spent, f"{l} nonparallel {m}")


def is_parallel(l: Line, m: Line) -> bool:
    """Parallelism is the negation of nonparallelism; decidable backends only."""
    return F.is_zero(direction_det(l, m))


def intersect(l: Line, m: Line, witness: NonparallelWitness | None = None,
              budget: int | None = None) -> Point:
    """The common point of nonparallel lines."""
    if witness is None:
        witness = nonparallel(l, m, budget)
    elif not (witness.first is l and witness.second is m or witness.first is m and witness.second is l):
        raise MissingWitness("witness does not concern these lines")
    det = direction_det(l, m)
    offset = m.base - l.base
    t = F.div(cross(offset, m.dir), det, _witness_budget(witness))
    return l.at(t)


def _witness_budget(witness: NonparallelWitness) -> int | None:
    if witness.det.field.decidable:
        return None
    return _SEARCH_LIMIT


def same_line(l: Line, m: Line) -> bool:
    """Semantic equality: mutual incidence and parallel directions."""
    return is_parallel(l, m) and lies_on(m.base, l)


def canonical(l: Line) -> tuple[Point, Point]:
    """Canonical ``(base, dir)`` on decidable backends.

    The first nonzero coordinate of the direction is scaled to 1 and the base
    is moved to the point where that coordinate vanishes.
    """
    a1, a2 = l.dir
    p1, p2 = l.base
    field = l.field
    if not F.is_zero(a1):
        slope = F.div(a2, a1)
        return Point(field.zero(), p2 - p1 * slope), Point(field.one(), slope)
    return Point(p1, field.zero()), Point(field.zero(), field.one())


def canonical_line(l: Line) -> Line:
    base, direction = canonical(l)
    return Line(base, direction, 0 if not F.is_zero(direction.x) else 1)


# --------------------------------------------------------------------------
# decision procedures for axioms L1 and L2


class Branch(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True, eq=False)
class BranchChoice:
    branch: Branch
    witness: OutsideWitness | NonparallelWitness


def l2_decide(l: Line, m: Line, n: Line, budget: int | None = None,
              witness: NonparallelWitness | None = None) -> BranchChoice:
    """Given ``l`` nonparallel to ``m``, find which of them ``n`` is nonparallel to.

    The first branch is returned whenever it verifies directly. Otherwise the
    decision follows the cotransitivity argument on
    ``c1*a2*b2`` against ``a1*b2*c2`` and ``a2*b1*c2`` (scaled by whichever
    coordinate of ``n``'s direction is witnessed nonzero).
    """
    if witness is None:
        witness = nonparallel(l, m, budget)
    first = nonparallel_outcome(n, l, budget)
    if isinstance(first, Apart):
        return BranchChoice(Branch.FIRST, NonparallelWitness(n, l, direction_det(n, l), first))
    if l.field.decidable:
        return BranchChoice(Branch.SECOND, nonparallel(n, m))

    a1, a2 = l.dir
    b1, b2 = m.dir
    c1, c2 = n.dir
    if n.dir_witness == 1:
        x, y, z = a1 * b2 * c2, a2 * b1 * c2, c1 * a2 * b2
        on_first, on_second = Branch.FIRST, Branch.SECOND
    else:
        x, y, z = a1 * b2 * c1, a2 * b1 * c1, c2 * a1 * b1
        on_first, on_second = Branch.SECOND, Branch.FIRST
    choice = F.cotrans(x, y, z, witness=_search_apart(x, y))
    branch = on_first if choice is F.CotransChoice.FIRST_APART else on_second
    other = l if branch is Branch.FIRST else m
    det = direction_det(n, other)
    return BranchChoice(branch, NonparallelWitness(n, other, det, _search_apart(det, det.field.zero())))


def l1_decide(l: Line, m: Line, Q: Point, budget: int | None = None,
              witness: NonparallelWitness | None = None) -> BranchChoice:
    """For ``Q`` apart from ``l ∩ m``, show ``Q`` outside ``l`` or outside ``m``."""
    if witness is None:
        witness = nonparallel(l, m, budget)
    P = intersect(l, m, witness)
    index, _ = _coordinate_witness(Q, P, budget)
    first = outside_outcome(Q, l, budget)
    if isinstance(first, Apart):
        return BranchChoice(Branch.FIRST, OutsideWitness(Q, l, line_cross(Q, l), first))
    if l.field.decidable:
        return BranchChoice(Branch.SECOND, outside(Q, m))

    n = Line(P, Q - P, index)
    choice = l2_decide(l, m, n, budget, witness)
    target = l if choice.branch is Branch.FIRST else m
    value = line_cross(Q, target)
    return BranchChoice(choice.branch, OutsideWitness(Q, target, value, _search_apart(value, value.field.zero())))


class LineApartness(NamedTuple):
    """A point of one line lying outside the other."""

    point: Point
    outside: OutsideWitness


def line_apart(l: Line, m: Line, budget: int | None = None) -> LineApartness:
    """Exhibit the distinctness of ``l`` and ``m``.

    Nonparallel lines give ``S = (l ∩ m) + dir(l)``, a point of ``l``
    outside ``m``; parallel distinct lines have each base point outside the
    other line.
    """
    det_outcome = nonparallel_outcome(l, m, budget)
    if isinstance(det_outcome, Apart):
        witness = NonparallelWitness(l, m, direction_det(l, m), det_outcome)
        S = intersect(l, m, witness) + l.dir
        value = line_cross(S, m)
        return LineApartness(S, OutsideWitness(S, m, value, _search_apart(value, value.field.zero())))
    for P, other in ((l.base, m), (m.base, l)):
        outcome = outside_outcome(P, other, budget)
        if isinstance(outcome, Apart):
            return LineApartness(P, OutsideWitness(P, other, line_cross(P, other), outcome))
    if l.field.decidable:
        raise LinesEqual(f"{l} and {m} are the same line")
    raise UndecidedError(F._budget(budget, l.base.x), "line apartness")


# --------------------------------------------------------------------------
# frames and finite enumeration


def canonical_frame(field: F.Field) -> tuple[Point, Point, Point]:
    """``O = (0,0)``, ``E1 = (1,0)``, ``E2 = (0,1)``."""
    zero, one = field.zero(), field.one()
    return Point(zero, zero), Point(one, zero), Point(zero, one)


def all_points(field: F.Field) -> list[Point]:
    elements = list(field.elements())
    return [Point(x, y) for x in elements for y in elements]


def all_directions(field: F.Field) -> list[Point]:
    """One canonical direction per pencil: ``(1, s)`` for every ``s``, then ``(0, 1)``."""
    one, zero = field.one(), field.zero()
    return [Point(one, s) for s in field.elements()] + [Point(zero, one)]


def all_lines(field: F.Field) -> list[Line]:
    """Every line of a finite plane, in canonical form."""
    lines = []
    zero = field.zero()
    for direction in all_directions(field):
        vertical = F.is_zero(direction.x)
        for c in field.elements():
            base = Point(c, zero) if vertical else Point(zero, c)
            lines.append(Line(base, direction, 1 if vertical else 0))
    return lines


def points_on(l: Line) -> Iterator[Point]:
    """All points of a line over a finite field."""
    return (l.at(t) for t in l.field.elements())


def line_key(l: Line) -> tuple:
    base, direction = canonical(l)
    return (base.x, base.y, direction.x, direction.y)
