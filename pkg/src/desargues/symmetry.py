"""Dilatations and translations.

Closed forms: a dilatation is ``X -> e*X + C`` with ``e`` apart from zero,
a translation is the case ``e = 1``.

Synthetic constructions: partial translations, partial dilatations and the
extension of a map on the punctured plane are built from joins, parallels
and intersections only. They never read coordinates, so comparing them with
the closed forms checks the constructions themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import field as F
from . import plane
from .errors import (
    InconsistentPartialMap,
    MissingWitness,
    NotCollinear,
    NotInvertible,
    NotOutside,
    PointEqualsCenter,
    PointsNotApart,
    RatioIsOne,
    UndecidedError,
)
from .field import Apart, FieldValue, NotApart
from .plane import Branch, Line, Point


@dataclass(frozen=True)
class Dilatation:
    """``X -> ratio*X + offset``."""

    ratio: FieldValue
    offset: Point
    ratio_witness: Apart | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.ratio_witness is None:
            outcome = F.apart_zero(self.ratio)
            if isinstance(outcome, NotApart):
                raise NotInvertible("a dilatation needs a ratio apart from 0")
            if not isinstance(outcome, Apart):
                raise UndecidedError(outcome.budget_spent, "dilatation ratio apart from 0")
            object.__setattr__(self, "ratio_witness", outcome)

    @property
    def field(self) -> F.Field:
        return self.ratio.field

    def apply(self, X: Point) -> Point:
        return X.scale(self.ratio) + self.offset

    __call__ = apply

    def is_translation(self) -> bool:
        return F.is_zero(self.ratio - self.field.one())


class Translation(Dilatation):
    """``X -> X + offset``."""

    def __init__(self, offset: Point):
        super().__init__(offset.field.one(), offset, Apart(1))

    def apply(self, X: Point) -> Point:
        return X + self.offset

    __call__ = apply

    def __repr__(self):
        return f"Translation(offset={self.offset})"


def identity(fld: F.Field) -> Translation:
    return Translation(plane.origin(fld))


def apply(sigma: Dilatation, X: Point) -> Point:
    return sigma.apply(X)


def compose(s1: Dilatation, s2: Dilatation) -> Dilatation:
    """``s1 ∘ s2``: ratio ``e1*e2``, offset ``e1*C2 + C1``."""
    F._common(s1.ratio, s2.ratio)
    if isinstance(s1, Translation) and isinstance(s2, Translation):
        return Translation(s1.offset + s2.offset)
    return Dilatation(s1.ratio * s2.ratio, s2.offset.scale(s1.ratio) + s1.offset)


def inverse(sigma: Dilatation) -> Dilatation:
    if isinstance(sigma, Translation):
        return Translation(-sigma.offset)
    r = F.inv(sigma.ratio, _witness_budget(sigma.ratio))
    return Dilatation(r, -sigma.offset.scale(r))


def _witness_budget(value: FieldValue) -> int | None:
    return None if value.field.decidable else plane._SEARCH_LIMIT


def same_map(s1: Dilatation, s2: Dilatation) -> bool:
    """Equality of dilatations on decidable backends."""
    return s1.ratio == s2.ratio and s1.offset == s2.offset


def translation_between(P: Point, Q: Point) -> Translation:
    return Translation(Q - P)


def dilatation_fixing(V: Point, Q: Point, R: Point, budget: int | None = None) -> Dilatation:
    """The dilatation with fixed point ``V`` mapping ``Q`` to ``R``."""
    for X in (Q, R):
        if isinstance(plane.point_apart(X, V, budget), NotApart):
            raise PointEqualsCenter(f"{X} coincides with the center {V}")
    index, _ = plane._coordinate_witness(Q, V, budget)
    if isinstance(plane.outside_outcome(R, plane.Line(V, Q - V, index), budget), Apart):
        raise NotCollinear(f"{R} is not on the line through {V} and {Q}")
    d, t = Q - V, R - V
    e = F.div((t.x, t.y)[index], (d.x, d.y)[index], _witness_budget(V.x))
    return Dilatation(e, V - V.scale(e))


def trace_of(sigma: Dilatation, P: Point, budget: int | None = None) -> Line | None:
    """The line through ``P`` and ``sigma(P)``, or ``None`` when they coincide."""
    image = sigma.apply(P)
    outcome = plane.point_apart(P, image, budget)
    if isinstance(outcome, Apart):
        return plane.join(P, image, budget)
    if isinstance(outcome, NotApart):
        return None
    raise UndecidedError(outcome.budget_spent, f"trace of {sigma} at {P}")


def fixed_point(sigma: Dilatation, witness: Apart | None = None) -> Point:
    """The unique fixed point ``(1 - e)^-1 * C``; needs ``e`` apart from 1.

    Decidable backends find the witness themselves; the dyadic backend must
    be handed one.
    """
    one = sigma.field.one()
    if witness is None:
        if not sigma.field.decidable:
            raise MissingWitness("fixed_point needs a witness that the ratio is apart from 1")
        outcome = F.apart(sigma.ratio, one)
        if not isinstance(outcome, Apart):
            raise RatioIsOne("a translation has no fixed point")
    factor = F.inv(one - sigma.ratio, _witness_budget(one))
    return sigma.offset.scale(factor)


# --------------------------------------------------------------------------
# pencils


@dataclass(frozen=True, eq=False)
class Pencil:
    """A class of parallel lines, kept as one direction."""

    direction: Point
    dir_witness: int

    def contains(self, l: Line) -> bool:
        return F.is_zero(plane.cross(self.direction, l.dir))

    def same_as(self, other: Pencil) -> bool:
        return F.is_zero(plane.cross(self.direction, other.direction))


def pencil_of(l: Line) -> Pencil:
    return Pencil(l.dir, l.dir_witness)


def trace_pencil(tau: Translation, budget: int | None = None) -> Pencil | None:
    """Pencil holding every trace of ``tau``; ``None`` for the identity."""
    O = plane.origin(tau.field)
    try:
        return pencil_of(plane.join(O, tau.offset, budget))
    except PointsNotApart:
        return None


# --------------------------------------------------------------------------
# synthetic constructions


def _frame_candidates(fld: F.Field) -> list[Point]:
    O, E1, E2 = plane.canonical_frame(fld)
    return [O, E1, E2, E1 + E2]


def _first_candidate(fld: F.Field, accept: Callable[[Point], object]) -> Point:
    """First of ``O, E1, E2, E1+E2`` for which ``accept`` succeeds."""
    for candidate in _frame_candidates(fld):
        try:
            accept(candidate)
        except (NotOutside, PointsNotApart, UndecidedError):
            continue
        return candidate
    raise AssertionError("no frame candidate satisfies the requirement")


def synthetic_partial_translation(P: Point, P2: Point, Q: Point, budget: int | None = None) -> Point:
    """Image of ``Q`` under the partial translation taking ``P`` to ``P2``.

    ``Q`` must lie outside ``P + P2``. The image is the meet of the parallel
    to ``P + P2`` through ``Q`` with the parallel to ``P + Q`` through ``P2``.
    """
    l = plane.join(P, P2, budget)
    plane.outside(Q, l, budget)
    l_par = plane.parallel_through(Q, l)
    m = plane.join(P, Q, budget)
    m_par = plane.parallel_through(P2, m)
    return plane.intersect(l_par, m_par, budget=budget)


def synthetic_partial_dilatation(V: Point, P: Point, P2: Point, Q: Point,
                                 budget: int | None = None) -> Point:
    """Image of ``Q`` under the partial dilatation about ``V`` taking ``P`` to ``P2``.

    ``P`` and ``P2`` lie on one line through ``V``, both apart from ``V``;
    ``Q`` lies outside that line.
    """
    l = plane.join(V, P, budget)
    if isinstance(plane.point_apart(P2, V, budget), NotApart):
        raise PointEqualsCenter(f"{P2} coincides with the center {V}")
    if isinstance(plane.outside_outcome(P2, l, budget), Apart):
        raise NotCollinear(f"{P2} is not on {l}")
    plane.outside(Q, l, budget)
    l_radial = plane.join(V, Q, budget)
    m = plane.join(P, Q, budget)
    m_par = plane.parallel_through(P2, m)
    return plane.intersect(l_radial, m_par, budget=budget)


@dataclass(frozen=True, eq=False)
class PartialMap:
    """A partial translation (``points = (P, P')``) or partial dilatation
    (``points = (V, P, P')``), defined at points outside ``excluded``."""

    kind: str
    points: tuple[Point, ...]
    excluded: Line

    def defined_at(self, Q: Point, budget: int | None = None) -> bool:
        return isinstance(plane.outside_outcome(Q, self.excluded, budget), Apart)

    def __call__(self, Q: Point, budget: int | None = None) -> Point:
        if self.kind == "translation":
            return synthetic_partial_translation(*self.points, Q, budget)
        return synthetic_partial_dilatation(*self.points, Q, budget)


def partial_translation(P: Point, P2: Point, budget: int | None = None) -> PartialMap:
    return PartialMap("translation", (P, P2), plane.join(P, P2, budget))


def partial_dilatation(V: Point, P: Point, P2: Point, budget: int | None = None) -> PartialMap:
    return PartialMap("dilatation", (V, P, P2), plane.join(V, P, budget))


class SyntheticTranslation:
    """Translation assembled from two partial translations with parallel,
    distinct excluded lines; every point lies outside one of them."""

    def __init__(self, P: Point, P2: Point, budget: int | None = None):
        self.budget = budget
        self.first = partial_translation(P, P2, budget)
        P_aux = _first_candidate(P.field, lambda c: plane.outside(c, self.first.excluded, budget))
        P_aux_image = self.first(P_aux, budget)
        self.second = partial_translation(P_aux, P_aux_image, budget)

    def apply(self, Q: Point) -> Point:
        for part in (self.first, self.second):
            if part.defined_at(Q, self.budget):
                return part(Q, self.budget)
        if Q.field.decidable:
            raise AssertionError("point lies on both excluded lines")
        raise UndecidedError(F._budget(self.budget, Q.x), f"synthetic translation at {Q}")

    __call__ = apply

    def closed_form(self) -> Translation:
        O = plane.origin(self.first.excluded.field)
        return Translation(self.apply(O) - O)


def synthetic_translation(P: Point, P2: Point, budget: int | None = None) -> SyntheticTranslation:
    """The translation taking ``P`` to ``P2`` (``P`` apart from ``P2``)."""
    return SyntheticTranslation(P, P2, budget)


class PuncturedDilatation:
    """Map on the plane minus ``V`` glued from two partial dilatations about ``V``."""

    def __init__(self, V: Point, P: Point, P2: Point, budget: int | None = None):
        self.center = V
        self.budget = budget
        self.first = partial_dilatation(V, P, P2, budget)
        P_aux = _first_candidate(V.field, lambda c: plane.outside(c, self.first.excluded, budget))
        self.second = partial_dilatation(V, P_aux, self.first(P_aux, budget), budget)
        self._witness = plane.nonparallel(self.first.excluded, self.second.excluded, budget)

    def apply(self, Q: Point) -> Point:
        """Defined for ``Q`` apart from the center."""
        choice = plane.l1_decide(self.first.excluded, self.second.excluded, Q, self.budget, self._witness)
        part = self.first if choice.branch is Branch.FIRST else self.second
        return part(Q, self.budget)

    __call__ = apply


def punctured_dilatation(V: Point, P: Point, P2: Point, budget: int | None = None) -> PuncturedDilatation:
    return PuncturedDilatation(V, P, P2, budget)


class ExtendedDilatation:
    """Extension of an injective, direction-preserving map on the punctured
    plane (traces through ``V``) to a dilatation fixing ``V``.

    Away from ``V`` the given map is used; at points apart from the auxiliary
    point ``U`` the image is rebuilt from two points on an auxiliary line
    through ``U``. Where both recipes apply they must agree.
    """

    def __init__(self, V: Point, partial: Callable[[Point], Point], budget: int | None = None):
        self.center = V
        self.partial = partial
        self.budget = budget
        fld = V.field
        self.aux = _first_candidate(fld, lambda c: plane._coordinate_witness(c, V, budget))
        O, E1, E2 = plane.canonical_frame(fld)
        sides = [plane.join(O, E1), plane.join(O, E2), plane.join(E1, E2)]
        lines = [plane.parallel_through(self.aux, side) for side in sides]
        # V lies outside at least two of three concurrent, pairwise nonparallel lines
        first = plane.l1_decide(lines[0], lines[1], V, budget)
        a, b = (0, 1) if first.branch is Branch.FIRST else (1, 0)
        second = plane.l1_decide(lines[b], lines[2], V, budget)
        c = b if second.branch is Branch.FIRST else 2
        self.lines = (lines[a], lines[c])
        self._witness = plane.nonparallel(*self.lines, budget)
        self._anchor_cache: dict[int, tuple] = {}

    def _anchors(self, index: int) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
        """Two points of the auxiliary line ``index`` and their images, computed once."""
        if index not in self._anchor_cache:
            P1, P2 = self.lines[index].two_points()
            self._anchor_cache[index] = ((P1, P2), (self.partial(P1), self.partial(P2)))
        return self._anchor_cache[index]

    def _rebuild(self, Q: Point) -> Point:
        choice = plane.l1_decide(*self.lines, Q, self.budget, self._witness)
        (P1, P2), (image1, image2) = self._anchors(0 if choice.branch is Branch.FIRST else 1)
        m = plane.join(P1, Q, self.budget)
        n = plane.join(P2, Q, self.budget)
        m_par = plane.parallel_through(image1, m)
        n_par = plane.parallel_through(image2, n)
        return plane.intersect(m_par, n_par, budget=self.budget)

    def apply(self, Q: Point) -> Point:
        apart_center = plane.point_apart(Q, self.center, self.budget)
        apart_aux = plane.point_apart(Q, self.aux, self.budget)
        value = self.partial(Q) if isinstance(apart_center, Apart) else None
        if isinstance(apart_aux, Apart):
            rebuilt = self._rebuild(Q)
            if value is not None and Q.field.decidable and rebuilt != value:
                raise InconsistentPartialMap(f"extension disagrees with the partial map at {Q}")
            return rebuilt
        if value is None:
            raise UndecidedError(F._budget(self.budget, Q.x), f"extension at {Q}")
        return value

    __call__ = apply

    def closed_form(self) -> Dilatation:
        """Read off ``e`` and ``C`` from the images of ``O`` and ``E1``."""
        O, E1, _ = plane.canonical_frame(self.center.field)
        C = self.apply(O)
        e = (self.apply(E1) - C).x
        return Dilatation(e, C)


def extend_punctured(V: Point, partial: Callable[[Point], Point],
                     budget: int | None = None) -> ExtendedDilatation:
    return ExtendedDilatation(V, partial, budget)


def synthetic_dilatation(V: Point, P: Point, P2: Point, budget: int | None = None) -> ExtendedDilatation:
    """Dilatation fixing ``V`` and taking ``P`` to ``P2``, from partial dilatations."""
    return extend_punctured(V, punctured_dilatation(V, P, P2, budget), budget)
