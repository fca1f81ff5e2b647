"""Trace-preserving homomorphisms of the translation group.

Over a coordinate plane every such homomorphism is ``tau_C -> tau_{xC}`` for
a field element ``x``, so a :class:`Scalar` is stored by that ratio. The
inverse and the decomposition of a translation along two directions are
still computed through the geometric constructions (a dilatation built from
the homomorphism, traces and their intersection) and checked against the
ratio arithmetic in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import field as F
from . import plane
from .errors import (
    BaseIsIdentity,
    DirectionsDiffer,
    Parallel,
    PointsNotApart,
    SameDirection,
    ScalarZero,
    UndecidedError,
)
from .field import Apart, FieldValue, NotApart
from .plane import Point
from .symmetry import (
    Dilatation,
    Translation,
    compose,
    dilatation_fixing,
    inverse,
    translation_between,
)


@dataclass(frozen=True)
class Scalar:
    ratio: FieldValue

    @property
    def field(self) -> F.Field:
        return self.ratio.field

    def __call__(self, tau: Translation) -> Translation:
        return scalar_apply(self, tau)

    def __add__(self, other: Scalar) -> Scalar:
        return scalar_add(self, other)

    def __mul__(self, other: Scalar) -> Scalar:
        return scalar_mul(self, other)

    def __neg__(self) -> Scalar:
        return Scalar(-self.ratio)


def zero(fld: F.Field) -> Scalar:
    return Scalar(fld.zero())


def one(fld: F.Field) -> Scalar:
    return Scalar(fld.one())


def scalar_apply(alpha: Scalar, tau: Translation) -> Translation:
    return Translation(tau.offset.scale(alpha.ratio))


def scalar_add(alpha: Scalar, beta: Scalar) -> Scalar:
    return Scalar(alpha.ratio + beta.ratio)


def scalar_mul(alpha: Scalar, beta: Scalar) -> Scalar:
    """``tau^(alpha*beta) = (tau^beta)^alpha``."""
    return Scalar(alpha.ratio * beta.ratio)


def scalar_apart(alpha: Scalar, beta: Scalar, budget: int | None = None) -> F.ApartnessOutcome:
    return F.apart(alpha.ratio, beta.ratio, budget)


def _nonzero_coordinate(C: Point, budget: int | None) -> int:
    try:
        index, _ = plane._coordinate_witness(C, plane.origin(C.field), budget)
    except PointsNotApart:
        raise BaseIsIdentity("the base translation is the identity") from None
    return index


def ratio_of(tau1: Translation, tau2: Translation, budget: int | None = None) -> Scalar:
    """The unique ``alpha`` with ``tau2 = tau1^alpha``.

    ``tau1`` must differ from the identity and ``tau2`` must move along the
    direction of ``tau1`` (``tau2`` may be the identity).
    """
    C1, C2 = tau1.offset, tau2.offset
    index = _nonzero_coordinate(C1, budget)
    ratio = F.div((C2.x, C2.y)[index], (C1.x, C1.y)[index], _search_budget(C1))
    residual = C2 - C1.scale(ratio)
    for value in residual:
        if isinstance(F.apart_zero(value, budget), Apart):
            raise DirectionsDiffer(f"{C2} is not a multiple of {C1}")
    return Scalar(ratio)


def _search_budget(P: Point) -> int | None:
    return None if P.field.decidable else plane._SEARCH_LIMIT


def conjugate(sigma: Dilatation, tau: Translation) -> Translation:
    """``sigma tau sigma^-1``, which is the translation by ``e*C``."""
    result = compose(compose(sigma, tau), inverse(sigma))
    if result.field.decidable and not result.is_translation():
        raise AssertionError("conjugate of a translation is not a translation")
    return Translation(result.offset)


def scalar_from_dilatation(sigma: Dilatation) -> Scalar:
    """``alpha_sigma``: ``tau -> sigma tau sigma^-1``, read off on one probe translation."""
    _, E1, _ = plane.canonical_frame(sigma.field)
    probe = Translation(E1)
    return ratio_of(probe, conjugate(sigma, probe))


def dilatation_from_scalar(alpha: Scalar, P: Point, budget: int | None = None) -> Dilatation:
    """The dilatation fixing ``P`` with ``alpha_sigma = alpha``, via ``sigma Q = tau_PQ^alpha P``."""
    outcome = F.apart_zero(alpha.ratio, budget)
    if isinstance(outcome, NotApart):
        raise ScalarZero("the zero scalar comes from no dilatation")
    if not isinstance(outcome, Apart):
        raise UndecidedError(outcome.budget_spent, "scalar apart from 0")
    _, E1, _ = plane.canonical_frame(P.field)
    probe = P + E1
    image = scalar_apply(alpha, translation_between(P, probe)).apply(P)
    return dilatation_fixing(P, probe, image, budget)


def scalar_inverse(alpha: Scalar, P: Point | None = None, budget: int | None = None) -> Scalar:
    """Inverse in the scalar ring through the dilatation fixing ``P`` (default ``O``)."""
    if P is None:
        P = plane.origin(alpha.field)
    sigma = dilatation_from_scalar(alpha, P, budget)
    return scalar_from_dilatation(inverse(sigma))


def decompose(tau: Translation, tau1: Translation, tau2: Translation,
              budget: int | None = None) -> tuple[Scalar, Scalar]:
    """``(alpha, beta)`` with ``tau = tau1^alpha tau2^beta``.

    Take ``P = O`` and ``Q = tau P``; meet the ``tau2`` trace through ``P``
    with the ``tau1`` trace through ``Q`` in ``R``; then
    ``tau_PR = tau2^beta`` and ``tau_RQ = tau1^alpha``.
    """
    for t in (tau1, tau2):
        _nonzero_coordinate(t.offset, budget)
    P = plane.origin(tau.field)
    Q = tau.apply(P)
    l2 = plane.join(P, tau2.apply(P), budget)
    l1 = plane.join(Q, tau1.apply(Q), budget)
    try:
        witness = plane.nonparallel(l1, l2, budget)
    except Parallel:
        raise SameDirection("base translations share a direction") from None
    R = plane.intersect(l1, l2, witness)
    beta = ratio_of(tau2, translation_between(P, R), budget)
    alpha = ratio_of(tau1, translation_between(R, Q), budget)
    return alpha, beta


@dataclass
class CommutativityReport:
    pairs: int = 0
    failures: list = field(default_factory=list)
    dilatation_pairs: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


def commutativity_check(samples: Iterable[Scalar]) -> CommutativityReport:
    """Check ``alpha*beta = beta*alpha`` on all pairs of samples.

    For nonzero pairs the corresponding dilatations fixing ``O`` are also
    checked to commute, which is the geometric side of the same statement.
    Decidable backends only.
    """
    samples = list(samples)
    report = CommutativityReport()
    for a in samples:
        for b in samples:
            report.pairs += 1
            if scalar_mul(a, b) != scalar_mul(b, a):
                report.failures.append((a, b))
                continue
            if F.is_zero(a.ratio) or F.is_zero(b.ratio):
                continue
            O = plane.origin(a.field)
            s1, s2 = dilatation_from_scalar(a, O), dilatation_from_scalar(b, O)
            report.dilatation_pairs += 1
            left, right = compose(s1, s2), compose(s2, s1)
            if left.ratio != right.ratio or left.offset != right.offset:
                report.failures.append((a, b))
    return report
