"""Desargues and Pappus configurations and their checkers.

A checker first validates the configuration (incidences, then the standing
assumptions on the lines and points, then the parallelism hypotheses) and
only then looks at the conclusion. On the dyadic backend a parallelism can
never be affirmed, so a configuration whose hypotheses are not refuted ends
as ``Undecided``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .. import field as F
from .. import plane
from ..errors import LinesEqual, MalformedConfig, PointsNotApart, UndecidedError
from ..field import Apart, NotApart, Undecided
from ..plane import Incidence, Line, NonparallelWitness, Point


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class HypothesisFails:
    which: str


@dataclass(frozen=True, eq=False)
class Violated:
    """The two conclusion lines, with a witness that they are nonparallel."""

    witness: NonparallelWitness


CheckOutcome = Union[HypothesisFails, Holds, Violated, Undecided]


@dataclass(frozen=True, eq=False)
class DesarguesConfig:
    """``P, P'`` on ``lines[0]``, ``Q, Q'`` on ``lines[1]``, ``R, R'`` on ``lines[2]``.

    ``variant`` is ``"D1"`` (parallel lines) or ``"D2"`` (lines concurrent
    at ``V``).
    """

    variant: str
    lines: tuple[Line, Line, Line]
    P: Point
    Pp: Point
    Q: Point
    Qp: Point
    R: Point
    Rp: Point
    V: Point | None = None

    def labelled_points(self) -> list[tuple[str, Point, int]]:
        return [("P", self.P, 0), ("P'", self.Pp, 0), ("Q", self.Q, 1),
                ("Q'", self.Qp, 1), ("R", self.R, 2), ("R'", self.Rp, 2)]


@dataclass(frozen=True, eq=False)
class PappusConfig:
    """``Q, Q', Q''`` on ``l`` and ``R, R', R''`` on ``m``; ``P`` is common to both."""

    l: Line
    m: Line
    P: Point
    Q: Point
    Qp: Point
    Qpp: Point
    R: Point
    Rp: Point
    Rpp: Point

    def labelled_points(self) -> list[tuple[str, Point, str]]:
        return [("Q", self.Q, "l"), ("Q'", self.Qp, "l"), ("Q''", self.Qpp, "l"),
                ("R", self.R, "m"), ("R'", self.Rp, "m"), ("R''", self.Rpp, "m")]


class _Refuted(Exception):
    def __init__(self, which: str):
        self.which = which


class _Check:
    """Accumulates the questions the budget could not settle."""

    def __init__(self, budget: int | None, sample):
        self.budget = budget
        self.pending = False
        self.spent = F._budget(budget, sample)

    def incident(self, X: Point, l: Line, name: str, line_name: str) -> None:
        state = plane.on_line(X, l, self.budget)
        if state is Incidence.NO:
            raise MalformedConfig(f"{name} is not on {line_name}")
        if state is Incidence.UNDECIDED:
            self.pending = True

    def parallel(self, l: Line, m: Line, which: str) -> None:
        outcome = plane.nonparallel_outcome(l, m, self.budget)
        if isinstance(outcome, Apart):
            raise _Refuted(which)
        if not isinstance(outcome, NotApart):
            self.pending = True

    def nonparallel(self, l: Line, m: Line, which: str) -> None:
        outcome = plane.nonparallel_outcome(l, m, self.budget)
        if isinstance(outcome, NotApart):
            raise _Refuted(which)
        if not isinstance(outcome, Apart):
            self.pending = True

    def distinct(self, l: Line, m: Line, which: str) -> None:
        try:
            plane.line_apart(l, m, self.budget)
        except LinesEqual:
            raise _Refuted(which) from None
        except UndecidedError:
            self.pending = True

    def on(self, X: Point, l: Line, which: str) -> None:
        state = plane.on_line(X, l, self.budget)
        if state is Incidence.NO:
            raise _Refuted(which)
        if state is Incidence.UNDECIDED:
            self.pending = True

    def apart(self, X: Point, Y: Point, which: str) -> None:
        outcome = plane.point_apart(X, Y, self.budget)
        if isinstance(outcome, NotApart):
            raise _Refuted(which)
        if not isinstance(outcome, Apart):
            self.pending = True

    def join(self, X: Point, Y: Point, which: str) -> Line:
        try:
            return plane.join(X, Y, self.budget)
        except PointsNotApart:
            raise _Refuted(which) from None

    def conclude(self, l: Line, m: Line) -> CheckOutcome:
        if self.pending:
            return Undecided(self.spent)
        outcome = plane.nonparallel_outcome(l, m, self.budget)
        if isinstance(outcome, Apart):
            return Violated(NonparallelWitness(l, m, plane.direction_det(l, m), outcome))
        if isinstance(outcome, NotApart):
            return Holds()
        return Undecided(self.spent)


_PAIRS = ((0, 1), (0, 2), (1, 2))


def _run(body, check: _Check) -> CheckOutcome:
    try:
        return body(check)
    except _Refuted as refuted:
        return HypothesisFails(refuted.which)
    except UndecidedError:
        return Undecided(check.spent)


def _desargues_incidences(cfg: DesarguesConfig, check: _Check) -> None:
    for name, X, index in cfg.labelled_points():
        check.incident(X, cfg.lines[index], name, f"l{index + 1}")


def _desargues_tail(cfg: DesarguesConfig, check: _Check) -> CheckOutcome:
    PQ = check.join(cfg.P, cfg.Q, "P apart Q")
    PQp = check.join(cfg.Pp, cfg.Qp, "P' apart Q'")
    PR = check.join(cfg.P, cfg.R, "P apart R")
    PRp = check.join(cfg.Pp, cfg.Rp, "P' apart R'")
    check.parallel(PQ, PQp, "P+Q parallel P'+Q'")
    check.parallel(PR, PRp, "P+R parallel P'+R'")
    QR = check.join(cfg.Q, cfg.R, "Q apart R")
    QRp = check.join(cfg.Qp, cfg.Rp, "Q' apart R'")
    return check.conclude(QR, QRp)


def check_d1(cfg: DesarguesConfig, budget: int | None = None) -> CheckOutcome:
    """Three distinct parallel lines; if ``P+Q ∥ P'+Q'`` and ``P+R ∥ P'+R'``
    then ``Q+R ∥ Q'+R'``."""
    check = _Check(budget, cfg.P.x)
    _desargues_incidences(cfg, check)

    def body(check: _Check) -> CheckOutcome:
        for i, j in _PAIRS:
            names = f"l{i + 1}, l{j + 1}"
            check.parallel(cfg.lines[i], cfg.lines[j], f"{names} parallel")
            check.distinct(cfg.lines[i], cfg.lines[j], f"{names} distinct")
        return _desargues_tail(cfg, check)

    return _run(body, check)


def check_d2(cfg: DesarguesConfig, budget: int | None = None) -> CheckOutcome:
    """Three distinct lines through ``V``, six points apart from ``V``; same
    hypotheses and conclusion as :func:`check_d1`."""
    if cfg.V is None:
        raise MalformedConfig("a D2 configuration needs its concurrence point V")
    check = _Check(budget, cfg.P.x)
    _desargues_incidences(cfg, check)

    def body(check: _Check) -> CheckOutcome:
        for i, j in _PAIRS:
            check.distinct(cfg.lines[i], cfg.lines[j], f"l{i + 1}, l{j + 1} distinct")
        for index, l in enumerate(cfg.lines):
            check.on(cfg.V, l, f"V on l{index + 1}")
        for name, X, _ in cfg.labelled_points():
            check.apart(X, cfg.V, f"{name} apart V")
        return _desargues_tail(cfg, check)

    return _run(body, check)


def check_desargues(cfg: DesarguesConfig, budget: int | None = None) -> CheckOutcome:
    if cfg.variant == "D1":
        return check_d1(cfg, budget)
    if cfg.variant == "D2":
        return check_d2(cfg, budget)
    raise MalformedConfig(f"unknown Desargues variant {cfg.variant!r}")


def check_pappus(cfg: PappusConfig, budget: int | None = None) -> CheckOutcome:
    """Nonparallel ``l, m`` through ``P``; if ``Q+R' ∥ Q'+R''`` and
    ``Q'+R ∥ Q''+R'`` then ``Q+R ∥ Q''+R''``.

    The six points need only be apart from ``P``; coincidences such as
    ``Q = Q'`` are valid input.
    """
    check = _Check(budget, cfg.P.x)
    lines = {"l": cfg.l, "m": cfg.m}
    for name, X, line_name in cfg.labelled_points():
        check.incident(X, lines[line_name], name, line_name)

    def body(check: _Check) -> CheckOutcome:
        check.nonparallel(cfg.l, cfg.m, "l nonparallel m")
        check.on(cfg.P, cfg.l, "P on l")
        check.on(cfg.P, cfg.m, "P on m")
        for name, X, _ in cfg.labelled_points():
            check.apart(X, cfg.P, f"{name} apart P")
        first = check.join(cfg.Q, cfg.Rp, "Q apart R'")
        first_p = check.join(cfg.Qp, cfg.Rpp, "Q' apart R''")
        second = check.join(cfg.Qp, cfg.R, "Q' apart R")
        second_p = check.join(cfg.Qpp, cfg.Rp, "Q'' apart R'")
        check.parallel(first, first_p, "Q+R' parallel Q'+R''")
        check.parallel(second, second_p, "Q'+R parallel Q''+R'")
        QR = check.join(cfg.Q, cfg.R, "Q apart R")
        QRpp = check.join(cfg.Qpp, cfg.Rpp, "Q'' apart R''")
        return check.conclude(QR, QRpp)

    return _run(body, check)
