"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PlaneError(Exception):
    """Base class for every error raised by this package."""


class BackendMismatch(PlaneError, TypeError):
    pass


class NotInvertible(PlaneError, ZeroDivisionError):
    pass


class UndecidedError(PlaneError):
    """A semi-decidable question was not settled within the budget.

    This is an outcome, not a bug: the dyadic backend raises it whenever an
    operation needs a decision that the interrogated precision cannot give.
    """

    def __init__(self, budget: int, what: str = ""):
        self.budget = budget
        self.what = what
        msg = f"undecided within budget {budget}"
        super().__init__(f"{what}: {msg}" if what else msg)


class MissingWitness(PlaneError):
    pass


class DegenerateDirection(PlaneError):
    pass


class PointsNotApart(PlaneError):
    pass


class NotOutside(PlaneError):
    pass


class Parallel(PlaneError):
    pass


class LinesEqual(PlaneError):
    pass


class NotCollinear(PlaneError):
    pass


class PointEqualsCenter(PlaneError):
    pass


class RatioIsOne(PlaneError):
    pass


class InconsistentPartialMap(PlaneError):
    pass


class ScalarZero(PlaneError):
    pass


class BaseIsIdentity(PlaneError):
    pass


class DirectionsDiffer(PlaneError):
    pass


class SameDirection(PlaneError):
    pass


class InvalidFrame(PlaneError):
    pass


class MalformedConfig(PlaneError, ValueError):
    pass


class UnknownBackend(PlaneError, ValueError):
    pass


class UnknownExample(PlaneError, ValueError):
    pass
