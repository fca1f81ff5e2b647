"""Heyting fields with witnessed apartness.

Three backends are provided:

* ``rational`` -- exact rationals, decidable equality.
* ``gf:<p>`` -- the prime field GF(p), decidable equality.
* ``dyadic:<budget>`` -- real numbers given by nested rational intervals.
  Apartness is only semi-decidable here: a query interrogates precisions up
  to a budget and either finds disjoint intervals or reports ``Undecided``.
  It never answers ``NotApart``.

Values are immutable; every arithmetic operation returns a new value.
"""

from __future__ import annotations

import enum
import functools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Union

from .errors import (
    BackendMismatch,
    MissingWitness,
    NotInvertible,
    UndecidedError,
    UnknownBackend,
)

MAX_PRIME = 2**31
DEFAULT_DYADIC_BUDGET = 64


# --------------------------------------------------------------------------
# apartness outcomes


@dataclass(frozen=True)
class Apart:
    """``a`` and ``b`` are apart; ``witness`` is a positive separation.

    For rationals the witness is ``|a - b|``, for GF(p) it is the nonzero
    residue of ``a - b``, for dyadic reals a positive lower bound on the gap.
    """

    witness: Fraction | int

    def __post_init__(self):
        if not self.witness > 0:
            raise ValueError("apartness witness must be positive")


@dataclass(frozen=True)
class NotApart:
    pass


@dataclass(frozen=True)
class Undecided:
    """The budget ran out before the intervals separated."""

    budget_spent: int


ApartnessOutcome = Union[Apart, NotApart, Undecided]


class CotransChoice(enum.Enum):
    FIRST_APART = "first"
    SECOND_APART = "second"


# --------------------------------------------------------------------------
# values


class FieldValue:
    """Base class of field elements; arithmetic operators dispatch here."""

    __slots__ = ()

    @property
    def field(self) -> Field:
        raise NotImplementedError

    def _lift(self, other):
        if isinstance(other, FieldValue):
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else add(self, other)

    def __radd__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else add(other, self)

    def __sub__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else sub(self, other)

    def __rsub__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else sub(other, self)

    def __mul__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        return NotImplemented if other is NotImplemented else mul(other, self)

    def __neg__(self):
        return neg(self)


class Rational(FieldValue):
    __slots__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", Fraction(value))

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    @property
    def field(self) -> RationalField:
        return RATIONAL

    def __add__(self, other):
        if type(other) is Rational:
            return Rational(self.value + other.value)
        return FieldValue.__add__(self, other)

    def __sub__(self, other):
        if type(other) is Rational:
            return Rational(self.value - other.value)
        return FieldValue.__sub__(self, other)

    def __mul__(self, other):
        if type(other) is Rational:
            return Rational(self.value * other.value)
        return FieldValue.__mul__(self, other)

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __eq__(self, other):
        if isinstance(other, Rational):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("rational", self.value))

    def __repr__(self):
        return f"Rational({self})"

    def __str__(self):
        return str(self.value)


class Residue(FieldValue):
    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        object.__setattr__(self, "residue", residue % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    @property
    def field(self) -> PrimeField:
        return gf(self.p)

    # same-modulus fast paths; everything else goes through the generic dispatch
    def __add__(self, other):
        if type(other) is Residue and other.p == self.p:
            return Residue(self.residue + other.residue, self.p)
        return FieldValue.__add__(self, other)

    def __sub__(self, other):
        if type(other) is Residue and other.p == self.p:
            return Residue(self.residue - other.residue, self.p)
        return FieldValue.__sub__(self, other)

    def __mul__(self, other):
        if type(other) is Residue and other.p == self.p:
            return Residue(self.residue * other.residue, self.p)
        return FieldValue.__mul__(self, other)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.residue == other.residue
        return NotImplemented

    def __hash__(self):
        return hash(("gf", self.p, self.residue))

    def __repr__(self):
        return f"Residue({self.residue} mod {self.p})"

    def __str__(self):
        return str(self.residue)


Interval = tuple  # (lo: Fraction, hi: Fraction)


class Dyadic(FieldValue):
    """A real number presented by nested intervals.

    ``bounds(q)`` returns ``(lo, hi)`` with ``hi - lo <= 2 * 2**-q``; for
    ``q1 < q2`` the interval at ``q2`` lies inside the one at ``q1``. The
    bounds function must be a pure function of ``q``.
    """

    __slots__ = ("_bounds", "default_budget", "label")

    def __init__(self, bounds: Callable[[int], Interval], default_budget: int = DEFAULT_DYADIC_BUDGET,
                 label: str = "<stream>"):
        if default_budget < 0:
            raise ValueError("budget must be non-negative")
        object.__setattr__(self, "_bounds", bounds)
        object.__setattr__(self, "default_budget", default_budget)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @property
    def field(self) -> DyadicField:
        return DyadicField(self.default_budget)

    def bounds(self, q: int) -> Interval:
        if q < 0:
            raise ValueError("precision must be non-negative")
        return self._bounds(q)

    def approx(self, q: int) -> tuple[Fraction, Fraction]:
        """``(center, radius)`` at precision ``q``; ``radius <= 2**-q``."""
        lo, hi = self.bounds(q)
        return (lo + hi) / 2, (hi - lo) / 2

    # equality of computable reals is undecidable: identity only
    __eq__ = object.__eq__
    __hash__ = object.__hash__

    def __repr__(self):
        return f"Dyadic({self.label})"

    def __str__(self):
        return self.label


# --------------------------------------------------------------------------
# fields


class Field:
    """A backend: constructors, enumeration and the arithmetic kernels."""

    spec: str
    decidable: bool = True
    order: int | None = None

    def zero(self) -> FieldValue:
        return self.from_int(0)

    def one(self) -> FieldValue:
        return self.from_int(1)

    def from_int(self, n: int) -> FieldValue:
        raise NotImplementedError

    def from_fraction(self, x: Fraction) -> FieldValue:
        raise NotImplementedError

    def elements(self) -> Iterator[FieldValue]:
        raise TypeError(f"{self.spec} is not finite")

    def random(self, rng: random.Random) -> FieldValue:
        raise NotImplementedError

    def parse(self, text) -> FieldValue:
        raise NotImplementedError

    def format(self, value: FieldValue):
        return str(value)

    def __repr__(self):
        return f"<field {self.spec}>"


class RationalField(Field):
    spec = "rational"
    key = ("rational",)

    def from_int(self, n):
        return Rational(n)

    def from_fraction(self, x):
        return Rational(x)

    def random(self, rng):
        return Rational(Fraction(rng.randint(-1000, 1000), rng.randint(1, 100)))

    def parse(self, text):
        return Rational(Fraction(str(text)))

    def format(self, value):
        return str(value.value)

    # kernels
    def add(self, a, b):
        return Rational(a.value + b.value)

    def sub(self, a, b):
        return Rational(a.value - b.value)

    def mul(self, a, b):
        return Rational(a.value * b.value)

    def neg(self, a):
        return Rational(-a.value)

    def inv(self, a, budget):
        if a.value == 0:
            raise NotInvertible("0 is not a unit")
        return Rational(1 / a.value)

    def apart(self, a, b, budget):
        d = a.value - b.value
        return Apart(abs(d)) if d else NotApart()


RATIONAL = RationalField()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


class PrimeField(Field):
    def __init__(self, p: int):
        if not (isinstance(p, int) and p <= MAX_PRIME and is_prime(p)):
            raise UnknownBackend(f"gf:{p}: modulus must be a prime <= 2**31")
        self.p = p
        self.order = p
        self.spec = f"gf:{p}"
        self.key = ("gf", p)

    def from_int(self, n):
        return Residue(n, self.p)

    def from_fraction(self, x):
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise NotInvertible(f"denominator of {x} vanishes mod {self.p}")
        return Residue(x.numerator * pow(x.denominator, -1, self.p), self.p)

    def elements(self):
        return (Residue(r, self.p) for r in range(self.p))

    def random(self, rng):
        return Residue(rng.randrange(self.p), self.p)

    def parse(self, text):
        if isinstance(text, int):
            return Residue(text, self.p)
        return self.from_fraction(Fraction(str(text)))

    def format(self, value):
        return value.residue

    def add(self, a, b):
        return Residue(a.residue + b.residue, self.p)

    def sub(self, a, b):
        return Residue(a.residue - b.residue, self.p)

    def mul(self, a, b):
        return Residue(a.residue * b.residue, self.p)

    def neg(self, a):
        return Residue(-a.residue, self.p)

    def inv(self, a, budget):
        if a.residue == 0:
            raise NotInvertible("0 is not a unit")
        return Residue(pow(a.residue, -1, self.p), self.p)

    def apart(self, a, b, budget):
        d = (a.residue - b.residue) % self.p
        return Apart(d) if d else NotApart()


@functools.lru_cache(maxsize=None)
def gf(p: int) -> PrimeField:
    return PrimeField(p)


class DyadicField(Field):
    decidable = False
    key = ("dyadic",)

    def __init__(self, default_budget: int = DEFAULT_DYADIC_BUDGET):
        if default_budget < 0:
            raise UnknownBackend("dyadic budget must be non-negative")
        self.default_budget = default_budget
        self.spec = f"dyadic:{default_budget}"

    def __eq__(self, other):
        return isinstance(other, DyadicField) and other.default_budget == self.default_budget

    def __hash__(self):
        return hash(("dyadic", self.default_budget))

    def from_int(self, n):
        return constant(Fraction(n), self.default_budget)

    def from_fraction(self, x):
        return constant(Fraction(x), self.default_budget)

    def random(self, rng):
        return self.from_fraction(RATIONAL.random(rng).value)

    def parse(self, text):
        text = str(text)
        if text in ("hard", "zero-stream"):
            return hard_zero(self.default_budget)
        if text.startswith("approx:"):
            return approximated(Fraction(text[len("approx:"):]), self.default_budget)
        return constant(Fraction(text), self.default_budget)

    def format(self, value):
        return value.label

    def add(self, a, b):
        budget = max(a.default_budget, b.default_budget)

        def bounds(q):
            alo, ahi = a.bounds(q + 1)
            blo, bhi = b.bounds(q + 1)
            return alo + blo, ahi + bhi

        return Dyadic(bounds, budget, f"({a.label} + {b.label})")

    def neg(self, a):
        def bounds(q):
            lo, hi = a.bounds(q)
            return -hi, -lo

        return Dyadic(bounds, a.default_budget, f"-{a.label}")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        budget = max(a.default_budget, b.default_budget)
        # |x| <= m at every precision by nesting; product radius
        # <= (ma + mb + 1) * 2**-r when both inputs have radius <= 2**-r <= 1
        ma = max(abs(v) for v in a.bounds(0))
        mb = max(abs(v) for v in b.bounds(0))
        shift = _ceil_log2(ma + mb + 1)

        def bounds(q):
            alo, ahi = a.bounds(q + shift)
            blo, bhi = b.bounds(q + shift)
            products = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
            return min(products), max(products)

        return Dyadic(bounds, budget, f"({a.label} * {b.label})")

    def inv(self, a, budget):
        budget = a.default_budget if budget is None else budget
        q0 = None
        for q in range(budget + 1):
            lo, hi = a.bounds(q)
            if lo > 0 or hi < 0:
                q0 = q
                break
        if q0 is None:
            raise UndecidedError(budget, f"inverse of {a.label}")
        m = min(abs(lo), abs(hi))
        shift = _ceil_log2(1 / (m * m))

        def bounds(q):
            lo, hi = a.bounds(max(q0, q + shift))
            return 1 / hi, 1 / lo

        return Dyadic(bounds, a.default_budget, f"1/{a.label}")

    def apart(self, a, b, budget):
        for q in range(budget + 1):
            alo, ahi = a.bounds(q)
            blo, bhi = b.bounds(q)
            if ahi < blo:
                return Apart(blo - ahi)
            if bhi < alo:
                return Apart(alo - bhi)
        return Undecided(budget)


def _ceil_log2(x: Fraction) -> int:
    """Smallest k >= 0 with 2**k >= x."""
    k = 0
    while 2**k < x:
        k += 1
    return k


# --------------------------------------------------------------------------
# dyadic constructors


def constant(x: Fraction, default_budget: int = DEFAULT_DYADIC_BUDGET) -> Dyadic:
    """An exactly known rational as a (degenerate) interval stream."""
    x = Fraction(x)
    return Dyadic(lambda q: (x, x), default_budget, str(x))


def approximated(c: Fraction, default_budget: int = DEFAULT_DYADIC_BUDGET) -> Dyadic:
    """The real ``c`` known only through approximations ``[c - 2**-q, c + 2**-q]``."""
    c = Fraction(c)
    return Dyadic(lambda q: (c - Fraction(1, 2**q), c + Fraction(1, 2**q)),
                  default_budget, f"approx:{c}")


def hard_zero(default_budget: int = DEFAULT_DYADIC_BUDGET) -> Dyadic:
    """A stream whose interval at every precision contains 0.

    Models a real ``c >= 0`` about which nothing further is known; no budget
    can separate it from 0.
    """
    return Dyadic(lambda q: (-Fraction(1, 2**q), Fraction(1, 2**q)), default_budget, "hard")


def dmax(a: Dyadic, b: Dyadic) -> Dyadic:
    def bounds(q):
        alo, ahi = a.bounds(q)
        blo, bhi = b.bounds(q)
        return max(alo, blo), max(ahi, bhi)

    return Dyadic(bounds, max(a.default_budget, b.default_budget), f"max({a.label}, {b.label})")


def dmin(a: Dyadic, b: Dyadic) -> Dyadic:
    def bounds(q):
        alo, ahi = a.bounds(q)
        blo, bhi = b.bounds(q)
        return min(alo, blo), min(ahi, bhi)

    return Dyadic(bounds, max(a.default_budget, b.default_budget), f"min({a.label}, {b.label})")


# --------------------------------------------------------------------------
# generic operations


def _backend_key(v: FieldValue):
    if isinstance(v, Rational):
        return ("rational",)
    if isinstance(v, Residue):
        return ("gf", v.p)
    if isinstance(v, Dyadic):
        return ("dyadic",)
    raise TypeError(f"not a field value: {v!r}")


def _common(a: FieldValue, b: FieldValue) -> Field:
    kind = type(a)
    if kind is type(b) and (kind is not Residue or a.p == b.p):
        return a.field
    if _backend_key(a) != _backend_key(b):
        raise BackendMismatch(f"cannot combine {a!r} and {b!r}")
    return a.field


def add(a: FieldValue, b: FieldValue) -> FieldValue:
    return _common(a, b).add(a, b)


def sub(a: FieldValue, b: FieldValue) -> FieldValue:
    return _common(a, b).sub(a, b)


def mul(a: FieldValue, b: FieldValue) -> FieldValue:
    return _common(a, b).mul(a, b)


def neg(a: FieldValue) -> FieldValue:
    return a.field.neg(a)


def _budget(budget, *values) -> int:
    if budget is None:
        budget = max((getattr(v, "default_budget", 0) for v in values), default=0)
    if budget < 0:
        raise ValueError("budget must be non-negative")
    return budget


def inv(a: FieldValue, budget: int | None = None) -> FieldValue:
    """Multiplicative inverse; ``a`` must be apart from 0."""
    return a.field.inv(a, _budget(budget, a))


def div(a: FieldValue, b: FieldValue, budget: int | None = None) -> FieldValue:
    return mul(a, inv(b, budget))


def apart(a: FieldValue, b: FieldValue, budget: int | None = None) -> ApartnessOutcome:
    field = _common(a, b)
    return field.apart(a, b, _budget(budget, a, b))


def is_apart(a: FieldValue, b: FieldValue, budget: int | None = None) -> bool:
    return isinstance(apart(a, b, budget), Apart)


def require_apart(a: FieldValue, b: FieldValue, budget: int | None = None,
                  error: type[Exception] = MissingWitness, what: str = "") -> Apart:
    """Return the apartness witness or raise.

    ``NotApart`` raises ``error``; an unsettled dyadic query raises
    :class:`~desargues.errors.UndecidedError`.
    """
    outcome = apart(a, b, budget)
    if isinstance(outcome, Apart):
        return outcome
    if isinstance(outcome, NotApart):
        raise error(what or f"{a} and {b} are not apart")
    raise UndecidedError(outcome.budget_spent, what)


def apart_zero(a: FieldValue, budget: int | None = None) -> ApartnessOutcome:
    return apart(a, a.field.zero(), budget)


def is_zero(a: FieldValue) -> bool:
    """Decidable backends only."""
    if not a.field.decidable:
        raise TypeError("equality is not decidable on the dyadic backend")
    return isinstance(apart_zero(a), NotApart)


def cotrans(x: FieldValue, y: FieldValue, z: FieldValue,
            witness: Apart | None = None, budget: int | None = None) -> CotransChoice:
    """Given ``x`` apart from ``y``, decide whether ``z`` is apart from ``x``
    (``FIRST_APART``) or from ``y`` (``SECOND_APART``).

    Decidable backends establish the precondition themselves when no witness
    is passed. The dyadic backend requires the caller's witness; with it the
    search is guaranteed to stop once ``z``'s interval is narrower than the
    gap between ``x`` and ``y``.
    """
    field = _common(x, y)
    _common(x, z)
    if field.decidable:
        if witness is None:
            witness = apart(x, y)
            if not isinstance(witness, Apart):
                raise MissingWitness("cotransitivity needs x apart from y")
        if isinstance(apart(z, x), Apart):
            return CotransChoice.FIRST_APART
        return CotransChoice.SECOND_APART

    if not isinstance(witness, Apart):
        raise MissingWitness("dyadic cotransitivity needs an apartness witness for x, y")
    gap = Fraction(witness.witness)
    q = 0
    while True:
        xlo, xhi = x.bounds(q)
        ylo, yhi = y.bounds(q)
        zlo, zhi = z.bounds(q)
        if zhi < xlo or xhi < zlo:
            return CotransChoice.FIRST_APART
        if zhi < ylo or yhi < zlo:
            return CotransChoice.SECOND_APART
        if Fraction(4, 2**q) < gap:
            # z's interval is narrower than the gap, so it cannot meet both
            raise AssertionError("interval stream violates nesting or width bounds")
        q += 1


# --------------------------------------------------------------------------
# backend specs


def parse_field(spec: str, default_budget: int | None = None) -> Field:
    """Parse ``rational``, ``gf:<p>`` or ``dyadic:<budget>``."""
    spec = spec.strip()
    if spec == "rational":
        return RATIONAL
    kind, _, arg = spec.partition(":")
    try:
        if kind == "gf":
            return gf(int(arg))
        if kind == "dyadic":
            if arg:
                return DyadicField(int(arg))
            return DyadicField(DEFAULT_DYADIC_BUDGET if default_budget is None else default_budget)
    except ValueError as exc:
        raise UnknownBackend(f"bad field spec {spec!r}: {exc}") from None
    raise UnknownBackend(f"unknown field spec {spec!r}")
