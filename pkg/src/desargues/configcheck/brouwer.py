"""Decisions that no budget can settle in general.

Each catalogued example builds a small configuration from a real number
``c`` and asks the library for a decision whose general availability would
give an omniscience principle. ``c`` is instantiated twice: as the hard
stream, whose intervals always straddle 0 so that nothing can ever be
decided, and as a stream converging to ``2^-10``, where the same calls
succeed once the precision passes 10.

Every reported ``Apart`` is re-verified from the interval streams alone,
and every ``Undecided`` is checked to be honest, meaning the intervals still
overlap at the spent precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .. import field as F
from .. import plane
from ..errors import UndecidedError, UnknownExample
from ..field import Apart, ApartnessOutcome, Dyadic, Undecided
from ..plane import Line, Point
from ..scalars import Scalar, scalar_apart
from ..symmetry import Dilatation, Translation, trace_pencil, trace_of

APPROX_C = Fraction(1, 1024)
_VERIFY_LIMIT = 4096


@dataclass(frozen=True, eq=False)
class Decision:
    name: str
    outcome: ApartnessOutcome
    quantity: tuple[Dyadic, Dyadic]
    verified: bool

    @property
    def decided(self) -> bool:
        return isinstance(self.outcome, Apart)


@dataclass(frozen=True, eq=False)
class DemoInstance:
    stream: str
    decisions: list[Decision]

    @property
    def decided(self) -> bool:
        return any(d.decided for d in self.decisions)


@dataclass(eq=False)
class DemoReport:
    example: str
    principle: str
    budget: int
    instances: list[DemoInstance] = field(default_factory=list)

    @property
    def false_witnesses(self) -> int:
        return sum(not d.verified for inst in self.instances for d in inst.decisions)

    def instance(self, stream: str) -> DemoInstance:
        return next(i for i in self.instances if i.stream == stream)

    def rows(self) -> list[tuple[str, str, str]]:
        """``(id, status, detail)`` per decision."""
        rows = []
        for inst in self.instances:
            for index, d in enumerate(inst.decisions, 1):
                key = f"{self.example}.{inst.stream}.{index}"
                if not d.verified:
                    status = "FAIL"
                elif d.decided:
                    status = "PASS"
                else:
                    status = "UNDECIDED"
                if isinstance(d.outcome, Apart):
                    detail = f"decided witness={d.outcome.witness}"
                else:
                    detail = f"budget={d.outcome.budget_spent}"
                rows.append((key, status, f"{detail} [{self.principle}] {d.name}"))
        return rows

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "principle": self.principle,
            "budget": self.budget,
            "false_witnesses": self.false_witnesses,
            "instances": [
                {
                    "stream": inst.stream,
                    "decided": inst.decided,
                    "decisions": [
                        {
                            "name": d.name,
                            "outcome": "apart" if d.decided else "undecided",
                            "witness": str(d.outcome.witness) if d.decided else None,
                            "budget_spent": None if d.decided else d.outcome.budget_spent,
                            "verified": d.verified,
                        }
                        for d in inst.decisions
                    ],
                }
                for inst in self.instances
            ],
        }


# --------------------------------------------------------------------------
# verification from the interval streams


def _gap(a: Dyadic, b: Dyadic, q: int) -> Fraction:
    alo, ahi = a.bounds(q)
    blo, bhi = b.bounds(q)
    return max(blo - ahi, alo - bhi, Fraction(0))


def verify_witness(a: Dyadic, b: Dyadic, witness: Fraction) -> bool:
    """Some precision shows ``|a - b| >= witness``."""
    return any(_gap(a, b, q) >= witness for q in range(_VERIFY_LIMIT + 1))


def honest_undecided(a: Dyadic, b: Dyadic, budget: int) -> bool:
    """At the spent precision the intervals still meet."""
    return _gap(a, b, budget) == 0


# --------------------------------------------------------------------------
# catalogue

Probe = Callable[[int], tuple[ApartnessOutcome, tuple[Dyadic, Dyadic]]]


def _zero() -> Dyadic:
    return F.constant(Fraction(0))


def _one() -> Dyadic:
    return F.constant(Fraction(1))


def _pt(x, y) -> Point:
    return Point(x, y)


def _x_axis() -> Line:
    return Line(_pt(_zero(), _zero()), _pt(_one(), _zero()), 0)


def _y_axis() -> Line:
    return Line(_pt(_zero(), _zero()), _pt(_zero(), _one()), 1)


def _through_origin(slope: Dyadic) -> Line:
    return Line(_pt(_zero(), _zero()), _pt(_one(), slope), 0)


def _attempt(run: Callable[[], ApartnessOutcome]) -> ApartnessOutcome:
    try:
        return run()
    except UndecidedError as exc:
        return Undecided(exc.budget)


def _points_apart(P: Point, Q: Point) -> Probe:
    def run(b):
        outcome = plane.point_apart(P, Q, b)
        if isinstance(F.apart(P.x, Q.x, b), Apart):
            return outcome, (P.x, Q.x)
        return outcome, (P.y, Q.y)
    return run


def _outside(P: Point, l: Line) -> Probe:
    return lambda b: (plane.outside_outcome(P, l, b), (plane.line_cross(P, l), _zero()))


def _nonparallel(l: Line, m: Line) -> Probe:
    return lambda b: (plane.nonparallel_outcome(l, m, b), (plane.direction_det(l, m), _zero()))


def _lines_distinct(l: Line, m: Line, key: tuple[Dyadic, Dyadic]) -> Probe:
    def run(b):
        outcome = _attempt(lambda: plane.line_apart(l, m, b).outside.apart)
        if isinstance(outcome, Apart):
            found = plane.line_apart(l, m, b).outside
            return outcome, (found.cross, _zero())
        return outcome, key
    return run


def _brou_j(c: Dyadic) -> list[tuple[str, Probe]]:
    P, Q = _pt(_zero(), c), _pt(_zero(), _zero())
    l, m = _x_axis(), _through_origin(c)
    return [("P=(0,c) apart Q=(0,0)", _points_apart(P, Q)),
            ("P outside l: y=0", _outside(P, l)),
            ("l: y=0 nonparallel m: y=cx", _nonparallel(l, m))]


def _brou_a(c: Dyadic) -> list[tuple[str, Probe]]:
    P, Q = _pt(_zero(), c), _pt(_zero(), _zero())
    return [("P=(0,c) apart Q=(0,0)", _points_apart(P, Q)),
            ("P outside l: y=0", _outside(P, _x_axis()))]


def _brou_b(c: Dyadic) -> list[tuple[str, Probe]]:
    l = _x_axis()
    m = Line(_pt(_zero(), c), _pt(_one(), _zero()), 0)
    return [("l: y=0 distinct m: y=c", _lines_distinct(l, m, (c, _zero())))]


def _brou_d(c: Dyadic) -> list[tuple[str, Probe]]:
    l, m = _x_axis(), _through_origin(c)
    return [("l: y=0 nonparallel m: y=cx", _nonparallel(l, m)),
            ("a point of one of l, m outside the other", _lines_distinct(l, m, (c, _zero())))]


def _brou_e(c: Dyadic) -> list[tuple[str, Probe]]:
    sigma = Translation(_pt(c, _zero()))
    O = _pt(_zero(), _zero())

    def trace(b):
        try:
            t = trace_of(sigma, O, b)
        except UndecidedError as exc:
            return Undecided(exc.budget), (c, _zero())
        # the trace is the join of O and sigma(O), built from their apartness
        return F.apart(t.dir.x, _zero(), b), (c, _zero())

    return [("X -> X+(c,0) apart from the identity", _points_apart(sigma(O), O)),
            ("X -> X+(c,0) has a trace at O (no fixed point)", trace)]


def _brou_l(c: Dyadic) -> list[tuple[str, Probe]]:
    def injective(b):
        outcome = _attempt(lambda: Dilatation(c, _pt(_zero(), _zero()), F.require_apart(c, _zero(), b)).ratio_witness)
        return outcome, (c, _zero())

    return [("X -> cX is injective (c apart 0)", injective)]


def _brou_f(c: Dyadic) -> list[tuple[str, Probe]]:
    d, e = F.dmax(c, _zero()), F.dmin(c, _zero())
    tau = Translation(_pt(e, _zero()))
    alpha = Scalar(d)
    O = _pt(_zero(), _zero())
    return [("alpha_d apart 0 (d = max(c,0))", lambda b: (scalar_apart(alpha, Scalar(_zero()), b), (d, _zero()))),
            ("tau_(e,0) apart identity (e = min(c,0))", _points_apart(tau(O), O))]


def _brou_k(c: Dyadic) -> list[tuple[str, Probe]]:
    d, e = F.dmax(c, _zero()), F.dmin(c, _zero())
    tau = Translation(_pt(d, e))

    def pencil(b):
        def run():
            trace = trace_pencil(tau, b)
            t = Line(_pt(_zero(), _zero()), trace.direction, trace.dir_witness)
            return plane.l2_decide(_x_axis(), _y_axis(), t, b).witness
        try:
            witness = run()
        except UndecidedError as exc:
            return Undecided(exc.budget), (d, e)
        return witness.apart, (witness.det, _zero())

    return [("trace pencil of X -> X+(d,e), then the axis it is nonparallel to", pencil)]


def _brou_h(c: Dyadic) -> list[tuple[str, Probe]]:
    l = _x_axis()
    m1 = Line(_pt(_zero(), _one()), _pt(_one(), c), 0)
    m2 = _through_origin(c)
    E1 = _pt(_one(), _zero())

    def l1(b):
        try:
            witness = plane.l1_decide(l, m2, E1, b).witness
        except UndecidedError as exc:
            return Undecided(exc.budget), (c, _zero())
        return witness.apart, (witness.cross, _zero())

    return [("l: y=0 nonparallel m: y=cx+1", _nonparallel(l, m1)),
            ("(1,0) outside l: y=0 or outside m: y=cx", l1)]


_CATALOGUE: dict[str, tuple[str, Callable[[Dyadic], list[tuple[str, Probe]]]]] = {
    "brouA": ("LPE", _brou_a),
    "brouB": ("WLPO", _brou_b),
    "brouD": ("LPE", _brou_d),
    "brouE": ("LPO; WLPO", _brou_e),
    "brouF": ("LLPO", _brou_f),
    "brouH": ("LPE", _brou_h),
    "brouJ": ("LPO", _brou_j),
    "brouK": ("LLPO", _brou_k),
    "brouL": ("WLPO", _brou_l),
}
_ALIASES = {"brouC": "brouD", "brouI": "brouH", "brouM": "brouJ", "brouH/I": "brouH",
            "brouC/D": "brouD", "brouJ/M": "brouJ"}

EXAMPLES = tuple(sorted(_CATALOGUE))


def resolve(example_id: str) -> str:
    key = _ALIASES.get(example_id, example_id)
    if key not in _CATALOGUE:
        known = ", ".join(sorted(set(_CATALOGUE) | set(_ALIASES)))
        raise UnknownExample(f"unknown example {example_id!r}; known: {known}")
    return key


def _run_instance(stream: str, c: Dyadic, build, budget: int) -> DemoInstance:
    decisions = []
    for name, probe in build(c):
        outcome, (a, b) = probe(budget)
        if isinstance(outcome, Apart):
            verified = verify_witness(a, b, Fraction(outcome.witness))
        elif isinstance(outcome, Undecided):
            verified = outcome.budget_spent == budget and honest_undecided(a, b, budget)
        else:
            verified = False  # the dyadic backend never refutes apartness
        decisions.append(Decision(name, outcome, (a, b), verified))
    return DemoInstance(stream, decisions)


def brouwerian_demo(example_id: str, budget: int = F.DEFAULT_DYADIC_BUDGET,
                    approx: Fraction = APPROX_C) -> DemoReport:
    """Run one example on the hard stream and on a stream converging to ``approx``."""
    if budget < 0:
        raise ValueError("budget must be non-negative")
    key = resolve(example_id)
    principle, build = _CATALOGUE[key]
    report = DemoReport(key, principle, budget)
    report.instances.append(_run_instance("hard", F.hard_zero(budget), build, budget))
    report.instances.append(_run_instance(f"approx:{approx}", F.approximated(approx, budget), build, budget))
    return report
