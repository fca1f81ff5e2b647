"""Axiom verification suites over a backend.

Finite fields are checked exhaustively, the rational field on seeded random
samples. Each check is a generator of cases; a case either passes or yields
a counterexample description.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .. import field as F
from .. import plane
from ..errors import LinesEqual, UnknownBackend
from ..field import Apart, NotApart
from ..plane import Branch, Incidence, Line, Point
from ..symmetry import dilatation_fixing, trace_of, translation_between
from . import build

SIZE_LIMIT = 10**6
MAX_COUNTEREXAMPLES = 10


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0
    undecided: int = 0
    skipped: bool = False
    detail: str = ""

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        if self.failed:
            return "FAIL"
        if self.undecided:
            return "UNDECIDED"
        return "PASS"


@dataclass
class VerificationReport:
    suite: str
    backend: str
    mode: dict
    checks: dict[str, Tally] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(t.status in ("PASS", "SKIP") for t in self.checks.values())

    @property
    def failures(self) -> int:
        return sum(t.failed for t in self.checks.values())

    @property
    def undecided(self) -> int:
        return sum(t.undecided for t in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "backend": self.backend,
            "mode": self.mode,
            "counts": dict(sorted(self.counts.items())),
            "checks": {
                key: {"status": t.status, "passed": t.passed, "failed": t.failed,
                      "undecided": t.undecided, "detail": t.detail}
                for key, t in sorted(self.checks.items())
            },
            "counterexamples": self.counterexamples,
            "undecided": self.undecided,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def text_lines(self) -> list[str]:
        lines = []
        for key, t in sorted(self.checks.items()):
            if t.skipped:
                lines.append(f"CHECK {key} SKIP skipped: too large ({t.detail})")
            else:
                lines.append(f"CHECK {key} {t.status} passed={t.passed} failed={t.failed} "
                             f"undecided={t.undecided}" + (f" {t.detail}" if t.detail else ""))
        return lines


# A check yields None for a passing case and a string for a failing one.
CheckFn = Callable[[], Iterator[str | None]]


def _fails(ok: bool, message: Callable[[], str]) -> str | None:
    return None if ok else message()


def _line_contains(l: Line, *points: Point) -> bool:
    return all(plane.lies_on(X, l) for X in points)


# --------------------------------------------------------------------------
# individual checks; each takes the case source and returns a generator


class _Cases:
    """Where cases come from: a finite enumeration or a seeded sampler."""

    def __init__(self, fld: F.Field, rng: random.Random | None, n: int):
        self.fld = fld
        self.rng = rng
        self.n = n
        if rng is None:
            self.points = plane.all_points(fld)
            self.lines = plane.all_lines(fld)

    @property
    def exhaustive(self) -> bool:
        return self.rng is None

    def point(self) -> Point:
        return build.random_point(self.fld, self.rng)

    def line(self) -> Line:
        return build.random_line(self.fld, self.rng)

    def point_pairs(self) -> Iterable[tuple[Point, Point]]:
        if self.exhaustive:
            return itertools.product(self.points, repeat=2)
        return ((self.point(), self.point()) for _ in range(self.n))

    def point_triples(self) -> Iterable[tuple[Point, Point, Point]]:
        if self.exhaustive:
            return itertools.product(self.points, repeat=3)
        return ((self.point(), self.point(), self.point()) for _ in range(self.n))

    def point_lines(self) -> Iterable[tuple[Point, Line]]:
        if self.exhaustive:
            return itertools.product(self.points, self.lines)
        return self._point_lines()

    def _point_lines(self):
        for i in range(self.n):
            l = self.line()
            # every other sample puts the point on the line
            X = l.at(self.fld.random(self.rng)) if i % 2 else self.point()
            yield X, l

    def line_pairs(self) -> Iterable[tuple[Line, Line]]:
        if self.exhaustive:
            return itertools.product(self.lines, repeat=2)
        return ((self.line(), self.line()) for _ in range(self.n))

    def line_triples(self) -> Iterable[tuple[Line, Line, Line]]:
        if self.exhaustive:
            return itertools.product(self.lines, repeat=3)
        return self._line_triples()

    def _line_triples(self):
        for i in range(self.n):
            l, m, n = self.line(), self.line(), self.line()
            if i % 3 == 1:
                n = plane.parallel_through(self.point(), l)
            elif i % 3 == 2:
                n = plane.parallel_through(self.point(), m)
            yield l, m, n

    def lines_points(self) -> Iterable[tuple[Line, Line, Point]]:
        if self.exhaustive:
            return itertools.product(self.lines, self.lines, self.points)
        return ((self.line(), self.line(), self.point()) for _ in range(self.n))


def check_g1(cases: _Cases) -> Iterator[str | None]:
    """``join`` contains both points, and any line through both is not apart from it."""
    others = cases.lines if cases.exhaustive else None
    for P, Q in cases.point_pairs():
        if P == Q:
            continue
        l = plane.join(P, Q)
        if not _line_contains(l, P, Q):
            yield f"join({P}, {Q}) misses a point"
            continue
        if others is None:
            k = build.random_nonzero(cases.fld, cases.rng)
            candidates = [Line(Q, (P - Q).scale(k), 0 if not F.is_zero(P.x - Q.x) else 1)]
        else:
            candidates = [m for m in others if _line_contains(m, P, Q)]
        bad = None
        for m in candidates:
            try:
                plane.line_apart(l, m)
                bad = m
            except LinesEqual:
                pass
        yield _fails(bad is None and len(candidates) >= 1,
                     lambda: f"second line through {P}, {Q}: {bad}")


def check_g1_star(cases: _Cases) -> Iterator[str | None]:
    """Two distinct lines through ``P``: any ``Q`` apart from ``P`` is outside one of them."""
    for (P, Q), (l, m) in _through_pairs(cases):
        ok = isinstance(plane.outside_outcome(Q, l), Apart) or isinstance(plane.outside_outcome(Q, m), Apart)
        yield _fails(ok, lambda: f"{Q} on both lines through {P}")


def _through_pairs(cases: _Cases):
    if cases.exhaustive:
        for P in cases.points:
            through = build.lines_through(P)
            for Q in cases.points:
                if Q == P:
                    continue
                for l, m in itertools.permutations(through, 2):
                    yield (P, Q), (l, m)
    else:
        for _ in range(cases.n):
            P, Q = cases.point(), cases.point()
            if P == Q:
                continue
            d1, d2 = build._distinct_directions(cases.fld, cases.rng, 2)
            yield (P, Q), (Line.through(P, d1), Line.through(P, d2))


def check_g2(cases: _Cases) -> Iterator[str | None]:
    """``parallel_through`` passes through ``P``, is parallel to ``l`` and is the only such line."""
    for P, l in cases.point_lines():
        m = plane.parallel_through(P, l)
        if not (plane.lies_on(P, m) and plane.is_parallel(m, l)):
            yield f"parallel through {P} to {l} is wrong"
            continue
        if cases.exhaustive:
            rivals = [n for n in cases.lines if plane.lies_on(P, n) and plane.is_parallel(n, l)]
        else:
            rivals = [Line(P, l.dir.scale(build.random_nonzero(cases.fld, cases.rng)), l.dir_witness)]
        yield _fails(all(plane.same_line(m, n) for n in rivals) and rivals != [],
                     lambda: f"second parallel through {P} to {l}")


def check_g2_star(cases: _Cases) -> Iterator[str | None]:
    """Two distinct lines through ``P``: one of them is nonparallel to any given ``l``."""
    if cases.exhaustive:
        triples = ((P, m1, m2, l) for P in cases.points
                   for m1, m2 in itertools.permutations(build.lines_through(P), 2)
                   for l in cases.lines)
    else:
        triples = ((P, *(Line.through(P, d) for d in build._distinct_directions(cases.fld, cases.rng, 2)),
                    cases.line())
                   for P in (cases.point() for _ in range(cases.n)))
    for P, m1, m2, l in triples:
        yield _fails(not (plane.is_parallel(m1, l) and plane.is_parallel(m2, l)),
                     lambda: f"lines through {P} both parallel to {l}")


def check_g3(cases: _Cases) -> Iterator[str | None]:
    """``O, E1, E2`` are not collinear."""
    O, E1, E2 = plane.canonical_frame(cases.fld)
    yield _fails(isinstance(plane.outside_outcome(E2, plane.join(O, E1)), Apart),
                 lambda: "canonical frame is collinear")


def check_l1(cases: _Cases) -> Iterator[str | None]:
    """For ``Q`` apart from ``l ∩ m`` the chosen line has ``Q`` outside it (witness re-verified)."""
    for l, m, Q in cases.lines_points():
        if plane.is_parallel(l, m):
            continue
        P = plane.intersect(l, m)
        if P == Q:
            continue
        choice = plane.l1_decide(l, m, Q)
        target = l if choice.branch is Branch.FIRST else m
        ok = (choice.witness.line is target and choice.witness.verify()
              and all(X != Q for X in (plane.points_on(target) if cases.exhaustive else ())))
        yield _fails(ok, lambda: f"l1_decide({l}, {m}, {Q}) gave a bad witness")


def check_l2(cases: _Cases) -> Iterator[str | None]:
    """For ``l`` nonparallel to ``m`` the chosen line is nonparallel to ``n`` (witness re-verified)."""
    for l, m, n in cases.line_triples():
        if plane.is_parallel(l, m):
            continue
        choice = plane.l2_decide(l, m, n)
        target = l if choice.branch is Branch.FIRST else m
        ok = isinstance(plane.nonparallel_outcome(n, target), Apart)
        if ok:
            X = plane.intersect(n, target)
            ok = plane.lies_on(X, n) and plane.lies_on(X, target)
        yield _fails(ok, lambda: f"l2_decide({l}, {m}, {n}) gave a bad witness")


def check_k1(cases: _Cases) -> Iterator[str | None]:
    """``tau_PQ`` maps ``P`` to ``Q`` and all its traces lie in one pencil."""
    probes = cases.points if cases.exhaustive else None
    for P, Q in cases.point_pairs():
        tau = translation_between(P, Q)
        ok = tau(P) == Q
        sample = probes if probes is not None else [cases.point() for _ in range(3)]
        traces = [t for t in (trace_of(tau, X) for X in sample) if t is not None]
        if P == Q:
            ok = ok and not traces
        else:
            ok = ok and len(traces) == len(sample) and all(plane.is_parallel(t, traces[0]) for t in traces)
        yield _fails(ok, lambda: f"translation from {P} to {Q}")


def check_k2(cases: _Cases) -> Iterator[str | None]:
    """For ``Q, R`` apart from ``V`` and collinear with it there is a dilatation fixing
    ``V`` with ``Q -> R``, and every trace passes through ``V``."""
    for V, Q, R in _k2_cases(cases):
        sigma = dilatation_fixing(V, Q, R)
        ok = sigma(V) == V and sigma(Q) == R
        for X in (Q, R, V + Point(cases.fld.one(), cases.fld.zero())):
            t = trace_of(sigma, X)
            ok = ok and (t is None or plane.lies_on(V, t))
        yield _fails(ok, lambda: f"dilatation fixing {V} mapping {Q} to {R}")


def _k2_cases(cases: _Cases):
    if cases.exhaustive:
        for V, Q in itertools.product(cases.points, repeat=2):
            if V == Q:
                continue
            l = plane.join(V, Q)
            for R in plane.points_on(l):
                if R != V:
                    yield V, Q, R
    else:
        for _ in range(cases.n):
            V = cases.point()
            d = build.random_direction(cases.fld, cases.rng)
            yield (V, V + d.scale(build.random_nonzero(cases.fld, cases.rng)),
                   V + d.scale(build.random_nonzero(cases.fld, cases.rng)))


def check_outside_iff_off(cases: _Cases) -> Iterator[str | None]:
    """On a decidable plane ``outside`` is exactly the negation of incidence."""
    for P, l in cases.point_lines():
        outside = isinstance(plane.outside_outcome(P, l), Apart)
        on = plane.on_line(P, l) is Incidence.YES
        ok = outside != on
        if ok and outside and cases.exhaustive:
            ok = all(X != P for X in plane.points_on(l))
        yield _fails(ok, lambda: f"{P} against {l}")


def check_point_apartness(cases: _Cases) -> Iterator[str | None]:
    """Point apartness is irreflexive, symmetric, cotransitive and tight."""
    for P, Q, R in cases.point_triples():
        a = isinstance(plane.point_apart(P, Q), Apart)
        ok = not isinstance(plane.point_apart(P, P), Apart)
        ok = ok and a == isinstance(plane.point_apart(Q, P), Apart)
        ok = ok and a == (P != Q)
        if a:
            ok = ok and (isinstance(plane.point_apart(R, P), Apart) or isinstance(plane.point_apart(R, Q), Apart))
        yield _fails(ok, lambda: f"apartness of {P}, {Q}, {R}")


def check_triangle_sides(cases: _Cases) -> Iterator[str | None]:
    """The sides of a triangle are pairwise nonparallel."""
    for A, B, C in cases.point_triples():
        if A == B or isinstance(plane.outside_outcome(C, plane.join(A, B)), NotApart):
            continue
        sides = [plane.join(A, B), plane.join(B, C), plane.join(C, A)]
        ok = all(isinstance(plane.nonparallel_outcome(x, y), Apart) for x, y in itertools.combinations(sides, 2))
        yield _fails(ok, lambda: f"triangle {A}, {B}, {C}")


def check_parallel_lines_apart(cases: _Cases) -> Iterator[str | None]:
    """Points on distinct parallel lines are apart."""
    if cases.exhaustive:
        pairs = ((l, m) for l, m in itertools.product(cases.lines, repeat=2)
                 if l is not m and plane.is_parallel(l, m))
        for l, m in pairs:
            for X, Y in itertools.product(plane.points_on(l), plane.points_on(m)):
                yield _fails(isinstance(plane.point_apart(X, Y), Apart), lambda: f"{X} = {Y} on {l}, {m}")
    else:
        for _ in range(cases.n):
            l = cases.line()
            m = plane.parallel_through(cases.point(), l)
            if plane.same_line(l, m):
                continue
            X, Y = l.at(cases.fld.random(cases.rng)), m.at(cases.fld.random(cases.rng))
            yield _fails(isinstance(plane.point_apart(X, Y), Apart), lambda: f"{X} = {Y} on {l}, {m}")


def check_two_points(cases: _Cases) -> Iterator[str | None]:
    """Every line carries two apart points."""
    lines = cases.lines if cases.exhaustive else (cases.line() for _ in range(cases.n))
    for l in lines:
        A, B = l.two_points()
        yield _fails(isinstance(plane.point_apart(A, B), Apart) and _line_contains(l, A, B),
                     lambda: f"two points of {l}")


def check_counts(cases: _Cases, counts: dict[str, int]) -> Iterator[str | None]:
    """``p^2`` points, ``p^2+p`` lines, ``p+1`` pencils, ``p`` points per line,
    ``p+1`` lines per point, and bijections between any two lines."""
    p = cases.fld.order
    points, lines = cases.points, cases.lines
    keys = {plane.line_key(l) for l in lines}
    pencils = {(plane.canonical(l)[1].x, plane.canonical(l)[1].y) for l in lines}
    per_line = {len(set(plane.points_on(l))) for l in lines}
    per_point = {sum(1 for l in lines if plane.lies_on(P, l)) for P in points}
    counts.update(points=len(points), lines=len(keys), pencils=len(pencils),
                  points_per_line=min(per_line), lines_per_point=min(per_point))
    yield _fails(len(points) == p * p, lambda: f"{len(points)} points")
    yield _fails(len(keys) == len(lines) == p * p + p, lambda: f"{len(keys)} lines")
    yield _fails(len(pencils) == p + 1, lambda: f"{len(pencils)} pencils")
    yield _fails(per_line == {p}, lambda: f"points per line {per_line}")
    yield _fails(per_point == {p + 1}, lambda: f"lines per point {per_point}")
    # any two lines are in bijection through a point outside both (central projection)
    # or through a translation (parallel lines)
    for l, m in itertools.product(lines, repeat=2):
        yield _fails(len(set(plane.points_on(l))) == len(set(plane.points_on(m))), lambda: f"{l} vs {m}")


# --------------------------------------------------------------------------
# suite assembly


def _size(cases: _Cases) -> dict[str, int]:
    """Loop counts of the exhaustive checks."""
    if not cases.exhaustive:
        return {}
    q = cases.fld.order
    P, L = q * q, q * q + q
    return {
        "G1": P * P * L,
        "G1*": P * P * (q + 1) * q,
        "G2": P * L * L,
        "G2*": P * (q + 1) * q * L,
        "G3": 1,
        "L1": L * L * P * q,
        "L2": L ** 3,
        "K1": P ** 3,
        "K2": P * P * q,
        "outside": P * L * q,
        "apartness": P ** 3,
        "triangle-sides": P ** 3,
        "parallel-apart": L * L * q * q,
        "two-points": L,
        "counts": L * L * q + P * L,
    }


_CHECKS: dict[str, Callable[[_Cases], Iterator[str | None]]] = {
    "G1": check_g1,
    "G1*": check_g1_star,
    "G2": check_g2,
    "G2*": check_g2_star,
    "G3": check_g3,
    "L1": check_l1,
    "L2": check_l2,
    "K1": check_k1,
    "K2": check_k2,
    "outside": check_outside_iff_off,
    "apartness": check_point_apartness,
    "triangle-sides": check_triangle_sides,
    "parallel-apart": check_parallel_lines_apart,
    "two-points": check_two_points,
}


def _tally(results: Iterable[str | None], report: VerificationReport, key: str) -> Tally:
    tally = Tally()
    shown = 0
    for result in results:
        if result is None:
            tally.passed += 1
            continue
        tally.failed += 1
        if shown < MAX_COUNTEREXAMPLES:
            report.counterexamples.append({"check": key, "detail": result})
            shown += 1
    return tally


def verify_axioms(backend: F.Field | str, mode: str = "exhaustive", seed: int = 1,
                  n: int = 1000) -> VerificationReport:
    """Run every axiom check on ``backend``.

    ``mode`` is ``"exhaustive"`` (finite fields only) or ``"random"`` (seeded,
    ``n`` samples per check).
    """
    fld = F.parse_field(backend) if isinstance(backend, str) else backend
    if not fld.decidable:
        raise UnknownBackend("axiom verification needs a decidable backend (rational or gf:<p>)")
    if mode == "exhaustive":
        if fld.order is None:
            raise UnknownBackend(f"{fld.spec} is infinite; use random mode")
        cases = _Cases(fld, None, 0)
        mode_info = {"kind": "exhaustive"}
    elif mode == "random":
        if n <= 0:
            raise ValueError("sample count must be positive")
        cases = _Cases(fld, random.Random(seed), n)
        mode_info = {"kind": "random", "seed": seed, "n": n}
    else:
        raise ValueError(f"unknown mode {mode!r}")

    report = VerificationReport("axioms", fld.spec, mode_info)
    sizes = _size(cases)
    for key in sorted(_CHECKS):
        if sizes.get(key, 0) > SIZE_LIMIT:
            report.checks[key] = Tally(skipped=True, detail=f"{sizes[key]} iterations")
            continue
        if not cases.exhaustive:
            # each check draws from its own stream so reports do not depend on check order
            cases.rng = random.Random(f"{seed}:{key}")
        report.checks[key] = _tally(_CHECKS[key](cases), report, key)
    if cases.exhaustive:
        if sizes["counts"] > SIZE_LIMIT:
            report.checks["counts"] = Tally(skipped=True, detail=f"{sizes['counts']} iterations")
        else:
            report.checks["counts"] = _tally(check_counts(cases, report.counts), report, "counts")
            report.checks["counts"].detail = (f"{report.counts['points']} points, {report.counts['lines']} lines, "
                                              f"{report.counts['pencils']} pencils")
    return report
