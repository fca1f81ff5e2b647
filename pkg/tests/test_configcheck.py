import json
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from desargues import field as F
from desargues import jsonio, plane
from desargues.configcheck import (
    EXAMPLES,
    DesarguesConfig,
    Holds,
    HypothesisFails,
    PappusConfig,
    brouwerian_demo,
    check_d1,
    check_d2,
    check_desargues,
    check_pappus,
    real1_check,
)
from desargues.configcheck import build
from desargues.configcheck.brouwer import resolve, verify_witness
from desargues.errors import MalformedConfig, UnknownExample
from desargues.field import Apart, NotApart, Undecided
from desargues.plane import Line, Point
from desargues.symmetry import Dilatation, Translation

import oracles

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
Q = F.RATIONAL


def P(x, y, fld=Q):
    return plane.point(fld, x, y)


def horizontal(y, fld=Q):
    return plane.line(fld, (0, y), (1, 0))


def _sample(name):
    raw = json.loads((SAMPLES / name).read_text())
    return raw, F.parse_field(raw.get("field", "rational"))


def test_sample_configs_hold():
    for name in ("translated.json", "dilated.json"):
        raw, fld = _sample(name)
        assert check_desargues(jsonio.desargues_from_json(fld, raw)) == Holds()
    raw, fld = _sample("pappus.json")
    assert check_pappus(jsonio.pappus_from_json(fld, raw)) == Holds()


def test_d1_translation_example():
    lines = (horizontal(0), horizontal(1), horizontal(2))
    tau = Translation(P(2, 0))
    cfg = build.image_desargues("D1", lines, P(0, 0), P(1, 1), P(3, 2), tau)
    assert check_d1(cfg) == Holds()


def test_d1_off_line_point_is_malformed():
    lines = (horizontal(0), horizontal(1), horizontal(2))
    with pytest.raises(MalformedConfig):
        check_d1(DesarguesConfig("D1", lines, P(0, 0), P(1, 0), P(0, 5), P(1, 1), P(0, 2), P(1, 2)))


def test_d1_line_hypotheses():
    bent = (horizontal(0), horizontal(1), plane.line(Q, (0, 2), (1, 1)))
    cfg = DesarguesConfig("D1", bent, P(0, 0), P(1, 0), P(0, 1), P(1, 1), P(0, 2), P(1, 3))
    assert check_d1(cfg) == HypothesisFails("l1, l3 parallel")
    same = (horizontal(0), horizontal(0), horizontal(2))
    cfg = DesarguesConfig("D1", same, P(0, 0), P(1, 0), P(0, 0), P(1, 0), P(0, 2), P(1, 2))
    assert check_d1(cfg) == HypothesisFails("l1, l2 distinct")


def _d2_lines():
    return (plane.line(Q, (0, 0), (1, 0)), plane.line(Q, (0, 0), (0, 1)), plane.line(Q, (0, 0), (1, 1)))


def test_d2_needs_center():
    lines = _d2_lines()
    cfg = DesarguesConfig("D2", lines, P(1, 0), P(2, 0), P(0, 1), P(0, 2), P(1, 1), P(2, 2))
    with pytest.raises(MalformedConfig):
        check_d2(cfg)
    with_center = DesarguesConfig("D2", lines, P(1, 0), P(2, 0), P(0, 1), P(0, 2), P(1, 1), P(2, 2), P(0, 0))
    assert check_d2(with_center) == Holds()


def test_d2_point_at_center_fails_hypothesis():
    cfg = DesarguesConfig("D2", _d2_lines(), P(1, 0), P(2, 0), P(0, 1), P(0, 0), P(1, 1), P(2, 2), P(0, 0))
    outcome = check_d2(cfg)
    assert isinstance(outcome, HypothesisFails) and "Q'" in outcome.which


def test_unparallel_hypothesis_fails():
    lines = (horizontal(0), horizontal(1), horizontal(2))
    cfg = DesarguesConfig("D1", lines, P(0, 0), P(1, 0), P(0, 1), P(7, 1), P(0, 2), P(1, 2))
    assert isinstance(check_d1(cfg), HypothesisFails)


def test_pappus_coincident_points():
    l, m = plane.line(Q, (0, 0), (1, 0)), plane.line(Q, (0, 0), (0, 1))
    cfg = build.complete_pappus(l, m, P(0, 0), P(1, 0), P(1, 0), P(0, 1), P(0, 2))
    assert check_pappus(cfg) == Holds()
    broken = PappusConfig(l, m, P(0, 0), P(1, 0), P(2, 0), P(3, 0), P(0, 1), P(0, 2), P(0, 5))
    assert isinstance(check_pappus(broken), HypothesisFails)
    with pytest.raises(MalformedConfig):
        check_pappus(PappusConfig(l, m, P(0, 0), P(1, 1), P(2, 0), P(3, 0), P(0, 1), P(0, 2), P(0, 3)))
    same = PappusConfig(l, l, P(0, 0), P(1, 0), P(2, 0), P(3, 0), P(4, 0), P(5, 0), P(6, 0))
    assert isinstance(check_pappus(same), HypothesisFails)


def test_pappus_from_commuting_dilatations():
    l, m = plane.line(Q, (0, 0), (1, 0)), plane.line(Q, (0, 0), (1, 3))
    s1 = Dilatation(F.Rational(Fraction(3, 2)), P(0, 0))
    s2 = Dilatation(F.Rational(-5), P(0, 0))
    cfg = build.pappus_from_dilatations(l, m, P(0, 0), P(2, 0), P(1, 3), s1, s2)
    assert check_pappus(cfg) == Holds()


def test_dyadic_hypothesis_is_undecided():
    D = F.constant

    def DP(x, y):
        return Point(x if isinstance(x, F.Dyadic) else D(x), y if isinstance(y, F.Dyadic) else D(y))

    lines = tuple(Line.through(DP(0, k), DP(1, 0)) for k in range(3))
    # P'+Q' has direction (hard, 1), never decidably parallel to P+Q
    cfg = DesarguesConfig("D1", lines, DP(0, 0), DP(1, 0), DP(0, 1), DP(F.add(D(1), F.hard_zero()), 1),
                          DP(0, 2), DP(1, 2))
    assert check_d1(cfg, 24) == Undecided(24)


# --------------------------------------------------------------------------
# enumerations against the oracle


@pytest.mark.parametrize("variant, enumerate_valid", [("D1", build.valid_d1), ("D2", build.valid_d2)])
def test_valid_desargues_gf3(variant, enumerate_valid):
    fld = F.gf(3)
    configs = list(enumerate_valid(fld))
    expected = oracles.desargues_counts(3, variant)
    assert expected["violated"] == 0
    # completion builds every configuration with at least one pair of distinct points per line
    assert all(check_desargues(c) == Holds() for c in configs)
    keys = {tuple((X.x.residue, X.y.residue) for _, X, _ in c.labelled_points()) + (id(c.lines),)
            for c in configs}
    assert len(configs) == len(keys)


def test_valid_pappus_gf3():
    fld = F.gf(3)
    configs = list(build.valid_pappus(fld))
    assert oracles.pappus_counts(3) == {"valid": len(configs), "violated": 0}
    assert all(check_pappus(c) == Holds() for c in configs)


def test_frozen_configuration_counts():
    assert oracles.desargues_counts(3, "D1") == {"valid": 1944, "violated": 0}
    assert oracles.desargues_counts(3, "D2") == {"valid": 3456, "violated": 0}
    assert oracles.pappus_counts(3) == {"valid": 1728, "violated": 0}
    assert oracles.desargues_counts(2, "D1")["violated"] == 0


@pytest.mark.parametrize("fld", [F.gf(5), F.gf(7), Q], ids=str)
def test_random_configurations_hold(fld):
    rng = random.Random(9)
    for _ in range(60):
        assert check_d1(build.sample_d1(fld, rng)) == Holds()
        assert check_d2(build.sample_d2(fld, rng)) == Holds()
        assert check_pappus(build.sample_pappus(fld, rng)) == Holds()


# --------------------------------------------------------------------------
# distance criteria


def test_distance_conditions_examples():
    report = real1_check(P(0, 1), horizontal(0))
    assert report.agree and report.distance_sq == F.Rational(1)
    assert all(isinstance(o, Apart) for o in report.outcomes)
    report = real1_check(P(4, 0), horizontal(0))
    assert report.agree and all(isinstance(o, NotApart) for o in report.outcomes)


def test_distance_conditions_dyadic_hard_point_is_undecided():
    zero = F.constant(0)
    l = Line.through(Point(zero, zero), Point(F.constant(1), zero))
    for budget in (16, 64):
        report = real1_check(Point(zero, F.hard_zero()), l, budget)
        assert all(isinstance(o, Undecided) for o in report.outcomes)


@given(st.tuples(*[st.fractions(min_value=-20, max_value=20, max_denominator=12)] * 6))
def test_distance_conditions_agree_with_squared_distance_oracle(raw):
    x, y, ax, ay, bx, by = raw
    if (ax, ay) == (bx, by):
        return
    report = real1_check(P(x, y), plane.join(P(ax, ay), P(bx, by)))
    assert report.agree
    assert report.distance_sq.value == oracles.squared_distance((x, y), (ax, ay), (bx, by))


# --------------------------------------------------------------------------
# omniscience demonstrations


def test_catalogue_and_aliases():
    assert set(EXAMPLES) == {"brouA", "brouB", "brouD", "brouE", "brouF", "brouH", "brouJ", "brouK", "brouL"}
    assert resolve("brouM") == "brouJ" and resolve("brouH/I") == "brouH"
    with pytest.raises(UnknownExample):
        resolve("brouZ")


@pytest.mark.parametrize("example", EXAMPLES)
def test_demo_hard_undecided_approx_decided(example):
    report = brouwerian_demo(example, 32)
    hard = report.instance("hard")
    assert not hard.decided
    assert all(d.outcome == Undecided(32) for d in hard.decisions)
    assert report.instance("approx:1/1024").decided
    assert report.false_witnesses == 0


@pytest.mark.parametrize("budget", [0, 4, 8, 10])
def test_small_budgets_stay_honest(budget):
    for example in EXAMPLES:
        report = brouwerian_demo(example, budget)
        assert not report.instance("hard").decided and report.false_witnesses == 0


def test_witness_verification_rejects_overclaims():
    a, b = F.approximated(Fraction(1, 1024)), F.constant(0)
    assert verify_witness(a, b, Fraction(1, 2048))
    assert not verify_witness(a, b, Fraction(1, 512))
    assert not verify_witness(F.hard_zero(), b, Fraction(1, 2**40))


def test_demo_report_json_is_stable():
    first = json.dumps(brouwerian_demo("brouF").to_dict(), sort_keys=True)
    assert first == json.dumps(brouwerian_demo("brouF").to_dict(), sort_keys=True)
    with pytest.raises(ValueError):
        brouwerian_demo("brouF", -1)
