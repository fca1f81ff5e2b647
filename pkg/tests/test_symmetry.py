import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from desargues import field as F
from desargues import plane
from desargues.errors import (
    InconsistentPartialMap,
    MissingWitness,
    NotCollinear,
    NotInvertible,
    NotOutside,
    PointEqualsCenter,
    RatioIsOne,
    UndecidedError,
)
from desargues.plane import Point
from desargues.symmetry import (
    Dilatation,
    Translation,
    compose,
    dilatation_fixing,
    extend_punctured,
    fixed_point,
    identity,
    inverse,
    partial_dilatation,
    partial_translation,
    pencil_of,
    punctured_dilatation,
    same_map,
    synthetic_dilatation,
    synthetic_partial_dilatation,
    synthetic_partial_translation,
    synthetic_translation,
    trace_of,
    trace_pencil,
    translation_between,
)

from strategies import decidable_fields, dilatations, points, translations

Q = F.RATIONAL


def P(x, y, fld=Q):
    return plane.point(fld, x, y)


@given(decidable_fields.flatmap(lambda f: st.tuples(dilatations(f), dilatations(f), dilatations(f), points(f))))
def test_dilatation_group_laws(case):
    a, b, c, X = case
    assert compose(compose(a, b), c)(X) == compose(a, compose(b, c))(X)
    assert compose(a, b)(X) == a(b(X))
    assert same_map(compose(a, inverse(a)), identity(a.field))
    assert same_map(compose(identity(a.field), a), a)


@given(decidable_fields.flatmap(lambda f: st.tuples(translations(f), translations(f), points(f))))
def test_translations_form_abelian_subgroup(case):
    s, t, X = case
    st_ = compose(s, t)
    assert isinstance(st_, Translation)
    assert same_map(st_, compose(t, s))
    assert isinstance(inverse(s), Translation)


@given(decidable_fields.flatmap(lambda f: st.tuples(dilatations(f), points(f))))
def test_dilatations_preserve_directions(case):
    sigma, X = case
    fld = X.field
    Y = X + Point(fld.one(), fld.from_int(2))
    image = plane.join(sigma(X), sigma(Y))
    assert plane.is_parallel(image, plane.join(X, Y))


@given(decidable_fields.flatmap(lambda f: st.tuples(dilatations(f), points(f))))
def test_traces_pass_through_fixed_point(case):
    sigma, X = case
    t = trace_of(sigma, X)
    if sigma.is_translation():
        if t is not None:
            pencil = trace_pencil(Translation(sigma.offset))
            assert pencil.contains(t)
        with pytest.raises(RatioIsOne):
            fixed_point(sigma)
        return
    V = fixed_point(sigma)
    assert sigma(V) == V
    if t is None:
        assert X == V
    else:
        assert plane.lies_on(V, t)


def test_translation_between_and_identity_trace():
    tau = translation_between(P(1, 2), P(4, 6))
    assert tau(P(0, 0)) == P(3, 4)
    assert trace_of(identity(Q), P(5, 5)) is None
    assert trace_pencil(identity(Q)) is None
    assert trace_pencil(tau).contains(plane.line(Q, (9, 9), (6, 8)))


def test_dilatation_fixing_example_and_errors():
    sigma = dilatation_fixing(P(1, 1), P(2, 1), P(4, 1))
    assert sigma.ratio == F.Rational(3) and sigma(P(1, 1)) == P(1, 1)
    with pytest.raises(PointEqualsCenter):
        dilatation_fixing(P(1, 1), P(1, 1), P(2, 2))
    with pytest.raises(NotCollinear):
        dilatation_fixing(P(0, 0), P(1, 0), P(0, 1))
    with pytest.raises(NotInvertible):
        Dilatation(Q.zero(), P(0, 0))


def test_fixed_point_on_dyadic_needs_witness():
    one = F.constant(1)
    sigma = Dilatation(F.constant(2), Point(one, one))
    with pytest.raises(MissingWitness):
        fixed_point(sigma)
    V = fixed_point(sigma, witness=F.apart(sigma.ratio, one, 8))
    assert V.x.bounds(30)[0] <= -1 <= V.x.bounds(30)[1]


def test_dyadic_trace_of_hard_translation_is_undecided():
    zero = F.constant(0)
    tau = Translation(Point(F.hard_zero(), zero))
    with pytest.raises(UndecidedError):
        trace_of(tau, Point(zero, zero), 40)


def test_pencils():
    l = plane.line(Q, (0, 0), (1, 2))
    assert pencil_of(l).same_as(pencil_of(plane.line(Q, (5, 0), (-2, -4))))
    assert not pencil_of(l).contains(plane.line(Q, (0, 0), (1, 0)))


# --------------------------------------------------------------------------
# synthetic constructions against closed forms


def _translation_cases(fld):
    pts = plane.all_points(fld)
    for A in pts:
        for B in pts:
            if A != B:
                yield A, B


def _dilatation_cases(fld, centers=None):
    pts = plane.all_points(fld)
    for V in centers or pts:
        for A in pts:
            if A == V:
                continue
            for B in plane.points_on(plane.join(V, A)):
                if B != V:
                    yield V, A, B


@pytest.mark.parametrize("p", [2, 3, 5])
def test_partial_translation_exhaustive(p):
    fld = F.gf(p)
    for A, B in _translation_cases(fld):
        oracle = translation_between(A, B)
        part = partial_translation(A, B)
        for X in plane.all_points(fld):
            if part.defined_at(X):
                assert synthetic_partial_translation(A, B, X) == oracle(X)
            else:
                with pytest.raises(NotOutside):
                    synthetic_partial_translation(A, B, X)


@pytest.mark.parametrize("p", [2, 3])
def test_synthetic_translation_exhaustive(p):
    fld = F.gf(p)
    for A, B in _translation_cases(fld):
        tau = synthetic_translation(A, B)
        assert same_map(tau.closed_form(), translation_between(A, B))
        for X in plane.all_points(fld):
            assert tau(X) == X + (B - A)


@pytest.mark.parametrize("p", [2, 3])
def test_partial_dilatation_exhaustive(p):
    fld = F.gf(p)
    for V, A, B in _dilatation_cases(fld):
        oracle = dilatation_fixing(V, A, B)
        part = partial_dilatation(V, A, B)
        for X in plane.all_points(fld):
            if part.defined_at(X):
                assert synthetic_partial_dilatation(V, A, B, X) == oracle(X)


@pytest.mark.parametrize("p", [2, 3])
def test_synthetic_dilatation_exhaustive(p):
    # p = 2 is the four-point plane, where every auxiliary candidate is a plane point
    fld = F.gf(p)
    for V, A, B in _dilatation_cases(fld):
        sigma = synthetic_dilatation(V, A, B)
        oracle = dilatation_fixing(V, A, B)
        assert same_map(sigma.closed_form(), oracle)
        for X in plane.all_points(fld):
            assert sigma(X) == oracle(X)


def test_synthetic_dilatation_gf5_two_centers():
    fld = F.gf(5)
    centers = [P(0, 0, fld), P(2, 3, fld)]
    for V, A, B in _dilatation_cases(fld, centers):
        sigma = synthetic_dilatation(V, A, B)
        assert same_map(sigma.closed_form(), dilatation_fixing(V, A, B))


def _rand_point(rng):
    return Q.random(rng), Q.random(rng)


def test_synthetic_constructions_random_rational():
    rng = random.Random(11)
    for _ in range(150):
        A, B, X = (Point(*_rand_point(rng)) for _ in range(3))
        if A == B:
            continue
        tau = synthetic_translation(A, B)
        assert tau(X) == X + (B - A)
        V = Point(*_rand_point(rng))
        if A == V:
            continue
        e = F.Rational(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9)))
        B2 = V + (A - V).scale(e)
        sigma = synthetic_dilatation(V, A, B2)
        assert sigma(X) == V + (X - V).scale(e)


def test_punctured_dilatation_undefined_at_center_only():
    fld = F.gf(3)
    V, A = P(0, 0, fld), P(1, 1, fld)
    sigma = punctured_dilatation(V, A, P(2, 2, fld))
    for X in plane.all_points(fld):
        if X == V:
            continue
        assert sigma(X) == X.scale(fld.from_int(2))


def test_extension_detects_non_dilatation():
    # a map on the punctured plane that is not direction preserving
    def twisted(X):
        return Point(X.y, X.x)

    ext = extend_punctured(P(0, 0), twisted)
    with pytest.raises(InconsistentPartialMap):
        for X in [P(x, y) for x in range(-2, 3) for y in range(-2, 3)]:
            ext(X)


def test_aux_candidate_policy():
    # P(0,0) -> P(1,0): the excluded line is y=0, so O and E1 are rejected and E2 is used
    tau = synthetic_translation(P(0, 0), P(1, 0))
    assert tau.second.points[0] == P(0, 1)
    sigma = synthetic_dilatation(P(0, 0), P(1, 1), P(2, 2))
    assert sigma.aux == P(1, 0)
