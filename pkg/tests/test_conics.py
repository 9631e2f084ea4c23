from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from cevconic.affine import affine_from_triangles
from cevconic.conics import (
    Conic,
    DegenerateConic,
    NoUniqueConic,
    NotOnConic,
    center_of,
    classify,
    conic_through_5,
    contains,
    is_self_polar,
    line_discriminant,
    map_conic,
    polar,
    pole,
    second_intersection,
    tangent_at,
)
from cevconic.kernel import LINE_AT_INFINITY, HLine, HPoint, Mat3, collinear, invert, join

from conftest import points, rationals, triangles

UNIT = Conic((1, 0, 1, 0, 0, -1))
PARABOLA = Conic((2, 0, 0, 0, -1, 0))  # x^2 - y w


def sympy_conic(pts):
    x, y = sympy.symbols("x y")
    rows = [[x * x, x * y, y * y, x, y, 1]]
    for p in pts:
        px, py = (sympy.Rational(t.numerator, t.denominator) for t in p.xy)
        rows.append([px * px, px * py, py * py, px, py, 1])
    poly = sympy.Poly(sympy.Matrix(rows).det(), x, y)
    c = poly.as_dict()
    g = lambda i, j: c.get((i, j), 0)
    # a x^2 + 2b xy + c y^2 + 2d x + 2e y + f, doubled to stay integral
    return [2 * g(2, 0), g(1, 1), 2 * g(0, 2), g(1, 0), g(0, 1), 2 * g(0, 0)]


def proportional(u, v):
    return sympy.Matrix([list(u), list(v)]).rank() == 1


def test_unit_circle_fit():
    pts = [HPoint(1, 0), HPoint(-1, 0), HPoint(0, 1), HPoint(0, -1),
           HPoint(Fraction(3, 5), Fraction(4, 5))]
    assert conic_through_5(pts) == UNIT


@settings(max_examples=25)
@given(st.lists(points, min_size=5, max_size=5, unique=True))
def test_fit_matches_determinant_oracle(pts):
    try:
        c = conic_through_5(pts, allow_degenerate=True)
    except NoUniqueConic:
        # nullity != 1 exactly when the determinant polynomial vanishes identically
        assert not any(sympy_conic(pts))
        return
    assert all(contains(c, p) for p in pts)
    assert proportional(c.coeffs, sympy_conic(pts))


def test_gergonne_conic(gergonne):
    c = gergonne.conic
    assert contains(c, gergonne.Pp) and contains(c, gergonne.Qp)
    assert classify(c) == "hyperbola"
    assert center_of(c) == HPoint(1, 2)


def test_median_has_no_unique_conic(median_cfg, t2):
    A, B, C = t2.vertices
    pts = (A, B, C, median_cfg.P, median_cfg.Q)
    with pytest.raises(NoUniqueConic):
        conic_through_5(pts)
    assert median_cfg.conic is None
    # the five points do fix a line pair: the median AG and the side BC
    pair = conic_through_5(pts, allow_degenerate=True)
    assert pair.is_degenerate
    median = join(A, t2.G).coords
    side = join(B, C).coords
    l, m = median, side
    product = (l[0] * m[0], (l[0] * m[1] + l[1] * m[0]), l[1] * m[1],
               (l[0] * m[2] + l[2] * m[0]), (l[1] * m[2] + l[2] * m[1]), l[2] * m[2])
    # coefficients of l*m in the a, 2b, c, 2d, 2e, f layout
    doubled = (2 * product[0], product[1], 2 * product[2], product[3], product[4], 2 * product[5])
    assert pair == Conic(doubled)


def test_nullity_two_raises():
    pts = [HPoint(0, 0), HPoint(1, 0), HPoint(2, 0), HPoint(3, 0), HPoint(0, 1)]
    with pytest.raises(NoUniqueConic):
        conic_through_5(pts, allow_degenerate=True)


def test_polar_and_pole():
    assert polar(UNIT, HPoint(0, 0)) == LINE_AT_INFINITY
    assert pole(UNIT, LINE_AT_INFINITY) == HPoint(0, 0)
    degenerate = Conic((1, 0, -1, 0, 0, 0))
    with pytest.raises(DegenerateConic):
        polar(degenerate, HPoint(1, 2))


def test_gergonne_polar_of_vinf(gergonne):
    assert polar(gergonne.conic, gergonne.Vinf) == HLine(3, 1, -5)


@given(points)
def test_pole_polar_involution(p):
    c = Conic((2, 1, -2, -4, 3, 0))
    assert pole(c, polar(c, p)) == p


def test_center_and_classify_examples():
    assert center_of(UNIT) == HPoint(0, 0)
    assert center_of(PARABOLA) == HPoint.direction(0, 1)
    assert contains(PARABOLA, center_of(PARABOLA))
    assert classify(UNIT) == "ellipse"
    assert classify(PARABOLA) == "parabola"
    assert classify(Conic((1, 0, -1, 0, 0, -1))) == "hyperbola"
    assert classify(Conic((1, 0, -1, 0, 0, 0))) == "degenerate"


def test_map_conic_examples(gergonne):
    from cevconic.kernel import IDENTITY
    c = gergonne.conic
    assert map_conic(UNIT, IDENTITY) == UNIT
    assert map_conic(c, gergonne.lam) == c
    assert map_conic(c, invert(gergonne.T_P)) == map_conic(c, invert(gergonne.T_Pp))


affine_maps = st.tuples(*([st.integers(-5, 5)] * 6)).map(
    lambda e: Mat3([e[0:3], e[3:6], [0, 0, 1]])).filter(lambda m: m.det != 0)


@given(affine_maps, points)
def test_map_conic_transports_points(m, p):
    c = Conic((2, 1, -2, -4, 3, 0))
    img = map_conic(c, m)
    assert contains(c, p) == contains(img, m(p))
    assert classify(img) == classify(c)
    assert classify(map_conic(UNIT, m)) == "ellipse"
    assert classify(map_conic(PARABOLA, m)) == "parabola"


def test_second_intersection_examples():
    r = second_intersection(UNIT, HPoint(1, 0), HLine(1, -1, -1))
    assert r.point == HPoint(0, -1) and not r.tangent
    t = second_intersection(UNIT, HPoint(1, 0), HLine(1, 0, -1))
    assert t.point == HPoint(1, 0) and t.tangent
    with pytest.raises(NotOnConic):
        second_intersection(UNIT, HPoint(2, 0), HLine(0, 1, 0))


@given(rationals)
def test_second_intersection_on_conic(slope):
    p = HPoint(1, 0)
    l = join(p, HPoint(0, -slope))
    r = second_intersection(UNIT, p, l)
    assert contains(UNIT, r.point)
    assert r.tangent == (r.point == p)


def test_tangent_at():
    assert tangent_at(UNIT, HPoint(1, 0)) == HLine(1, 0, -1)
    assert tangent_at(PARABOLA, HPoint(0, 0)) == HLine(0, 1, 0)
    with pytest.raises(NotOnConic):
        tangent_at(UNIT, HPoint(0, 0))


def test_self_polar_examples(gergonne):
    assert is_self_polar(UNIT, HPoint(0, 0), HPoint.direction(1, 0), HPoint.direction(0, 1))
    c = gergonne.conic
    assert is_self_polar(c, gergonne.G, gergonne.V, gergonne.Vinf)
    assert is_self_polar(c, gergonne.D, gergonne.E, gergonne.F)


def test_line_discriminant_signs():
    assert line_discriminant(UNIT, HLine(0, 1, 0)) > 0
    assert line_discriminant(UNIT, HLine(1, 0, -1)) == 0
    assert line_discriminant(UNIT, HLine(1, 0, -2)) < 0


@given(triangles, points, points)
def test_fit_through_affine_image(tri, p, q):
    A, B, C = tri.vertices
    pts = [A, B, C, p, q]
    assume(len(set(pts)) == 5)
    assume(not any(collinear(*t) for t in
                   [(A, B, p), (A, B, q), (B, C, p), (B, C, q), (A, C, p), (A, C, q), (A, p, q), (B, p, q), (C, p, q)]))
    c = conic_through_5(pts)
    m = affine_from_triangles((A, B, C), (HPoint(0, 0), HPoint(1, 0), HPoint(0, 1)))
    assert conic_through_5([m(x) for x in pts]) == map_conic(c, m)
