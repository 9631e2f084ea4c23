from fractions import Fraction

import pytest
from hypothesis import assume, given

from cevconic.config import build_config
from cevconic.kernel import HPoint, collinear, direction_of, incident, join, midpoint
from cevconic.triangle import (
    Bary,
    Inadmissible,
    IsCentroid,
    OnSideline,
    ParseError,
    SidelineDirection,
    admissible,
    anticevian_triangle,
    anticevian_triangle_synthetic,
    anticomplement,
    bary_to_point,
    cevian_triangle,
    cevian_triangle_synthetic,
    complement,
    isotomcomplement,
    isotomic,
    isotomic_synthetic,
    on_median,
    on_steiner_circumellipse,
    parse_bary,
    parse_point,
    parse_rational,
    parse_triangle,
    point_to_bary,
    steiner_point_from_direction,
)

from conftest import GERGONNE, T1, T2, generic_configs, points, triangles


def weighted(tri, weights):
    s = sum(weights)
    x = sum(w * v.xy[0] for w, v in zip(weights, tri.vertices)) / s
    y = sum(w * v.xy[1] for w, v in zip(weights, tri.vertices)) / s
    return HPoint(x, y)


def test_bary_conversion_examples():
    assert bary_to_point(T2, Bary(1, 1, 1)) == T2.G
    assert bary_to_point(T2, Bary(6, 2, 3)) == GERGONNE
    B, C = T2.B, T2.C
    assert bary_to_point(T2, Bary(0, 1, -1)) == HPoint.direction(*(C.xy[i] - B.xy[i] for i in range(2)))


@given(triangles, points)
def test_bary_round_trip(tri, p):
    assert bary_to_point(tri, point_to_bary(tri, p)) == p


def test_complement_examples():
    assert complement(T2, T2.G) == T2.G
    assert complement(T1, HPoint(1, 1)) == HPoint(2, 1)
    d = HPoint.direction(3, -7)
    assert complement(T1, d) == d


@given(triangles, points)
def test_complement_is_homothety(tri, p):
    gx, gy = tri.G.xy
    x, y = p.xy
    assert complement(tri, p) == HPoint((3 * gx - x) / 2, (3 * gy - y) / 2)
    assert complement(tri, anticomplement(tri, p)) == p


def test_isotomic_examples():
    assert isotomic(T2, T2.G) == T2.G
    # Nagel point of the 3-4-5 triangle: touch points at distance s-a etc.
    nagel = isotomic(T2, GERGONNE)
    assert nagel == HPoint(2, 1)
    assert point_to_bary(T2, nagel) == Bary(1, 3, 2)
    with pytest.raises(OnSideline):
        isotomic(T2, HPoint(1, 0))


def test_isotomcomplement_examples():
    assert isotomcomplement(T2, T2.G) == T2.G
    # incenter weighted by side lengths 5, 3, 4
    assert isotomcomplement(T2, GERGONNE) == weighted(T2, (5, 3, 4)) == HPoint(1, 1)
    # symmedian point of T1 weighted by squared side lengths 18, 10, 16
    assert isotomcomplement(T1, HPoint(1, 1)) == weighted(T1, (18, 10, 16))


def test_cevian_examples():
    assert cevian_triangle(T2, T2.G) == tuple(
        midpoint(p, q) for p, q in ((T2.B, T2.C), (T2.C, T2.A), (T2.A, T2.B)))
    assert cevian_triangle(T2, GERGONNE) == (
        HPoint(Fraction(8, 5), Fraction(9, 5)), HPoint(0, 1), HPoint(1, 0))
    A, B, C = T2.vertices
    assert anticevian_triangle(T2, T2.G) == tuple(anticomplement(T2, v) for v in (A, B, C))


@given(triangles, points)
def test_two_routes_agree(tri, p):
    assume(admissible(tri, p))
    assert isotomic_synthetic(tri, p) == isotomic(tri, p)
    assert cevian_triangle_synthetic(tri, p) == cevian_triangle(tri, p)
    assert anticevian_triangle_synthetic(tri, p) == anticevian_triangle(tri, p)
    assert isotomic(tri, isotomic(tri, p)) == p
    assert isotomcomplement(tri, p) == complement(tri, isotomic(tri, p))
    assert (isotomic(tri, p).is_infinite) == on_steiner_circumellipse(tri, p)


def test_predicates():
    assert on_median(T2, T2.G)
    assert not on_median(T2, GERGONNE)
    assert not on_steiner_circumellipse(T2, GERGONNE)
    assert admissible(T2, GERGONNE)
    assert on_steiner_circumellipse(T2, T2.A)
    assert not admissible(T2, T2.A)
    # side of the anticomplementary triangle through A parallel to BC
    assert not admissible(T2, bary_to_point(T2, Bary(-1, 1, 1)))


@given(triangles, points)
def test_on_median_means_collinear_with_vertex_and_centroid(tri, p):
    assume(p != tri.G)
    expect = any(collinear(v, tri.G, p) for v in tri.vertices)
    assert on_median(tri, p) == expect


def test_steiner_point_from_direction():
    d = bary_to_point(T2, Bary(1, 1, -2))
    assert point_to_bary(T2, steiner_point_from_direction(T2, d)) == Bary(-2, -2, 1)
    d = bary_to_point(T2, Bary(2, 1, -3))
    p = steiner_point_from_direction(T2, d)
    assert point_to_bary(T2, p) == Bary(-3, -6, 2)
    assert on_steiner_circumellipse(T2, p)
    with pytest.raises(SidelineDirection):
        steiner_point_from_direction(T2, bary_to_point(T2, Bary(1, -1, 0)))


def test_build_config_gergonne(gergonne):
    c = gergonne
    assert c.Q == HPoint(1, 1)
    assert c.Qp == HPoint(Fraction(18, 11), Fraction(12, 11))
    assert c.Pp == HPoint(2, 1)
    assert c.V == HPoint(Fraction(14, 11), Fraction(13, 11))
    assert c.G1 == HPoint(Fraction(13, 15), Fraction(14, 15))
    assert c.G2 == HPoint(Fraction(9, 5), Fraction(16, 15))
    assert c.J == HPoint(Fraction(19, 22), Fraction(10, 11))
    assert midpoint(c.G1, c.G2) == T2.G
    # V is the reflection of P in Q and of P' in Q'
    assert midpoint(c.P, c.V) == c.Q and midpoint(c.Pp, c.V) == c.Qp


def test_build_config_errors():
    with pytest.raises(IsCentroid):
        build_config(T2, T2.G)
    with pytest.raises(Inadmissible):
        build_config(T2, HPoint(1, 0))
    with pytest.raises(Inadmissible):
        build_config(T2, HPoint.direction(1, 1))


def test_steiner_flags(steiner_cfg):
    assert steiner_cfg.on_steiner and not steiner_cfg.pprime_ordinary
    assert steiner_cfg.Pp.is_infinite


@given(generic_configs())
def test_config_incidences(c):
    A, B, C = c.tri.vertices
    assert incident(c.D, join(B, C)) and incident(c.D, join(A, c.P))
    if c.A4 is not None:
        assert incident(c.A4, join(c.E, c.F)) and incident(c.A4, join(A, c.P))
    assert incident(c.V, join(c.P, c.Q)) and incident(c.V, join(c.Pp, c.Qp))
    if c.X is not None:
        assert incident(c.X, join(A, c.A3)) and incident(c.X, join(B, c.B3))
    assert midpoint(c.P, c.V) == c.Q
    assert midpoint(c.G1, c.G2) == c.G
    assert direction_of(join(c.G1, c.G2)) == direction_of(join(c.P, c.Pp))


def test_parsing():
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    assert parse_point("4/3,1") == HPoint(Fraction(4, 3), 1)
    assert parse_bary("6:2:3") == Bary(6, 2, 3)
    assert parse_triangle("0,0;4,0;0,3") == T2
    for bad in ("0.5", "1e3", "1/0", "", "abc", "1.0/2"):
        with pytest.raises(ParseError):
            parse_rational(bad)
    with pytest.raises(ParseError):
        parse_triangle("0,0;1,1;2,2")
    with pytest.raises(ParseError):
        parse_bary("0:0:0")
    with pytest.raises(ParseError):
        parse_point("1,2,3")
