"""Constructions relative to a reference triangle ABC.

Most maps have two routes: a closed form in barycentric coordinates and a
synthetic join/meet construction in the Cartesian chart.  The library uses
the barycentric route; the synthetic one is kept for cross-checking.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from cevconic import _backend as K
from cevconic.kernel import (
    EqualPoints,
    GeometryError,
    HLine,
    HPoint,
    Mat3,
    Number,
    _Triple,
    apply_map,
    harmonic_conjugate,
    join,
    meet,
)


class OnSideline(GeometryError):
    pass


class SidelineDirection(GeometryError):
    pass


class Inadmissible(GeometryError):
    pass


class IsCentroid(GeometryError):
    pass


class ParseError(ValueError):
    pass


class Bary(_Triple):
    """Homogeneous barycentric coordinates ``(u : v : w)``."""

    __slots__ = ()

    def __repr__(self):
        return "Bary({}, {}, {})".format(*self.coords)

    @property
    def is_infinite(self) -> bool:
        return sum(self.coords) == 0


class TriangleRef:
    """A nondegenerate triangle with rational Cartesian vertices."""

    def __init__(self, A: HPoint, B: HPoint, C: HPoint):
        for v in (A, B, C):
            if v.is_infinite:
                raise GeometryError("triangle vertices must be ordinary points")
        self.A, self.B, self.C = A, B, C
        (xa, ya), (xb, yb), (xc, yc) = A.xy, B.xy, C.xy
        # columns are the vertices with weight 1; uniform rescaling is harmless
        bm = Mat3([[xa, xb, xc], [ya, yb, yc], [1, 1, 1]])
        if bm.det == 0:
            raise GeometryError("triangle vertices are collinear")
        self._to_cart = bm.entries
        self._to_bary = K.adjugate(bm.entries)
        self.G = HPoint(Fraction(xa + xb + xc, 3), Fraction(ya + yb + yc, 3))
        gx, gy = self.G.xy
        self.K = Mat3([[-1, 0, 3 * gx], [0, -1, 3 * gy], [0, 0, 2]])
        self.K_inv = Mat3([[-2, 0, 3 * gx], [0, -2, 3 * gy], [0, 0, 1]])

    @classmethod
    def from_xy(cls, pts: Sequence[tuple[Number, Number]]) -> "TriangleRef":
        a, b, c = (HPoint(x, y) for x, y in pts)
        return cls(a, b, c)

    @property
    def vertices(self) -> tuple[HPoint, HPoint, HPoint]:
        return (self.A, self.B, self.C)

    @property
    def sidelines(self) -> tuple[HLine, HLine, HLine]:
        return (join(self.B, self.C), join(self.C, self.A), join(self.A, self.B))

    def __eq__(self, other):
        return isinstance(other, TriangleRef) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "TriangleRef({!r}, {!r}, {!r})".format(*self.vertices)


def bary_to_point(tri: TriangleRef, b: Bary) -> HPoint:
    return HPoint._raw(K.matvec(tri._to_cart, b.coords))


def point_to_bary(tri: TriangleRef, p: HPoint) -> Bary:
    return Bary._raw(K.matvec(tri._to_bary, p.coords))


# -- closed forms in barycentrics -------------------------------------------

def complement_bary(b: Bary) -> Bary:
    u, v, w = b.coords
    return Bary._raw(K.canon3(v + w, w + u, u + v))


def anticomplement_bary(b: Bary) -> Bary:
    u, v, w = b.coords
    return Bary._raw(K.canon3(v + w - u, w + u - v, u + v - w))


def isotomic_bary(b: Bary) -> Bary:
    u, v, w = b.coords
    if u == 0 or v == 0 or w == 0:
        raise OnSideline(f"{b!r} lies on a sideline")
    return Bary._raw(K.canon3(v * w, w * u, u * v))


def isotomcomplement_bary(b: Bary) -> Bary:
    u, v, w = b.coords
    if u == 0 or v == 0 or w == 0:
        raise OnSideline(f"{b!r} lies on a sideline")
    return Bary._raw(K.canon3(u * (v + w), v * (w + u), w * (u + v)))


# -- maps on Cartesian points -----------------------------------------------

def complement(tri: TriangleRef, p: HPoint) -> HPoint:
    """Homothety about the centroid with ratio -1/2."""
    return apply_map(tri.K, p)


def anticomplement(tri: TriangleRef, p: HPoint) -> HPoint:
    return apply_map(tri.K_inv, p)


def isotomic(tri: TriangleRef, p: HPoint) -> HPoint:
    return bary_to_point(tri, isotomic_bary(point_to_bary(tri, p)))


def isotomcomplement(tri: TriangleRef, p: HPoint) -> HPoint:
    return bary_to_point(tri, isotomcomplement_bary(point_to_bary(tri, p)))


def _reflect_in_midpoint(p: HPoint, a: HPoint, b: HPoint) -> HPoint:
    (x, y), (xa, ya), (xb, yb) = p.xy, a.xy, b.xy
    return HPoint(xa + xb - x, ya + yb - y)


def isotomic_synthetic(tri: TriangleRef, p: HPoint) -> HPoint:
    """Isotomic conjugate by reflecting two traces in their side midpoints."""
    A, B, C = tri.vertices
    D, E, _ = cevian_triangle_synthetic(tri, p)
    D1 = _reflect_in_midpoint(D, B, C)
    E1 = _reflect_in_midpoint(E, C, A)
    return meet(join(A, D1), join(B, E1))


def cevian_triangle(tri: TriangleRef, p: HPoint) -> tuple[HPoint, HPoint, HPoint]:
    u, v, w = point_to_bary(tri, p).coords
    if u == 0 or v == 0 or w == 0:
        raise OnSideline(f"{p!r} lies on a sideline")
    to = tri._to_cart
    return (HPoint._raw(K.matvec(to, (0, v, w))),
            HPoint._raw(K.matvec(to, (u, 0, w))),
            HPoint._raw(K.matvec(to, (u, v, 0))))


def cevian_triangle_synthetic(tri: TriangleRef, p: HPoint) -> tuple[HPoint, HPoint, HPoint]:
    A, B, C = tri.vertices
    a, b, c = tri.sidelines
    try:
        return (meet(join(A, p), a), meet(join(B, p), b), meet(join(C, p), c))
    except EqualPoints:
        raise OnSideline(f"{p!r} is a vertex") from None


def anticevian_triangle(tri: TriangleRef, p: HPoint) -> tuple[HPoint, HPoint, HPoint]:
    u, v, w = point_to_bary(tri, p).coords
    if u == 0 or v == 0 or w == 0:
        raise OnSideline(f"{p!r} lies on a sideline")
    to = tri._to_cart
    return (HPoint._raw(K.matvec(to, (-u, v, w))),
            HPoint._raw(K.matvec(to, (u, -v, w))),
            HPoint._raw(K.matvec(to, (u, v, -w))))


def anticevian_triangle_synthetic(tri: TriangleRef, p: HPoint) -> tuple[HPoint, HPoint, HPoint]:
    """Each anticevian vertex is the harmonic conjugate of P in (vertex, trace)."""
    traces = cevian_triangle_synthetic(tri, p)
    return tuple(harmonic_conjugate(v, t, p) for v, t in zip(tri.vertices, traces))


# -- predicates --------------------------------------------------------------

def on_sideline(tri: TriangleRef, p: HPoint) -> bool:
    return 0 in point_to_bary(tri, p).coords


def on_median(tri: TriangleRef, p: HPoint) -> bool:
    u, v, w = point_to_bary(tri, p).coords
    return u == v or v == w or w == u


def on_steiner_circumellipse(tri: TriangleRef, p: HPoint) -> bool:
    u, v, w = point_to_bary(tri, p).coords
    return u * v + v * w + w * u == 0


def admissible(tri: TriangleRef, p: HPoint) -> bool:
    """Off the sidelines of ABC and of its anticomplementary triangle."""
    u, v, w = point_to_bary(tri, p).coords
    return 0 not in (u, v, w, v + w, w + u, u + v)


def steiner_point_from_direction(tri: TriangleRef, d: HPoint) -> HPoint:
    """Isotomic image of a direction: a point of the Steiner circumellipse."""
    if not d.is_infinite:
        raise GeometryError(f"{d!r} is not a point at infinity")
    b = point_to_bary(tri, d)
    if 0 in b.coords:
        raise SidelineDirection(f"{d!r} is parallel to a sideline")
    return bary_to_point(tri, isotomic_bary(b))


# -- text formats ------------------------------------------------------------

_RAT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer; decimals and floats are rejected."""
    m = _RAT.match(text)
    if not m:
        raise ParseError(f"not a rational numeral: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Number) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_xy(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'x,y', got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def parse_point(text: str) -> HPoint:
    return HPoint(*parse_xy(text))


def parse_bary(text: str) -> Bary:
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError(f"expected 'u:v:w', got {text!r}")
    vals = [parse_rational(s) for s in parts]
    try:
        return Bary(*vals)
    except GeometryError as exc:
        raise ParseError(str(exc)) from None


def parse_triangle(text: str) -> TriangleRef:
    parts = text.split(";")
    if len(parts) != 3:
        raise ParseError(f"expected 'x1,y1;x2,y2;x3,y3', got {text!r}")
    try:
        return TriangleRef.from_xy([parse_xy(s) for s in parts])
    except GeometryError as exc:
        raise ParseError(str(exc)) from None
