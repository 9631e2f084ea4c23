"""Conics as symmetric integer matrices up to scale.

A conic is stored as six canonical integers ``(a, b, c, d, e, f)`` for

    a x^2 + 2b xy + c y^2 + 2d xw + 2e yw + f w^2 = 0.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from cevconic import _backend as K
from cevconic.kernel import (
    LINE_AT_INFINITY,
    GeometryError,
    HLine,
    HPoint,
    Mat3,
    SingularMatrix,
    join,
)


class NoUniqueConic(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class NotOnConic(GeometryError):
    pass


class Conic:
    __slots__ = ("coeffs", "matrix")

    def __init__(self, coeffs: Sequence[int]):
        coeffs = K.canon(tuple(coeffs))
        if len(coeffs) != 6 or not any(coeffs):
            raise GeometryError("a conic needs six integers, not all zero")
        self.coeffs = coeffs
        a, b, c, d, e, f = coeffs
        self.matrix = (a, b, d, b, c, e, d, e, f)

    @classmethod
    def from_matrix(cls, m: Sequence[int]) -> "Conic":
        if m[1] != m[3] or m[2] != m[6] or m[5] != m[7]:
            raise GeometryError("conic matrix must be symmetric")
        return cls((m[0], m[1], m[4], m[2], m[5], m[8]))

    @property
    def det(self) -> int:
        return K.matdet(self.matrix)

    @property
    def is_degenerate(self) -> bool:
        return self.det == 0

    @property
    def infinity_form(self) -> tuple[int, int, int]:
        """``(a, b, c)``: the form ``a dx^2 + 2b dx dy + c dy^2`` on directions."""
        return self.coeffs[0], self.coeffs[1], self.coeffs[2]

    def __eq__(self, other):
        return isinstance(other, Conic) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Conic({self.coeffs})"

    def __reduce__(self):
        return (Conic, (self.coeffs,))


def _row(p: HPoint) -> tuple[int, ...]:
    x, y, w = p.coords
    return (x * x, 2 * x * y, y * y, 2 * x * w, 2 * y * w, w * w)


def conic_through_5(points: Sequence[HPoint], allow_degenerate: bool = False) -> Conic:
    """The unique proper conic through five points.

    Three collinear inputs force the line pair through them.  That pair is
    returned (check ``is_degenerate``) only with ``allow_degenerate``;
    otherwise, like a nullity above one, it raises ``NoUniqueConic``.
    """
    if len(points) != 5:
        raise ValueError("need exactly five points")
    basis = K.nullspace([_row(p) for p in points], 6)
    if len(basis) != 1:
        raise NoUniqueConic(f"nullity {len(basis)}: the five points do not fix a conic")
    c = Conic(basis[0])
    if c.is_degenerate and not allow_degenerate:
        raise NoUniqueConic("the five points only fix a line pair, not a proper conic")
    return c


def quadratic_value(c: Conic, p: HPoint) -> int:
    return K.quad(c.matrix, p.coords)


def contains(c: Conic, p: HPoint) -> bool:
    return K.quad(c.matrix, p.coords) == 0


def _require_nondegenerate(c: Conic) -> None:
    if c.is_degenerate:
        raise DegenerateConic(f"{c!r} is degenerate")


def polar(c: Conic, p: HPoint) -> HLine:
    _require_nondegenerate(c)
    return HLine._raw(K.matvec(c.matrix, p.coords))


def pole(c: Conic, l: HLine) -> HPoint:
    _require_nondegenerate(c)
    return HPoint._raw(K.matvec(K.adjugate(c.matrix), l.coords))


def center_of(c: Conic) -> HPoint:
    """Pole of the line at infinity; a point at infinity for a parabola."""
    return pole(c, LINE_AT_INFINITY)


def classify(c: Conic) -> str:
    if c.is_degenerate:
        return "degenerate"
    a, b, cc = c.infinity_form
    disc = a * cc - b * b
    if disc > 0:
        return "ellipse"
    if disc == 0:
        return "parabola"
    return "hyperbola"


def map_conic(c: Conic, m: Mat3) -> Conic:
    """Image of ``c`` under the point map ``m``: ``m^-T c m^-1``."""
    if m.det == 0:
        raise SingularMatrix("cannot map a conic by a singular matrix")
    return Conic.from_matrix(K.congruence(c.matrix, K.adjugate(m.entries)))


def _other_point_on(l: HLine, p: HPoint) -> HPoint:
    for basis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        q = K.cross(l.coords, basis)
        if q != (0, 0, 0) and K.cross(q, p.coords) != (0, 0, 0):
            return HPoint._raw(q)
    raise GeometryError(f"no second point found on {l!r}")  # pragma: no cover


def restrict_to_line(c: Conic, p: HPoint, r: HPoint) -> tuple[int, int, int]:
    """``(Q(p), B(p, r), Q(r))``: the conic on points ``s p + t r``."""
    m = c.matrix
    return K.quad(m, p.coords), K.bilinear(m, p.coords, r.coords), K.quad(m, r.coords)


def line_discriminant(c: Conic, l: HLine) -> int:
    """Positive for a secant, zero for a tangent, negative if ``l`` misses ``c``."""
    pts = [K.cross(l.coords, b) for b in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    pts = [q for q in pts if q != (0, 0, 0)]
    p = HPoint._raw(pts[0])
    r = _other_point_on(l, p)
    qp, bpr, qr = restrict_to_line(c, p, r)
    return bpr * bpr - qp * qr


class Intersection(NamedTuple):
    point: HPoint
    tangent: bool


def second_intersection(c: Conic, p: HPoint, l: HLine) -> Intersection:
    """Other point where ``l`` (through ``p`` on ``c``) meets ``c``.

    For a tangent line the result is ``p`` itself with ``tangent=True``.
    """
    if not contains(c, p):
        raise NotOnConic(f"{p!r} is not on {c!r}")
    if K.dot(p.coords, l.coords) != 0:
        raise GeometryError(f"{p!r} is not on {l!r}")
    r = _other_point_on(l, p)
    _, bpr, qr = restrict_to_line(c, p, r)
    if bpr == 0:
        return Intersection(p, True)
    # Q(s p + t r) = t (2 s B(p, r) + t Q(r)); the other root is s = Q(r), t = -2B
    pc, rc = p.coords, r.coords
    q = K.canon3(*(qr * pc[i] - 2 * bpr * rc[i] for i in range(3)))
    return Intersection(HPoint._raw(q), False)


def tangent_at(c: Conic, p: HPoint) -> HLine:
    _require_nondegenerate(c)
    if not contains(c, p):
        raise NotOnConic(f"{p!r} is not on {c!r}")
    return polar(c, p)


def is_self_polar(c: Conic, p1: HPoint, p2: HPoint, p3: HPoint) -> bool:
    _require_nondegenerate(c)
    pts = (p1, p2, p3)
    if K.det3(p1.coords, p2.coords, p3.coords) == 0:
        raise GeometryError("self-polar test needs a triangle")
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        if polar(c, pts[i]) != join(pts[j], pts[k]):
            return False
    return True


def forms_proportional(f: Sequence[int], g: Sequence[int]) -> bool:
    return K.canon(tuple(f)) == K.canon(tuple(g))


def binary_discriminant(form: Sequence[int]) -> int:
    """``b^2 - a c`` for ``a x^2 + 2b xy + c y^2``."""
    a, b, c = form
    return b * b - a * c


def binary_value(form: Sequence[int], dx: int, dy: int) -> int:
    a, b, c = form
    return a * dx * dx + 2 * b * dx * dy + c * dy * dy
