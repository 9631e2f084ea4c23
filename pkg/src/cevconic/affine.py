"""Affine maps, harmonic homologies and their exact classification.

Affine maps are ordinary ``Mat3`` values whose last row is ``(0, 0, s)``;
the affine constraint is checked, not encoded in a separate type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from cevconic import _backend as K
from cevconic.kernel import (
    GeometryError,
    HLine,
    HPoint,
    Mat3,
    compose,
    invert,
)
from cevconic.triangle import TriangleRef, cevian_triangle


class CollinearInput(GeometryError):
    pass


class CenterOnAxis(GeometryError):
    pass


class NotAffine(GeometryError):
    pass


def _frame(points: Sequence[HPoint]) -> Mat3:
    cols = [p.xy for p in points]
    return Mat3([[c[0] for c in cols], [c[1] for c in cols], [1, 1, 1]])


def affine_from_triangles(src: Sequence[HPoint], dst: Sequence[HPoint]) -> Mat3:
    """The unique affine map sending ``src[i]`` to ``dst[i]``."""
    if any(p.is_infinite for p in (*src, *dst)):
        raise CollinearInput("triangle vertices must be ordinary")
    s, d = _frame(src), _frame(dst)
    if s.det == 0 or d.det == 0:
        raise CollinearInput("triangle vertices are collinear")
    return Mat3._raw(K.matmul(d.entries, K.adjugate(s.entries)))


def build_T(tri: TriangleRef, p: HPoint) -> Mat3:
    """Affine map taking ABC to the cevian triangle of ``p``."""
    return affine_from_triangles(tri.vertices, cevian_triangle(tri, p))


def harmonic_homology(center: HPoint, axis: HLine) -> Mat3:
    """Involution fixing ``axis`` pointwise and ``center``."""
    c, a = center.coords, axis.coords
    k = K.dot(a, c)
    if k == 0:
        raise CenterOnAxis(f"{center!r} lies on {axis!r}")
    return Mat3._raw(K.canon(tuple(
        (k if i == j else 0) - 2 * c[i] * a[j] for i in range(3) for j in range(3)
    )))


def build_lambda(T_P: Mat3, T_Pp: Mat3) -> Mat3:
    """``T_P' o T_P^-1``: cevian triangle of P to cevian triangle of P'."""
    return compose(T_Pp, invert(T_P))


def build_commutator(T_P: Mat3, T_Pp: Mat3) -> Mat3:
    return compose(compose(T_Pp, T_P), compose(invert(T_Pp), invert(T_P)))


def require_affine(m: Mat3) -> None:
    if not m.is_affine:
        raise NotAffine(f"{m!r} does not fix the line at infinity")


def linear_part(m: Mat3) -> tuple[int, int, int, int, int]:
    """``(l00, l01, l10, l11, s)``: the linear part is ``[[l00, l01], [l10, l11]] / s``."""
    require_affine(m)
    e = m.entries
    return e[0], e[1], e[3], e[4], e[8]


@dataclass(frozen=True)
class MapClass:
    kind: str  # identity | translation | homothety | affine_reflection | general
    vector: Optional[tuple[Fraction, Fraction]] = None
    center: Optional[HPoint] = None
    ratio: Optional[Fraction] = None
    axis: Optional[HLine] = None
    direction: Optional[HPoint] = None


def classify_map(m: Mat3) -> MapClass:
    require_affine(m)
    e = m.entries
    s = e[8]
    if e[1] == 0 and e[3] == 0 and e[0] == e[4]:
        k = e[0]
        if k == s:
            if e[2] == 0 and e[5] == 0:
                return MapClass("identity")
            return MapClass("translation", vector=(Fraction(e[2], s), Fraction(e[5], s)))
        return MapClass("homothety", center=HPoint(e[2], e[5], s - k),
                        ratio=Fraction(k, s))
    sq = K.matmul(e, e)
    if sq[1:4] == (0, 0, 0) and sq[5:8] == (0, 0, 0) and sq[0] == sq[4] == sq[8]:
        r1 = (e[0] - s, e[1], e[2])
        r2 = (e[3], e[4] - s, e[5])
        axis = HLine(*(r1 if any(r1) else r2))
        c1 = (e[0] - s, e[3], 0)
        c2 = (e[1], e[4] - s, 0)
        return MapClass("affine_reflection", axis=axis,
                        direction=HPoint(*(c1 if any(c1) else c2)))
    return MapClass("general")


@dataclass(frozen=True)
class FixedPoints:
    kind: str  # none | point | line | plane
    point: Optional[HPoint] = None
    line: Optional[HLine] = None


def fixed_points(m: Mat3) -> FixedPoints:
    """Ordinary fixed points of an affine map: solve ``(M - sI) p = 0``."""
    require_affine(m)
    e = m.entries
    s = e[8]
    r1 = (e[0] - s, e[1], e[2])
    r2 = (e[3], e[4] - s, e[5])
    if not any(r1) and not any(r2):
        return FixedPoints("plane")
    c = K.cross(r1, r2)
    if c != (0, 0, 0):
        if c[2] == 0:
            return FixedPoints("none")
        return FixedPoints("point", point=HPoint._raw(c))
    r = r1 if any(r1) else r2
    if r[0] == 0 and r[1] == 0:
        return FixedPoints("none")
    return FixedPoints("line", line=HLine(*r))


def eigen_form(m: Mat3) -> tuple[int, int, int]:
    """Binary form ``det[d, L d]`` whose zeros are the directions fixed by ``m``.

    Returned doubled, as ``(A, B, C)`` for ``A dx^2 + 2B dx dy + C dy^2``.
    """
    a, b, c, d, _ = linear_part(m)
    # d x (L d) = dx*(c dx + d dy) - dy*(a dx + b dy)
    #           = c dx^2 + (d - a) dx dy - b dy^2
    return (2 * c, d - a, -2 * b)
