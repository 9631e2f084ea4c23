"""Exact projective plane over the rationals.

Points and lines are homogeneous integer triples in canonical form (gcd 1,
first nonzero entry positive), so equality is tuple equality.  A point
``(x, y, w)`` with ``w == 0`` is a point at infinity, i.e. a direction.
Matrices are 3x3, also canonical up to scale.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from cevconic import _backend as K

Rat = Fraction
Number = Union[int, Fraction]


class GeometryError(ValueError):
    """Base class for exact-geometry precondition failures."""


class EqualPoints(GeometryError):
    pass


class EqualLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class DegenerateQuadruple(GeometryError):
    pass


class CoincidentWithEndpoint(GeometryError):
    pass


class SingularMatrix(GeometryError):
    pass


class _Infinity:
    """Value of a cross-ratio whose denominator vanishes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def _clear(values: Iterable[Number]) -> tuple:
    vals = [Fraction(v) for v in values]
    m = lcm(*(v.denominator for v in vals))
    return K.canon(tuple(int(v * m) for v in vals))


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, a: Number, b: Number, c: Number = 1):
        if all(type(v) is int for v in (a, b, c)):
            coords = K.canon3(a, b, c)
        else:
            coords = _clear((a, b, c))
        if coords == (0, 0, 0):
            raise GeometryError(f"{type(self).__name__} cannot be the zero vector")
        self.coords = coords

    @classmethod
    def _raw(cls, coords: tuple):
        """Wrap an already canonical nonzero integer triple."""
        obj = object.__new__(cls)
        obj.coords = coords
        return obj

    def __eq__(self, other):
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __reduce__(self):
        return (type(self)._raw, (self.coords,))


class HPoint(_Triple):
    """Homogeneous point ``(x : y : w)``; ``HPoint(x, y)`` is the ordinary point."""

    __slots__ = ()

    @property
    def is_infinite(self) -> bool:
        return self.coords[2] == 0

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        x, y, w = self.coords
        if w == 0:
            raise GeometryError("point at infinity has no Cartesian coordinates")
        return Fraction(x, w), Fraction(y, w)

    def __repr__(self):
        if self.is_infinite:
            return f"HPoint.direction({self.coords[0]}, {self.coords[1]})"
        x, y = self.xy
        return f"HPoint({x}, {y})"

    @classmethod
    def direction(cls, dx: Number, dy: Number) -> "HPoint":
        return cls(dx, dy, 0)


class HLine(_Triple):
    """Line ``a*x + b*y + c*w = 0``."""

    __slots__ = ()

    def __repr__(self):
        a, b, c = self.coords
        return f"HLine({a}, {b}, {c})"

    @property
    def is_at_infinity(self) -> bool:
        return self.coords[0] == 0 and self.coords[1] == 0


LINE_AT_INFINITY = HLine(0, 0, 1)


def incident(p: HPoint, l: HLine) -> bool:
    return K.dot(p.coords, l.coords) == 0


def collinear(p: HPoint, q: HPoint, r: HPoint) -> bool:
    return K.det3(p.coords, q.coords, r.coords) == 0


def concurrent(l: HLine, m: HLine, n: HLine) -> bool:
    return K.det3(l.coords, m.coords, n.coords) == 0


def join(p: HPoint, q: HPoint) -> HLine:
    c = K.cross(p.coords, q.coords)
    if c == (0, 0, 0):
        raise EqualPoints(f"cannot join {p!r} with itself")
    return HLine._raw(c)


def meet(l: HLine, m: HLine) -> HPoint:
    c = K.cross(l.coords, m.coords)
    if c == (0, 0, 0):
        raise EqualLines(f"cannot meet {l!r} with itself")
    return HPoint._raw(c)


def midpoint(p: HPoint, q: HPoint) -> HPoint:
    """Midpoint of two ordinary points."""
    x1, y1, w1 = p.coords
    x2, y2, w2 = q.coords
    if w1 == 0 or w2 == 0:
        raise GeometryError("midpoint needs ordinary points")
    return HPoint._raw(K.canon3(x1 * w2 + x2 * w1, y1 * w2 + y2 * w1, 2 * w1 * w2))


def direction_of(l: HLine) -> HPoint:
    """The point at infinity of an ordinary line."""
    return meet(l, LINE_AT_INFINITY)


def parallel(l: HLine, m: HLine) -> bool:
    a1, b1, _ = l.coords
    a2, b2, _ = m.coords
    return a1 * b2 - a2 * b1 == 0


def _bracket_axes(points: Sequence[HPoint]) -> tuple[int, int]:
    # Project onto two coordinates; drop one in which the carrier line has a
    # nonzero coefficient so the projection is injective on the line.
    distinct = []
    for p in points:
        if p not in distinct:
            distinct.append(p)
    if len(distinct) < 2:
        raise DegenerateQuadruple("need at least two distinct points")
    line = join(distinct[0], distinct[1])
    for p in distinct[2:]:
        if not incident(p, line):
            raise NotCollinear(f"{p!r} is not on {line!r}")
    k = next(i for i, c in enumerate(line.coords) if c)
    i, j = [t for t in range(3) if t != k]
    return i, j


def _bracket(p: HPoint, q: HPoint, i: int, j: int) -> int:
    return p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i]


def cross_ratio(a: HPoint, b: HPoint, c: HPoint, d: HPoint):
    """Cross-ratio ``(a, b; c, d)``; ``INFINITY`` when it degenerates to a pole.

    With affine parameters this is ``(c - a)(d - b) / ((d - a)(c - b))``.
    """
    if len({a, b, c, d}) < 3:
        raise DegenerateQuadruple("cross-ratio needs at least three distinct points")
    i, j = _bracket_axes((a, b, c, d))
    num = _bracket(a, c, i, j) * _bracket(b, d, i, j)
    den = _bracket(a, d, i, j) * _bracket(b, c, i, j)
    if den == 0:
        return INFINITY
    return Fraction(num, den)


def harmonic_conjugate(a: HPoint, b: HPoint, c: HPoint) -> HPoint:
    """The fourth harmonic ``d`` with ``(a, b; c, d) = -1``."""
    if c == a or c == b:
        raise CoincidentWithEndpoint(f"{c!r} coincides with an endpoint")
    if a == b:
        raise DegenerateQuadruple("endpoints coincide")
    i, j = _bracket_axes((a, b, c))
    # c = alpha*a + beta*b  =>  d = alpha*a - beta*b
    alpha = _bracket(c, b, i, j)
    beta = _bracket(a, c, i, j)
    pa, pb = a.coords, b.coords
    return HPoint._raw(K.canon3(*(alpha * pa[t] - beta * pb[t] for t in range(3))))


class Mat3:
    """Projective 3x3 matrix, canonical up to a nonzero scale."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[Number]]):
        flat = [v for row in rows for v in row]
        if len(flat) != 9:
            raise ValueError("Mat3 needs 3 rows of 3 entries")
        entries = _clear(flat)
        if entries == (0,) * 9:
            raise SingularMatrix("zero matrix")
        self.entries = entries

    @classmethod
    def _raw(cls, entries: tuple) -> "Mat3":
        obj = object.__new__(cls)
        obj.entries = entries
        return obj

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        e = self.entries
        return (e[0:3], e[3:6], e[6:9])

    @property
    def det(self) -> int:
        return K.matdet(self.entries)

    @property
    def is_affine(self) -> bool:
        e = self.entries
        return e[6] == 0 and e[7] == 0 and e[8] != 0

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "Mat3") -> "Mat3":
        return compose(self, other)

    def __call__(self, obj):
        if isinstance(obj, HPoint):
            return apply_map(self, obj)
        if isinstance(obj, HLine):
            return apply_map_line(self, obj)
        raise TypeError(f"cannot apply a Mat3 to {type(obj).__name__}")

    def __repr__(self):
        return f"Mat3({[list(r) for r in self.rows]})"

    def __reduce__(self):
        return (Mat3._raw, (self.entries,))


IDENTITY = Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def apply_map(m: Mat3, p: HPoint) -> HPoint:
    if m.det == 0:
        raise SingularMatrix("cannot apply a singular map")
    return HPoint._raw(K.matvec(m.entries, p.coords))


def apply_map_line(m: Mat3, l: HLine) -> HLine:
    """Image of a line: transforms by the inverse transpose."""
    if m.det == 0:
        raise SingularMatrix("cannot apply a singular map")
    adj = K.adjugate(m.entries)
    return HLine._raw(K.matvec(K.transpose(adj), l.coords))


def compose(m: Mat3, n: Mat3) -> Mat3:
    """``m o n``: apply ``n`` first."""
    return Mat3._raw(K.matmul(m.entries, n.entries))


def invert(m: Mat3) -> Mat3:
    if m.det == 0:
        raise SingularMatrix("matrix is not invertible")
    return Mat3._raw(K.adjugate(m.entries))


def maps_equal(m: Mat3, n: Mat3) -> bool:
    """Projective equality: the matrices are proportional."""
    return m.entries == n.entries


def mat_power_is_identity(m: Mat3, k: int = 2) -> bool:
    acc = m
    for _ in range(k - 1):
        acc = compose(acc, m)
    return maps_equal(acc, IDENTITY)
