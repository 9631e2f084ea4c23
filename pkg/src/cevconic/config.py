"""The full catalog of named points and maps for a point P."""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Callable, Optional, TypeVar

from cevconic.affine import build_commutator, build_lambda, build_T, harmonic_homology
from cevconic.conics import Conic, NoUniqueConic, center_of, conic_through_5
from cevconic.kernel import (
    GeometryError,
    HPoint,
    Mat3,
    compose,
    direction_of,
    invert,
    join,
    meet,
    midpoint,
)
from cevconic.triangle import (
    Inadmissible,
    IsCentroid,
    TriangleRef,
    admissible,
    anticevian_triangle,
    cevian_triangle,
    complement,
    isotomic,
    on_median,
    on_steiner_circumellipse,
)

T = TypeVar("T")


def _maybe(fn: Callable[[], T]) -> Optional[T]:
    try:
        return fn()
    except GeometryError:
        return None


@dataclass(frozen=True, eq=False)
class CevianConfig:
    tri: TriangleRef
    P: HPoint
    Pp: HPoint
    Q: HPoint
    Qp: HPoint
    G: HPoint
    V: Optional[HPoint]
    Vinf: HPoint
    G1: HPoint
    G2: HPoint
    J: Optional[HPoint]
    Jp: Optional[HPoint]
    X: Optional[HPoint]
    Xp: Optional[HPoint]
    # cevian triangles of P, P' and G
    D: HPoint
    E: HPoint
    F: HPoint
    D3: HPoint
    E3: HPoint
    F3: HPoint
    D0: HPoint
    E0: HPoint
    F0: HPoint
    # midpoints of the sides EF, FD, DE and E3F3, F3D3, D3E3
    A0: HPoint
    B0: HPoint
    C0: HPoint
    A0p: HPoint
    B0p: HPoint
    C0p: HPoint
    # traces of Q and their images under T_P
    D2: HPoint
    E2: HPoint
    F2: HPoint
    A2: HPoint
    B2: HPoint
    C2: HPoint
    A3: HPoint
    B3: HPoint
    C3: HPoint
    A3p: HPoint
    B3p: HPoint
    C3p: HPoint
    A4: Optional[HPoint]
    B4: Optional[HPoint]
    C4: Optional[HPoint]
    # anticevian triangles of Q and Q'
    Aq: HPoint
    Bq: HPoint
    Cq: HPoint
    Aqp: HPoint
    Bqp: HPoint
    Cqp: HPoint
    T_P: Mat3
    T_Pp: Mat3
    lam: Mat3
    lam_inv: Mat3
    eta: Optional[Mat3]
    S1: Mat3
    S2: Mat3
    Sp: Mat3
    K: Mat3
    K_inv: Mat3
    conic: Optional[Conic]
    p_ordinary: bool
    pprime_ordinary: bool
    on_median: bool
    on_steiner: bool

    @property
    def generic(self) -> bool:
        """P and P' ordinary and P off the medians."""
        return self.pprime_ordinary and not self.on_median

    @property
    def Z(self) -> Optional[HPoint]:
        if self.conic is None or self.conic.is_degenerate:
            return None
        return center_of(self.conic)


POINT_FIELDS = tuple(f.name for f in fields(CevianConfig)
                     if f.type in ("HPoint", "Optional[HPoint]"))
MAP_FIELDS = ("T_P", "T_Pp", "lam", "lam_inv", "eta", "S1", "S2", "Sp", "K", "K_inv")


def build_config(tri: TriangleRef, P: HPoint) -> CevianConfig:
    if P.is_infinite:
        raise Inadmissible("P must be an ordinary point")
    if not admissible(tri, P):
        raise Inadmissible(f"{P!r} lies on a sideline of ABC or its anticomplementary triangle")
    if P == tri.G:
        raise IsCentroid("P is the centroid")
    A, B, C = tri.vertices
    G = tri.G
    Pp = isotomic(tri, P)
    Q = complement(tri, Pp)
    Qp = complement(tri, P)

    D, E, F = cevian_triangle(tri, P)
    D3, E3, F3 = cevian_triangle(tri, Pp)
    D0, E0, F0 = cevian_triangle(tri, G)
    D2, E2, F2 = cevian_triangle(tri, Q)
    T_P = build_T(tri, P)
    T_Pp = build_T(tri, Pp)

    A3, B3, C3 = (T_P(x) for x in (D3, E3, F3))
    A3p, B3p, C3p = (T_Pp(x) for x in (D, E, F))
    lam = build_lambda(T_P, T_Pp)
    V = _maybe(lambda: meet(join(P, Q), join(Pp, Qp)))
    Vinf = direction_of(join(P, Pp))
    eta = None if V is None else _maybe(lambda: harmonic_homology(Vinf, join(G, V)))
    conic = _maybe(lambda: conic_through_5((A, B, C, P, Q)))

    return CevianConfig(
        tri=tri, P=P, Pp=Pp, Q=Q, Qp=Qp, G=G, V=V, Vinf=Vinf,
        G1=T_P(G), G2=T_Pp(G),
        J=_maybe(lambda: midpoint(P, Q)),
        Jp=_maybe(lambda: midpoint(Pp, Qp)),
        X=_maybe(lambda: meet(join(A, A3), join(B, B3))),
        Xp=_maybe(lambda: meet(join(A, A3p), join(B, B3p))),
        D=D, E=E, F=F, D3=D3, E3=E3, F3=F3, D0=D0, E0=E0, F0=F0,
        A0=midpoint(E, F), B0=midpoint(F, D), C0=midpoint(D, E),
        A0p=midpoint(E3, F3), B0p=midpoint(F3, D3), C0p=midpoint(D3, E3),
        D2=D2, E2=E2, F2=F2,
        A2=T_P(D2), B2=T_P(E2), C2=T_P(F2),
        A3=A3, B3=B3, C3=C3, A3p=A3p, B3p=B3p, C3p=C3p,
        A4=_maybe(lambda: meet(join(A, P), join(E, F))),
        B4=_maybe(lambda: meet(join(B, P), join(F, D))),
        C4=_maybe(lambda: meet(join(C, P), join(D, E))),
        **dict(zip(("Aq", "Bq", "Cq"), anticevian_triangle(tri, Q))),
        **dict(zip(("Aqp", "Bqp", "Cqp"), anticevian_triangle(tri, Qp))),
        T_P=T_P, T_Pp=T_Pp, lam=lam, lam_inv=invert(lam), eta=eta,
        S1=compose(T_P, T_Pp), S2=compose(T_Pp, T_P),
        Sp=build_commutator(T_P, T_Pp),
        K=tri.K, K_inv=tri.K_inv,
        conic=conic,
        p_ordinary=True,
        pprime_ordinary=not Pp.is_infinite,
        on_median=on_median(tri, P),
        on_steiner=on_steiner_circumellipse(tri, P),
    )


def conic_or_raise(cfg: CevianConfig) -> Conic:
    if cfg.conic is None:
        raise NoUniqueConic("P lies on a median: ABCPQ does not fix a conic")
    return cfg.conic
