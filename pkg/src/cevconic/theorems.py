"""Exact predicates for each result about the cevian conic.

Every registry id maps to one check.  A check returns ``holds`` when all of
its clauses are exact equalities, ``hypothesis_not_met`` when the config is
outside the statement's hypotheses, and ``FAILED`` with the first violated
clause otherwise.  Sub-clauses whose own side conditions fail are listed in
``skipped`` and do not affect the status.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator, Optional

from cevconic import _backend as K
from cevconic.affine import (
    classify_map,
    eigen_form,
    fixed_points,
    harmonic_homology,
    linear_part,
)
from cevconic.config import CevianConfig, build_config
from cevconic.conics import (
    Conic,
    DegenerateConic,
    NoUniqueConic,
    binary_discriminant,
    binary_value,
    center_of,
    classify,
    conic_through_5,
    contains,
    forms_proportional,
    is_self_polar,
    line_discriminant,
    map_conic,
    polar,
    restrict_to_line,
    second_intersection,
)
from cevconic.kernel import (
    GeometryError,
    HLine,
    HPoint,
    Mat3,
    collinear,
    compose,
    concurrent,
    cross_ratio,
    direction_of,
    incident,
    invert,
    join,
    maps_equal,
    meet,
    midpoint,
)
from cevconic.serialize import to_json
from cevconic.triangle import (
    TriangleRef,
    anticevian_triangle,
    anticevian_triangle_synthetic,
    complement_bary,
    isotomic_bary,
    isotomic_synthetic,
    on_sideline,
    point_to_bary,
)

HOLDS = "holds"
NOT_MET = "hypothesis_not_met"
FAILED = "FAILED"

REGISTRY = (
    "thm2.1", "cor2.2", "prop2.3", "prop3.1", "thm2.4", "lem2.5", "cor2.6",
    "rem_Keta", "rem_etalambda", "thm2.7", "cor2.8", "thm3.2", "thm3.3",
    "thm3.4", "cor3.5", "thm3.6", "thm4.1", "cor4.2", "thm4.3",
)

# directions of the lines used to sample rational points on a conic
SAMPLE_DIRECTIONS = ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, -1),
                     (3, 1), (1, -3), (2, 5), (5, -2))


@dataclass
class TheoremReport:
    id: str
    status: str
    hypotheses: dict[str, bool] = field(default_factory=dict)
    witness: Optional[dict[str, Any]] = None
    skipped: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        out = {"id": self.id, "status": self.status,
               "hypotheses": dict(self.hypotheses), "witness": self.witness}
        if self.skipped:
            out["skipped"] = list(self.skipped)
        return out


class _Clauses:
    """Collects clause verdicts; only the first violation is kept."""

    def __init__(self, id: str, hypotheses: dict[str, bool]):
        self.id = id
        self.hypotheses = hypotheses
        self.witness: Optional[dict[str, Any]] = None
        self.skipped: list[str] = []

    def eq(self, clause: str, lhs, rhs) -> bool:
        if lhs == rhs:
            return True
        if self.witness is None:
            self.witness = {"clause": clause, "lhs": to_json(lhs), "rhs": to_json(rhs)}
        return False

    def true(self, clause: str, cond: bool, **detail) -> bool:
        if cond:
            return True
        if self.witness is None:
            self.witness = {"clause": clause, **{k: to_json(v) for k, v in detail.items()}}
        return False

    def skip(self, clause: str) -> None:
        self.skipped.append(clause)

    def report(self) -> TheoremReport:
        return TheoremReport(self.id, FAILED if self.witness else HOLDS,
                             self.hypotheses, self.witness, self.skipped)


def _not_met(id: str, hypotheses: dict[str, bool]) -> TheoremReport:
    return TheoremReport(id, NOT_MET, hypotheses)


def _guard(id: str, hypotheses: dict[str, bool], body: Callable[[_Clauses], None]) -> TheoremReport:
    if not all(hypotheses.values()):
        return _not_met(id, hypotheses)
    ck = _Clauses(id, hypotheses)
    try:
        body(ck)
    except GeometryError as exc:
        ck.true("construction", False, error=f"{type(exc).__name__}: {exc}")
    return ck.report()


# -- small exact helpers -----------------------------------------------------

def sqdist(p: HPoint, q: HPoint) -> Fraction:
    (x1, y1), (x2, y2) = p.xy, q.xy
    return (x1 - x2) ** 2 + (y1 - y2) ** 2


def conic_points(c: Conic, base: HPoint, k: int) -> Iterator[HPoint]:
    """Up to ``k`` distinct rational points of ``c`` on lines through ``base``."""
    seen = {base}
    n = 0
    bx, by, bw = base.coords
    for dx, dy in SAMPLE_DIRECTIONS:
        if n == k:
            return
        line = join(base, HPoint(dx, dy, 0)) if bw else None
        if line is None:
            # base at infinity: use the parallel through a shifted finite point
            line = join(base, HPoint(dx, dy))
        hit = second_intersection(c, base, line)
        if hit.tangent or hit.point in seen:
            continue
        seen.add(hit.point)
        n += 1
        yield hit.point


def locus_conic(P: HPoint, m: Mat3) -> tuple[int, ...]:
    """Coefficients (doubled) of the quadratic ``Y -> det(P, Y, m Y)``."""
    e = m.entries
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    cols = [(e[i], e[3 + i], e[6 + i]) for i in range(3)]

    def f(y):
        my = tuple(sum(e[3 * r + j] * y[j] for j in range(3)) for r in range(3))
        return K.det3(P.coords, y, my)

    diag = [K.det3(P.coords, basis[i], cols[i]) for i in range(3)]

    def off(i, j):
        y = tuple(a + b for a, b in zip(basis[i], basis[j]))
        return f(y) - diag[i] - diag[j]

    return (2 * diag[0], off(0, 1), 2 * diag[1], off(0, 2), off(1, 2), 2 * diag[2])


def transform_binary_form(form, lin) -> tuple[int, int, int]:
    """``d -> form(L d)`` for ``L = [[a, b], [c, d]]``."""
    A, B, C = form
    a, b, c, d = lin
    return (A * a * a + 2 * B * a * c + C * c * c,
            A * a * b + B * (a * d + b * c) + C * c * d,
            A * b * b + 2 * B * b * d + C * d * d)


def _generic_hyps(cfg: CevianConfig) -> dict[str, bool]:
    return {"P_ordinary": cfg.p_ordinary, "Pprime_ordinary": cfg.pprime_ordinary,
            "off_medians": not cfg.on_median}


def _conic_hyps(cfg: CevianConfig) -> dict[str, bool]:
    return {"off_medians": not cfg.on_median}


def _vertex_rows(cfg: CevianConfig):
    """Per-vertex tuples (V, V0, V0', trace, trace0, trace3, V3, V3')."""
    return (
        (cfg.tri.A, cfg.A0, cfg.A0p, cfg.D, cfg.D0, cfg.D3, cfg.A3, cfg.A3p),
        (cfg.tri.B, cfg.B0, cfg.B0p, cfg.E, cfg.E0, cfg.E3, cfg.B3, cfg.B3p),
        (cfg.tri.C, cfg.C0, cfg.C0p, cfg.F, cfg.F0, cfg.F3, cfg.C3, cfg.C3p),
    )


# -- the conic on seven points ----------------------------------------------

def check_thm2_1(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        C = cfg.conic
        A, B, Cv = cfg.tri.vertices
        ck.true("P' on C_P", contains(C, cfg.Pp), point=cfg.Pp)
        ck.true("Q' on C_P", contains(C, cfg.Qp), point=cfg.Qp)
        for name, v, v0, v0p, tr, tr0, *_ in ((n,) + r for n, r in zip("ABC", _vertex_rows(cfg))):
            x = meet(join(v0, cfg.P), join(tr0, cfg.Qp))
            ck.true(f"{name}0P.{name}-trace0 Q' on C_P", contains(C, x), point=x)
            if cfg.Pp == cfg.Q:
                # both lines run through the common point at infinity P' = Q
                ck.skip(f"{name}0'P'.{name}-trace0 Q (P' = Q at infinity)")
                continue
            y = meet(join(v0p, cfg.Pp), join(tr0, cfg.Q))
            ck.true(f"{name}0'P'.{name}-trace0 Q on C_P", contains(C, y), point=y)
        ck.eq("ABCP'Q' fits the same conic",
              conic_through_5((A, B, Cv, cfg.Pp, cfg.Qp)), C)
    return _guard("thm2.1", _conic_hyps(cfg), body)


def check_cor2_2(cfg: CevianConfig) -> TheoremReport:
    ck = _Clauses("cor2.2", {"off_medians": not cfg.on_median})
    P, Pp, T_P, T_Pp = cfg.P, cfg.Pp, cfg.T_P, cfg.T_Pp
    try:
        ck.true("(c) P, P', T_P(P') collinear", collinear(P, Pp, T_P(Pp)),
                point=T_P(Pp))
        ck.true("(c) P, P', T_P'(P) collinear", collinear(P, Pp, T_Pp(P)),
                point=T_Pp(P))
        locus = locus_conic(P, T_P)
        if cfg.on_median:
            # degenerate conic: the median through P together with a side
            lc = Conic(locus)
            ck.true("(b) locus degenerate on a median", lc.is_degenerate, locus=lc)
            A, B, Cv = cfg.tri.vertices
            ck.eq("(b) locus is the line pair through ABCPQ", lc,
                  conic_through_5((A, B, Cv, P, cfg.Q), allow_degenerate=True))
            for name in ("A", "B", "C", "P", "Q", "Pp", "Qp"):
                p = getattr(cfg.tri, name) if name in "ABC" else getattr(cfg, name)
                ck.true(f"(b) {name} on degenerate locus", contains(lc, p), point=p)
            ck.skip("(a)/(b) on a nondegenerate conic")
        else:
            C = cfg.conic
            ck.true("(b) locus {Y: P, Y, T_P(Y) collinear} is C_P",
                    forms_proportional(locus, C.coeffs), locus=locus, conic=C)
            ck.true("(b) Y = P'", collinear(P, Pp, T_P(Pp)))
            for Y in conic_points(C, cfg.tri.A, 4):
                ck.true("(b) sampled Y on C_P", collinear(P, Y, T_P(Y)), Y=Y)
                if Y not in (P, cfg.Qp):
                    ck.eq("(a) T_P(Q'Y) = PY", T_P(join(cfg.Qp, Y)), join(P, Y))
                if Y not in (cfg.Q, Pp):
                    ck.eq("(a) T_P'(QY) = P'Y", T_Pp(join(cfg.Q, Y)), join(Pp, Y))
    except GeometryError as exc:
        ck.true("construction", False, error=f"{type(exc).__name__}: {exc}")
    return ck.report()


def check_thm3_4(cfg: CevianConfig) -> TheoremReport:
    hyps = {**_generic_hyps(cfg), "off_steiner": not cfg.on_steiner}

    def body(ck: _Clauses):
        for name, v, v0, v0p, tr, tr0, tr3, v3, v3p in ((n,) + r for n, r in zip("ABC", _vertex_rows(cfg))):
            a = cfg.lam_inv(v)
            ck.eq(f"(a) {name}0P.{name}-trace0 Q' = lambda^-1({name})",
                  meet(join(v0, cfg.P), join(tr0, cfg.Qp)), a)
            for label, line in (("trace Q", join(tr, cfg.Q)), (f"{name}3' P'", join(v3p, cfg.Pp))):
                ck.true(f"(b) {label} through lambda^-1({name})", incident(a, line), point=a)
            b = cfg.lam(v)
            ck.eq(f"(a) {name}0'P'.{name}-trace0 Q = lambda({name})",
                  meet(join(v0p, cfg.Pp), join(tr0, cfg.Q)), b)
            for label, line in (("trace3 Q'", join(tr3, cfg.Qp)), (f"{name}3 P", join(v3, cfg.P))):
                ck.true(f"(b) {label} through lambda({name})", incident(b, line), point=b)
    return _guard("thm3.4", hyps, body)


def _lines_concur(lines: list[HLine]) -> bool:
    l0, l1 = lines[0], lines[1]
    if l0 == l1:
        return all(concurrent(l0, l1, l) for l in lines[2:]) and len(set(lines)) < 4
    return all(concurrent(l0, l1, l) for l in lines[2:])


def check_cor3_5(cfg: CevianConfig) -> TheoremReport:
    hyps = {**_generic_hyps(cfg), "off_steiner": not cfg.on_steiner}

    def body(ck: _Clauses):
        P, Q, Qp, Pp = cfg.P, cfg.Q, cfg.Qp, cfg.Pp
        for name, v, v0, v0p, tr, tr0, tr3, v3, v3p in ((n,) + r for n, r in zip("ABC", _vertex_rows(cfg))):
            first = [join(P, v0), join(Q, tr), join(Qp, tr0), join(Pp, v3p)]
            ck.true(f"PQQ'P' perspective with {name}0 trace trace0 {name}3'",
                    _lines_concur(first), lines=first)
            second = [join(P, v3), join(Q, tr0), join(Qp, tr3), join(Pp, v0p)]
            ck.true(f"PQQ'P' perspective with {name}3 trace0 trace3 {name}0'",
                    _lines_concur(second), lines=second)
    return _guard("cor3.5", hyps, body)


# -- self-polar structure ------------------------------------------------------

def check_prop2_3(cfg: CevianConfig) -> TheoremReport:
    hyps = {**_generic_hyps(cfg), "off_steiner": not cfg.on_steiner}

    def body(ck: _Clauses):
        C, G, V, Vinf = cfg.conic, cfg.G, cfg.V, cfg.Vinf
        GV = join(G, V)
        VVinf = join(V, Vinf)
        ck.eq("V_inf = PP'.QQ'", meet(join(cfg.P, cfg.Pp), join(cfg.Q, cfg.Qp)), Vinf)
        ck.true("(a) G, V, V_inf self-polar", is_self_polar(C, G, V, Vinf))
        ck.true("(b) Z on GV", incident(center_of(C), GV), Z=center_of(C))
        ck.eq("(b) polar(V_inf) = GV", polar(C, Vinf), GV)
        ck.true("(c) midpoint PP' on GV", incident(midpoint(cfg.P, cfg.Pp), GV))
        ck.true("(c) midpoint QQ' on GV", incident(midpoint(cfg.Q, cfg.Qp), GV))
        mu = harmonic_homology(G, VVinf)
        ck.eq("(d) mu_G(C_P) = C_P", map_conic(C, mu), C)
        for X1 in cfg.tri.vertices:
            chord = join(G, X1)
            hit = second_intersection(C, X1, chord)
            if hit.tangent:
                ck.skip("(d) tangent chord")
                continue
            X3 = meet(chord, VVinf)
            ck.eq("(d) (X1 X2, G X3) = -1", cross_ratio(X1, hit.point, G, X3), -1)
        ck.eq("(e) VV_inf = K^-1(P) K^-1(P')",
              join(cfg.K_inv(cfg.P), cfg.K_inv(cfg.Pp)), VVinf)
        ck.eq("(e) polar(G) = K^-1(PP')", polar(C, G), cfg.K_inv(join(cfg.P, cfg.Pp)))
        ck.eq("(f) V = midpoint K^-1(P) K^-1(P')",
              midpoint(cfg.K_inv(cfg.P), cfg.K_inv(cfg.Pp)), V)
        ck.eq("Q is the midpoint of PV", midpoint(cfg.P, V), cfg.Q)
        ck.eq("Q' is the midpoint of P'V", midpoint(cfg.Pp, V), cfg.Qp)
    return _guard("prop2.3", hyps, body)


def check_prop3_1(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        for v, tr, t4, name in ((cfg.tri.A, cfg.D, cfg.A4, "A"), (cfg.tri.B, cfg.E, cfg.B4, "B"),
                                (cfg.tri.C, cfg.F, cfg.C4, "C")):
            ck.eq(f"({name}P, trace {name}4) = -1", cross_ratio(v, cfg.P, tr, t4), -1)
        ck.true("DEF self-polar for C_P", is_self_polar(cfg.conic, cfg.D, cfg.E, cfg.F))
    return _guard("prop3.1", _conic_hyps(cfg), body)


# -- conjugacy of T_P and T_P' ---------------------------------------------

def check_thm2_4(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        eta, T_P, T_Pp = cfg.eta, cfg.T_P, cfg.T_Pp
        ck.true("eta T_P = T_P' eta", maps_equal(compose(eta, T_P), compose(T_Pp, eta)),
                lhs=compose(eta, T_P), rhs=compose(T_Pp, eta))
        ck.eq("T_P(Q) = Q", T_P(cfg.Q), cfg.Q)
        ck.eq("T_P(Q') = P", T_P(cfg.Qp), cfg.P)
        ck.eq("T_P'(Q') = Q'", T_Pp(cfg.Qp), cfg.Qp)
        ck.eq("T_P'(Q) = P'", T_Pp(cfg.Q), cfg.Pp)
        ck.eq("eta(P) = P'", eta(cfg.P), cfg.Pp)
        ck.eq("eta(Q) = Q'", eta(cfg.Q), cfg.Qp)
        ck.eq("eta(C_P) = C_P", map_conic(cfg.conic, eta), cfg.conic)
        ck.eq("eta is an affine reflection", classify_map(eta).kind, "affine_reflection")
    return _guard("thm2.4", _generic_hyps(cfg), body)


def check_lem2_5(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        G1, G2 = cfg.G1, cfg.G2
        ck.eq("G is the midpoint of G1G2", midpoint(G1, G2), cfg.G)
        ck.eq("G1G2 parallel to PP'", direction_of(join(G1, G2)), cfg.Vinf)
        if cfg.eta is not None and cfg.generic:
            ck.eq("eta(G1) = G2", cfg.eta(G1), G2)
        else:
            ck.skip("eta(G1) = G2")
    return _guard("lem2.5", {"P_ordinary": cfg.p_ordinary}, body)


def check_cor2_6(cfg: CevianConfig) -> TheoremReport:
    X = cfg.X
    hyps = {**_generic_hyps(cfg), "X_ordinary": X is not None and not X.is_infinite}

    def body(ck: _Clauses):
        ck.eq("S1 fixes X", cfg.S1(X), X)
        ck.eq("eta(X) = X'", cfg.eta(X), cfg.Xp)
        ck.eq("S2 fixes X'", cfg.S2(cfg.Xp), cfg.Xp)
        if X != cfg.Xp:
            ck.eq("XX' parallel to PP'", direction_of(join(X, cfg.Xp)), cfg.Vinf)
        else:
            ck.skip("XX' parallel to PP' (X = X')")
    return _guard("cor2.6", hyps, body)


def check_rem_Keta(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        ck.true("K eta = eta K", maps_equal(compose(cfg.K, cfg.eta), compose(cfg.eta, cfg.K)))
    return _guard("rem_Keta", _generic_hyps(cfg), body)


def check_rem_etalambda(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        eta, lam = cfg.eta, cfg.lam
        ck.true("eta lambda eta = lambda^-1",
                maps_equal(compose(compose(eta, lam), eta), cfg.lam_inv))
        fp = fixed_points(lam)
        ck.true("lambda fixes no ordinary line pointwise", fp.kind not in ("line", "plane"),
                fixed=fp.kind)
        l00, l01, l10, l11, s = linear_part(lam)
        ck.true("lambda does not fix the line at infinity pointwise",
                not (l01 == 0 and l10 == 0 and l00 == l11), lam=lam)
        GV = join(cfg.G, cfg.V)
        ck.true("T_P(V_inf) not on GV", not incident(cfg.T_P(cfg.Vinf), GV))
    return _guard("rem_etalambda", _generic_hyps(cfg), body)


# -- the commutator S' ----------------------------------------------------------

def check_thm2_7(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        cls = classify_map(cfg.Sp)
        if not ck.eq("S' is a translation", cls.kind, "translation"):
            return
        l00, l01, l10, l11, s = linear_part(cfg.Sp)
        ck.true("S' linear part is the identity", (l00, l01, l10, l11) == (s, 0, 0, s))
        tx, ty = cls.vector
        ck.eq("translation along PP'", HPoint(tx, ty, 0), cfg.Vinf)
        t2 = tx * tx + ty * ty
        if cfg.pprime_ordinary:
            TPp = cfg.T_P(cfg.Pp)
            TpP = cfg.T_Pp(cfg.P)
            ck.eq("|t|^2 = |T_P(P') P'|^2", t2, sqdist(TPp, cfg.Pp))
            ck.eq("|t|^2 = |P T_P'(P)|^2", t2, sqdist(cfg.P, TpP))
            ck.eq("S'(T_P(P')) = P'", cfg.Sp(TPp), cfg.Pp)
            ck.eq("S'(P) = T_P'(P)", cfg.Sp(cfg.P), TpP)
        else:
            ck.eq("|t|^2 = 9 |G1 G|^2", t2, 9 * sqdist(cfg.G1, cfg.G))
    return _guard("thm2.7", {"P_ordinary": cfg.p_ordinary}, body)


def check_cor2_8(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        src = (cfg.A3, cfg.B3, cfg.C3)
        dst = (cfg.A3p, cfg.B3p, cfg.C3p)
        for a, b in zip(src, dst):
            ck.eq("(a) S'(A3B3C3) = A3'B3'C3'", cfg.Sp(a), b)
        for i, j in ((0, 1), (1, 2), (2, 0)):
            ck.eq("(a) congruent sides", sqdist(src[i], src[j]), sqdist(dst[i], dst[j]))
        X = cfg.X
        s1, s2 = classify_map(cfg.S1), classify_map(cfg.S2)
        if s1.kind == "homothety" and s2.kind == "homothety":
            ck.eq("S1, S2 similarity ratios equal", s1.ratio, s2.ratio)
            ck.eq("S1 centered at X", s1.center, X)
            ck.eq("S2 centered at X'", s2.center, cfg.Xp)
        else:
            ck.skip("S1, S2 homotheties")
        if cfg.pprime_ordinary and X is not None and not X.is_infinite and s1.kind == "homothety":
            lhs = sqdist(cfg.T_P(cfg.Pp), cfg.P) * sqdist(X, cfg.Qp)
            rhs = sqdist(cfg.Q, cfg.Qp) * sqdist(X, cfg.P)
            ck.eq("(b) |T_P(P')P|^2 |XQ'|^2 = |QQ'|^2 |XP|^2", lhs, rhs)
        else:
            ck.skip("(b)")
    return _guard("cor2.8", {"P_ordinary": cfg.p_ordinary}, body)


def check_thm3_6(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        c1 = conic_through_5((cfg.D, cfg.E, cfg.F, cfg.P, cfg.Q))
        c2 = conic_through_5((cfg.D3, cfg.E3, cfg.F3, cfg.Pp, cfg.Qp))
        ck.eq("S'(DEFPQ) = D3E3F3P'Q'", map_conic(c1, cfg.Sp), c2)
        ck.eq("DEFPQ = T_P(C_P)", map_conic(cfg.conic, cfg.T_P), c1)
        ck.eq("D3E3F3P'Q' = T_P'(C_P)", map_conic(cfg.conic, cfg.T_Pp), c2)
    return _guard("thm3.6", _conic_hyps(cfg), body)


# -- invariance under lambda ---------------------------------------------------

def check_thm3_2(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        ck.eq("lambda(C_P) = C_P", map_conic(cfg.conic, cfg.lam), cfg.conic)
        ck.eq("lambda(P) = Q'", cfg.lam(cfg.P), cfg.Qp)
        ck.eq("lambda(Q) = P'", cfg.lam(cfg.Q), cfg.Pp)
    return _guard("thm3.2", _conic_hyps(cfg), body)


def check_thm3_3(cfg: CevianConfig) -> TheoremReport:
    def body(ck: _Clauses):
        C = cfg.conic
        CQ = map_conic(C, invert(cfg.T_P))
        ck.eq("T_P^-1(C_P) = T_P'^-1(C_P)", map_conic(C, invert(cfg.T_Pp)), CQ)
        for name in ("Aq", "Bq", "Cq", "Aqp", "Bqp", "Cqp", "Q", "Qp"):
            p = getattr(cfg, name)
            ck.true(f"{name} on T_P^-1(C_P)", contains(CQ, p), point=p)
        ck.true("ABC self-polar for T_P^-1(C_P)", is_self_polar(CQ, *cfg.tri.vertices))
        ck.eq("anticevian of Q, two routes", anticevian_triangle_synthetic(cfg.tri, cfg.Q),
              anticevian_triangle(cfg.tri, cfg.Q))
        if cfg.eta is not None and cfg.generic:
            ck.eq("eta fixes T_P^-1(C_P)", map_conic(CQ, cfg.eta), CQ)
        for R in conic_points(CQ, cfg.Qp, 5):
            if R.is_infinite or on_sideline(cfg.tri, R):
                ck.skip("anticevian of R on a sideline")
                continue
            for v in anticevian_triangle(cfg.tri, R):
                ck.true("anticevian vertex of R on T_P^-1(C_P)", contains(CQ, v), R=R, vertex=v)
        if cfg.generic and not cfg.on_steiner:
            for v, v0, tr0 in ((cfg.tri.A, cfg.A0, cfg.D0), (cfg.tri.B, cfg.B0, cfg.E0),
                               (cfg.tri.C, cfg.C0, cfg.F0)):
                ck.eq("lambda^-1(vertex) = V0 P . trace0 Q'",
                      cfg.lam_inv(v), meet(join(v0, cfg.P), join(tr0, cfg.Qp)))
        else:
            ck.skip("lambda^-1 identities")
    return _guard("thm3.3", _conic_hyps(cfg), body)


# -- the center Z ----------------------------------------------------------------

def check_thm4_1(cfg: CevianConfig) -> TheoremReport:
    hyps = {**_generic_hyps(cfg), "off_steiner": not cfg.on_steiner}

    def body(ck: _Clauses):
        C, lam = cfg.conic, cfg.lam
        Z = center_of(C)
        GV = join(cfg.G, cfg.V)
        TGV = cfg.T_P(GV)
        ck.eq("Z = GV . T_P(GV)", meet(GV, TGV), Z)
        ck.eq("lambda(Z) = Z", lam(Z), Z)
        kind = classify(C)
        fp = fixed_points(lam)
        q_inf = C.infinity_form
        eig = eigen_form(lam)
        l00, l01, l10, l11, _ = linear_part(lam)
        image = transform_binary_form(q_inf, (l00, l01, l10, l11))
        ck.true("q_inf invariant under lambda", forms_proportional(image, q_inf),
                image=image, form=q_inf)
        if kind == "parabola":
            ck.eq("parabola: no ordinary fixed point", fp.kind, "none")
            ck.true("parabola: Z is the only fixed direction",
                    binary_discriminant(eig) == 0 and binary_value(eig, *Z.coords[:2]) == 0,
                    form=eig)
        else:
            ck.eq("Z is the unique ordinary fixed point", (fp.kind, fp.point), ("point", Z))
            if kind == "hyperbola":
                ck.true("fixed directions are the asymptotes",
                        forms_proportional(eig, q_inf), fixed=eig, asymptotes=q_inf)
            else:
                ck.true("ellipse: no fixed direction", binary_discriminant(eig) < 0, form=eig)
        # lambda = eta1 eta2 with eta2 = T_P eta T_P^-1 having axis T_P(GV)
        eta2 = compose(compose(cfg.T_P, cfg.eta), invert(cfg.T_P))
        ck.true("lambda = eta eta2", maps_equal(compose(cfg.eta, eta2), lam))
        ck.eq("axis of eta2 = T_P(GV)", classify_map(eta2).axis, TGV)
    return _guard("thm4.1", hyps, body)


def check_cor4_2(cfg: CevianConfig) -> TheoremReport:
    hyps = {**_generic_hyps(cfg), "off_steiner": not cfg.on_steiner}

    def body(ck: _Clauses):
        Z = center_of(cfg.conic)
        GV = join(cfg.G, cfg.V)
        G1J = join(cfg.G1, cfg.J)
        G2Jp = join(cfg.G2, cfg.Jp)
        ck.eq("T_P(GV) = G1J", cfg.T_P(GV), G1J)
        ck.eq("T_P'(GV) = G2J'", cfg.T_Pp(GV), G2Jp)
        ck.eq("eta(G1J) = G2J'", cfg.eta(G1J), G2Jp)
        for name, line in (("GV", GV), ("G1J", G1J), ("G2J'", G2Jp)):
            ck.true(f"Z on {name}", incident(Z, line), Z=Z, line=line)
    return _guard("cor4.2", hyps, body)


def check_thm4_3(cfg: CevianConfig) -> TheoremReport:
    hyps = {"P_ordinary": cfg.p_ordinary, "off_medians": not cfg.on_median,
            "on_steiner": cfg.on_steiner}

    def body(ck: _Clauses):
        C, G, G1 = cfg.conic, cfg.G, cfg.G1
        Z = center_of(C)
        (gx, gy), (g1x, g1y) = G.xy, G1.xy
        ck.eq("Z = G + (G1 - G)/3", Z, HPoint(gx + (g1x - gx) / 3, gy + (g1y - gy) / 3))
        ck.eq("C_P is a hyperbola", classify(C), "hyperbola")
        d = direction_of(join(G, G1))
        ck.eq("q_inf(G1 - G) = 0", binary_value(C.infinity_form, *d.coords[:2]), 0)
        ck.eq("Q lies on GG1", d, cfg.Q)
        qz, bzd, qd = restrict_to_line(C, Z, d)
        ck.true("GG1 meets C_P only at infinity (asymptote)", bzd == 0 and qd == 0 and qz != 0,
                restricted=(qz, bzd, qd))
        fp = fixed_points(cfg.lam)
        ck.eq("Z is the only ordinary fixed point of lambda", (fp.kind, fp.point), ("point", Z))
        ck.true("lambda = T_P^-1 K^-1 T_P^-1",
                maps_equal(cfg.lam, compose(compose(invert(cfg.T_P), cfg.K_inv), invert(cfg.T_P))))
        ck.eq("lambda(G) = G1", cfg.lam(G), G1)
    return _guard("thm4.3", hyps, body)


CHECKS: dict[str, Callable[[CevianConfig], TheoremReport]] = {
    "thm2.1": check_thm2_1, "cor2.2": check_cor2_2, "prop2.3": check_prop2_3,
    "prop3.1": check_prop3_1, "thm2.4": check_thm2_4, "lem2.5": check_lem2_5,
    "cor2.6": check_cor2_6, "rem_Keta": check_rem_Keta,
    "rem_etalambda": check_rem_etalambda, "thm2.7": check_thm2_7,
    "cor2.8": check_cor2_8, "thm3.2": check_thm3_2, "thm3.3": check_thm3_3,
    "thm3.4": check_thm3_4, "cor3.5": check_cor3_5, "thm3.6": check_thm3_6,
    "thm4.1": check_thm4_1, "cor4.2": check_cor4_2, "thm4.3": check_thm4_3,
}
assert tuple(CHECKS) == REGISTRY


# -- grouped entry points ----------------------------------------------------------

def check_conic_seven_points(cfg: CevianConfig) -> list[TheoremReport]:
    return [CHECKS[i](cfg) for i in ("thm2.1", "cor2.2", "thm3.4", "cor3.5")]


def check_self_polar_structure(cfg: CevianConfig) -> list[TheoremReport]:
    return [check_prop2_3(cfg), check_prop3_1(cfg)]


def check_conjugacy(cfg: CevianConfig) -> list[TheoremReport]:
    return [CHECKS[i](cfg) for i in ("thm2.4", "lem2.5", "cor2.6", "rem_Keta", "rem_etalambda")]


def check_commutator(cfg: CevianConfig) -> list[TheoremReport]:
    return [check_thm2_7(cfg), check_cor2_8(cfg), check_thm3_6(cfg)]


def check_lambda_invariance(cfg: CevianConfig) -> list[TheoremReport]:
    return [check_thm3_2(cfg), check_thm3_3(cfg)]


def check_center(cfg: CevianConfig) -> list[TheoremReport]:
    return [check_thm4_1(cfg), check_cor4_2(cfg)]


def check_steiner(cfg: CevianConfig) -> TheoremReport:
    return check_thm4_3(cfg)


def check_all(cfg: CevianConfig) -> list[TheoremReport]:
    return [CHECKS[i](cfg) for i in REGISTRY]


def run_all(tri: TriangleRef, P: HPoint) -> list[TheoremReport]:
    """Build the config for ``P`` (raises on inadmissible input) and check everything."""
    return check_all(build_config(tri, P))


def classify_lambda_isometry(cfg: CevianConfig) -> str:
    """How lambda acts on the Klein-style model inside the conic.

    ``rotation`` (ellipse), ``parallel_displacement`` (parabola), and for a
    hyperbola ``translation`` or ``glide`` according to which of the axes
    GV and T_P(GV) are secant lines.
    """
    if cfg.conic is None:
        raise NoUniqueConic("P lies on a median")
    kind = classify(cfg.conic)
    if kind == "degenerate":
        raise DegenerateConic("C_P is degenerate")
    if kind == "ellipse":
        return "rotation"
    if kind == "parabola":
        return "parallel_displacement"
    GV = join(cfg.G, cfg.V)
    secant1 = line_discriminant(cfg.conic, GV) > 0
    secant2 = line_discriminant(cfg.conic, cfg.T_P(GV)) > 0
    if secant1 == secant2:
        return "translation"
    return "glide"


# -- dual-route sanity for the triangle maps -----------------------------------------

def check_two_routes(cfg: CevianConfig) -> list[tuple[str, Any, Any]]:
    """Closed-form vs synthetic disagreements (empty when consistent)."""
    tri = cfg.tri
    bad = []
    pairs = [
        ("isotomic", isotomic_synthetic(tri, cfg.P), cfg.Pp),
        ("complement", point_to_bary(tri, cfg.Qp), complement_bary(point_to_bary(tri, cfg.P))),
        ("isotomic bary", point_to_bary(tri, cfg.Pp), isotomic_bary(point_to_bary(tri, cfg.P))),
    ]
    for name, a, b in pairs:
        if a != b:
            bad.append((name, a, b))
    return bad
