"""SVG figures of a configuration.

This is the only module that converts exact values to floats.  The conic is
drawn by sweeping the pencil of lines through vertex A: the line with
direction d meets the conic again at A - 2 B(A,d)/Q(d) * d, so each open
interval of directions between two asymptotic directions traces one branch.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Optional

from cevconic.config import CevianConfig
from cevconic.conics import classify
from cevconic.kernel import GeometryError, HLine, HPoint, join
from cevconic.triangle import point_to_bary

SAMPLES_PER_BRANCH = 512
WIDTH = 800
MARGIN = 0.2

_LABELS = (
    ("P", "P"), ("Pp", "P'"), ("Q", "Q"), ("Qp", "Q'"), ("G", "G"), ("V", "V"),
    ("G1", "G1"), ("G2", "G2"), ("J", "J"), ("Jp", "J'"), ("X", "X"), ("Xp", "X'"),
    ("D", "D"), ("E", "E"), ("F", "F"),
)


class Viewport:
    """Affine map from the triangle's bounding box (plus margin) to pixels."""

    def __init__(self, vertices, width=WIDTH, margin=MARGIN):
        xs = [float(v.xy[0]) for v in vertices]
        ys = [float(v.xy[1]) for v in vertices]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        self.x0 = min(xs) - margin * w
        self.x1 = max(xs) + margin * w
        self.y0 = min(ys) - margin * h
        self.y1 = max(ys) + margin * h
        self.scale = width / (self.x1 - self.x0)
        self.width = width
        self.height = (self.y1 - self.y0) * self.scale

    def contains(self, x: float, y: float) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def px(self, x: float, y: float) -> tuple[float, float]:
        return (x - self.x0) * self.scale, (self.y1 - y) * self.scale

    def clip_line(self, l: HLine) -> Optional[tuple[tuple[float, float], tuple[float, float]]]:
        """Endpoints of the segment of ``l`` inside the window, in world units."""
        a, b, c = (float(t) for t in l.coords)
        pts = []
        if b:
            for x in (self.x0, self.x1):
                y = -(a * x + c) / b
                if self.y0 - 1e-12 <= y <= self.y1 + 1e-12:
                    pts.append((x, y))
        if a:
            for y in (self.y0, self.y1):
                x = -(b * y + c) / a
                if self.x0 - 1e-12 <= x <= self.x1 + 1e-12:
                    pts.append((x, y))
        if len(pts) < 2:
            return None
        pts.sort()
        return pts[0], pts[-1]


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def asymptotic_angles(coeffs) -> list[float]:
    """Angles in [0, pi) of the real directions where a x^2 + 2b xy + c y^2 vanishes."""
    a, b, c = (float(t) for t in (coeffs[0], coeffs[1], coeffs[2]))
    disc = b * b - a * c
    if disc < 0:
        return []
    roots = []
    if a == 0:
        # y (2b x + c y) = 0
        roots.append(0.0)
        if b or c:
            roots.append(math.atan2(-2 * b, c))
    else:
        s = math.sqrt(max(disc, 0.0))
        for slope_num in {(-b + s), (-b - s)}:
            # direction (a, slope_num) solves a t^2 + 2b t + c = 0 with t = dx/dy
            roots.append(math.atan2(a, slope_num))
    return sorted({r % math.pi for r in roots})


def conic_branches(cfg: CevianConfig, samples: int = SAMPLES_PER_BRANCH) -> list[list[tuple[float, float]]]:
    """Float samples of each branch of the conic through ABCPQ."""
    a, b, c, d, e, f = (float(t) for t in cfg.conic.coeffs)
    ax, ay = (float(t) for t in cfg.tri.A.xy)
    cuts = asymptotic_angles(cfg.conic.coeffs)
    if not cuts:
        intervals = [(0.0, math.pi)]
    else:
        ends = cuts + [cuts[0] + math.pi]
        intervals = list(zip(ends, ends[1:]))
    branches = []
    for lo, hi in intervals:
        pts = []
        for k in range(samples):
            th = lo + (hi - lo) * (k + 1) / (samples + 1)
            dx, dy = math.cos(th), math.sin(th)
            qd = a * dx * dx + 2 * b * dx * dy + c * dy * dy
            bad = dx * (a * ax + b * ay + d) + dy * (b * ax + c * ay + e)
            t = -2 * bad / qd
            pts.append((ax + t * dx, ay + t * dy))
        branches.append(pts)
    return branches


def _runs_inside(pts, vp: Viewport):
    run = []
    for x, y in pts:
        if vp.contains(x, y):
            run.append((x, y))
        elif run:
            yield run
            run = []
    if run:
        yield run


class _Doc:
    def __init__(self, vp: Viewport):
        self.vp = vp
        self.root = ET.Element("svg", {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(vp.width), "height": _fmt(vp.height),
            "viewBox": f"0 0 {_fmt(vp.width)} {_fmt(vp.height)}",
        })
        defs = ET.SubElement(self.root, "defs")
        clip = ET.SubElement(defs, "clipPath", {"id": "view"})
        ET.SubElement(clip, "rect", {"x": "0", "y": "0",
                                     "width": _fmt(vp.width), "height": _fmt(vp.height)})
        ET.SubElement(self.root, "rect", {"width": "100%", "height": "100%", "fill": "white"})
        self.body = ET.SubElement(self.root, "g", {"clip-path": "url(#view)"})

    def group(self, gid: str, **style) -> ET.Element:
        return ET.SubElement(self.body, "g", {"id": gid, **{k.replace("_", "-"): v for k, v in style.items()}})

    def segment(self, parent, p: HPoint, q: HPoint, **attrs):
        (x1, y1), (x2, y2) = (self.vp.px(*map(float, r.xy)) for r in (p, q))
        ET.SubElement(parent, "line", {"x1": _fmt(x1), "y1": _fmt(y1),
                                       "x2": _fmt(x2), "y2": _fmt(y2), **attrs})

    def line(self, parent, l: HLine, **attrs):
        seg = self.vp.clip_line(l)
        if seg is None:
            return
        (x1, y1), (x2, y2) = (self.vp.px(*p) for p in seg)
        ET.SubElement(parent, "line", {"x1": _fmt(x1), "y1": _fmt(y1),
                                       "x2": _fmt(x2), "y2": _fmt(y2), **attrs})

    def polyline(self, parent, pts, **attrs):
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (self.vp.px(*p) for p in pts))
        ET.SubElement(parent, "polyline", {"points": coords, "fill": "none", **attrs})

    def mark(self, parent, name: str, label: str, p: HPoint, color="black"):
        x, y = self.vp.px(*map(float, p.xy))
        ET.SubElement(parent, "circle", {"id": f"pt-{name}", "cx": _fmt(x), "cy": _fmt(y),
                                         "r": "3", "fill": color})
        t = ET.SubElement(parent, "text", {"x": _fmt(x + 5), "y": _fmt(y - 5),
                                           "font-size": "12", "font-family": "sans-serif"})
        t.text = label

    def tostring(self) -> str:
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def _degenerate_lines(cfg: CevianConfig) -> tuple[HLine, HLine]:
    """The median through P and the opposite side, which together contain ABCPQ."""
    u, v, w = point_to_bary(cfg.tri, cfg.P).coords
    A, B, C = cfg.tri.vertices
    if v == w:
        return join(A, cfg.P), join(B, C)
    if w == u:
        return join(B, cfg.P), join(C, A)
    return join(C, cfg.P), join(A, B)


def render_svg(cfg: CevianConfig) -> str:
    A, B, C = cfg.tri.vertices
    vp = Viewport(cfg.tri.vertices)
    doc = _Doc(vp)

    tri = doc.group("triangle", stroke="black", stroke_width="1.5")
    for p, q in ((A, B), (B, C), (C, A)):
        doc.segment(tri, p, q)
    cev = doc.group("cevians", stroke="gray", stroke_width="0.8")
    for v, t in zip((A, B, C), (cfg.D, cfg.E, cfg.F)):
        if not t.is_infinite:
            doc.segment(cev, v, t)

    degenerate = cfg.conic is None or classify(cfg.conic) == "degenerate"
    if degenerate:
        deg = doc.group("conic-degenerate", stroke="crimson", stroke_width="1.5",
                        stroke_dasharray="6,4")
        for l in _degenerate_lines(cfg):
            doc.line(deg, l)
        warn = ET.SubElement(doc.root, "text", {"id": "warning", "x": "10", "y": "20",
                                                "fill": "crimson", "font-size": "14",
                                                "font-family": "sans-serif"})
        warn.text = "warning: P lies on a median, ABCPQ lie on a line pair (median and side)"
    else:
        con = doc.group("conic", stroke="royalblue", stroke_width="1.5",
                        **{"data-class": classify(cfg.conic)})
        for i, branch in enumerate(conic_branches(cfg)):
            br = ET.SubElement(con, "g", {"id": f"branch-{i}", "data-samples": str(len(branch))})
            for run in _runs_inside(branch, vp):
                if len(run) > 1:
                    doc.polyline(br, run)

    axes = doc.group("lines", stroke="seagreen", stroke_width="0.8")
    named = []
    if cfg.V is not None and cfg.V != cfg.G:
        named.append(("GV", cfg.G, cfg.V))
    if cfg.J is not None:
        named.append(("G1J", cfg.G1, cfg.J))
    if cfg.Jp is not None:
        named.append(("G2Jp", cfg.G2, cfg.Jp))
    for lid, p, q in named:
        try:
            l = join(p, q)
        except GeometryError:
            continue
        doc.line(axes, l, id=f"line-{lid}")

    pts = doc.group("points")
    for v, name in zip((A, B, C), "ABC"):
        doc.mark(pts, name, name, v)
    for field, label in _LABELS:
        p = getattr(cfg, field)
        if p is not None and not p.is_infinite:
            doc.mark(pts, field, label, p, color="dimgray")
    Z = None if degenerate else cfg.Z
    if Z is not None and not Z.is_infinite:
        doc.mark(pts, "Z", "Z", Z, color="crimson")
    return doc.tostring()
