import math
import xml.etree.ElementTree as ET

import pytest

from cevconic.svg import SAMPLES_PER_BRANCH, Viewport, asymptotic_angles, conic_branches, render_svg

NS = {"s": "http://www.w3.org/2000/svg"}


def parse(text):
    return ET.fromstring(text)


def find_id(root, ident):
    return next(e for e in root.iter() if e.get("id") == ident)


def test_gergonne_figure(gergonne, t2):
    root = parse(render_svg(gergonne))
    vp = Viewport(t2.vertices)
    z = find_id(root, "pt-Z")
    x, y = vp.px(1.0, 2.0)
    assert float(z.get("cx")) == pytest.approx(x, abs=1e-3)
    assert float(z.get("cy")) == pytest.approx(y, abs=1e-3)
    conic = find_id(root, "conic")
    assert conic.get("data-class") == "hyperbola"
    branches = [e for e in conic.iter() if (e.get("id") or "").startswith("branch-")]
    assert len(branches) == 2
    assert all(int(b.get("data-samples")) >= 256 for b in branches)
    for lid in ("line-GV", "line-G1J", "line-G2Jp"):
        find_id(root, lid)
    labels = {t.text for t in root.iter("{http://www.w3.org/2000/svg}text")}
    assert {"A", "B", "C", "P", "Q", "Z", "G1", "G2"} <= labels


def test_viewport_margin(t2):
    vp = Viewport(t2.vertices)
    assert (vp.x0, vp.x1) == pytest.approx((-0.8, 4.8))
    assert (vp.y0, vp.y1) == pytest.approx((-0.6, 3.6))
    assert vp.px(-0.8, 3.6) == pytest.approx((0.0, 0.0))


def test_branch_points_lie_on_conic(gergonne):
    a, b, c, d, e, f = (float(t) for t in gergonne.conic.coeffs)
    for branch in conic_branches(gergonne):
        assert len(branch) == SAMPLES_PER_BRANCH
        for x, y in branch[::37]:
            val = a * x * x + 2 * b * x * y + c * y * y + 2 * d * x + 2 * e * y + f
            scale = 1 + x * x + y * y
            assert abs(val) / scale < 1e-6


def test_hyperbola_clipped(gergonne):
    root = parse(render_svg(gergonne))
    w, h = float(root.get("width")), float(root.get("height"))
    for poly in root.iter("{http://www.w3.org/2000/svg}polyline"):
        for pair in poly.get("points").split():
            x, y = map(float, pair.split(","))
            assert -1e-6 <= x <= w + 1e-6 and -1e-6 <= y <= h + 1e-6


def test_ellipse_single_branch():
    from cevconic.config import build_config
    from cevconic.kernel import HPoint
    from cevconic.triangle import TriangleRef
    from fractions import Fraction
    cfg = build_config(TriangleRef.from_xy([(2, 2), (-6, 8), (3, -6)]), HPoint(Fraction(-37, 8), -1))
    assert len(conic_branches(cfg)) == 1
    assert asymptotic_angles(cfg.conic.coeffs) == []


def test_asymptotic_angles():
    # x^2 - y^2: asymptotes at 45 and 135 degrees
    got = asymptotic_angles((1, 0, -1, 0, 0, -1))
    assert got == pytest.approx([math.pi / 4, 3 * math.pi / 4])
    # parabola x^2 - y: one direction, straight up
    assert asymptotic_angles((2, 0, 0, 0, -1, 0)) == pytest.approx([math.pi / 2])


def test_degenerate_figure(median_cfg):
    root = parse(render_svg(median_cfg))
    warn = find_id(root, "warning")
    assert "median" in warn.text
    deg = find_id(root, "conic-degenerate")
    assert len(list(deg)) == 2
