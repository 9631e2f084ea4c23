from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from cevconic.config import build_config
from cevconic.kernel import HPoint
from cevconic.triangle import (
    Bary,
    TriangleRef,
    admissible,
    bary_to_point,
    on_median,
    on_steiner_circumellipse,
)

settings.register_profile("cevconic", deadline=None, max_examples=60)
settings.load_profile("cevconic")

# T1 has orthocenter (1,1) and circumcenter (2,1); T2 is the 3-4-5 triangle
T1 = TriangleRef.from_xy([(0, 0), (4, 0), (1, 3)])
T2 = TriangleRef.from_xy([(0, 0), (4, 0), (0, 3)])
GERGONNE = HPoint(Fraction(8, 11), Fraction(9, 11))


@pytest.fixture(scope="session")
def t1():
    return T1


@pytest.fixture(scope="session")
def t2():
    return T2


@pytest.fixture(scope="session")
def gergonne():
    return build_config(T2, GERGONNE)


@pytest.fixture(scope="session")
def orthocenter_cfg():
    return build_config(T1, HPoint(1, 1))


@pytest.fixture(scope="session")
def median_cfg():
    return build_config(T2, bary_to_point(T2, Bary(2, 1, 1)))


@pytest.fixture(scope="session")
def steiner_cfg():
    return build_config(T2, bary_to_point(T2, Bary(-3, -6, 2)))


small = st.integers(-12, 12)
rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 7))


def _area2(pts):
    (x1, y1), (x2, y2), (x3, y3) = pts
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)


triangles = st.lists(st.tuples(small, small), min_size=3, max_size=3).filter(
    lambda pts: _area2(pts) != 0).map(TriangleRef.from_xy)
points = st.builds(HPoint, rationals, rationals)


@st.composite
def generic_configs(draw):
    """A triangle with P admissible, off the medians and off the Steiner ellipse."""
    tri = draw(triangles)
    P = draw(points.filter(lambda p: admissible(tri, p) and p != tri.G
                           and not on_median(tri, p) and not on_steiner_circumellipse(tri, p)))
    return build_config(tri, P)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
