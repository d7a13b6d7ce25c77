import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from distlab.kernel import Circle2, Line2, Plane3, Point2, Point3, Sphere3

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

small_int = st.integers(-30, 30)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
positive = st.fractions(min_value=Fraction(1, 40), max_value=50, max_denominator=40)

points2 = st.builds(Point2, rationals, rationals)
points3 = st.builds(Point3, rationals, rationals, rationals)
lines2 = st.tuples(small_int, small_int, small_int).filter(lambda t: t[0] or t[1]).map(lambda t: Line2(*t))
planes3 = (st.tuples(small_int, small_int, small_int, small_int)
           .filter(lambda t: any(t[:3])).map(lambda t: Plane3(*t)))
circles2 = st.builds(Circle2, points2, positive)
spheres3 = st.builds(Sphere3, points3, positive)


def rand_q(rng, height=50):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def rand_pos(rng, height=50):
    return Fraction(rng.randint(1, height), rng.randint(1, height))


@pytest.fixture
def rng():
    return random.Random(12345)


# -- acceptance summary: one line per criterion --------------------------------

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and rep.passed):
        return
    n = marker.args[0]
    detail = dict(item.user_properties).get("detail", "")
    prev = _ACCEPTANCE.get(n, (True, ""))
    _ACCEPTANCE[n] = (prev[0] and rep.passed, detail or prev[1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
