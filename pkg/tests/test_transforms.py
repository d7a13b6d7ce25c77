import random

from hypothesis import given, strategies as st

from distlab.kernel import (
    dist_sq_point_line2, dist_sq_point_line3, dist_sq_point_plane3, dist_sq_point_point2,
    dist_sq_point_point3, tangent_circles,
)
from distlab.transforms import primitive_triples, random_isometry2, random_isometry3

from conftest import circles2, lines2, planes3, points2, points3


def test_primitive_triples():
    ts = list(primitive_triples(6))
    assert ts[:3] == [(3, 4, 5), (5, 12, 13), (8, 15, 17)]
    assert all(a * a + b * b == c * c and a < b for a, b, c in ts)


@given(st.integers(0, 10 ** 6), points2, points2, lines2)
def test_isometry2_preserves_distances(seed, p, q, l):
    iso = random_isometry2(random.Random(seed))
    assert dist_sq_point_point2(iso.point(p), iso.point(q)) == dist_sq_point_point2(p, q)
    assert dist_sq_point_line2(iso.point(p), iso.line(l)) == dist_sq_point_line2(p, l)


@given(st.integers(0, 10 ** 6), circles2, circles2)
def test_isometry2_preserves_tangency(seed, c1, c2):
    if c1 == c2:
        return
    iso = random_isometry2(random.Random(seed))
    assert tangent_circles(iso.circle(c1), iso.circle(c2)) == tangent_circles(c1, c2)


@given(st.integers(0, 10 ** 6), points3, points3, planes3)
def test_isometry3_preserves_distances(seed, p, q, pl):
    iso = random_isometry3(random.Random(seed))
    assert dist_sq_point_point3(iso.point(p), iso.point(q)) == dist_sq_point_point3(p, q)
    assert dist_sq_point_plane3(iso.point(p), iso.plane(pl)) == dist_sq_point_plane3(p, pl)


@given(st.integers(0, 10 ** 6), points3, points3)
def test_isometry3_line(seed, p, q):
    from distlab.kernel import Line3
    if p == q:
        return
    iso = random_isometry3(random.Random(seed))
    l = Line3.through(p, q)
    r = iso.point(p)
    assert dist_sq_point_line3(r, iso.line(l)) == 0
