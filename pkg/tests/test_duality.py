import random

import mpmath
import pytest
from hypothesis import given

from distlab.configurations import random_scene
from distlab.duality import (
    VerticalError, branch_intersections, check_circle_circle, check_line_circle,
    check_line_sphere, check_plane_sphere, correspondence_violations, dist_sq_preserved, dualize_circle,
    dualize_line, dualize_plane, lift_circle_to_cones, lift_point, on_dual_hyperbola, point_on_cone,
    resultant_real_roots, rotate_scene,
)
from distlab.kernel import (
    Circle2, Line2, Line3, Plane3, Point2, Sphere3, dist_sq_point_line2, dist_sq_point_line3,
    dist_sq_point_plane3,
)
from distlab.scene import Scene
from distlab.tangency import classify_two_circles

from conftest import circles2, lines2, planes3, points2, points3, rand_pos, rand_q


def nonvertical(l):
    return not l.is_vertical()


def test_dual_point_of_line():
    q = dualize_line(Line2.from_slope(2, -3))
    assert (q.a, q.b) == (2, -3)
    with pytest.raises(VerticalError):
        dualize_line(Line2(1, 0, -1))
    with pytest.raises(VerticalError):
        dualize_plane(Plane3(1, 0, 0, 0))


def test_tangent_line_on_one_branch():
    # y = 1 touches the unit circle from above: center below the line, upper branch
    c = Circle2(Point2(0, 0), 1)
    up, low = dualize_circle(c)
    q = dualize_line(Line2.from_slope(0, 1))
    assert on_dual_hyperbola(q, up) and not on_dual_hyperbola(q, low)
    q = dualize_line(Line2.from_slope(0, -1))
    assert on_dual_hyperbola(q, low) and not on_dual_hyperbola(q, up)


@given(lines2.filter(nonvertical), points2)
def test_constructed_tangency_is_dual_incidence(l, p):
    d2 = dist_sq_point_line2(p, l)
    if d2 == 0:
        return
    c = Circle2(p, d2)
    assert check_line_circle(l, c)
    assert sum(on_dual_hyperbola(dualize_line(l), h) for h in dualize_circle(c)) == 1


@given(lines2.filter(nonvertical), circles2)
def test_line_circle_correspondence(l, c):
    assert check_line_circle(l, c)


@given(planes3.filter(lambda p: not p.is_vertical()), points3)
def test_plane_sphere_correspondence(pl, p):
    d2 = dist_sq_point_plane3(p, pl)
    if d2:
        assert check_plane_sphere(pl, Sphere3(p, d2))
        assert check_plane_sphere(pl, Sphere3(p, d2 + 1))


@given(points3, points3, points3)
def test_line_sphere_paraboloid(p, q, c):
    if p == q:
        return
    l = Line3.through(p, q)
    d2 = dist_sq_point_line3(c, l)
    if d2:
        assert check_line_sphere(l, Sphere3(c, d2))
        assert check_line_sphere(l, Sphere3(c, d2 * 2))


def test_cone_lift_tangent_circles():
    a, b = Circle2(Point2(-1, 0), 1), Circle2(Point2(1, 0), 1)
    assert check_circle_circle(a, b)
    big = Circle2(Point2(0, 0), 4)
    assert check_circle_circle(big, a)
    # internal tangency: center of a lies on sigma_minus of big
    assert point_on_cone(lift_point(a), lift_circle_to_cones(big)[1])
    far = Circle2(Point2(10, 0), 1)
    assert check_circle_circle(a, far)


@given(circles2, circles2)
def test_circle_correspondence_random(c1, c2):
    if c1 != c2:
        assert check_circle_circle(c1, c2)


def test_rotate_scene_removes_verticals():
    scene = Scene(points2=[Point2(0, 0), Point2(3, 1)], lines2=[Line2(1, 0, -2), Line2(0, 1, 5)],
                  planes3=[Plane3(1, 0, 0, 0), Plane3(0, 1, 0, 3)])
    rot = rotate_scene(scene)
    assert not any(l.is_vertical() for l in rot.lines2)
    assert not any(p.is_vertical() for p in rot.planes3)
    assert dist_sq_preserved(scene, rot)


def test_correspondence_on_random_scene():
    scene = random_scene(7, m=0, n=20, k=20, n3=0, s3=10, height=30)
    scene.planes3 = [Plane3(1, 0, 0, 0), Plane3(2, 3, 5, 1)]
    out = correspondence_violations(scene)
    assert sum(out.values()) == 0
    assert set(out) >= {"line-circle", "circle-circle", "plane-sphere"}


# -- pseudo-parabolas ---------------------------------------------------------

def _distinct(vals, tol=mpmath.mpf(10) ** -25):
    out = []
    for v in sorted(vals):
        if not out or abs(v - out[-1]) > tol:
            out.append(v)
    return out


def test_branches_meet_at_most_twice_and_match_resultant():
    rng = random.Random(99)
    checked = 0
    for _ in range(150):
        c1 = Circle2(Point2(rand_q(rng, 9), rand_q(rng, 9)), rand_pos(rng, 9))
        c2 = Circle2(Point2(rand_q(rng, 9), rand_q(rng, 9)), rand_pos(rng, 9))
        if c1 == c2:
            continue
        avals = []
        for h1 in dualize_circle(c1):
            for h2 in dualize_circle(c2):
                pts = branch_intersections(h1, h2)
                assert len(pts) <= 2
                avals += [a for a, _ in pts]
        assert len(_distinct(avals)) == resultant_real_roots(dualize_circle(c1)[0], dualize_circle(c2)[0])
        checked += 1
    assert checked > 100


def test_branch_intersections_are_common_tangents():
    c1, c2 = Circle2(Point2(0, 0), 1), Circle2(Point2(5, 1), 4)
    pts = []
    for h1 in dualize_circle(c1):
        for h2 in dualize_circle(c2):
            pts += branch_intersections(h1, h2)
    assert len(pts) == classify_two_circles(c1, c2) == 4
    with mpmath.workdps(60):
        for a, b in pts:
            for c in (c1, c2):
                d = abs(a * int(c.center.x) - int(c.center.y) + b) / mpmath.sqrt(1 + a * a)
                assert abs(d - mpmath.sqrt(int(c.r2))) < mpmath.mpf(10) ** -40
