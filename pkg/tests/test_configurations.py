import random
from fractions import Fraction
from math import ceil

import pytest

from distlab.census import (
    count_incidences, distinct_point_line3_distances, distinct_point_line_distances,
    distinct_point_plane_distances, spanned_distance_census, spanned_lines,
)
from distlab.configurations import (
    CONE_LINES, CONE_PLANES, CYLINDER_LINES, CYLINDER_PLANES, GENERATORS, HYPERBOLOID_LINES, GeneratorError,
    GeneratorSpec, detect_collinear, detect_collinear_sphere_centers, detect_line_cone_cylinder_hyperboloid,
    detect_plane_cone_cylinder, generate, pythagorean_slopes, random_scene, unit_directions, verify_report,
)
from distlab.kernel import (
    Line2, Line3, Point2, Point3, Sphere3, collinear2, cos2_between, dist_sq_line_line3,
)
from distlab.tangency import count_line_circle_tangencies

from fixtures import (
    AXIS_POINTS, cone_lines, cone_planes, cylinder_lines, cylinder_planes, hyperboloid_lines,
)


def test_parallel_median_example():
    s = generate(GeneratorSpec("ParallelMedian", {"n": 4, "m": 3}))
    assert len(s.lines2) == 4 and len(s.points2) == 3
    assert s.metadata["designed_distinct_distances"] == "2"
    assert distinct_point_line_distances(s.points2, s.lines2).size == 2


@pytest.mark.parametrize("n", [1, 2, 3, 10, 11])
def test_parallel_median_design(n):
    s = generate(GeneratorSpec("ParallelMedian", {"n": n, "m": 5}))
    assert distinct_point_line_distances(s.points2, s.lines2).size == ceil(n / 2)


def test_elekes_grid_example():
    s = generate(GeneratorSpec("ElekesGrid", {"r": 2, "s": 4, "t": 3}))
    assert len(s.lines2) == 8 and len(s.points2) == 30
    assert count_incidences(s.points2, s.lines2) == 24 == int(s.metadata["designed_incidences"])


@pytest.mark.parametrize("m", [3, 5, 9])
def test_collinear_plus_one(m):
    s = generate(GeneratorSpec("CollinearPlusOne", {"m": m}))
    assert len(spanned_lines(s.points2)) == m == int(s.metadata["designed_spanned_lines"])
    assert spanned_distance_census(s.points2).size <= m * m


@pytest.mark.parametrize("r, s, t", [(1, 1, 1), (2, 3, 2), (3, 3, 2), (4, 2, 3)])
def test_pythagorean_tangency_design(r, s, t):
    sc = generate(GeneratorSpec("PythagoreanTangency", {"r": r, "s": s, "t": t}))
    src = [Line2(*map(int, x.split(","))) for x in sc.metadata["source_lines"].split(";")]
    assert count_incidences(sc.points2, src) == r * s * t
    assert count_line_circle_tangencies(sc.lines2, sc.circles2).pair_count == r * s * t


def test_pythagorean_slope_table():
    assert pythagorean_slopes(3) == [Fraction(3, 4), Fraction(5, 12), Fraction(8, 15)]
    with pytest.raises(GeneratorError):
        pythagorean_slopes(1000)
    dirs = unit_directions(20)
    assert len(set(dirs)) == 20 and all(c * c + s * s == 1 for c, s in dirs)


def test_3d_generators():
    s = generate(GeneratorSpec("ParallelPlanes3D", {"n": 7, "m": 4}))
    assert distinct_point_plane_distances(s.points3, s.planes3).size == 7
    s = generate(GeneratorSpec("ParallelLines3D", {"n": 6}))
    assert distinct_point_line3_distances(s.points3, s.lines3).size == 6
    s = generate(GeneratorSpec("CylinderConfig3D", {"s": 4, "t": 9}))
    assert distinct_point_plane_distances(s.points3, s.planes3, exclude_zero=True).keys == {1}


@pytest.mark.parametrize("name, detect, kind", [
    ("CylinderConfig3D", "planes", CYLINDER_PLANES),
    ("ConeConfig3D", "planes", CONE_PLANES),
    ("CylinderConfig3D", "lines", CYLINDER_LINES),
    ("ConeConfig3D", "lines", CONE_LINES),
    ("HyperboloidConfig3D", "lines", HYPERBOLOID_LINES),
])
def test_generated_configs_detected(name, detect, kind):
    s = generate(GeneratorSpec(name, {"s": 3, "t": 6}))
    if detect == "planes":
        rep = detect_plane_cone_cylinder(s.points3, s.planes3, 3, 6)
    else:
        rep = detect_line_cone_cylinder_hyperboloid(s.points3, s.lines3, 3, 6)
    assert rep is not None and rep.kind == kind
    assert verify_report(rep, s.points3, s.planes3, s.lines3)


def test_generator_errors():
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("Nope"))
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("ParallelMedian", {"n": 0}))
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("ParallelMedian", {"q": 3}))
    assert set(GENERATORS) >= {"ElekesGrid", "RandomRational"}


def test_random_scene_is_seeded():
    assert random_scene(3, m=5, n=5, k=2) == random_scene(3, m=5, n=5, k=2)
    assert random_scene(3, m=5, n=5) != random_scene(4, m=5, n=5)


# -- detectors ----------------------------------------------------------------

def test_hyperboloid_fixture_invariants():
    z = Line3(Point3(0, 0, 0), (0, 0, 1))
    for l in hyperboloid_lines():
        assert dist_sq_line_line3(l, z) == 1
        assert cos2_between(l.v, z.v) == Fraction(1, 2)


def test_plane_fixtures():
    rep = detect_plane_cone_cylinder(AXIS_POINTS, cone_planes(), 3, 3)
    assert rep.kind == CONE_PLANES and rep.invariant[-1] == Fraction(1, 2)
    rep = detect_plane_cone_cylinder(AXIS_POINTS, cylinder_planes(), 3, 3)
    assert rep.kind == CYLINDER_PLANES and rep.invariant == (1,)


@pytest.mark.parametrize("lines, kind", [
    (hyperboloid_lines(), HYPERBOLOID_LINES), (cylinder_lines(), CYLINDER_LINES), (cone_lines(), CONE_LINES),
])
def test_line_fixtures(lines, kind):
    rep = detect_line_cone_cylinder_hyperboloid(AXIS_POINTS, lines, 3, 4)
    assert rep.kind == kind
    assert verify_report(rep, AXIS_POINTS, lines=lines)


def test_kind_filter():
    assert detect_plane_cone_cylinder(AXIS_POINTS, cone_planes(), 3, 3, CYLINDER_PLANES) is None


def test_detect_collinear():
    grid = [Point2(x, y) for x in range(3) for y in range(3)]
    assert detect_collinear(grid, 3) is not None
    # rational points on the unit circle are in convex position
    circ = [Point2(c, s) for c, s in unit_directions(12)]
    assert not any(collinear2(a, b, c) for i, a in enumerate(circ) for j, b in enumerate(circ[i + 1:], i + 1)
                   for c in circ[j + 1:])
    assert detect_collinear(circ, 3) is None
    assert detect_collinear(grid, 10) is None


def test_collinear_sphere_centers():
    spheres = [Sphere3(Point3(x, 0, 0), 1) for x in range(4)]
    rep = detect_collinear_sphere_centers(spheres, 4)
    assert rep.members["spheres"] == [0, 1, 2, 3]
    rng = random.Random(1)
    generic = [Sphere3(Point3(*(rng.randint(-99, 99) for _ in range(3))), 1) for _ in range(8)]
    assert detect_collinear_sphere_centers(generic, 3) is None
    assert detect_collinear_sphere_centers(spheres, 5) is None
