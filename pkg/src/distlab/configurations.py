"""Extremal construction generators and exact detectors for degenerate configurations."""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, lcm
from typing import Callable, Sequence

from .census import collinear_groups
from .kernel import (
    Circle2, Line2, Line3, Plane3, Point2, Point3, Sphere3,
    GeometryError, closest_parameter_on_line, cos2_between,
    dist_sq_line_line3, dist_sq_point_plane3, dot, incident,
)
from .scene import Scene
from .transforms import primitive_triples

PYTHAGOREAN_TABLE_SIZE = 64

GENERATORS = (
    "ParallelMedian", "CollinearPlusOne", "ElekesGrid", "PythagoreanTangency",
    "ParallelPlanes3D", "ParallelLines3D", "CylinderConfig3D", "ConeConfig3D",
    "HyperboloidConfig3D", "RandomRational",
)

COLLINEAR = "Collinear"
CYLINDER_PLANES = "CylinderPlanes"
CONE_PLANES = "ConePlanes"
CYLINDER_LINES = "CylinderLines"
CONE_LINES = "ConeLines"
HYPERBOLOID_LINES = "HyperboloidLines"
COLLINEAR_SPHERE_CENTERS = "CollinearSphereCenters"


class GeneratorError(GeometryError):
    """Invalid generator name or size parameters."""


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def pythagorean_slopes(count: int) -> list[Fraction]:
    """Slopes ``a/b`` of primitive triples: ``sqrt(1 + slope^2) = c/b`` is rational."""
    if count > PYTHAGOREAN_TABLE_SIZE:
        raise GeneratorError(f"only {PYTHAGOREAN_TABLE_SIZE} Pythagorean slopes are tabulated, asked for {count}")
    return [Fraction(a, b) for a, b, _ in _TRIPLES[:count]]


_TRIPLES = list(primitive_triples(PYTHAGOREAN_TABLE_SIZE))


def unit_directions(count: int) -> list[tuple[Fraction, Fraction]]:
    """Distinct rational points ``(c, s)`` on the unit circle."""
    out = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
           (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1))]
    for a, b, c in _TRIPLES:
        for x, y in ((a, b), (b, a)):
            for sx in (1, -1):
                for sy in (1, -1):
                    out.append((Fraction(sx * x, c), Fraction(sy * y, c)))
        if len(out) >= count:
            break
    if len(out) < count:
        raise GeneratorError(f"asked for {count} rational unit directions, table too small")
    return out[:count]


# -- generators ---------------------------------------------------------------

def _parallel_median(n: int, m: int = 3) -> Scene:
    mid = Fraction(n + 1, 2)
    lines = [Line2(0, 1, -j) for j in range(1, n + 1)]
    points = [Point2(i, mid) for i in range(1, m + 1)]
    return Scene(points2=points, lines2=lines,
                 metadata={"designed_distinct_distances": str(ceil(n / 2))})


def _collinear_plus_one(m: int) -> Scene:
    if m < 3:
        raise GeneratorError("CollinearPlusOne needs m >= 3")
    points = [Point2(i, 0) for i in range(1, m)] + [Point2(0, 1)]
    return Scene(points2=points, metadata={"designed_spanned_lines": str(m)})


def _elekes_grid(r: int, s: int, t: int) -> Scene:
    lines = [Line2.from_slope(i, j) for i in range(1, r + 1) for j in range(1, s + 1)]
    points = [Point2(x, y) for x in range(1, t + 1) for y in range(1, r * t + s + 1)]
    return Scene(points2=points, lines2=lines,
                 metadata={"designed_incidences": str(r * s * t)})


def _pythagorean_tangency(r: int, s: int, t: int) -> Scene:
    """Elekes-type grid with Pythagorean slopes, lines shifted by one unit.

    Points sit at abscissae ``D*x`` (``D`` the lcm of slope denominators) so
    every line ``y = i x + j`` meets every column in a lattice point.  The
    shifted line ``y = i x + j + sqrt(1 + i^2)`` is at distance 1 from the
    original; a unit circle about a lattice point touches it iff the point is
    on the original line or on the line shifted by ``2 sqrt(1 + i^2)``, and
    the latter has non-integer ordinate at every column.
    """
    slopes = pythagorean_slopes(r)
    D = lcm(*(q.denominator for q in slopes))
    xs = [D * x for x in range(1, t + 1)]
    ymax = max(int(q * xs[-1]) for q in slopes) + s
    src_lines = [Line2.from_slope(q, j) for q in slopes for j in range(1, s + 1)]
    lift = {q: Fraction(c, b) for q, (a, b, c) in zip(slopes, _TRIPLES)}
    shifted = [Line2.from_slope(q, j + lift[q]) for q in slopes for j in range(1, s + 1)]
    points = [Point2(x, y) for x in xs for y in range(1, ymax + 1)]
    circles = [Circle2(p, 1) for p in points]
    return Scene(points2=points, lines2=shifted, circles2=circles, metadata={
        "designed_tangencies": str(r * s * t),
        "source_incidences": str(r * s * t),
        "source_lines": ";".join(f"{l.a},{l.b},{l.c}" for l in src_lines),
    })


def _parallel_planes(n: int, m: int = 3) -> Scene:
    planes = [Plane3(0, 0, 1, -j) for j in range(1, n + 1)]
    points = [Point3(i, i * i, 1) for i in range(1, m + 1)]
    return Scene(points3=points, planes3=planes,
                 metadata={"designed_distinct_distances": str(n)})


def _parallel_lines3(n: int, m: int = 3) -> Scene:
    lines = [Line3(Point3(0, j, 0), (1, 0, 0)) for j in range(1, n + 1)]
    points = [Point3(i, 1, 0) for i in range(1, m + 1)]
    return Scene(points3=points, lines3=lines,
                 metadata={"designed_distinct_distances": str(n)})


def _axis_points(s: int) -> list[Point3]:
    return [Point3(0, 0, k) for k in range(1, s + 1)]


def _cylinder_config(s: int, t: int) -> Scene:
    """Points on the z-axis; tangent planes and rulings of ``x^2 + y^2 = 1``."""
    dirs = unit_directions(t)
    planes = [Plane3(c, sn, 0, -1) for c, sn in dirs]
    lines = [Line3(Point3(c, sn, 0), (0, 0, 1)) for c, sn in dirs]
    return Scene(points3=_axis_points(s), planes3=planes, lines3=lines,
                 metadata={"designed_positive_distances": "1"})


def _cone_config(s: int, t: int) -> Scene:
    """Points on the z-axis; tangent planes and rulings of ``x^2 + y^2 = z^2``."""
    dirs = unit_directions(t)
    planes = [Plane3(c, sn, -1, 0) for c, sn in dirs]
    lines = [Line3(Point3(0, 0, 0), (c, sn, 1)) for c, sn in dirs]
    return Scene(points3=_axis_points(s), planes3=planes, lines3=lines)


def _hyperboloid_config(s: int, t: int) -> Scene:
    """Points on the z-axis; rulings of ``x^2 + y^2 - z^2 = 1`` (both families)."""
    dirs = unit_directions((t + 1) // 2)
    lines = []
    for c, sn in dirs:
        lines.append(Line3(Point3(c, sn, 0), (-sn, c, 1)))
        lines.append(Line3(Point3(c, sn, 0), (sn, -c, 1)))
    return Scene(points3=_axis_points(s), lines3=lines[:t])


def _rand_q(rng: random.Random, height: int) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_scene(seed: int = 0, m: int = 10, n: int = 10, k: int = 0, m3: int = 0, n3: int = 0,
                 s3: int = 0, l3: int = 0, height: int = 1000) -> Scene:
    """Bounded-height random rationals (numerators/denominators up to ``height``)."""
    rng = random.Random(seed)
    q = lambda: _rand_q(rng, height)  # noqa: E731
    pos = lambda: Fraction(rng.randint(1, height), rng.randint(1, height))  # noqa: E731
    scene = Scene(
        points2=[Point2(q(), q()) for _ in range(m)],
        lines2=[_rand_line2(rng, height) for _ in range(n)],
        circles2=[Circle2(Point2(q(), q()), pos()) for _ in range(k)],
        points3=[Point3(q(), q(), q()) for _ in range(m3)],
        planes3=[_rand_plane3(rng, height) for _ in range(n3)],
        lines3=[_rand_line3(rng, height) for _ in range(l3)],
        spheres3=[Sphere3(Point3(q(), q(), q()), pos()) for _ in range(s3)],
        metadata={"seed": str(seed), "height": str(height)},
    )
    return scene.canonical()[0]


def random_lines2(rng: random.Random, height: int = 1000):
    """Endless stream of bounded-height random lines."""
    while True:
        yield _rand_line2(rng, height)


def _rand_line2(rng, height):
    while True:
        a, b = _rand_q(rng, height), _rand_q(rng, height)
        if a or b:
            return Line2(a, b, _rand_q(rng, height))


def _rand_plane3(rng, height):
    while True:
        n = [_rand_q(rng, height) for _ in range(3)]
        if any(n):
            return Plane3(*n, _rand_q(rng, height))


def _rand_line3(rng, height):
    while True:
        v = [rng.randint(-height, height) for _ in range(3)]
        if any(v):
            return Line3(Point3(*(_rand_q(rng, height) for _ in range(3))), tuple(v))


_BUILDERS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "ParallelMedian": (_parallel_median, ("n", "m")),
    "CollinearPlusOne": (_collinear_plus_one, ("m",)),
    "ElekesGrid": (_elekes_grid, ("r", "s", "t")),
    "PythagoreanTangency": (_pythagorean_tangency, ("r", "s", "t")),
    "ParallelPlanes3D": (_parallel_planes, ("n", "m")),
    "ParallelLines3D": (_parallel_lines3, ("n", "m")),
    "CylinderConfig3D": (_cylinder_config, ("s", "t")),
    "ConeConfig3D": (_cone_config, ("s", "t")),
    "HyperboloidConfig3D": (_hyperboloid_config, ("s", "t")),
    "RandomRational": (random_scene, ("m", "n", "k", "m3", "n3", "s3", "l3", "height")),
}


def generate(spec: GeneratorSpec) -> Scene:
    """Build the scene described by ``spec``; designed counts go in ``metadata``."""
    if spec.name not in _BUILDERS:
        raise GeneratorError(f"unknown generator {spec.name!r}")
    builder, allowed = _BUILDERS[spec.name]
    extra = set(spec.params) - set(allowed)
    if extra:
        raise GeneratorError(f"{spec.name}: unknown parameters {sorted(extra)}")
    for key, value in spec.params.items():
        if not isinstance(value, int) or value <= 0:
            raise GeneratorError(f"{spec.name}: parameter {key} must be a positive integer")
    kwargs = dict(spec.params)
    if spec.name == "RandomRational":
        kwargs["seed"] = spec.seed
    try:
        scene = builder(**kwargs)
    except TypeError as exc:
        raise GeneratorError(f"{spec.name}: {exc}") from None
    scene.metadata.setdefault("generator", spec.name)
    for key, value in spec.params.items():
        scene.metadata[f"param.{key}"] = str(value)
    return scene


# -- detectors ----------------------------------------------------------------

@dataclass
class ConfigReport:
    kind: str
    axis: object | None
    members: dict[str, list[int]]
    sizes: tuple[int, int]
    invariant: tuple = ()  # the shared exact quantities (dist2, cos2, apex parameter, ...)


def detect_collinear(points: Sequence, s: int) -> ConfigReport | None:
    if s < 3:
        raise ValueError("s must be at least 3")
    best = None
    for line, idx in collinear_groups(points, s):
        if best is None or len(idx) > len(best[1]):
            best = (line, idx)
    if best is None:
        return None
    return ConfigReport(COLLINEAR, best[0], {"points": best[1]}, (len(best[1]), 0))


def _axes(points: Sequence[Point3], s: int):
    for line, idx in collinear_groups(points, s):
        yield line, idx


def _plane_groups(axis: Line3, planes: Sequence[Plane3]):
    """Group planes by the cylinder/cone they touch around ``axis``."""
    groups = defaultdict(list)
    for j, pl in enumerate(planes):
        nv = dot(pl.normal, axis.v)
        if nv == 0:
            d2 = dist_sq_point_plane3(axis.u, pl)
            if d2 > 0:
                groups[(CYLINDER_PLANES, d2)].append(j)
        else:
            tau = -Fraction(pl.evaluate(axis.u)) / nv
            c2 = cos2_between(pl.normal, axis.v)
            if c2 != 1:
                groups[(CONE_PLANES, tau, c2)].append(j)
    return groups


def detect_plane_cone_cylinder(points: Sequence[Point3], planes: Sequence[Plane3], s: int, t: int,
                               kind: str | None = None) -> ConfigReport | None:
    """An ``s x t`` cone or cylinder configuration of points and planes.

    Candidate axes are lines through at least ``s`` of the points.  Planes
    parallel to the axis at a common positive distance touch one cylinder;
    planes through a common axis point at a common angle touch one cone.
    """
    if s < 2 or t < 2:
        raise ValueError("s and t must be at least 2")
    for axis, idx in _axes(points, s):
        for key, members in _plane_groups(axis, planes).items():
            if len(members) >= t and kind in (None, key[0]):
                return ConfigReport(key[0], axis, {"points": idx, "planes": members},
                                    (len(idx), len(members)), key[1:])
    return None


def _line_groups(axis: Line3, lines: Sequence[Line3]):
    groups = defaultdict(list)
    for j, l in enumerate(lines):
        c2 = cos2_between(l.v, axis.v)
        d2 = dist_sq_line_line3(l, axis)
        if c2 == 1:
            if d2 > 0:
                groups[(CYLINDER_LINES, d2)].append(j)
            continue
        if c2 == 0:
            continue  # perpendicular lines sweep a plane, not a ruled quadric
        tau = closest_parameter_on_line(axis, l)
        if d2 == 0:
            groups[(CONE_LINES, tau, c2)].append(j)
        else:
            groups[(HYPERBOLOID_LINES, tau, d2, c2)].append(j)
    return groups


def detect_line_cone_cylinder_hyperboloid(points: Sequence[Point3], lines: Sequence[Line3], s: int, t: int,
                                          kind: str | None = None) -> ConfigReport | None:
    """An ``s x t`` cone/cylinder/hyperboloid configuration of points and lines.

    Each line is keyed, relative to a candidate axis, by its squared distance
    and squared angle to the axis and by the axis point nearest to it.  Lines
    with equal keys are swept onto one another by rotation about the axis, so
    they lie on one surface of revolution: a cylinder (parallel), a cone
    (meeting the axis), or a one-sheeted hyperboloid (skew).
    """
    if s < 2 or t < 2:
        raise ValueError("s and t must be at least 2")
    for axis, idx in _axes(points, s):
        for key, members in _line_groups(axis, lines).items():
            if len(members) >= t and kind in (None, key[0]):
                return ConfigReport(key[0], axis, {"points": idx, "lines": members},
                                    (len(idx), len(members)), key[1:])
    return None


def detect_collinear_sphere_centers(spheres: Sequence[Sphere3], k: int) -> ConfigReport | None:
    if k < 3:
        raise ValueError("k must be at least 3")
    rep = detect_collinear([sp.center for sp in spheres], k)
    if rep is None:
        return None
    return ConfigReport(COLLINEAR_SPHERE_CENTERS, rep.axis, {"spheres": rep.members["points"]}, rep.sizes)


def verify_report(rep: ConfigReport, points=(), planes=(), lines=(), spheres=()) -> bool:
    """Re-check a report against the defining exact predicates."""
    axis = rep.axis
    if rep.kind == COLLINEAR_SPHERE_CENTERS:
        return all(incident(spheres[i].center, axis) for i in rep.members["spheres"])
    if not all(incident(points[i], axis) for i in rep.members["points"]):
        return False
    if rep.kind == COLLINEAR:
        return True
    if rep.kind in (CYLINDER_PLANES, CONE_PLANES):
        ps = [planes[j] for j in rep.members["planes"]]
        if rep.kind == CYLINDER_PLANES:
            return (all(dot(p.normal, axis.v) == 0 for p in ps)
                    and len({dist_sq_point_plane3(axis.u, p) for p in ps}) == 1)
        apex = axis.point_at(rep.invariant[0])
        return (all(incident(apex, p) for p in ps)
                and len({cos2_between(p.normal, axis.v) for p in ps}) == 1)
    ls = [lines[j] for j in rep.members["lines"]]
    c2 = {cos2_between(l.v, axis.v) for l in ls}
    d2 = {dist_sq_line_line3(l, axis) for l in ls}
    if len(c2) != 1 or len(d2) != 1:
        return False
    if rep.kind == CYLINDER_LINES:
        return c2 == {1} and d2 != {0}
    feet = {closest_parameter_on_line(axis, l) for l in ls}
    if len(feet) != 1:
        return False
    if rep.kind == CONE_LINES:
        return d2 == {0} and all(incident(axis.point_at(rep.invariant[0]), l) for l in ls)
    return d2 != {0} and 0 < next(iter(c2)) < 1
