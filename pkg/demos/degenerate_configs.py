"""
Cones, cylinders and hyperboloids around an axis
------------------------------------------------

Points on the z-axis together with planes touching one cone or cylinder,
or lines ruling one cylinder, cone or hyperboloid, realise very few
distances. The detectors find such axes exactly; tilting one member or
moving one point breaks the configuration, while rigid motions keep it.
"""
import random

from distlab.census import distinct_point_line3_distances, distinct_point_plane_distances
from distlab.configurations import (
    GeneratorSpec, detect_line_cone_cylinder_hyperboloid, detect_plane_cone_cylinder, generate,
)
from distlab.kernel import Plane3, format_rational
from distlab.transforms import random_isometry3


def fmt(values):
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


for name in ("CylinderConfig3D", "ConeConfig3D", "HyperboloidConfig3D"):
    sc = generate(GeneratorSpec(name, {"s": 4, "t": 8}))
    if sc.planes3:
        rep = detect_plane_cone_cylinder(sc.points3, sc.planes3, 4, 8)
        d = distinct_point_plane_distances(sc.points3, sc.planes3).size
        print(f"{name}: planes -> {rep.kind}, invariant {fmt(rep.invariant)}, {d} point-plane distances")
    rep = detect_line_cone_cylinder_hyperboloid(sc.points3, sc.lines3, 4, 8)
    d = distinct_point_line3_distances(sc.points3, sc.lines3).size
    print(f"{name}: lines  -> {rep.kind}, invariant {fmt(rep.invariant)}, {d} point-line distances")

sc = generate(GeneratorSpec("ConeConfig3D", {"s": 3, "t": 3}))
iso = random_isometry3(random.Random(0))
moved = detect_plane_cone_cylinder([iso.point(p) for p in sc.points3], [iso.plane(p) for p in sc.planes3], 3, 3)
print("after a rational rigid motion:", moved.kind)
bent = sc.planes3[:2] + [Plane3(sc.planes3[2].a + 1, sc.planes3[2].b, sc.planes3[2].c, sc.planes3[2].d)]
print("after tilting one plane:", detect_plane_cone_cylinder(sc.points3, bent, 3, 3))
