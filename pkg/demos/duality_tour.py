"""
Tangency becomes incidence
--------------------------

A non-vertical line y = ax + b is the point (a, b) of the dual plane. A
circle becomes a hyperbola whose two branches collect the lines passing
above and below the center at distance r. Tangency in the primal plane
is incidence with exactly one branch.
"""
from fractions import Fraction

from distlab.duality import (
    branch_intersections, check_plane_sphere, dualize_circle, dualize_line, on_dual_hyperbola,
    resultant_real_roots,
)
from distlab.kernel import Circle2, Line2, Plane3, Point2, Point3, Sphere3, dist_sq_point_line2
from distlab.tangency import classify_two_circles

circle = Circle2(Point2(1, 2), Fraction(9, 25))
upper, lower = dualize_circle(circle)
for slope, icpt in [(Fraction(3, 4), Fraction(5, 4) + Fraction(3, 4)), (0, 0), (Fraction(3, 4), Fraction(5, 4))]:
    line = Line2.from_slope(slope, icpt)
    q = dualize_line(line)
    print(f"y = {slope}x + {icpt}: dist^2 to center {dist_sq_point_line2(circle.center, line)}, "
          f"upper {on_dual_hyperbola(q, upper)}, lower {on_dual_hyperbola(q, lower)}")

# branches are pseudo-parabolas: two of them cross at most twice
other = Circle2(Point2(4, 0), 1)
total = 0
for h1 in dualize_circle(circle):
    for h2 in dualize_circle(other):
        pts = branch_intersections(h1, h2)
        total += len(pts)
        print(f"  {h1.branch:5s} x {h2.branch:5s}: {len(pts)} crossing(s)")
print("common tangents:", classify_two_circles(circle, other), "crossings:", total,
      "distinct slopes from the resultant:", resultant_real_roots(upper, dualize_circle(other)[0]))

# one dimension up: planes are points, spheres are quadrics
plane = Plane3.from_graph(1, 2, 3)
sphere = Sphere3(Point3(0, 0, 0), Fraction(9, 6))
print("plane z = x + 2y + 3 vs sphere r^2 = 3/2: correspondence holds:", check_plane_sphere(plane, sphere))
