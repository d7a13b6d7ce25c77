"""Duality transforms turning tangency questions into incidence questions.

* non-vertical line ``y = a x + b``  ->  dual point ``(a, b)``;
  circle  ->  the two branches of the hyperbola ``(p2 - p1 a - b)^2 = r^2 (1 + a^2)``.
* non-vertical plane ``z = a x + b y + c``  ->  point ``(a, b, c)``;
  sphere  ->  the quadric ``(z - a x - b y - c)^2 = r^2 (1 + a^2 + b^2)``.
* circle ``(a, b, r)``  ->  lift point ``(a, b, r)`` and the two cones
  ``(x - a)^2 + (y - b)^2 = (z +- r)^2``.
* sphere  ->  ``(a, b, c, r^2)`` in R^4; line  ->  paraboloid
  ``r^2 |v|^2 = |((a, b, c) - u) x v|^2``.

All predicates are exact and use only squared radii.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .kernel import (
    Circle2, GeometryError, Line2, Line3, Plane3, Point3, PreconditionError,
    Sphere3, cross, dist_sq_point_point2, norm2, sign, sub,
    tangent_circles, tangent_line_circle, tangent_line_sphere3, tangent_plane_sphere, NONE,
)
from .scene import Scene, map_scene
from .transforms import Isometry2, Isometry3, pythagorean_rotations

UPPER, LOWER = "upper", "lower"
PLUS, MINUS = 1, -1


class VerticalError(GeometryError):
    """A vertical line/plane cannot be dualized; rotate the scene first (see rotate_scene)."""


@dataclass(frozen=True)
class DualPoint2:
    a: Fraction
    b: Fraction


@dataclass(frozen=True)
class DualHyperbola:
    """One branch of the dual curve of a circle.

    ``LOWER`` holds the lines tangent from below (circle center above the
    line, ``p2 - p1 a - b > 0``); ``UPPER`` the lines tangent from above.
    """

    p1: Fraction
    p2: Fraction
    r2: Fraction
    branch: str

    def __post_init__(self):
        if self.r2 <= 0:
            raise GeometryError("dual hyperbola needs r2 > 0")
        if self.branch not in (UPPER, LOWER):
            raise ValueError(self.branch)

    def residual(self, a, b):
        e = self.p2 - self.p1 * a - b
        return e * e - self.r2 * (1 + a * a)


@dataclass(frozen=True)
class ConeLift:
    """The cone ``(x - a)^2 + (y - b)^2 = (z + sign*r)^2`` with ``r^2 = r2``."""

    a: Fraction
    b: Fraction
    r2: Fraction
    sign: int

    def __post_init__(self):
        if self.r2 <= 0:
            raise GeometryError("cone lift needs r2 > 0")
        if self.sign not in (PLUS, MINUS):
            raise ValueError(self.sign)


@dataclass(frozen=True)
class LiftedCenter:
    """The point ``(x, y, sqrt(z2))``: a circle's lift, kept exact through ``z2``."""

    x: Fraction
    y: Fraction
    z2: Fraction


@dataclass(frozen=True)
class DualQuadric3:
    x: Fraction
    y: Fraction
    z: Fraction
    r2: Fraction

    def __post_init__(self):
        if self.r2 <= 0:
            raise GeometryError("dual quadric needs r2 > 0")


@dataclass(frozen=True)
class SpherePoint4:
    a: Fraction
    b: Fraction
    c: Fraction
    r2: Fraction


@dataclass(frozen=True)
class LineParaboloid4:
    """``r^2 * |v|^2 = |((a, b, c) - u) x v|^2`` for the line ``u + t v``."""

    u: Point3
    v: tuple[int, int, int]

    @property
    def v2(self) -> int:
        return norm2(self.v)


# -- lines and circles --------------------------------------------------------

def dualize_line(l: Line2) -> DualPoint2:
    if l.is_vertical():
        raise VerticalError(f"vertical line {l} has no dual point; apply rotate_scene first")
    return DualPoint2(Fraction(-l.a, l.b), Fraction(-l.c, l.b))


def dualize_circle(c: Circle2) -> tuple[DualHyperbola, DualHyperbola]:
    """Both branches ``(upper, lower)`` of the dual hyperbola of ``c``."""
    p = c.center
    return DualHyperbola(p.x, p.y, c.r2, UPPER), DualHyperbola(p.x, p.y, c.r2, LOWER)


def on_dual_hyperbola(q: DualPoint2, h: DualHyperbola) -> bool:
    e = h.p2 - h.p1 * q.a - q.b
    if e * e != h.r2 * (1 + q.a * q.a):
        return False
    return (e > 0) == (h.branch == LOWER)


# -- planes and spheres -------------------------------------------------------

def dualize_plane(pl: Plane3) -> Point3:
    if pl.is_vertical():
        raise VerticalError(f"vertical plane {pl} has no dual point; apply rotate_scene first")
    c = pl.c
    return Point3(Fraction(-pl.a, c), Fraction(-pl.b, c), Fraction(-pl.d, c))


def dualize_sphere(s: Sphere3) -> DualQuadric3:
    return DualQuadric3(s.center.x, s.center.y, s.center.z, s.r2)


def on_dual_quadric(p: Point3, q: DualQuadric3) -> bool:
    a, b, c = p.x, p.y, p.z
    e = q.z - a * q.x - b * q.y - c
    return e * e == q.r2 * (1 + a * a + b * b)


# -- cone lifts of circles ----------------------------------------------------

def lift_circle_to_cones(c: Circle2) -> tuple[ConeLift, ConeLift]:
    """``(sigma_plus, sigma_minus)`` of ``c``."""
    p = c.center
    return ConeLift(p.x, p.y, c.r2, PLUS), ConeLift(p.x, p.y, c.r2, MINUS)


def lift_point(c: Circle2) -> LiftedCenter:
    return LiftedCenter(c.center.x, c.center.y, c.r2)


def point_on_cone(p: Point3 | LiftedCenter, k: ConeLift) -> bool:
    """Exact test of ``(x-a)^2 + (y-b)^2 = (z + sign*r)^2``.

    Expanding, ``D := d^2 - z^2 - r^2 = 2*sign*z*r``; this holds iff
    ``D^2 = 4 z^2 r^2`` and ``sign(D)`` agrees with ``sign * sign(z)``
    (``D = 0`` is then forced whenever ``z = 0``).
    """
    if isinstance(p, LiftedCenter):
        x, y, z2, zsign = p.x, p.y, p.z2, 1 if p.z2 > 0 else 0
    else:
        x, y, z2, zsign = p.x, p.y, p.z * p.z, sign(p.z)
    dx, dy = x - k.a, y - k.b
    D = dx * dx + dy * dy - z2 - k.r2
    if D * D != 4 * z2 * k.r2:
        return False
    return sign(D) == k.sign * zsign


def cone_mutual_incidence(c1: Circle2, c2: Circle2) -> bool:
    """Lift of each circle lies on a cone of the other."""
    p1, p2 = lift_point(c1), lift_point(c2)
    return (any(point_on_cone(p1, k) for k in lift_circle_to_cones(c2))
            and any(point_on_cone(p2, k) for k in lift_circle_to_cones(c1)))


# -- spheres and lines in R^4 -------------------------------------------------

def lift_sphere4(s: Sphere3) -> SpherePoint4:
    return SpherePoint4(s.center.x, s.center.y, s.center.z, s.r2)


def line_to_paraboloid(l: Line3) -> LineParaboloid4:
    return LineParaboloid4(l.u, l.v)


def on_paraboloid(p: SpherePoint4, v: LineParaboloid4) -> bool:
    w = sub((p.a, p.b, p.c), tuple(v.u))
    return p.r2 * v.v2 == norm2(cross(w, v.v))


# -- rotations ----------------------------------------------------------------

def _quaternions():
    n = 1
    while True:
        for q in product(range(-n, n + 1), repeat=4):
            if max(map(abs, q)) == n and q[0] > 0:
                yield q
        n += 1


def rotate_scene(scene: Scene, max_tries: int = 10_000) -> Scene:
    """Apply rational rotations leaving no vertical 2D line and no vertical plane.

    The 2D part is rotated by the first Pythagorean rotation ``(c, s)`` under
    which no line of the scene becomes vertical; the 3D part by the first
    integer-quaternion rotation under which no plane becomes vertical.  Both
    are exact isometries, so all squared distances are preserved.
    """
    rot2 = None
    for i, (c, s) in enumerate(pythagorean_rotations()):
        iso = Isometry2(c, s)
        if not any(iso.line(l).is_vertical() for l in scene.lines2):
            rot2 = iso
            break
        if i > max_tries:
            raise RuntimeError("no suitable 2D rotation found")
    rot3 = None
    for i, q in enumerate(_quaternions()):
        if q == (1, 0, 0, 0):
            continue
        iso3 = Isometry3.from_quaternion(q)
        if not any(iso3.plane(p).is_vertical() for p in scene.planes3):
            rot3 = iso3
            break
        if i > max_tries:
            raise RuntimeError("no suitable 3D rotation found")
    return map_scene(
        scene,
        points2=rot2.point, lines2=rot2.line, circles2=rot2.circle,
        points3=rot3.point, planes3=rot3.plane, lines3=rot3.line, spheres3=rot3.sphere,
    )


# -- correspondence checks ----------------------------------------------------

def check_line_circle(l: Line2, c: Circle2) -> bool:
    """Tangency agrees with dual incidence, on exactly one branch."""
    hits = sum(on_dual_hyperbola(dualize_line(l), h) for h in dualize_circle(c))
    return hits == int(tangent_line_circle(l, c))


def check_plane_sphere(pl: Plane3, s: Sphere3) -> bool:
    return tangent_plane_sphere(pl, s) == on_dual_quadric(dualize_plane(pl), dualize_sphere(s))


def check_circle_circle(c1: Circle2, c2: Circle2) -> bool:
    return (tangent_circles(c1, c2) != NONE) == cone_mutual_incidence(c1, c2)


def check_line_sphere(l: Line3, s: Sphere3) -> bool:
    return tangent_line_sphere3(l, s) == on_paraboloid(lift_sphere4(s), line_to_paraboloid(l))


def correspondence_violations(scene: Scene) -> dict[str, int]:
    """Count primal/dual disagreements for every applicable family pairing.

    The scene is rotated first if any 2D line or plane is vertical.
    """
    if any(l.is_vertical() for l in scene.lines2) or any(p.is_vertical() for p in scene.planes3):
        scene = rotate_scene(scene)
    out = {}
    if scene.lines2 and scene.circles2:
        out["line-circle"] = sum(not check_line_circle(l, c)
                                 for l in scene.lines2 for c in scene.circles2)
    if scene.planes3 and scene.spheres3:
        out["plane-sphere"] = sum(not check_plane_sphere(p, s)
                                  for p in scene.planes3 for s in scene.spheres3)
    if len(scene.circles2) >= 2:
        cs = scene.circles2
        out["circle-circle"] = sum(not check_circle_circle(cs[i], cs[j])
                                   for i in range(len(cs)) for j in range(i + 1, len(cs)))
    if scene.lines3 and scene.spheres3:
        out["line-sphere"] = sum(not check_line_sphere(l, s)
                                 for l in scene.lines3 for s in scene.spheres3)
    return out


# -- pseudo-parabola check ----------------------------------------------------

def branch_resultant(h1: DualHyperbola, h2: DualHyperbola) -> list[Fraction]:
    """Coefficients (highest degree first) of the resultant in ``a`` of the two
    full hyperbola equations, eliminating ``b``.

    With ``g = (p2' - p1' a) - (p2 - p1 a)`` and ``t2 = 1 + a^2`` this is
    ``(g^2 + (R1 - R2) t2)^2 - 4 R1 g^2 t2``; its real roots are the slopes of
    the non-vertical common tangents of the two circles.
    """
    # polynomials as coefficient lists, lowest degree first
    g = [h2.p2 - h1.p2, -(h2.p1 - h1.p1)]
    t2 = [Fraction(1), Fraction(0), Fraction(1)]
    g2 = _pmul(g, g)
    inner = _padd(g2, _pscale(t2, h1.r2 - h2.r2))
    res = _padd(_pmul(inner, inner), _pscale(_pmul(g2, t2), -4 * h1.r2))
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return list(reversed(res))


def resultant_real_roots(h1: DualHyperbola, h2: DualHyperbola) -> int:
    """Number of distinct real roots of :func:`branch_resultant` (exact Sturm count)."""
    import sympy

    coeffs = branch_resultant(h1, h2)
    if all(c == 0 for c in coeffs):
        raise PreconditionError("hyperbolas share a component")
    a = sympy.Symbol("a")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], a)
    if poly.degree() <= 0:
        return 0
    return poly.sqf_part().count_roots()


def branch_intersections(h1: DualHyperbola, h2: DualHyperbola, dps: int = 60) -> list[tuple]:
    """Intersection points ``(a, b)`` of two hyperbola branches (mpmath values).

    On branch ``h`` one has ``b = p2 - p1 a - eps*r*sqrt(1 + a^2)`` with
    ``eps = +1`` for ``LOWER``; equating two branches gives
    ``u(a) = K sqrt(1 + a^2)`` with ``u`` linear and ``K = eps1 r1 - eps2 r2``,
    i.e. a quadratic in ``a`` plus the sign condition ``sign u = sign K``.
    At most two solutions exist unless the branches coincide.
    """
    import mpmath

    with mpmath.workdps(dps):
        eps1 = 1 if h1.branch == LOWER else -1
        eps2 = 1 if h2.branch == LOWER else -1
        r1, r2 = mpmath.sqrt(_mpq(h1.r2)), mpmath.sqrt(_mpq(h2.r2))
        K = eps1 * r1 - eps2 * r2
        alpha = _mpq(h1.p2 - h2.p2)
        beta = _mpq(h1.p1 - h2.p1)
        # (alpha - beta a)^2 = K^2 (1 + a^2)
        A = beta * beta - K * K
        B = -2 * alpha * beta
        C = alpha * alpha - K * K
        tol = mpmath.mpf(10) ** (-(dps // 2))
        if abs(A) < tol and abs(B) < tol and abs(C) < tol:
            raise PreconditionError("branches coincide")
        if abs(A) < tol:
            roots = [] if abs(B) < tol else [-C / B]
        else:
            disc = B * B - 4 * A * C
            if disc < -tol:
                roots = []
            elif abs(disc) <= tol:
                roots = [-B / (2 * A)]
            else:
                sq = mpmath.sqrt(disc)
                roots = [(-B - sq) / (2 * A), (-B + sq) / (2 * A)]
        out = []
        for a in roots:
            u = alpha - beta * a
            t = mpmath.sqrt(1 + a * a)
            if abs(u - K * t) > tol * (1 + abs(K) * t):
                continue
            b = _mpq(h1.p2) - _mpq(h1.p1) * a - eps1 * r1 * t
            out.append((a, b))
        return out


def _mpq(q: Fraction):
    import mpmath

    return mpmath.mpf(q.numerator) / q.denominator


def _padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _pscale(p, k):
    return [k * x for x in p]


def dist_sq_preserved(before: Scene, after: Scene) -> bool:
    """All pairwise squared point distances agree (same point order)."""
    ps, qs = before.points2, after.points2
    return all(dist_sq_point_point2(ps[i], ps[j]) == dist_sq_point_point2(qs[i], qs[j])
               for i in range(len(ps)) for j in range(i + 1, len(ps)))
