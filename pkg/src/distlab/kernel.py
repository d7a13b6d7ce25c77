"""Exact geometric kernel.

Every coordinate is a :class:`fractions.Fraction` (or a Python ``int``, which
behaves as a rational with denominator 1).  Radii are always stored squared so
that radii arising as point-line distances stay rational.

Lines and planes are kept in a canonical form: primitive integer coefficient
vectors whose first nonzero coefficient is positive.  Two descriptions of the
same locus therefore compare (and hash) equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

# A distance key is the reduced squared distance; equal distances <=> equal keys.
DistKey = Fraction


class GeometryError(ValueError):
    """Base error for invalid geometric input."""


class DegenerateError(GeometryError):
    """Raised on construction of a degenerate object (zero normal, r2 <= 0, ...)."""


class PreconditionError(GeometryError):
    """Raised when an operation's precondition does not hold."""


def Q(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or ``"num/den"`` string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted in exact paths")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise GeometryError(f"malformed rational {text!r}") from None
    if d == 0:
        raise GeometryError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(q: Number) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def primitive(coeffs: Sequence[Number]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    try:
        g = gcd(*coeffs)  # TypeError unless every entry is an int
    except TypeError:
        pass
    else:
        if g == 0:
            raise DegenerateError("zero coefficient vector")
        for v in coeffs:
            if v:
                if v < 0:
                    g = -g
                break
        return tuple(v // g for v in coeffs)
    qs = [Q(c) for c in coeffs]
    if all(c == 0 for c in qs):
        raise DegenerateError("zero coefficient vector")
    den = lcm(*(c.denominator for c in qs))
    ints = [int(c * den) for c in qs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _is_primitive(coeffs) -> bool:
    """Already canonical: plain ints, coprime, first nonzero entry positive."""
    for v in coeffs:
        if type(v) is not int:
            return False
    for v in coeffs:
        if v:
            return v > 0 and gcd(*coeffs) == 1
    return False


# -- vector helpers on tuples -------------------------------------------------

def dot(u: Sequence[Number], v: Sequence[Number]):
    return sum(a * b for a, b in zip(u, v))


def cross(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def sub(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def norm2(u: Sequence[Number]):
    return dot(u, u)


# -- 2D types -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Point2:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Q(self.x))
        object.__setattr__(self, "y", Q(self.y))

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True, order=True)
class Line2:
    """The line ``a*x + b*y + c = 0``, stored canonically."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise DegenerateError("line with zero normal")
        coeffs = (self.a, self.b, self.c)
        if _is_primitive(coeffs):
            return
        a, b, c = primitive(coeffs)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "Line2":
        if p == q:
            raise DegenerateError("line through a single point")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, -(a * p.x + b * p.y))

    @classmethod
    def from_slope(cls, slope: Number, intercept: Number) -> "Line2":
        """The non-vertical line ``y = slope*x + intercept``."""
        return cls(Q(slope), -1, Q(intercept))

    @property
    def normal(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def direction(self) -> tuple[int, int]:
        return (-self.b, self.a)

    def is_vertical(self) -> bool:
        return self.b == 0

    def evaluate(self, p: Point2) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c


@dataclass(frozen=True)
class Circle2:
    center: Point2
    r2: Fraction

    def __post_init__(self):
        if not isinstance(self.center, Point2):
            object.__setattr__(self, "center", Point2(*self.center))
        r2 = Q(self.r2)
        if r2 <= 0:
            raise DegenerateError(f"circle with squared radius {r2}")
        object.__setattr__(self, "r2", r2)

    def sort_key(self):
        return (self.center, self.r2)


# -- 3D types -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Point3:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Q(self.x))
        object.__setattr__(self, "y", Q(self.y))
        object.__setattr__(self, "z", Q(self.z))

    def __iter__(self):
        return iter((self.x, self.y, self.z))


@dataclass(frozen=True, order=True)
class Plane3:
    """The plane ``a*x + b*y + c*z + d = 0``, stored canonically."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise DegenerateError("plane with zero normal")
        coeffs = (self.a, self.b, self.c, self.d)
        if _is_primitive(coeffs):
            return
        a, b, c, d = primitive(coeffs)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_graph(cls, a: Number, b: Number, c: Number) -> "Plane3":
        """The non-vertical plane ``z = a*x + b*y + c``."""
        return cls(Q(a), Q(b), -1, Q(c))

    @classmethod
    def through_point(cls, normal: Sequence[Number], p: Point3) -> "Plane3":
        return cls(*normal, -dot(normal, tuple(p)))

    @property
    def normal(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def is_vertical(self) -> bool:
        return self.c == 0

    def evaluate(self, p: Point3) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c * p.z + self.d


@dataclass(frozen=True, order=True)
class Line3:
    """A line ``u + tau*v`` in space.

    Canonical form: ``v`` is a primitive integer vector with its first nonzero
    entry positive, and ``u`` is the point of the line closest to the origin
    (so ``u . v == 0``).
    """

    u: Point3
    v: tuple[int, int, int]

    def __post_init__(self):
        u = self.u if isinstance(self.u, Point3) else Point3(*self.u)
        v = primitive(self.v)
        uu = tuple(u)
        t = Fraction(dot(uu, v), norm2(v))
        anchor = Point3(*(a - t * b for a, b in zip(uu, v)))
        object.__setattr__(self, "u", anchor)
        object.__setattr__(self, "v", v)

    @classmethod
    def through(cls, p: Point3, q: Point3) -> "Line3":
        if p == q:
            raise DegenerateError("line through a single point")
        return cls(p, sub(tuple(q), tuple(p)))

    def point_at(self, tau: Number) -> Point3:
        return Point3(*(a + tau * b for a, b in zip(self.u, self.v)))


@dataclass(frozen=True)
class Sphere3:
    center: Point3
    r2: Fraction

    def __post_init__(self):
        if not isinstance(self.center, Point3):
            object.__setattr__(self, "center", Point3(*self.center))
        r2 = Q(self.r2)
        if r2 <= 0:
            raise DegenerateError(f"sphere with squared radius {r2}")
        object.__setattr__(self, "r2", r2)

    def sort_key(self):
        return (self.center, self.r2)


# -- distances ------------------------------------------------------------------

def dist_sq_point_line2(p: Point2, l: Line2) -> DistKey:
    # integer arithmetic on numerators/denominators: one gcd per call
    xn, xd = p.x.numerator, p.x.denominator
    yn, yd = p.y.numerator, p.y.denominator
    e = l.a * xn * yd + l.b * yn * xd + l.c * xd * yd
    return Fraction(e * e, (xd * yd) ** 2 * (l.a * l.a + l.b * l.b))


def dist_sq_point_point2(p: Point2, q: Point2) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def dist_sq_point_point3(p: Point3, q: Point3) -> Fraction:
    return norm2(sub(tuple(p), tuple(q)))


def dist_sq_point_plane3(p: Point3, pl: Plane3) -> DistKey:
    e = pl.evaluate(p)
    return e * e / norm2(pl.normal)


def dist_sq_point_line3(p: Point3, l: Line3) -> DistKey:
    w = sub(tuple(p), tuple(l.u))
    return Fraction(norm2(cross(w, l.v))) / norm2(l.v)


def dist_sq_line_line3(l1: Line3, l2: Line3) -> DistKey:
    n = cross(l1.v, l2.v)
    nn = norm2(n)
    if nn == 0:
        return dist_sq_point_line3(l2.u, l1)
    w = sub(tuple(l2.u), tuple(l1.u))
    e = dot(w, n)
    return Fraction(e * e) / nn


def closest_parameter_on_line(axis: Line3, other: Line3) -> Fraction | None:
    """Parameter ``tau`` of the point of ``axis`` closest to ``other``.

    For intersecting lines this is the intersection point.  Returns ``None``
    when the lines are parallel (no unique closest point).
    """
    n = cross(axis.v, other.v)
    nn = norm2(n)
    if nn == 0:
        return None
    w = sub(tuple(other.u), tuple(axis.u))
    return Fraction(dot(cross(w, other.v), n)) / nn


def cos2_between(v1: Sequence[Number], v2: Sequence[Number]) -> Fraction:
    """Squared cosine of the angle between two direction vectors."""
    d = dot(v1, v2)
    return Fraction(d * d) / (norm2(v1) * norm2(v2))


# -- incidence and tangency ---------------------------------------------------

def incident(p, obj) -> bool:
    """Exact membership of point ``p`` in a line, circle, plane, sphere, or 3D line."""
    if isinstance(obj, Line2):
        return obj.evaluate(p) == 0
    if isinstance(obj, Circle2):
        return dist_sq_point_point2(p, obj.center) == obj.r2
    if isinstance(obj, Plane3):
        return obj.evaluate(p) == 0
    if isinstance(obj, Sphere3):
        return dist_sq_point_point3(p, obj.center) == obj.r2
    if isinstance(obj, Line3):
        return dist_sq_point_line3(p, obj) == 0
    raise TypeError(f"unsupported object {type(obj).__name__}")


def tangent_line_circle(l: Line2, c: Circle2) -> bool:
    return dist_sq_point_line2(c.center, l) == c.r2


NONE, EXTERNAL, INTERNAL = "none", "external", "internal"


def tangent_circles(c1: Circle2, c2: Circle2) -> str:
    """Classify two circles as ``"external"``, ``"internal"`` or ``"none"``.

    With ``D = d^2 - r1^2 - r2^2`` the circles touch iff ``D^2 = 4 r1^2 r2^2``;
    the sign of ``D`` separates external from internal contact.
    """
    if c1 == c2:
        raise PreconditionError("identical circles")
    D = dist_sq_point_point2(c1.center, c2.center) - c1.r2 - c2.r2
    if D * D != 4 * c1.r2 * c2.r2:
        return NONE
    return EXTERNAL if D >= 0 else INTERNAL


def tangent_plane_sphere(pl: Plane3, s: Sphere3) -> bool:
    return dist_sq_point_plane3(s.center, pl) == s.r2


def tangent_line_sphere3(l: Line3, s: Sphere3) -> bool:
    return dist_sq_point_line3(s.center, l) == s.r2


def foot_point_line2(p: Point2, l: Line2) -> Point2:
    t = Fraction(l.evaluate(p)) / (l.a * l.a + l.b * l.b)
    return Point2(p.x - t * l.a, p.y - t * l.b)


def foot_point_plane3(p: Point3, pl: Plane3) -> Point3:
    t = Fraction(pl.evaluate(p)) / norm2(pl.normal)
    return Point3(*(x - t * n for x, n in zip(p, pl.normal)))


def foot_point_line3(p: Point3, l: Line3) -> Point3:
    t = Fraction(dot(sub(tuple(p), tuple(l.u)), l.v)) / norm2(l.v)
    return l.point_at(t)


def tangency_point_line_circle(l: Line2, c: Circle2) -> Point2:
    if not tangent_line_circle(l, c):
        raise PreconditionError("line is not tangent to circle")
    return foot_point_line2(c.center, l)


def tangency_point_circles(c1: Circle2, c2: Circle2) -> Point2:
    """The contact point of two tangent circles (always rational).

    At tangency ``r1*r2 = |D|/2`` is rational, hence so is ``r1/r2 = 2 r1^2/|D|``.
    """
    kind = tangent_circles(c1, c2)
    if kind == NONE:
        raise PreconditionError("circles are not tangent")
    D = dist_sq_point_point2(c1.center, c2.center) - c1.r2 - c2.r2
    rho = 2 * c1.r2 / abs(D)  # r1 / r2
    # contact = p1 + r1/(r1 +- r2) * (p2 - p1)
    t = rho / (rho + 1) if kind == EXTERNAL else rho / (rho - 1)
    p1, p2 = c1.center, c2.center
    return Point2(p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y))


def tangency_point_plane_sphere(pl: Plane3, s: Sphere3) -> Point3:
    if not tangent_plane_sphere(pl, s):
        raise PreconditionError("plane is not tangent to sphere")
    return foot_point_plane3(s.center, pl)


def tangency_point_line_sphere(l: Line3, s: Sphere3) -> Point3:
    if not tangent_line_sphere3(l, s):
        raise PreconditionError("line is not tangent to sphere")
    return foot_point_line3(s.center, l)


def line_circle_discriminant(l: Line2, c: Circle2) -> Fraction:
    """Discriminant of the quadratic cut out by ``l`` on ``c``.

    Parametrize ``l`` as ``p0 + s*dir``; substituting into the circle gives
    ``A s^2 + B s + C`` and this returns ``B^2 - 4AC``.
    """
    n2 = l.a * l.a + l.b * l.b
    p0 = Point2(Fraction(-l.a * l.c, n2), Fraction(-l.b * l.c, n2))
    dx, dy = l.direction
    wx, wy = p0.x - c.center.x, p0.y - c.center.y
    A = dx * dx + dy * dy
    B = 2 * (dx * wx + dy * wy)
    C = wx * wx + wy * wy - c.r2
    return B * B - 4 * A * C


def collinear2(p: Point2, q: Point2, r: Point2) -> bool:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x) == 0


def direction_key(v: Sequence[Number]) -> tuple[int, ...]:
    """Canonical primitive integer direction (sign-normalized)."""
    return primitive(v)


def canonical_unique(items: Iterable) -> list:
    """Deduplicate preserving first occurrence order."""
    seen = set()
    out = []
    for it in items:
        if it not in seen:
            seen.add(it)
            out.append(it)
    return out
