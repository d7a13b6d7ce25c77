"""Hand-built scenes and seeded instance streams shared by the test modules."""
import random
from fractions import Fraction

import sympy

from distlab.kernel import Circle2, Line2, Line3, Plane3, Point2, Point3

TRIPLES = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)]


def descartes_circles():
    return [Circle2(Point2(0, 0), 4), Circle2(Point2(-1, 0), 1), Circle2(Point2(1, 0), 1),
            Circle2(Point2(0, Fraction(4, 3)), Fraction(4, 9))]


# contact points worked out by hand: p1 + r1/(r1 +- r2) (p2 - p1) for each pair
DESCARTES_POINTS = {
    Point2(-2, 0), Point2(2, 0), Point2(0, 0), Point2(0, 2),
    Point2(Fraction(-2, 5), Fraction(4, 5)), Point2(Fraction(2, 5), Fraction(4, 5)),
}


def pencil_circles():
    """Three circles tangent to ``y = 0`` at the origin."""
    return [Circle2(Point2(0, r), r * r) for r in (1, 2, 3)]


# -- detector fixtures --------------------------------------------------------

AXIS_POINTS = [Point3(0, 0, 1), Point3(0, 0, 2), Point3(0, 0, 3)]


def cone_planes():
    return [Plane3(3, 4, -5, 0), Plane3(1, 0, -1, 0), Plane3(0, 1, -1, 0)]


def cylinder_planes():
    return [Plane3(1, 0, 0, -1), Plane3(0, 1, 0, -1), Plane3(1, 0, 0, 1)]


def hyperboloid_lines():
    return [Line3(Point3(1, 0, 0), (0, 1, 1)), Line3(Point3(-1, 0, 0), (0, -1, 1)),
            Line3(Point3(0, 1, 0), (-1, 0, 1)), Line3(Point3(0, -1, 0), (1, 0, 1))]


def cylinder_lines():
    return [Line3(Point3(x, y, 0), (0, 0, 1)) for x, y in ((1, 0), (-1, 0), (0, 1), (0, -1))]


def cone_lines():
    return [Line3(Point3(0, 0, 0), (x, y, 1)) for x, y in ((1, 0), (0, 1), (-1, 0), (0, -1))]


# -- solver instance streams --------------------------------------------------

def _q(rng, h):
    return Fraction(rng.randint(-h, h), rng.randint(1, 4))


def two_circle_instances(seed, count):
    """Random circle pairs, a third of them built to touch (rational radii, Pythagorean offsets)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = Point2(_q(rng, 10), _q(rng, 10))
        r1, r2 = Fraction(rng.randint(1, 9), rng.randint(1, 3)), Fraction(rng.randint(1, 9), rng.randint(1, 3))
        mode = rng.randrange(6)
        if mode in (0, 1):
            a, b, c = rng.choice(TRIPLES)
            d = r1 + r2 if mode == 0 else abs(r1 - r2)
            q = Point2(p.x + d * a / c, p.y + d * b / c)
        elif mode == 2:
            q = p
        else:
            q = Point2(_q(rng, 10), _q(rng, 10))
        c1, c2 = Circle2(p, r1 * r1), Circle2(q, r2 * r2 if mode != 5 else Fraction(rng.randint(1, 50), 3))
        if c1 != c2:
            out.append((c1, c2))
    return out


def three_line_instances(seed, count):
    """Distinct lines with tiny coefficients, so parallel and concurrent triples are common."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ls = []
        for _ in range(3):
            a, b = 0, 0
            while a == 0 and b == 0:
                a, b = rng.randint(-2, 2), rng.randint(-2, 2)
            ls.append(Line2(a, b, rng.randint(-3, 3)))
        if len(set(ls)) == 3:
            out.append(tuple(ls))
    return out


def three_circle_instances(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        cs = tuple(Circle2(Point2(_q(rng, 12), _q(rng, 12)), Fraction(rng.randint(1, 40), rng.randint(1, 4)))
                   for _ in range(3))
        if len(set(cs)) == 3:
            out.append(cs)
    return out


# -- exact reference classifications -----------------------------------------

def _sign(expr):
    """Exact sign of a sum of square roots of rationals.

    Such sums are auto-normalised by sympy to combinations of distinct
    square-free radicals, which are linearly independent, so zero is
    recognised syntactically; nonzero values are then safely evaluated.
    """
    expr = sympy.expand(expr)
    if expr == 0:
        return 0
    return 1 if expr.evalf(60) > 0 else -1


def common_tangent_count_reference(c1, c2):
    R = lambda q: sympy.Rational(q.numerator, q.denominator)  # noqa: E731
    d2 = (c1.center.x - c2.center.x) ** 2 + (c1.center.y - c2.center.y) ** 2
    if d2 == 0:
        return 0
    d, r1, r2 = sympy.sqrt(R(d2)), sympy.sqrt(R(c1.r2)), sympy.sqrt(R(c2.r2))
    outer = _sign(d - r1 - r2)
    if outer > 0:
        return 4
    if outer == 0:
        return 3
    inner = _sign(d - abs(r1 - r2))
    return {1: 2, 0: 1, -1: 0}[inner]


def three_line_count_reference(l1, l2, l3):
    rows = [[l.a, l.b] for l in (l1, l2, l3)]
    par = [sympy.Matrix([rows[i], rows[j]]).rank() == 1 for i, j in ((0, 1), (0, 2), (1, 2))]
    if all(par):
        return 0
    if any(par):
        return 2
    full = sympy.Matrix([[l.a, l.b, l.c] for l in (l1, l2, l3)])
    return 0 if full.rank() < 3 else 4
