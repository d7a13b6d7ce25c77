"""Rational rigid motions of the plane and of space.

Rotations with rational entries come from Pythagorean triples in 2D and from
integer quaternions in 3D, so all images stay exact and every squared
distance is preserved exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator

from .kernel import (
    Circle2, Line2, Line3, Plane3, Point2, Point3, Sphere3, Q, dot,
)


def primitive_triples(limit: int | None = None) -> Iterator[tuple[int, int, int]]:
    """Primitive Pythagorean triples ``(a, b, c)`` with ``a < b``, by increasing ``c``."""
    c = 5
    produced = 0
    while limit is None or produced < limit:
        found = []
        for a in range(3, c):
            b2 = c * c - a * a
            b = isqrt(b2)
            if b * b == b2 and a < b and gcd(a, b) == 1:
                found.append((a, b, c))
        for t in found:
            yield t
            produced += 1
            if limit is not None and produced >= limit:
                return
        c += 1


def pythagorean_rotations() -> Iterator[tuple[Fraction, Fraction]]:
    """Rational ``(cos, sin)`` pairs of nontrivial rotations."""
    for a, b, c in primitive_triples():
        yield Fraction(a, c), Fraction(b, c)
        yield Fraction(b, c), Fraction(a, c)


@dataclass(frozen=True)
class Isometry2:
    """``x -> R x + t`` with ``R = [[c, -s], [s, c]]`` (optionally followed by a reflection)."""

    c: Fraction = Fraction(1)
    s: Fraction = Fraction(0)
    tx: Fraction = Fraction(0)
    ty: Fraction = Fraction(0)

    def _rot(self, x, y):
        return self.c * x - self.s * y, self.s * x + self.c * y

    def point(self, p: Point2) -> Point2:
        x, y = self._rot(p.x, p.y)
        return Point2(x + self.tx, y + self.ty)

    def line(self, l: Line2) -> Line2:
        na, nb = self._rot(l.a, l.b)
        return Line2(na, nb, l.c - (na * self.tx + nb * self.ty))

    def circle(self, c: Circle2) -> Circle2:
        return Circle2(self.point(c.center), c.r2)


def _quaternion_matrix(a: int, b: int, c: int, d: int):
    n = a * a + b * b + c * c + d * d
    m = [
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ]
    return tuple(tuple(Fraction(v, n) for v in row) for row in m)


@dataclass(frozen=True)
class Isometry3:
    """``x -> R x + t`` with ``R`` a rational rotation matrix."""

    R: tuple = ((Fraction(1), Fraction(0), Fraction(0)),
                (Fraction(0), Fraction(1), Fraction(0)),
                (Fraction(0), Fraction(0), Fraction(1)))
    t: tuple = (Fraction(0), Fraction(0), Fraction(0))

    @classmethod
    def from_quaternion(cls, q: tuple[int, int, int, int], t=(0, 0, 0)) -> "Isometry3":
        if not any(q):
            raise ValueError("zero quaternion")
        return cls(_quaternion_matrix(*q), tuple(Q(v) for v in t))

    def _rot(self, v):
        return tuple(dot(row, v) for row in self.R)

    def point(self, p: Point3) -> Point3:
        return Point3(*(a + b for a, b in zip(self._rot(tuple(p)), self.t)))

    def plane(self, pl: Plane3) -> Plane3:
        n = self._rot(pl.normal)
        return Plane3(*n, pl.d - dot(n, self.t))

    def line(self, l: Line3) -> Line3:
        return Line3(self.point(l.u), self._rot(l.v))

    def sphere(self, s: Sphere3) -> Sphere3:
        return Sphere3(self.point(s.center), s.r2)


def random_isometry2(rng: random.Random, height: int = 20) -> Isometry2:
    a, b, c = _random_triple(rng)
    cs, sn = Fraction(a, c), Fraction(b, c)
    if rng.random() < 0.5:
        cs, sn = sn, cs
    cs *= rng.choice((1, -1))
    sn *= rng.choice((1, -1))
    return Isometry2(cs, sn, _rand_q(rng, height), _rand_q(rng, height))


def random_isometry3(rng: random.Random, height: int = 20) -> Isometry3:
    q = (0, 0, 0, 0)
    while not any(q):
        q = tuple(rng.randint(-4, 4) for _ in range(4))
    return Isometry3.from_quaternion(q, tuple(_rand_q(rng, height) for _ in range(3)))


def _random_triple(rng: random.Random) -> tuple[int, int, int]:
    m = rng.randint(2, 9)
    n = rng.randint(1, m - 1)
    while gcd(m, n) != 1 or (m - n) % 2 == 0:
        m = rng.randint(2, 9)
        n = rng.randint(1, m - 1)
    return m * m - n * n, 2 * m * n, m * m + n * n


def _rand_q(rng: random.Random, height: int) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))
