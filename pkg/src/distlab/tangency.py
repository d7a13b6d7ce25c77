"""Tangency censuses over whole families and the common-tangent solvers.

Counts are exact.  Solvers return floating-point objects, each re-checked
against its defining tangency constraints; classification counts (two
circles, three lines) are still decided by exact rational comparisons.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .census import BipartiteGraph
from .kernel import (
    Circle2, Line2, Line3, Plane3, PreconditionError, Sphere3, NONE,
    dist_sq_point_point2, tangency_point_circles, tangency_point_line_circle,
    tangency_point_line_sphere, tangency_point_plane_sphere, tangent_circles,
    tangent_line_circle, tangent_line_sphere3, tangent_plane_sphere,
)

LINEAR_TOL = 1e-9
APOLLONIUS_TOL = 1e-8


@dataclass
class TangencyCensus:
    pair_count: int
    point_count: int
    graph: BipartiteGraph
    triple_point: bool = False
    points: dict | None = None  # contact point -> indices touching there


@dataclass(frozen=True)
class NumericCircle:
    cx: float
    cy: float
    r: float
    residual: float


@dataclass(frozen=True)
class NumericLine:
    """``a x + b y + c = 0`` with ``a^2 + b^2 = 1``."""

    a: float
    b: float
    c: float
    residual: float


def _bipartite_census(left, right, tangent, contact) -> TangencyCensus:
    edges = set()
    points = defaultdict(set)
    for i, x in enumerate(left):
        for j, y in enumerate(right):
            if tangent(x, y):
                edges.add((i, j))
                points[contact(x, y)].add((i, j))
    g = BipartiteGraph(len(left), len(right), frozenset(edges))
    return TangencyCensus(len(edges), len(points), g, points=dict(points))


def count_line_circle_tangencies(lines: Sequence[Line2], circles: Sequence[Circle2]) -> TangencyCensus:
    return _bipartite_census(lines, circles, tangent_line_circle, tangency_point_line_circle)


def count_plane_sphere_tangencies(planes: Sequence[Plane3], spheres: Sequence[Sphere3]) -> TangencyCensus:
    return _bipartite_census(planes, spheres, tangent_plane_sphere, tangency_point_plane_sphere)


def count_line_sphere_tangencies(lines: Sequence[Line3], spheres: Sequence[Sphere3]) -> TangencyCensus:
    return _bipartite_census(lines, spheres, tangent_line_sphere3, tangency_point_line_sphere)


def count_circle_tangencies(circles: Sequence[Circle2]) -> TangencyCensus:
    """Tangent pairs and distinct contact points of a circle family.

    The graph is stored with both orientations of each edge over the same
    index set.  ``triple_point`` is set when some contact point carries three
    or more circles (these are then pairwise tangent there).
    """
    edges = set()
    points = defaultdict(set)
    for i, j in combinations(range(len(circles)), 2):
        if tangent_circles(circles[i], circles[j]) != NONE:
            edges.add((i, j))
            points[tangency_point_circles(circles[i], circles[j])].update((i, j))
    triple = any(len(members) >= 3 for members in points.values())
    sym = frozenset(edges | {(j, i) for i, j in edges})
    g = BipartiteGraph(len(circles), len(circles), sym)
    return TangencyCensus(len(edges), len(points), g, triple, dict(points))


# -- two circles: common tangent lines ---------------------------------------

def classify_two_circles(c1: Circle2, c2: Circle2) -> int:
    """Exact number of common tangent lines (0..4)."""
    if c1 == c2:
        raise PreconditionError("identical circles")
    d2 = dist_sq_point_point2(c1.center, c2.center)
    if d2 == 0:
        return 0
    kind = tangent_circles(c1, c2)
    if kind == "external":
        return 3
    if kind == "internal":
        return 1
    # separated iff d > r1 + r2 iff D > 2 r1 r2 with D > 0; nested iff D < -2 r1 r2
    D = d2 - c1.r2 - c2.r2
    if D > 0 and D * D > 4 * c1.r2 * c2.r2:
        return 4
    if D < 0 and D * D > 4 * c1.r2 * c2.r2:
        return 0
    return 2


def common_tangent_lines(c1: Circle2, c2: Circle2) -> tuple[int, list[NumericLine]]:
    """Exact count and numeric common tangent lines of two circles.

    A unit normal ``n`` with ``n.p1 - k = r1`` and ``n.p2 - k = e*r2`` satisfies
    ``n.w = e*r2 - r1`` for ``w = p2 - p1``; each ``e`` in ``{+1, -1}`` gives
    ``n = (delta*w +- h*w_perp)/|w|^2`` with ``h = sqrt(|w|^2 - delta^2)``.
    Whether ``h`` vanishes or is imaginary is read off the exact count.
    """
    count = classify_two_circles(c1, c2)
    if count == 0:
        return 0, []
    x1, y1 = float(c1.center.x), float(c1.center.y)
    x2, y2 = float(c2.center.x), float(c2.center.y)
    r1, r2 = math.sqrt(c1.r2), math.sqrt(c2.r2)
    wx, wy = x2 - x1, y2 - y1
    w2 = wx * wx + wy * wy
    # which families exist, and whether each is a double (h = 0) solution
    families = {4: [(1, False), (-1, False)], 3: [(1, False), (-1, True)],
                2: [(1, False)], 1: [(1, True)]}[count]
    lines = []
    for e, double in families:
        delta = e * r2 - r1
        h = 0.0 if double else math.sqrt(max(w2 - delta * delta, 0.0))
        for s in ((1,) if double else (1, -1)):
            nx = (delta * wx - s * h * wy) / w2
            ny = (delta * wy + s * h * wx) / w2
            norm = math.hypot(nx, ny)
            nx, ny = nx / norm, ny / norm
            k = nx * x1 + ny * y1 - r1
            c = -k
            res = max(abs(abs(nx * x1 + ny * y1 + c) - r1), abs(abs(nx * x2 + ny * y2 + c) - r2))
            lines.append(NumericLine(nx, ny, c, res))
    return count, lines


# -- three lines: tangent circles ---------------------------------------------

def classify_three_lines(l1: Line2, l2: Line2, l3: Line2) -> int:
    """Exact number of circles tangent to three distinct lines: 0, 2 or 4."""
    ls = (l1, l2, l3)
    if len(set(ls)) < 3:
        raise PreconditionError("lines must be distinct")
    par = [p.a * q.b - p.b * q.a == 0 for p, q in combinations(ls, 2)]
    if all(par):
        return 0
    if any(par):
        return 2
    det = (l1.a * (l2.b * l3.c - l2.c * l3.b)
           - l1.b * (l2.a * l3.c - l2.c * l3.a)
           + l1.c * (l2.a * l3.b - l2.b * l3.a))
    return 0 if det == 0 else 4


def tangent_circles_to_three_lines(l1: Line2, l2: Line2, l3: Line2) -> tuple[int, list[NumericCircle]]:
    """Exact count and numeric circles tangent to three lines.

    Signed distances ``(a_i x + b_i y + c_i)/|n_i| = s_i r`` give one linear
    system per sign pattern (``s_1 = +1`` fixes the global sign).
    """
    count = classify_three_lines(l1, l2, l3)
    if count == 0:
        return 0, []
    ls = (l1, l2, l3)
    norms = [math.hypot(l.a, l.b) for l in ls]
    scale = max(1.0, *(abs(float(l.c)) / n for l, n in zip(ls, norms)))
    out = []
    for s2, s3 in product((1, -1), repeat=2):
        signs = (1, s2, s3)
        M = np.array([[l.a / n, l.b / n, -s] for l, n, s in zip(ls, norms, signs)], dtype=float)
        rhs = np.array([-float(l.c) / n for l, n in zip(ls, norms)])
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        x, y, r = np.linalg.solve(M, rhs)
        r = abs(r)
        if r <= LINEAR_TOL * scale:
            continue
        res = max(abs(abs(l.a * x + l.b * y + float(l.c)) / n - r) for l, n in zip(ls, norms))
        if res <= LINEAR_TOL * scale:
            out.append(NumericCircle(float(x), float(y), float(r), float(res)))
    return count, out


# -- three circles: Apollonius ------------------------------------------------

def _common_contact(c1: Circle2, c2: Circle2, c3: Circle2) -> bool:
    pairs = [(c1, c2), (c1, c3), (c2, c3)]
    if any(tangent_circles(a, b) == NONE for a, b in pairs):
        return False
    pts = {tangency_point_circles(a, b) for a, b in pairs}
    return len(pts) == 1


def apollonius(c1: Circle2, c2: Circle2, c3: Circle2) -> list[NumericCircle]:
    """Circles tangent to three given circles (at most eight).

    For each sign pattern ``s``, ``(x - x_i)^2 + (y - y_i)^2 = (r + s_i r_i)^2``;
    differences of these equations are linear in ``(x, y, r)``, leaving a
    one-parameter line of candidates on which the first equation is a
    quadratic.  Patterns ``s`` and ``-s`` share that quadratic (with ``r``
    negated), so four patterns suffice; solutions need ``r > 0`` and pass a
    residual check.
    """
    cs = (c1, c2, c3)
    if len(set(cs)) < 3:
        raise PreconditionError("circles must be distinct")
    if _common_contact(*cs):
        raise PreconditionError("circles are mutually tangent at a common point")
    xs = [float(c.center.x) for c in cs]
    ys = [float(c.center.y) for c in cs]
    rs = [math.sqrt(c.r2) for c in cs]
    scale = max(1.0, *(abs(v) for v in xs + ys + rs))
    found: list[NumericCircle] = []
    for s2, s3 in product((1, -1), repeat=2):
        signs = (1, s2, s3)
        for x, y, r in _apollonius_pattern(xs, ys, rs, signs, scale):
            pattern = signs
            if r < 0:
                r, pattern = -r, tuple(-s for s in signs)
            if r <= APOLLONIUS_TOL * scale:
                continue
            res = max(abs(math.hypot(x - xi, y - yi) - abs(r + s * ri))
                      for xi, yi, ri, s in zip(xs, ys, rs, pattern))
            if res > APOLLONIUS_TOL * scale:
                continue
            if any(math.hypot(x - o.cx, y - o.cy) + abs(r - o.r) <= 1e-7 * scale for o in found):
                continue
            found.append(NumericCircle(x, y, r, res))
    assert len(found) <= 8, "more than eight Apollonius circles"
    return found


def _apollonius_pattern(xs, ys, rs, signs, scale):
    x1, y1, r1, s1 = xs[0], ys[0], rs[0], signs[0]
    rows, rhs = [], []
    for xi, yi, ri, si in zip(xs[1:], ys[1:], rs[1:], signs[1:]):
        # eq_1 - eq_i, linear in (x, y, r)
        rows.append([-2 * (x1 - xi), -2 * (y1 - yi), -2 * (s1 * r1 - si * ri)])
        rhs.append((r1 * r1 - ri * ri) - (x1 * x1 + y1 * y1 - xi * xi - yi * yi))
    M = np.array(rows) / scale
    b = np.array(rhs) / scale ** 2
    # unknowns scaled by 1/scale
    _, sv, vt = np.linalg.svd(M)
    if sv[-1] < 1e-12 * max(sv[0], 1e-300):
        return []
    p0 = np.linalg.lstsq(M, b, rcond=None)[0]
    nvec = vt[-1]
    if np.linalg.norm(M @ p0 - b) > 1e-9 * (1 + np.linalg.norm(b)):
        return []
    # (x - x1)^2 + (y - y1)^2 - (r + s1 r1)^2 = 0 along p0 + lam * nvec
    c0 = np.array([x1, y1, -s1 * r1]) / scale
    d = p0 - c0
    A = nvec[0] ** 2 + nvec[1] ** 2 - nvec[2] ** 2
    B = 2 * (d[0] * nvec[0] + d[1] * nvec[1] - d[2] * nvec[2])
    C = d[0] ** 2 + d[1] ** 2 - d[2] ** 2
    if abs(A) < 1e-14:
        lams = [] if abs(B) < 1e-14 else [-C / B]
    else:
        disc = B * B - 4 * A * C
        if disc < -1e-12:
            return []
        sq = math.sqrt(max(disc, 0.0))
        lams = [(-B - sq) / (2 * A), (-B + sq) / (2 * A)]
    out = []
    for lam in lams:
        x, y, r = (p0 + lam * nvec) * scale
        out.append((float(x), float(y), float(r)))
    return out
