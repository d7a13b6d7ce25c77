"""Exact counting: distance censuses, incidences, K_{s,t} search, and the
quadruple-energy machinery for ``f(x, y) = (x - y)^2 / (1 + y^2)``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .kernel import (
    GeometryError, Line2, Line3, Plane3, Point2, Point3, PreconditionError,
    canonical_unique, direction_key, dist_sq_point_line2, dist_sq_point_line3,
    dist_sq_point_plane3, incident, sign, sub,
)


# -- bipartite graphs ---------------------------------------------------------

@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        edges = frozenset(self.edges)
        for i, j in edges:
            if not (0 <= i < self.left_count and 0 <= j < self.right_count):
                raise ValueError(f"edge {(i, j)} out of range")
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def left_neighbors(self) -> list[set[int]]:
        nbrs = [set() for _ in range(self.left_count)]
        for i, j in self.edges:
            nbrs[i].add(j)
        return nbrs

    def right_neighbors(self) -> list[set[int]]:
        nbrs = [set() for _ in range(self.right_count)]
        for i, j in self.edges:
            nbrs[j].add(i)
        return nbrs

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.right_count, self.left_count,
                              frozenset((j, i) for i, j in self.edges))


def relation_graph(left: Sequence, right: Sequence, pred) -> BipartiteGraph:
    edges = frozenset((i, j) for i, a in enumerate(left) for j, b in enumerate(right) if pred(a, b))
    return BipartiteGraph(len(left), len(right), edges)


def incidence_graph(points: Sequence, objects: Sequence) -> BipartiteGraph:
    return relation_graph(points, objects, incident)


def find_kst(g: BipartiteGraph, s: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A copy of K_{s,t} with ``s`` left and ``t`` right vertices, or ``None``.

    Enumerates ``s``-subsets of left vertices (restricted to degree >= t) and
    intersects their neighborhoods; when the right side is the smaller one the
    graph is transposed and the roles swapped.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if g.right_count < g.left_count:
        hit = find_kst(g.transpose(), t, s)
        return None if hit is None else (hit[1], hit[0])
    nbrs = g.left_neighbors()
    cand = [i for i in range(g.left_count) if len(nbrs[i]) >= t]
    for subset in combinations(cand, s):
        common = set.intersection(*(nbrs[i] for i in subset))
        if len(common) >= t:
            return subset, tuple(sorted(common)[:t])
    return None


# -- distance censuses --------------------------------------------------------

class DistanceCensus:
    """Distinct squared-distance keys and the number of keys seen from each source.

    The point-line fast path hands over reduced ``(num, den)`` pairs, which
    are turned into Fractions only when :attr:`keys` is read.
    """

    def __init__(self, keys=(), per_source=None, pairs=None):
        self._keys = None if pairs is not None else set(keys)
        self._pairs = pairs
        self.per_source = dict(per_source or {})

    @property
    def keys(self) -> set:
        if self._keys is None:
            self._keys = {Fraction(n, d) for n, d in self._pairs}
        return self._keys

    @property
    def size(self) -> int:
        return len(self._pairs) if self._keys is None else len(self._keys)

    def __repr__(self):
        return f"DistanceCensus(size={self.size}, sources={len(self.per_source)})"

    def max_per_source(self) -> int:
        return max(self.per_source.values(), default=0)

    def merge(self, other: "DistanceCensus") -> "DistanceCensus":
        return DistanceCensus(self.keys | other.keys, {**self.per_source, **other.per_source})


def _census(sources: Sequence, targets: Sequence, dist, exclude_zero: bool) -> DistanceCensus:
    if not sources or not targets:
        raise PreconditionError("both families must be nonempty")
    keys = set()
    per = {}
    for i, p in enumerate(sources):
        mine = {dist(p, t) for t in targets}
        if exclude_zero:
            mine.discard(0)
        per[i] = len(mine)
        keys |= mine
    return DistanceCensus(keys, per)


def distinct_point_line_distances(points: Sequence[Point2], lines: Sequence[Line2],
                                  exclude_zero: bool = False) -> DistanceCensus:
    """Census of squared point-line distances.

    Same values as mapping :func:`dist_sq_point_line2` over all pairs, but
    hashed as reduced ``(num, den)`` integer pairs, which is several times
    faster than hashing Fractions.
    """
    lines = canonical_unique(lines)
    if not points or not lines:
        raise PreconditionError("both families must be nonempty")
    coeffs = [(l.a, l.b, l.c, l.a * l.a + l.b * l.b) for l in lines]
    keys = set()
    per = {}
    for i, p in enumerate(points):
        xn, xd = p.x.numerator, p.x.denominator
        yn, yd = p.y.numerator, p.y.denominator
        dd = (xd * yd) ** 2
        mine = set()
        for a, b, c, n2 in coeffs:
            e = a * xn * yd + b * yn * xd + c * xd * yd
            num, den = e * e, dd * n2
            g = gcd(num, den)
            mine.add((num // g, den // g))
        if exclude_zero:
            mine.discard((0, 1))
        per[i] = len(mine)
        keys |= mine
    return DistanceCensus(per_source=per, pairs=keys)


def distinct_point_plane_distances(points: Sequence[Point3], planes: Sequence[Plane3],
                                   exclude_zero: bool = False) -> DistanceCensus:
    return _census(points, canonical_unique(planes), dist_sq_point_plane3, exclude_zero)


def distinct_point_line3_distances(points: Sequence[Point3], lines: Sequence[Line3],
                                   exclude_zero: bool = False) -> DistanceCensus:
    return _census(points, canonical_unique(lines), dist_sq_point_line3, exclude_zero)


def repeated_point_line_distances(points: Sequence[Point2], lines: Sequence[Line2], d2) -> int:
    """Number of point-line pairs at squared distance exactly ``d2``."""
    d2 = Fraction(d2)
    if d2 < 0:
        raise ValueError("d2 must be nonnegative")
    return sum(dist_sq_point_line2(p, l) == d2 for p in points for l in canonical_unique(lines))


def distinct_distances_at_least(points: Sequence[Point2], lines: Iterable[Line2], target: int) -> int:
    """Exact lower bound for the point-line census, stopping once ``target`` is reached.

    Distinct keys over any subset of pairs never exceed the full census, so
    consuming ``lines`` lazily (it may be a generator) and stopping early
    certifies ``census >= returned value``.  Returns the full census size when
    ``target`` is never reached.
    """
    keys = set()
    coords = [(p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator) for p in points]
    for l in lines:
        a, b, c = l.a, l.b, l.c
        n2 = a * a + b * b
        for xn, xd, yn, yd in coords:
            e = a * xn * yd + b * yn * xd + c * xd * yd
            num, den = e * e, (xd * yd) ** 2 * n2
            g = gcd(num, den)
            keys.add((num // g, den // g))
        if len(keys) >= target:
            break
    return len(keys)


def spanned_lines(points: Sequence[Point2]) -> list[Line2]:
    pts = canonical_unique(points)
    if len(pts) < 2:
        raise PreconditionError("need at least two distinct points")
    return canonical_unique(Line2.through(p, q) for p, q in combinations(pts, 2))


def spanned_distance_census(points: Sequence[Point2], exclude_zero: bool = False) -> DistanceCensus:
    """Distances between ``points`` and the lines they span (the triangle heights)."""
    pts = canonical_unique(points)
    lines = spanned_lines(pts)
    if len(lines) == 1:
        raise PreconditionError("points are collinear; spanned-line census undefined")
    return distinct_point_line_distances(pts, lines, exclude_zero)


def count_incidences(points: Sequence, objects: Sequence) -> int:
    return sum(incident(p, o) for p in points for o in objects)


def collinear_groups(points: Sequence, min_size: int = 2) -> list[tuple[object, list[int]]]:
    """All lines containing at least ``min_size`` of ``points`` (2D or 3D).

    Returns ``(line, indices)`` pairs with ``line`` a canonical ``Line2`` or
    ``Line3``.  Found by hashing the canonical direction from each point to
    every later point.
    """
    pts = list(points)
    through = Line2.through if pts and isinstance(pts[0], Point2) else Line3.through
    found: dict = {}
    for i, p in enumerate(pts):
        groups = defaultdict(list)
        for j in range(i + 1, len(pts)):
            if pts[j] != p:
                groups[direction_key(sub(tuple(pts[j]), tuple(p)))].append(j)
        for members in groups.values():
            if len(members) + 1 < min_size:
                continue
            line = through(p, pts[members[0]])
            found.setdefault(line, set()).update([i, *members])
    return [(line, sorted(idx)) for line, idx in found.items()]


def max_collinear(points: Sequence) -> int:
    pts = canonical_unique(points)
    if len(pts) <= 2:
        return len(pts)
    best = 2
    for i, p in enumerate(pts):
        counts = Counter(direction_key(sub(tuple(q), tuple(p))) for q in pts[i + 1:])
        if counts:
            best = max(best, 1 + max(counts.values()))
    return best


# -- quadruple energy ---------------------------------------------------------

def f_value(x, y) -> Fraction:
    """``(x - y)^2 / (1 + y^2)``."""
    x, y = Fraction(x), Fraction(y)
    return (x - y) ** 2 / (1 + y * y)


@dataclass
class QuadrupleStats:
    k: int
    f_values: set
    fiber_sizes: dict
    Q: int

    @property
    def distinct(self) -> int:
        return len(self.f_values)


def _check_w(W: Sequence) -> list[Fraction]:
    ws = [Fraction(w) for w in W]
    if any(w <= 0 for w in ws):
        raise GeometryError("W must contain positive numbers")
    if len(set(ws)) != len(ws):
        raise GeometryError("W must contain distinct numbers")
    return ws


def quadruple_stats(W: Sequence) -> QuadrupleStats:
    ws = _check_w(W)
    fibers = Counter(f_value(x, y) for x in ws for y in ws)
    return QuadrupleStats(len(ws), set(fibers), dict(fibers), sum(v * v for v in fibers.values()))


@dataclass(frozen=True)
class SymbolicQuadLine:
    """``z' - x_j = sign * A_ij (z - x_i)`` with ``A_ij^2 = (1 + x_j^2)/(1 + x_i^2)``."""

    i: int
    j: int
    sign: int

    def __post_init__(self):
        if self.i == self.j:
            raise GeometryError("symbolic line needs i != j")
        if self.sign not in (1, -1):
            raise ValueError(self.sign)

    def slope2(self, ws: Sequence[Fraction]) -> Fraction:
        xi, xj = ws[self.i], ws[self.j]
        return (1 + xj * xj) / (1 + xi * xi)


def build_quad_lines(W: Sequence) -> list[SymbolicQuadLine]:
    ws = _check_w(W)
    k = len(ws)
    return [SymbolicQuadLine(i, j, s) for i in range(k) for j in range(k) if i != j for s in (1, -1)]


def quad_line_incidence(q, line: SymbolicQuadLine, W: Sequence) -> bool:
    """Exact test of ``(z, z')`` on the line, via the squared equation plus signs."""
    ws = [Fraction(w) for w in W]
    z, zp = Fraction(q[0]), Fraction(q[1])
    xi, xj = ws[line.i], ws[line.j]
    lhs = (zp - xj) ** 2 * (1 + xi * xi)
    rhs = (z - xi) ** 2 * (1 + xj * xj)
    return lhs == rhs and sign(zp - xj) == line.sign * sign(z - xi)


def quad_lines_equal(l1: SymbolicQuadLine, l2: SymbolicQuadLine, W: Sequence) -> bool:
    """Whether two symbolic lines describe the same line of the plane (exact).

    Slopes agree iff the signs agree and ``A^2`` agree; with a common slope
    ``s*A`` the intercepts ``x_j - s*A*x_i`` agree iff
    ``x_j - x_l = s*A*(x_i - x_k)``, tested squared with a sign condition.
    """
    ws = [Fraction(w) for w in W]
    if l1.sign != l2.sign:
        return False
    A2 = l1.slope2(ws)
    if A2 != l2.slope2(ws):
        return False
    dj = ws[l1.j] - ws[l2.j]
    di = ws[l1.i] - ws[l2.i]
    return dj * dj == A2 * di * di and sign(dj) == l1.sign * sign(di)


def quad_lines_all_distinct(W: Sequence) -> bool:
    """Whether the ``2k(k-1)`` symbolic lines are pairwise distinct.

    Lines are bucketed by the exact pair ``(sign, A^2)`` (equal lines must
    share their slope) and compared pairwise inside each bucket.
    """
    ws = _check_w(W)
    buckets = defaultdict(list)
    for line in build_quad_lines(ws):
        buckets[(line.sign, line.slope2(ws))].append(line)
    return not any(quad_lines_equal(p, q, ws)
                   for group in buckets.values() for p, q in combinations(group, 2))


def quad_line_incidences(W: Sequence) -> int:
    """Total incidences between ``W x W`` and all symbolic lines."""
    ws = _check_w(W)
    lines = build_quad_lines(ws)
    return sum(quad_line_incidence((z, zp), l, ws) for l in lines for z in ws for zp in ws)


def diagonal_quadruples(W: Sequence) -> int:
    """Quadruples coming from the curves ``f(z, x_i) = f(z', x_i)``, i.e. ``|z - x_i| = |z' - x_i|``."""
    ws = _check_w(W)
    return sum(abs(z - xi) == abs(zp - xi) for xi in ws for z in ws for zp in ws)


def symbolic_line_correction(W: Sequence) -> int:
    """``Q - (incidences with symbolic lines)``.

    Each off-diagonal curve is ``L+ u L-`` and the two lines meet at
    ``(x_i, x_j)``, a point of ``W x W`` counted twice; the diagonal curves
    are not represented by symbolic lines.  Hence
    ``Q = incidences - k(k-1) + diagonal_quadruples``.
    """
    ws = _check_w(W)
    k = len(ws)
    return diagonal_quadruples(ws) - k * (k - 1)
