"""
Counting tangencies exactly
---------------------------

Four mutually tangent circles touch at six points. Circles sharing one
contact point are flagged. Grid constructions with Pythagorean slopes turn
incidences into tangencies one for one, and the numeric solvers stay
within their caps of 4, 4 and 8 solutions.
"""
from fractions import Fraction

from distlab.configurations import GeneratorSpec, generate
from distlab.kernel import Circle2, Line2, Point2
from distlab.tangency import (
    apollonius, common_tangent_lines, count_circle_tangencies, count_line_circle_tangencies,
    tangent_circles_to_three_lines,
)

descartes = [Circle2(Point2(0, 0), 4), Circle2(Point2(-1, 0), 1), Circle2(Point2(1, 0), 1),
             Circle2(Point2(0, Fraction(4, 3)), Fraction(4, 9))]
c = count_circle_tangencies(descartes)
print(f"Descartes: {c.pair_count} pairs, {c.point_count} points, triple={c.triple_point}")
for p, members in sorted(c.points.items()):
    print(f"  ({p.x}, {p.y}) <- circles {sorted(members)}")

pencil = [Circle2(Point2(0, r), r * r) for r in (1, 2, 3)]
c = count_circle_tangencies(pencil)
print(f"pencil: {c.pair_count} pairs, {c.point_count} point, triple={c.triple_point}")

for r, s, t in [(2, 2, 2), (3, 3, 2), (5, 4, 3)]:
    sc = generate(GeneratorSpec("PythagoreanTangency", {"r": r, "s": s, "t": t}))
    got = count_line_circle_tangencies(sc.lines2, sc.circles2).pair_count
    print(f"PythagoreanTangency r={r} s={s} t={t}: {got} tangencies, source incidences {sc.metadata['source_incidences']}")

count, lines = common_tangent_lines(Circle2(Point2(0, 0), 1), Circle2(Point2(5, 0), 4))
print("common tangents:", count, ["%.4fx + %.4fy + %.4f" % (l.a, l.b, l.c) for l in lines])
count, circles = tangent_circles_to_three_lines(Line2(1, 0, 0), Line2(0, 1, 0), Line2(1, 1, -1))
print("incircle and excircles of x=0, y=0, x+y=1:", [(round(k.cx, 4), round(k.cy, 4), round(k.r, 4)) for k in circles])
sols = apollonius(Circle2(Point2(0, 0), 1), Circle2(Point2(10, 0), 1), Circle2(Point2(5, 8), 1))
print(f"Apollonius: {len(sols)} circles, worst residual {max(s.residual for s in sols):.1e}")
