"""
Quadruple energy of f(x, y) = (x - y)^2 / (1 + y^2)
----------------------------------------------------

f(x, y) is the squared distance from (x, 0) to the line through (y, 0)
and (0, 1). Q counts quadruples with f(x, y) = f(x', y'); by
Cauchy-Schwarz, Q * |f(W)| >= k^4, so a small Q forces many distinct values.
Each level curve is a pair of lines, and the bookkeeping below shows how
the line incidences add up to Q.
"""
import random
from fractions import Fraction

from distlab.census import (
    diagonal_quadruples, quad_line_incidences, quad_lines_all_distinct, quadruple_stats,
)

W = [1, 2, 3]
st = quadruple_stats(W)
print(f"W={W}: |f(W)|={st.distinct}, Q={st.Q}, fibers={sorted(st.fiber_sizes.values(), reverse=True)}")
k = len(W)
print(f"line incidences {quad_line_incidences(W)} - k(k-1) {k * (k - 1)} "
      f"+ diagonal {diagonal_quadruples(W)} = {quad_line_incidences(W) - k * (k - 1) + diagonal_quadruples(W)}")

rng = random.Random(4)
for size in (5, 10, 20, 40):
    W = sorted({Fraction(rng.randint(1, 500), rng.randint(1, 5)) for _ in range(size)})
    st = quadruple_stats(W)
    print(f"k={st.k:2d}: Q={st.Q:6d} |f|={st.distinct:5d}  Q|f|/k^4={st.Q * st.distinct / st.k ** 4:7.2f}  "
          f"lines distinct: {quad_lines_all_distinct(W)}")
