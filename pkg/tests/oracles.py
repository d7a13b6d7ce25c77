"""Independent brute-force reference computations used by the tests."""
from fractions import Fraction
from itertools import combinations, product


def f_brute(x, y):
    x, y = Fraction(x), Fraction(y)
    return (x - y) * (x - y) / (1 + y * y)


def quadruple_energy_brute(W):
    """Counts ``(x, y, x', y')`` in ``W^4`` with ``f(x, y) = f(x', y')`` directly."""
    ws = [Fraction(w) for w in W]
    return sum(f_brute(a, b) == f_brute(c, d) for a, b, c, d in product(ws, repeat=4))


def distinct_f_brute(W):
    return len({f_brute(a, b) for a in W for b in W})


def has_kst_brute(edges, left_count, right_count, s, t):
    """Enumerates every ``t``-subset of the right side and its common left neighbourhood."""
    masks = [0] * left_count
    for i, j in edges:
        masks[i] |= 1 << j
    for B in combinations(range(right_count), t):
        b = sum(1 << j for j in B)
        if sum((m & b) == b for m in masks) >= s:
            return True
    return False


def point_line_dist_sq(px, py, a, b, c):
    """Squared distance from the textbook formula, in plain Fractions."""
    e = a * Fraction(px) + b * Fraction(py) + c
    return e * e / (a * a + b * b)
