"""Sum, multiplication and R degrees of vertices.

All three quantities are exact Python integers. The multiplication degree
of a vertex in K_n is (n-1)^(n-1), which passes 2^64 already at n = 17,
so nothing here may ever be narrowed to a machine word.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class RDegreeTable:
    """Per-vertex sum degree, multiplication degree and R degree."""

    sum_degrees: tuple
    mult_degrees: tuple
    r_degrees: tuple

    def __len__(self):
        return len(self.r_degrees)


def sum_degree(g, v):
    """Sum of the degrees of v's neighbors (0 for an isolated vertex)."""
    return sum(g.degree(u) for u in g.neighbors(v))


def mult_degree(g, v):
    """Product of the degrees of v's neighbors (empty product is 1)."""
    return math.prod(g.degree(u) for u in g.neighbors(v))


def r_degree(g, v):
    """R degree of v: multiplication degree plus sum degree."""
    return mult_degree(g, v) + sum_degree(g, v)


def r_degree_table(g):
    """All three degree quantities for every vertex, in id order."""
    degs = [g.degree(v) for v in range(g.n)]
    sums = []
    mults = []
    for v in range(g.n):
        s = 0
        p = 1
        for u in g.neighbors(v):
            s += degs[u]
            p *= degs[u]
        sums.append(s)
        mults.append(p)
    return RDegreeTable(
        sum_degrees=tuple(sums),
        mult_degrees=tuple(mults),
        r_degrees=tuple(p + s for s, p in zip(sums, mults)),
    )
