"""R indices (exact integers) and classical degree-based indices (floats).

Every index requires a connected graph with at least two vertices; the
definitions do not extend to disconnected input and summing over
components would be an invention, so that is a hard error. Real-valued
indices iterate edges in sorted order so results are reproducible
bit-for-bit on a given platform.
"""

import math
from dataclasses import dataclass

from .degrees import r_degree_table
from .errors import DisconnectedGraphError, OrderTooSmallError
from .graph import first_unreachable_vertex


@dataclass(frozen=True)
class IndexReport:
    """All indices of one graph. r1/r2/r3 are exact ints, the rest floats."""

    n: int
    m: int
    r1: int
    r2: int
    r3: int
    abc: float
    ga: float
    h: float
    chi: float
    zagreb1: float
    zagreb2: float
    randic: float


def _require_valid(g):
    if g.n < 2:
        raise OrderTooSmallError(f"indices require n >= 2, got n={g.n}")
    bad = first_unreachable_vertex(g)
    if bad is not None:
        raise DisconnectedGraphError(bad)


def r1_index(g):
    """Sum of squared R degrees over all vertices."""
    _require_valid(g)
    table = r_degree_table(g)
    return sum(r * r for r in table.r_degrees)


def r2_index(g):
    """Sum over edges of the product of endpoint R degrees."""
    _require_valid(g)
    r = r_degree_table(g).r_degrees
    return sum(r[u] * r[v] for u, v in g.edges())


def r3_index(g):
    """Sum over edges of the sum of endpoint R degrees."""
    _require_valid(g)
    r = r_degree_table(g).r_degrees
    return sum(r[u] + r[v] for u, v in g.edges())


def abc_index(g):
    """Atom-bond connectivity index."""
    _require_valid(g)
    total = 0.0
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        total += math.sqrt((du + dv - 2) / (du * dv))
    return total


def ga_index(g):
    """Geometric-arithmetic index."""
    _require_valid(g)
    total = 0.0
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        total += 2.0 * math.sqrt(du * dv) / (du + dv)
    return total


def h_index(g):
    """Harmonic index."""
    _require_valid(g)
    total = 0.0
    for u, v in g.edges():
        total += 2.0 / (g.degree(u) + g.degree(v))
    return total


def chi_index(g):
    """Sum-connectivity index."""
    _require_valid(g)
    total = 0.0
    for u, v in g.edges():
        total += 1.0 / math.sqrt(g.degree(u) + g.degree(v))
    return total


def classical_extras(g):
    """First Zagreb, second Zagreb and Randic indices, in that order."""
    _require_valid(g)
    zagreb1 = float(sum(g.degree(v) ** 2 for v in range(g.n)))
    zagreb2 = 0.0
    randic = 0.0
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        zagreb2 += du * dv
        randic += 1.0 / math.sqrt(du * dv)
    return zagreb1, zagreb2, randic


def full_report(g):
    """All indices of one graph, with R degrees computed once and shared."""
    _require_valid(g)
    r = r_degree_table(g).r_degrees
    r1 = sum(x * x for x in r)
    r2 = 0
    r3 = 0
    abc = 0.0
    ga = 0.0
    h = 0.0
    chi = 0.0
    zagreb2 = 0.0
    randic = 0.0
    for u, v in g.edges():
        r2 += r[u] * r[v]
        r3 += r[u] + r[v]
        du, dv = g.degree(u), g.degree(v)
        abc += math.sqrt((du + dv - 2) / (du * dv))
        ga += 2.0 * math.sqrt(du * dv) / (du + dv)
        h += 2.0 / (du + dv)
        chi += 1.0 / math.sqrt(du + dv)
        zagreb2 += du * dv
        randic += 1.0 / math.sqrt(du * dv)
    zagreb1 = float(sum(g.degree(v) ** 2 for v in range(g.n)))
    return IndexReport(
        n=g.n, m=g.m, r1=r1, r2=r2, r3=r3,
        abc=abc, ga=ga, h=h, chi=chi,
        zagreb1=zagreb1, zagreb2=zagreb2, randic=randic,
    )
