"""Simple undirected graph representation, family generators and parsers.

Vertices are dense 0-based integer ids. Graphs are immutable after
construction and validated to be simple (no loops, no duplicate edges).
Connectivity is *not* required at construction time; index computations
check it themselves.
"""

import random
from enum import Enum

from .errors import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    InvalidCharacterError,
    LoopEdgeError,
    OrderTooLargeError,
    OrderTooSmallError,
    TruncatedDataError,
    VertexOutOfRangeError,
)


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"


# Minimum order for which each family can be constructed. The closed-form
# propositions assume n >= 3; that stricter bound is enforced by the
# verifier, not here.
FAMILY_MIN_ORDER = {
    Family.PATH: 2,
    Family.CYCLE: 3,
    Family.COMPLETE: 3,
    Family.STAR: 2,
}


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("_n", "_adjacency", "_edges")

    def __init__(self, n, edges):
        """Build a graph from a vertex count and an iterable of edge pairs.

        Raises LoopEdgeError, DuplicateEdgeError or VertexOutOfRangeError
        on malformed input; duplicates are never silently merged.
        """
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adjacency = [set() for _ in range(n)]
        canonical = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n):
                raise VertexOutOfRangeError(f"vertex {u} not in 0..{n - 1}")
            if not (0 <= v < n):
                raise VertexOutOfRangeError(f"vertex {v} not in 0..{n - 1}")
            if u == v:
                raise LoopEdgeError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"edge {key} appears more than once")
            seen.add(key)
            canonical.append(key)
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._n = n
        self._adjacency = tuple(frozenset(s) for s in adjacency)
        self._edges = tuple(sorted(canonical))

    @property
    def n(self):
        """Number of vertices."""
        return self._n

    @property
    def m(self):
        """Number of edges."""
        return len(self._edges)

    def edges(self):
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return self._edges

    def neighbors(self, v):
        """Open neighborhood of v as a frozenset."""
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v):
        """Number of edges incident to v."""
        self._check_vertex(v)
        return len(self._adjacency[v])

    def _check_vertex(self, v):
        if not (0 <= v < self._n):
            raise VertexOutOfRangeError(f"vertex {v} not in 0..{self._n - 1}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


def build_graph(n, edges):
    """Validated Graph from a vertex count and edge pairs."""
    return Graph(n, edges)


def is_connected(g):
    """True iff every vertex is reachable from vertex 0 (true for n <= 1)."""
    return first_unreachable_vertex(g) is None


def first_unreachable_vertex(g):
    """Smallest vertex id not reachable from vertex 0, or None if connected."""
    if g.n <= 1:
        return None
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    for v in range(g.n):
        if not seen[v]:
            return v
    return None


def generate_family(family, n):
    """One of the four named families: path, cycle, complete or star."""
    family = Family(family)
    minimum = FAMILY_MIN_ORDER[family]
    if n < minimum:
        raise OrderTooSmallError(
            f"{family.value} graph requires n >= {minimum}, got {n}"
        )
    if family is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family is Family.CYCLE:
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    elif family is Family.COMPLETE:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:  # star: vertex 0 is the center
        edges = [(0, i) for i in range(1, n)]
    return Graph(n, edges)


def generate_random_connected(n, edge_probability, seed):
    """Random connected graph: random spanning tree, then each remaining
    pair added independently with the given probability. Deterministic for
    a fixed seed."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    rng = random.Random(seed)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((u, v) if u < v else (v, u))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_probability:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def parse_edge_list(text):
    """Parse the edge-list format.

    One edge per line as two whitespace-separated nonnegative integers;
    blank lines and '#' comments ignored. An optional first data line
    "n <count>" declares the order (allowing isolated trailing vertices).
    Without a header, vertex ids are compacted to a dense 0-based range.
    """
    g, _ = parse_edge_list_with_mapping(text)
    return g


def parse_edge_list_with_mapping(text):
    """As parse_edge_list, also returning {original id: internal id}."""
    declared_n = None
    raw_edges = []
    first_data_line = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if first_data_line and tokens[0] == "n":
            if len(tokens) != 2:
                raise EdgeListSyntaxError(
                    f"line {lineno}: header must be 'n <count>'"
                )
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise EdgeListSyntaxError(
                    f"line {lineno}: non-integer order {tokens[1]!r}"
                ) from None
            if declared_n < 0:
                raise EdgeListSyntaxError(
                    f"line {lineno}: negative order {declared_n}"
                )
            first_data_line = False
            continue
        first_data_line = False
        if len(tokens) != 2:
            raise EdgeListSyntaxError(
                f"line {lineno}: expected two vertex ids, got {stripped!r}"
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListSyntaxError(
                f"line {lineno}: non-integer token in {stripped!r}"
            ) from None
        if u < 0 or v < 0:
            raise EdgeListSyntaxError(
                f"line {lineno}: negative vertex id in {stripped!r}"
            )
        raw_edges.append((u, v))

    if declared_n is not None:
        mapping = {i: i for i in range(declared_n)}
        return Graph(declared_n, raw_edges), mapping

    ids = sorted({u for e in raw_edges for u in e})
    mapping = {orig: i for i, orig in enumerate(ids)}
    edges = [(mapping[u], mapping[v]) for u, v in raw_edges]
    return Graph(len(ids), edges), mapping


def write_edge_list(g):
    """Render a graph in the edge-list format with an explicit order header."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(line):
    """Decode one graph from its graph6 string (short form, n < 63, plus
    the standard long forms up to the printable limit)."""
    line = line.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise TruncatedDataError("empty graph6 line")
    data = []
    for ch in line:
        b = ord(ch)
        if not (63 <= b <= 126):
            raise InvalidCharacterError(
                f"byte {b} ({ch!r}) outside graph6 range 63..126"
            )
        data.append(b - 63)

    if data[0] < 63:
        n = data[0]
        pos = 1
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8:
        n = 0
        for k in data[2:8]:
            n = (n << 6) | k
        pos = 8
    else:
        raise TruncatedDataError("incomplete graph6 order prefix")

    nbits = n * (n - 1) // 2
    needed = (nbits + 5) // 6
    if len(data) - pos < needed:
        raise TruncatedDataError(
            f"need {needed} adjacency bytes for n={n}, got {len(data) - pos}"
        )
    bits = []
    for k in data[pos:pos + needed]:
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((k >> shift) & 1)

    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def write_graph6(g):
    """Encode a graph as a short-form graph6 string (requires n < 63)."""
    if g.n >= 63:
        raise OrderTooLargeError(
            f"short-form graph6 supports n < 63, got {g.n}"
        )
    n = g.n
    adj = g
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if v in adj.neighbors(u) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        k = 0
        for b in bits[i:i + 6]:
            k = (k << 1) | b
        out.append(chr(k + 63))
    return "".join(out)
