"""Simple undirected graphs with a canonical arc ordering.

Vertices are 0-based internally and 1-based in anything user-facing
(reports, fixture definitions, CLI).  Graphs are immutable after
construction.  graph6 is the only interchange format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, InputError


@dataclass(frozen=True)
class Graph:
    """Simple graph on n vertices; adj holds sorted neighbor tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build from 1-based edge pairs."""
        return Graph.from_edges0(n, [(u - 1, v - 1) for u, v in edges])

    @staticmethod
    def from_edges0(n: int, edges) -> "Graph":
        """Build from 0-based edge pairs."""
        if n < 1:
            raise DomainError("graph needs at least one vertex")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u + 1},{v + 1}) out of range")
            sets[u].add(v)
            sets[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in sets))

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbor bitmasks, one per vertex."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """0-based (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        masks = self.masks
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def adjacency_matrix(self) -> list[list[int]]:
        return [[1 if j in set(nbrs) else 0 for j in range(self.n)]
                for nbrs in self.adj]


@dataclass(frozen=True)
class ArcIndex:
    """The 2m directed arcs of a graph in ascending (source, target) order."""

    arcs: tuple[tuple[int, int], ...]
    position: dict[tuple[int, int], int] = field(compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.arcs)


def arc_index(g: Graph) -> ArcIndex:
    """Canonical arc order: ascending by (source, target), 0-based."""
    arcs = tuple((u, v) for u in range(g.n) for v in g.adj[u])
    return ArcIndex(arcs, {a: i for i, a in enumerate(arcs)})


def edge_major_arc_order(g: Graph) -> list[tuple[int, int]]:
    """Alternative arc order: all (u, v) with u < v in lexicographic edge
    order, then the reversals in the same edge order.  Used to compare
    against presentations that list forward arcs before backward ones."""
    fwd = g.edges()
    return fwd + [(v, u) for u, v in fwd]


# -- graph6 codec ------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (standard 6-bit format, n <= 62 header or the
    4-byte extended header)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise InputError("empty graph6 line")
    data = []
    for i, ch in enumerate(s):
        b = ord(ch)
        if not (63 <= b <= 126):
            raise InputError(f"graph6 byte out of range at offset {i}: {ch!r}")
        data.append(b - 63)
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise InputError("unsupported graph6 size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise InputError("bad graph6 size header")
    if n < 1:
        raise InputError("graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise InputError(
            f"graph6 body length {len(body)} != expected {need} for n={n}"
        )
    bits = 0
    for v in body:
        bits = (bits << 6) | v
    total = 6 * len(body)
    pad = total - nbits
    if pad and bits & ((1 << pad) - 1):
        raise InputError("graph6 trailing padding bits are nonzero")
    bits >>= pad
    edges = []
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges0(n, edges)


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 string; inverse of parse_graph6."""
    n = g.n
    if n > 62:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [n]
    bits = 0
    nbits = 0
    for j in range(1, n):
        mask = g.masks[j]
        for i in range(j):
            bits = (bits << 1) | (mask >> i & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    body = [(bits >> k) & 63 for k in range(nbits - 6, -1, -6)]
    return "".join(chr(63 + v) for v in head + body)


def iter_graph6_lines(text_lines):
    """Yield (line_number, stripped_line) for nonempty graph6 payload lines."""
    for i, raw in enumerate(text_lines, start=1):
        s = raw.strip()
        if s:
            yield i, s


# -- structural queries ------------------------------------------------------

def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """2-coloring per component; None exactly when an odd cycle exists."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    return (
        [v for v in range(g.n) if color[v] == 0],
        [v for v in range(g.n) if color[v] == 1],
    )


def structure_report(g: Graph) -> dict:
    """Connectivity, minimum degree, cycle rank and bipartition in one pass."""
    connected = g.is_connected()
    parts = bipartition(g)
    components = _component_count(g)
    return {
        "n": g.n,
        "m": g.m,
        "connected": connected,
        "min_degree": min(g.degrees),
        "cycle_rank": g.m - g.n + components,
        "bipartition": parts,
    }


def _component_count(g: Graph) -> int:
    seen = 0
    count = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        count += 1
        frontier = 1 << start
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= g.masks[v]
            frontier = nxt & ~seen
    return count


def distances_to_set(g: Graph, s) -> list[int]:
    """BFS distance from every vertex to the nearest member of s (0-based)."""
    s = list(s)
    if not s:
        raise DomainError("distance target set is empty")
    dist = [-1] * g.n
    frontier = list(dict.fromkeys(s))
    for v in frontier:
        dist[v] = 0
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if dist[v] == -1:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    if any(x == -1 for x in dist):
        raise DomainError("graph is not connected to the target set")
    return dist


def unique_cycle(g: Graph) -> list[int]:
    """Vertex set (0-based, sorted) of the unique cycle of a connected
    unicyclic graph, by iteratively stripping degree-1 vertices."""
    if g.m != g.n:
        raise DomainError(f"graph has m={g.m}, n={g.n}; not unicyclic")
    if not g.is_connected():
        raise DomainError("graph is not connected")
    deg = list(g.degrees)
    alive = [True] * g.n
    queue = [v for v in range(g.n) if deg[v] == 1]
    while queue:
        u = queue.pop()
        alive[u] = False
        for v in g.adj[u]:
            if alive[v]:
                deg[v] -= 1
                if deg[v] == 1:
                    queue.append(v)
    return [v for v in range(g.n) if alive[v]]


def find_twins(g: Graph) -> list[tuple[int, int, bool]]:
    """All unordered twin pairs (x, y, adjacent), 0-based.

    Twins have identical neighborhoods outside {x, y}; the flag marks whether
    they are additionally joined by an edge.
    """
    out = []
    masks = g.masks
    for x in range(g.n):
        bx = 1 << x
        for y in range(x + 1, g.n):
            by = 1 << y
            if masks[x] & by:
                if masks[x] ^ masks[y] == bx | by:
                    out.append((x, y, True))
            elif masks[x] == masks[y]:
                out.append((x, y, False))
    return out
