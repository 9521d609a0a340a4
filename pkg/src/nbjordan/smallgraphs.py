"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs are neighbor-bitmask tuples here.  Canonical certificates come from
equitable partition refinement plus individualization, taking the
lexicographically smallest upper-triangle adjacency string over the
orderings the refinement tree generates; vertices that are twins inside a
cell are interchangeable under an automorphism, so only one branch per twin
class is explored.  This is comfortably fast through 9 vertices.

Enumeration proceeds level by level: every graph on k vertices arises from
some graph on k-1 vertices by attaching a new last vertex, so extending
each (k-1)-representative by every neighbor subset and deduplicating by
certificate is exhaustive.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InputError
from .graphs import Graph, encode_graph6

Masks = tuple[int, ...]


def graph_to_masks(g: Graph) -> Masks:
    return g.masks


def masks_to_graph(masks: Masks) -> Graph:
    n = len(masks)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1
    ]
    return Graph.from_edges0(n, edges)


def _refine(masks: Masks, cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                mv = masks[v]
                key = tuple((mv & cm).bit_count() for cm in cell_masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) > 1:
                changed = True
            for key in sorted(buckets):
                new_cells.append(buckets[key])
        cells = new_cells
        if not changed:
            return cells


def _cert_int(n: int, masks: Masks, order: list[int]) -> int:
    bits = 0
    for i in range(n):
        mi = masks[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (mi >> order[j] & 1)
    return bits


def _are_cell_twins(masks: Masks, v: int, w: int) -> bool:
    return (masks[v] ^ masks[w]) & ~((1 << v) | (1 << w)) == 0


def _search(n: int, masks: Masks, cells: list[list[int]], best: list):
    cells = _refine(masks, cells)
    split_at = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if split_at is None:
        order = [v for cell in cells for v in cell]
        cert = _cert_int(n, masks, order)
        if best[0] is None or cert < best[0]:
            best[0] = cert
        return
    cell = cells[split_at]
    reps: list[int] = []
    for v in cell:
        if not any(_are_cell_twins(masks, v, r) for r in reps):
            reps.append(v)
    for v in reps:
        branched = (
            cells[:split_at]
            + [[v], [u for u in cell if u != v]]
            + cells[split_at + 1:]
        )
        _search(n, masks, branched, best)


def canonical_certificate(masks: Masks) -> tuple[int, int]:
    """(n, packed upper-triangle bits) identifying the isomorphism class."""
    n = len(masks)
    if n == 1:
        return (1, 0)
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(masks[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    best: list = [None]
    _search(n, masks, cells, best)
    return (n, best[0])


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Masks, ...]:
    """All graphs on n vertices up to isomorphism (connected or not)."""
    if n < 1:
        raise InputError("need n >= 1")
    if n == 1:
        return ((0,),)
    out: list[Masks] = []
    seen: set[tuple[int, int]] = set()
    top = 1 << (n - 1)
    for parent in all_graphs(n - 1):
        for s in range(1 << (n - 1)):
            cand = tuple(
                parent[i] | top if s >> i & 1 else parent[i] for i in range(n - 1)
            ) + (s,)
            cert = canonical_certificate(cand)
            if cert not in seen:
                seen.add(cert)
                out.append(cand)
    return tuple(out)


def _masks_connected(masks: Masks) -> bool:
    n = len(masks)
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def connected_min_degree2(n: int) -> list[Masks]:
    """All connected graphs with minimum degree >= 2 on n vertices, one per
    isomorphism class."""
    return [
        m
        for m in all_graphs(n)
        if all(x.bit_count() >= 2 for x in m) and _masks_connected(m)
    ]


ENUMERATION_LIMIT = 7


def enumerate_small(n: int) -> list[str]:
    """graph6 lines of all connected min-degree-2 graphs on n <= 7 vertices,
    one per isomorphism class, sorted by (edge count, graph6 string)."""
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise InputError(
            f"in-tree enumeration stops at n = {ENUMERATION_LIMIT}; feed larger "
            "orders as an external graph6 stream"
        )
    keyed = [
        (sum(x.bit_count() for x in m) // 2, encode_graph6(masks_to_graph(m)))
        for m in connected_min_degree2(n)
    ]
    return [g6 for _, g6 in sorted(keyed)]


def unicyclic_graphs(n: int) -> list[Masks]:
    """All connected unicyclic graphs (m = n) on n vertices up to iso."""
    return [
        m
        for m in all_graphs(n)
        if sum(x.bit_count() for x in m) // 2 == n and _masks_connected(m)
    ]


def random_connected_graph(rng, n_max: int = 8, n_min: int = 2) -> Graph:
    """Seeded random connected graph: a random attachment tree plus a random
    number of extra edges."""
    n = rng.randint(n_min, n_max)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    possible = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    extra = rng.randint(0, len(possible))
    edges.update(rng.sample(possible, extra))
    return Graph.from_edges0(n, sorted(edges))
