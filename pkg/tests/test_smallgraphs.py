import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from nbjordan.errors import InputError
from nbjordan.graphs import parse_graph6
from nbjordan.smallgraphs import (
    all_graphs,
    canonical_certificate,
    connected_min_degree2,
    enumerate_small,
    masks_to_graph,
    unicyclic_graphs,
)

KNOWN_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
KNOWN_MINDEG2 = {3: 1, 4: 3, 5: 11, 6: 61, 7: 507}
KNOWN_UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33}


@pytest.mark.parametrize("n", range(1, 8))
def test_all_graph_counts(n):
    assert len(all_graphs(n)) == KNOWN_ALL[n]


@pytest.mark.parametrize("n", range(3, 8))
def test_min_degree2_counts(n):
    assert len(connected_min_degree2(n)) == KNOWN_MINDEG2[n]


@pytest.mark.parametrize("n", range(3, 8))
def test_unicyclic_counts(n):
    assert len(unicyclic_graphs(n)) == KNOWN_UNICYCLIC[n]


def test_certificate_permutation_invariant():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(2, 8)
        masks = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = [0] * n
        for u in range(n):
            for v in range(n):
                if masks[u] >> v & 1:
                    permuted[perm[u]] |= 1 << perm[v]
        assert canonical_certificate(tuple(masks)) == canonical_certificate(
            tuple(permuted)
        )


def test_certificates_separate_nonisomorphic():
    # brute force: the certificate must separate every pair of graphs in the
    # n=5 catalog (they are pairwise non-isomorphic by construction; confirm
    # with networkx)
    graphs = [masks_to_graph(m) for m in all_graphs(5)]
    nxg = [nx.from_graph6_bytes(
        __import__("nbjordan.graphs", fromlist=["encode_graph6"])
        .encode_graph6(g).encode()) for g in graphs]
    for i, j in combinations(range(len(graphs)), 2):
        assert not nx.is_isomorphic(nxg[i], nxg[j])


def test_independent_labeled_census():
    # independent oracle for n = 4, 5: enumerate all labeled graphs, filter
    # connected + min degree 2, deduplicate by minimum over all relabelings
    for n, want in ((4, 3), (5, 11)):
        pairs = list(combinations(range(n), 2))
        classes = set()
        for bits in range(1 << len(pairs)):
            masks = [0] * n
            for k, (u, v) in enumerate(pairs):
                if bits >> k & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            if any(m.bit_count() < 2 for m in masks):
                continue
            g = masks_to_graph(tuple(masks))
            if not g.is_connected():
                continue
            best = None
            for perm in permutations(range(n)):
                key = tuple(
                    sorted(
                        (min(perm[u], perm[v]), max(perm[u], perm[v]))
                        for u, v in g.edges()
                    )
                )
                if best is None or key < best:
                    best = key
            classes.add(best)
        assert len(classes) == want
        assert len(enumerate_small(n)) == want


def test_enumerate_small_contract():
    lines = enumerate_small(3)
    assert lines == ["Bw"]
    lines = enumerate_small(5)
    assert len(lines) == 11
    for line in lines:
        g = parse_graph6(line)
        assert g.n == 5 and g.is_connected() and min(g.degrees) >= 2
    assert lines == sorted(lines, key=lambda s: (parse_graph6(s).m, s))
    assert enumerate_small(1) == []
    with pytest.raises(InputError):
        enumerate_small(8)


def test_enumerate_small_no_isomorphic_pair():
    lines = enumerate_small(6)
    nxg = [nx.from_graph6_bytes(line.encode()) for line in lines]
    for i, j in combinations(range(len(lines)), 2):
        if sorted(d for _, d in nxg[i].degree()) == sorted(
            d for _, d in nxg[j].degree()
        ):
            assert not nx.is_isomorphic(nxg[i], nxg[j])
