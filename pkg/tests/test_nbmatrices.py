import random

import pytest

from conftest import complete, complete_bipartite, cycle
from nbjordan import exactmat, intpoly
from nbjordan.errors import StructureError
from nbjordan.exactmat import kernel_basis, mat_mul, mat_vec, rank, transpose
from nbjordan.graphs import Graph, arc_index, edge_major_arc_order
from nbjordan.nbmatrices import (
    NbMatrixBundle,
    build_B,
    build_K,
    build_M,
    build_R,
    build_ST,
    build_X,
    ihara_check,
    quadratic_charpoly,
)
from nbjordan.smallgraphs import random_connected_graph


def fig1() -> Graph:
    return Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5)])


# the 10x10 matrix as printed alongside the 5-vertex example, rows/columns
# ordered (1,2),(1,3),(1,4),(2,3),(4,5),(2,1),(3,1),(4,1),(3,2),(5,4)
FIG1_B_PRINTED = [
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
]


def test_fig1_bit_exact():
    g = fig1()
    idx = arc_index(g)
    b = build_B(g, idx)
    printed_order = edge_major_arc_order(g)
    perm = [idx.position[a] for a in printed_order]
    permuted = [[b[perm[i]][perm[j]] for j in range(10)] for i in range(10)]
    assert permuted == FIG1_B_PRINTED


def test_build_B_small():
    k2 = Graph.from_edges(2, [(1, 2)])
    assert build_B(k2) == [[0, 0], [0, 0]]
    b = build_B(cycle(3))
    assert all(sum(row) == 1 for row in b)


def test_B_row_sums_are_degree_minus_one():
    rng = random.Random(6)
    for _ in range(20):
        g = random_connected_graph(rng, n_max=7)
        if g.m == 0:
            continue
        idx = arc_index(g)
        b = build_B(g, idx)
        for a, (u, v) in enumerate(idx.arcs):
            assert sum(b[a]) == g.degrees[v] - 1


def test_build_K():
    k = build_K(cycle(3))
    a = cycle(3).adjacency_matrix()
    for i in range(3):
        for j in range(3):
            assert k[i][j] == a[i][j]
            assert k[i][3 + j] == (1 if i == j else 0)  # D - I = I for C3
            assert k[3 + i][j] == (-1 if i == j else 0)
            assert k[3 + i][3 + j] == 0
    k2 = build_K(Graph.from_edges(2, [(1, 2)]))
    assert exactmat.det_bareiss(k2) == 0  # D - I = 0 block makes K singular


def test_charpoly_K_equals_quadratic_det():
    rng = random.Random(12)
    for _ in range(50):
        g = random_connected_graph(rng, n_max=7)
        assert exactmat.charpoly(build_K(g)) == quadratic_charpoly(g)


def test_ST_identities():
    for g in (cycle(3), complete(4), fig1(), complete_bipartite(2, 3)):
        s, t = build_ST(g)
        a = g.adjacency_matrix()
        d = [[g.degrees[i] if i == j else 0 for j in range(g.n)]
             for i in range(g.n)]
        assert mat_mul(t, s) == a
        assert mat_mul(transpose(s), s) == d
        assert mat_mul(t, transpose(t)) == d


def test_build_R_shapes_and_membership():
    # unicyclic: empty R
    r = build_R(cycle(5))
    assert all(len(row) == 0 for row in r)
    for g, extra in ((complete(4), 2), (complete_bipartite(3, 3), 3)):
        r = build_R(g)
        assert len(r[0]) == 2 * extra
        b = build_B(g)
        s, t = build_ST(g)
        st = mat_mul(s, t)
        for j in range(2 * extra):
            col = [row[j] for row in r]
            sign = 1 if j < extra else -1
            assert mat_vec(b, col) == [sign * x for x in col]
            assert not any(mat_vec(st, col))


def test_stacked_kernel_dimensions():
    # ker(B-I) meets ker(ST) in dimension m-n+1 (the cycle space), and
    # ker(B+I) in dimension m-n, plus one more for bipartite graphs
    for g, bip in ((complete(4), False), (complete_bipartite(3, 3), True)):
        extra = g.m - g.n
        b = build_B(g)
        s, t = build_ST(g)
        st = mat_mul(s, t)
        for sign, want in ((1, extra + 1), (-1, extra + (1 if bip else 0))):
            shifted = [row[:] for row in b]
            for i in range(len(b)):
                shifted[i][i] -= sign
            assert len(kernel_basis(shifted + st)) == want


def test_build_X_identity_and_rank():
    # B X = X M is asserted inside build_X
    for g in (complete(4), complete_bipartite(3, 3), fig1(), cycle(5)):
        build_X(g)
    # for unicyclic graphs X = [S T^T]
    g = cycle(5)
    x = build_X(g)
    s, t = build_ST(g)
    tt = transpose(t)
    assert x == [s[i] + tt[i] for i in range(10)]
    # X is always singular: rank X <= rank[S T^T] + 2(m-n) = 2m-1 here,
    # realized exactly on this 24-dimensional example
    rd = Graph.from_edges(
        7,
        [(4, 5), (4, 6), (5, 6), (5, 7), (4, 7), (2, 4), (1, 2), (1, 3),
         (2, 3), (3, 4), (3, 7), (3, 6)],
    )
    x = build_X(rd)
    assert len(x) == 24 and rank(x) == 23


def test_bundle():
    bundle = NbMatrixBundle(complete(4))
    assert len(bundle.B) == 12 and len(bundle.K) == 8 and len(bundle.M) == 12


def test_charpoly_M_identity():
    rng = random.Random(14)
    for _ in range(15):
        g = random_connected_graph(rng, n_max=6)
        if g.m < g.n:
            continue
        lhs = exactmat.charpoly(build_M(g))
        rhs = intpoly.mul(
            intpoly.pow_((-1, 0, 1), g.m - g.n), exactmat.charpoly(build_K(g))
        )
        assert lhs == rhs


def test_ihara_fixtures_and_random():
    assert ihara_check(fig1())
    assert ihara_check(cycle(6))
    tree = Graph.from_edges(4, [(1, 2), (2, 3), (2, 4)])
    assert ihara_check(tree)
    rng = random.Random(100)
    assert all(ihara_check(random_connected_graph(rng, n_max=7))
               for _ in range(30))


def test_null_space_of_S_Ttranspose():
    # non-bipartite: spanned by [1..1, -1..-1]
    for g in (cycle(3), complete(4), fig1()):
        s, t = build_ST(g)
        stacked = [s[i] + transpose(t)[i] for i in range(2 * g.m)]
        basis = kernel_basis(stacked)
        assert len(basis) == 1
        assert basis[0] == [1] * g.n + [-1] * g.n
    # bipartite: 2-dimensional, containing both lemma vectors
    g = cycle(4)
    s, t = build_ST(g)
    stacked = [s[i] + transpose(t)[i] for i in range(2 * g.m)]
    basis = kernel_basis(stacked)
    assert len(basis) == 2
    from nbjordan.graphs import bipartition

    a, b = bipartition(g)
    sigma = [1 if v in a else -1 for v in range(g.n)]
    lemma1 = [1] * g.n + [-1] * g.n
    lemma2 = sigma + sigma
    for vec in (lemma1, lemma2):
        assert rank(transpose(basis + [vec])) == 2  # vec in span(basis)


def test_lemma2_eigenvectors_in_null_space():
    # K-eigenvectors inside null([S T^T]) only occur at eigenvalue 1, or
    # also -1 for bipartite graphs
    from nbjordan.graphs import bipartition

    for g in (cycle(3), complete(4), cycle(4), complete_bipartite(3, 3)):
        s, t = build_ST(g)
        stacked = [s[i] + transpose(t)[i] for i in range(2 * g.m)]
        null_dim = len(kernel_basis(stacked))
        k = build_K(g)
        hits = 0
        for root in (1, -1):
            shifted = [row[:] for row in k]
            for i in range(2 * g.n):
                shifted[i][i] -= root
            hits += len(kernel_basis(shifted + stacked))
        assert hits == null_dim
