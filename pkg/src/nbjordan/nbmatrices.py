"""Constructions tying a graph to its non-backtracking matrix B and the
companion matrices K, M, S, T, R, X.

Conventions (arc order is the canonical one from graphs.arc_index):

  B[(i,j),(k,l)] = 1  iff  j = k and i != l           (2m x 2m, 0/1)
  K = [[A, D-I], [-I, 0]]                             (2n x 2n)
  M = diag(K, I_{m-n}, -I_{m-n})                      (2m x 2m)
  S[(u,v), x] = [v = x],   T[x, (u,v)] = [x = u]      (2m x n, n x 2m)
  X = [S  T^T  R]  satisfies  B X = X M  for connected graphs with m >= n.

R holds m-n independent eigenvectors of B for +1 and m-n for -1, all lying
in the null space of the arc-continuation matrix S T.  The full intersection
ker(B - I) ∩ ker(S T) has dimension m-n+1 (antisymmetric circulations span
the cycle space), and ker(B + I) ∩ ker(S T) has dimension m-n plus one more
when the graph is bipartite; build_R checks those dimensions and keeps a
deterministic m-n column prefix per sign, which is all B X = X M needs.
"""

from __future__ import annotations

from . import exactmat, intpoly
from .errors import DomainError, StructureError
from .exactmat import Matrix
from .graphs import ArcIndex, Graph, arc_index, bipartition


def build_B(g: Graph, idx: ArcIndex | None = None) -> Matrix:
    """The 2m x 2m non-backtracking matrix in canonical arc order."""
    if idx is None:
        idx = arc_index(g)
    if g.m < 1:
        raise DomainError("graph has no edges")
    size = 2 * g.m
    b = exactmat.zeros(size, size)
    pos = idx.position
    for a, (i, j) in enumerate(idx.arcs):
        row = b[a]
        for l in g.adj[j]:
            if l != i:
                row[pos[(j, l)]] = 1
    return b


def build_K(g: Graph) -> Matrix:
    """K = [[A, D-I], [-I, 0]], 2n x 2n."""
    n = g.n
    k = exactmat.zeros(2 * n, 2 * n)
    for u in range(n):
        for v in g.adj[u]:
            k[u][v] = 1
        k[u][n + u] = g.degrees[u] - 1
        k[n + u][u] = -1
    return k


def build_M(g: Graph) -> Matrix:
    """M = diag(K, I_{m-n}, -I_{m-n}), 2m x 2m; requires m >= n."""
    if g.m < g.n:
        raise DomainError("M is defined only for m >= n")
    k = build_K(g)
    extra = g.m - g.n
    size = 2 * g.m
    m = exactmat.zeros(size, size)
    for i in range(2 * g.n):
        for j in range(2 * g.n):
            m[i][j] = k[i][j]
    for t in range(extra):
        m[2 * g.n + t][2 * g.n + t] = 1
        m[2 * g.n + extra + t][2 * g.n + extra + t] = -1
    return m


def build_ST(g: Graph, idx: ArcIndex | None = None) -> tuple[Matrix, Matrix]:
    """S marks arc heads (2m x n), T marks arc tails (n x 2m).

    T S = A, S^T S = T T^T = D hold exactly; S T is the 2m x 2m
    arc-continuation matrix [head of first = tail of second].
    """
    if idx is None:
        idx = arc_index(g)
    size = 2 * g.m
    s = exactmat.zeros(size, g.n)
    t = exactmat.zeros(g.n, size)
    for a, (u, v) in enumerate(idx.arcs):
        s[a][v] = 1
        t[u][a] = 1
    return s, t


def build_R(g: Graph, idx: ArcIndex | None = None) -> Matrix:
    """2m x 2(m-n) matrix of +-1 eigenvectors of B inside ker(S T).

    Empty (zero columns) for unicyclic graphs.  For m > n the two stacked
    kernels ker([B -+ I; S T]) are computed exactly; their dimensions are
    checked against the flow-space values (m-n+1 for +1, m-n plus one for
    bipartite -1) and the first m-n normalized basis vectors per sign become
    the columns.
    """
    if not g.is_connected():
        raise DomainError("graph must be connected")
    if g.m < g.n:
        raise DomainError("requires m >= n")
    if idx is None:
        idx = arc_index(g)
    extra = g.m - g.n
    size = 2 * g.m
    if extra == 0:
        return [[] for _ in range(size)]
    b = build_B(g, idx)
    s, t = build_ST(g, idx)
    st = exactmat.mat_mul(s, t)
    cols: list[list[int]] = []
    bip = bipartition(g) is not None
    for sign, expected in ((1, extra + 1), (-1, extra + (1 if bip else 0))):
        shifted = [row[:] for row in b]
        for i in range(size):
            shifted[i][i] -= sign
        stacked = shifted + st
        kern = exactmat.kernel_basis(stacked)
        if len(kern) != expected:
            raise StructureError(
                f"ker([B{-sign:+d}I; ST]) has dimension {len(kern)}, "
                f"expected {expected}"
            )
        cols.extend(kern[:extra])
    return [[col[i] for col in cols] for i in range(size)]


def build_X(g: Graph, idx: ArcIndex | None = None) -> Matrix:
    """X = [S  T^T  R]; the identity B X = X M is verified exactly."""
    if idx is None:
        idx = arc_index(g)
    s, t = build_ST(g, idx)
    tt = exactmat.transpose(t)
    r = build_R(g, idx)
    x = [s[i] + tt[i] + r[i] for i in range(2 * g.m)]
    b = build_B(g, idx)
    m = build_M(g)
    if not exactmat.mat_eq(exactmat.mat_mul(b, x), exactmat.mat_mul(x, m)):
        raise StructureError("B X != X M")
    return x


class NbMatrixBundle:
    """All companion matrices of one connected graph with m >= n."""

    def __init__(self, g: Graph):
        if not g.is_connected():
            raise DomainError("graph must be connected")
        if g.m < g.n:
            raise DomainError("bundle requires m >= n")
        self.graph = g
        self.idx = arc_index(g)
        self.B = build_B(g, self.idx)
        self.K = build_K(g)
        self.M = build_M(g)
        self.S, self.T = build_ST(g, self.idx)
        self.R = build_R(g, self.idx)
        self.X = build_X(g, self.idx)


def quadratic_charpoly(g: Graph) -> intpoly.Poly:
    """det(x^2 I - x A + (D - I)) as an integer polynomial of degree 2n.

    Computed by Bareiss evaluation at 2n+1 points and exact interpolation;
    equals the characteristic polynomial of K.
    """
    n = g.n
    a = g.adjacency_matrix()
    degs = g.degrees
    xs = list(range(2 * n + 1))
    ys = []
    for k in xs:
        mat = [
            [
                (k * k + degs[i] - 1 if i == j else 0) - k * a[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]
        ys.append(exactmat.det_bareiss(mat))
    p = exactmat._interpolate_integer(xs, ys)
    if intpoly.degree(p) != 2 * n or intpoly.leading(p) != 1:
        raise StructureError("quadratic charpoly interpolation failed")
    return p


def ihara_check(g: Graph) -> bool:
    """True iff charpoly(B) = (x^2-1)^(m-n) * charpoly(K) exactly.

    This is the Ihara determinant identity det(I - uB) =
    (1-u^2)^(m-n) det(u^2(D-I) - uA + I) rewritten on the eigenvalue side
    (substitute u = 1/x and clear denominators), which avoids reversed
    polynomial bookkeeping.  For trees (m = n-1) the correction factor moves
    to the B side: (x^2-1)^(n-m) charpoly(B) = charpoly(K).
    """
    if not g.is_connected():
        raise DomainError("graph must be connected")
    lhs = exactmat.charpoly(build_B(g))
    rhs = exactmat.charpoly(build_K(g))
    shift = intpoly.pow_((-1, 0, 1), abs(g.m - g.n))
    if g.m >= g.n:
        rhs = intpoly.mul(shift, rhs)
    else:
        lhs = intpoly.mul(shift, lhs)
    return lhs == rhs
