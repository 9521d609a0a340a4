"""Exact Jordan structure of integer matrices, specialized to the
non-backtracking setting.

The block structure at an irreducible factor f of the characteristic
polynomial is read off the nullity sequence of f(M)^j: with d = deg f and
nu_j = dim ker f(M)^j, the number of Jordan blocks of size >= j per root of
f is (nu_j - nu_{j-1}) / d.  No floating point is involved anywhere; chains
at irrational eigenvalues are extracted over explicit quadratic fields and
re-verified by multiplication before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactmat, intpoly
from .errors import DomainError, StructureError
from .exactmat import Matrix
from .graphs import Graph, bipartition, distances_to_set, unique_cycle
from .intpoly import Poly
from .numfield import (
    NumberField,
    NumberFieldElement,
    field_kernel,
    field_mat_mul,
    field_mat_vec,
    field_rank,
)


@dataclass
class FactorProfile:
    """Jordan data at one (preferably irreducible) factor."""

    factor: Poly
    multiplicity: int
    nullities: list[int]
    blocks: list[int]  # block sizes per root, descending; [] when unrefined
    irreducible: bool

    @property
    def degree(self) -> int:
        return intpoly.degree(self.factor)

    @property
    def defective(self) -> bool:
        return self.nullities[0] < self.multiplicity * self.degree

    @property
    def factor_string(self) -> str:
        return intpoly.to_string(self.factor)

    def to_json(self) -> dict:
        return {
            "poly": self.factor_string,
            "coeffs": list(self.factor),
            "alg_mult": self.multiplicity,
            "degree": self.degree,
            "nullities": list(self.nullities),
            "blocks": list(self.blocks),
            "defective": self.defective,
            "irreducible": self.irreducible,
        }


@dataclass
class JordanReport:
    matrix_label: str
    dim: int
    profiles: list[FactorProfile]

    @property
    def defective_profiles(self) -> list[FactorProfile]:
        return [p for p in self.profiles if p.defective]

    @property
    def defective_factors(self) -> list[str]:
        return [p.factor_string for p in self.defective_profiles]

    def max_block(self) -> int:
        return max((max(p.blocks, default=1) for p in self.profiles), default=1)

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix_label,
            "dim": self.dim,
            "factors": [p.to_json() for p in self.profiles],
        }

    def structure_map(self) -> dict[Poly, tuple[int, tuple[int, ...]]]:
        """factor -> (algebraic multiplicity, sorted block sizes)."""
        return {
            p.factor: (p.multiplicity, tuple(sorted(p.blocks, reverse=True)))
            for p in self.profiles
        }


def _nullity_sequence(mat: Matrix, f: Poly, mult: int, rank_fn) -> list[int]:
    """dim ker f(mat)^j for j = 1..mult, computed until stabilization and
    padded with the stable value."""
    dim = len(mat)
    d = intpoly.degree(f)
    target = mult * d
    fm = exactmat.eval_poly_at_matrix(f, mat)
    power = fm
    nullities: list[int] = []
    prev = 0
    for _ in range(mult):
        nu = dim - rank_fn(power)
        if nu == prev:
            if nu != target:
                raise StructureError(
                    f"nullity of {intpoly.to_string(f)} stabilized at {nu}, "
                    f"expected {target}"
                )
            break
        if nu > target:
            raise StructureError(
                f"nullity {nu} exceeds generalized eigenspace {target}"
            )
        nullities.append(nu)
        prev = nu
        if nu == target:
            break
        power = exactmat.mat_mul(power, fm)
    final = nullities[-1]
    if final != target:
        raise StructureError(
            f"nullity sequence for {intpoly.to_string(f)} ended at {final}, "
            f"expected {target}"
        )
    nullities += [final] * (mult - len(nullities))
    return nullities


def _blocks_from_nullities(nullities: list[int], d: int) -> list[int]:
    """Block sizes per root (descending) from a complete nullity sequence."""
    counts_ge = []
    prev = 0
    for nu in nullities:
        if nu == prev:
            break
        diff = nu - prev
        if diff % d:
            raise StructureError("nullity step not divisible by factor degree")
        counts_ge.append(diff // d)
        prev = nu
    if any(b > a for a, b in zip(counts_ge, counts_ge[1:])):
        raise StructureError("block counts are not monotone")
    sizes: list[int] = []
    for j in range(len(counts_ge), 0, -1):
        exact = counts_ge[j - 1] - (counts_ge[j] if j < len(counts_ge) else 0)
        sizes.extend([j] * exact)
    return sorted(sizes, reverse=True)


def factor_profiles(
    mat: Matrix,
    charpoly: Poly,
    rank_fn=None,
    skip_simple: bool = False,
) -> list[FactorProfile]:
    """Profiles per refined factor of the given characteristic polynomial.

    Squarefree factors of multiplicity one are forced (one block of size 1
    per root); with skip_simple they are reported without any rank work,
    which the bulk survey relies on.  Repeated factors are refined into
    irreducibles of degree <= 2 where possible; an unsplittable remainder is
    profiled in aggregate and marked not irreducible.
    """
    if rank_fn is None:
        rank_fn = exactmat.rank
    _, sf = intpoly.squarefree_decomposition(charpoly)
    profiles: list[FactorProfile] = []
    for q, e in sf:
        if e == 1:
            d = intpoly.degree(q)
            if skip_simple:
                nullities = [d]
            else:
                nu = len(mat) - rank_fn(exactmat.eval_poly_at_matrix(q, mat))
                if nu != d:
                    raise StructureError(
                        f"simple factor {intpoly.to_string(q)} has nullity {nu}"
                    )
                nullities = [nu]
            profiles.append(FactorProfile(q, 1, nullities, [1], True))
            continue
        pieces, refined = intpoly.refine_factor(q)
        for f in pieces:
            irreducible = refined or intpoly.degree(f) <= 2
            nullities = _nullity_sequence(mat, f, e, rank_fn)
            blocks = (
                _blocks_from_nullities(nullities, intpoly.degree(f))
                if irreducible
                else []
            )
            profiles.append(FactorProfile(f, e, nullities, blocks, irreducible))
    profiles.sort(key=lambda p: (p.degree, p.factor))
    return profiles


def jordan_profile(mat: Matrix, label: str = "") -> JordanReport:
    """Full Jordan report of a square integer matrix (always certified)."""
    cp = exactmat.charpoly(mat)
    profiles = factor_profiles(mat, cp)
    report = JordanReport(label, len(mat), profiles)
    total = sum(p.multiplicity * p.degree for p in report.profiles)
    if total != len(mat):
        raise StructureError("factor multiplicities do not sum to the dimension")
    return report


def is_defective(mat: Matrix) -> tuple[bool, list[str]]:
    """Whether any eigenvalue has geometric < algebraic multiplicity."""
    report = jordan_profile(mat)
    bad = report.defective_factors
    return bool(bad), bad


# -- entrywise eigenvector equations ----------------------------------------

def _as_field(lam):
    if isinstance(lam, NumberFieldElement):
        return lam.field, lam
    lam = Fraction(lam)
    if lam.denominator != 1:
        raise DomainError("rational eigenvalues are handled as integers here")
    field = NumberField((-lam.numerator, 1))
    return field, field.generator()


def _coerce_vector(field: NumberField, v) -> list[NumberFieldElement]:
    out = []
    for x in v:
        if isinstance(x, NumberFieldElement):
            if x.field != field:
                raise DomainError("vector entries from a different field")
            out.append(x)
        else:
            out.append(field.from_rational(x))
    return out


def check_eigvec_equations(g: Graph, lam, v) -> bool:
    """Entrywise test that v is an eigenvector of K for eigenvalue lam != 0:
    v[n+i] = -v[i]/lam and sum_{j~i} v[j] = v[i] (deg(i)-1+lam^2)/lam."""
    field, lam = _as_field(lam)
    if not lam:
        raise DomainError("the entrywise equations require lambda != 0")
    n = g.n
    if len(v) != 2 * n:
        raise DomainError("vector must have 2n entries")
    v = _coerce_vector(field, v)
    inv = lam.inverse()
    lam2 = lam * lam
    for i in range(n):
        if v[n + i] != -v[i] * inv:
            return False
        coeff = (g.degrees[i] - 1 + lam2) * inv
        s = field.zero()
        for j in g.adj[i]:
            s = s + v[j]
        if s != v[i] * coeff:
            return False
    return True


def check_gen_eigvec_equations(g: Graph, lam, v, u) -> bool:
    """Entrywise test that K u = lam u + v given that v is an eigenvector:
    u[n+i] = -u[i]/lam + v[i]/lam^2 and the neighbor-sum equation."""
    field, lam = _as_field(lam)
    if not lam:
        raise DomainError("the entrywise equations require lambda != 0")
    if not check_eigvec_equations(g, lam, v):
        raise DomainError("v does not satisfy the eigenvector equations")
    n = g.n
    v = _coerce_vector(field, v)
    u = _coerce_vector(field, u)
    inv = lam.inverse()
    inv2 = inv * inv
    lam2 = lam * lam
    for i in range(n):
        if u[n + i] != -u[i] * inv + v[i] * inv2:
            return False
        du = g.degrees[i] - 1
        s = field.zero()
        for j in g.adj[i]:
            s = s + u[j]
        if s != u[i] * (du + lam2) * inv - v[i] * (du - lam2) * inv2:
            return False
    return True


# -- chain extraction ---------------------------------------------------------

@dataclass
class JordanChain:
    matrix_label: str
    field: NumberField
    eigenvalue: NumberFieldElement
    vectors: list[list[NumberFieldElement]]

    @property
    def length(self) -> int:
        return len(self.vectors)

    def conjugate(self) -> "JordanChain":
        """Chain at the conjugate root (quadratic fields)."""
        conj = self.field.conjugate
        return JordanChain(
            self.matrix_label,
            self.field,
            conj(self.eigenvalue),
            [[conj(x) for x in vec] for vec in self.vectors],
        )

    def to_json(self) -> dict:
        def enc(x: NumberFieldElement):
            return [str(c) for c in x.coeffs]

        return {
            "matrix": self.matrix_label,
            "field": list(self.field.modulus),
            "eigenvalue": enc(self.eigenvalue),
            "length": self.length,
            "vectors": [[enc(x) for x in vec] for vec in self.vectors],
        }


def _field_matrix_minus_lambda(
    mat: Matrix, field: NumberField, lam: NumberFieldElement
):
    n = len(mat)
    out = [[field.from_rational(mat[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        out[i][i] = out[i][i] - lam
    return out


def verify_chain(mat: Matrix, chain: JordanChain) -> bool:
    """Independent verification by multiplication: (M - lam I) u1 = 0 and
    (M - lam I) uj = u_{j-1}."""
    field = chain.field
    a = _field_matrix_minus_lambda(mat, field, chain.eigenvalue)
    zero_vec = [field.zero()] * len(mat)
    prev = zero_vec
    for vec in chain.vectors:
        if field_mat_vec(a, vec) != prev:
            return False
        prev = vec
    return bool(chain.vectors) and any(chain.vectors[0])


def extract_chain(
    mat: Matrix, factor: Poly, target_len: int, label: str = ""
) -> JordanChain | None:
    """A Jordan chain of exactly target_len at a root of the given factor,
    or None when no block that large exists.

    Works over Q[x]/(factor); factors of degree > 2 are unsupported.  The
    top vector is selected from ker((M - lam I)^k) \\ ker((M - lam I)^(k-1))
    and the chain is walked down, which guarantees the requested length.
    The result is re-verified by multiplication before being returned.
    """
    factor = intpoly.primitive(factor)
    d = intpoly.degree(factor)
    if d > 2:
        raise DomainError("chain extraction supports fields of degree <= 2 only")
    if d < 1:
        raise DomainError("factor must be nonconstant")
    cp = exactmat.charpoly(mat)
    mult = 0
    rest = cp
    while True:
        dm = intpoly.divmod_exact(rest, factor)
        if dm is None or not intpoly.is_zero(dm[1]):
            break
        rest = dm[0]
        mult += 1
    if mult == 0:
        raise DomainError(
            f"{intpoly.to_string(factor)} does not divide the characteristic "
            "polynomial"
        )
    if target_len < 1 or target_len > mult:
        return None
    field = NumberField(factor)
    lam = field.generator()
    a = _field_matrix_minus_lambda(mat, field, lam)
    zero, one = field.zero(), field.one()
    power = a
    for _ in range(target_len - 1):
        power = field_mat_mul(power, a)
    ker_k = field_kernel(power, zero, one)
    if target_len == 1:
        if not ker_k:
            return None
        top = ker_k[0]
    else:
        prev_power = a
        for _ in range(target_len - 2):
            prev_power = field_mat_mul(prev_power, a)
        ker_prev = field_kernel(prev_power, zero, one)
        if len(ker_k) == len(ker_prev):
            return None
        top = _vector_outside_span(ker_k, ker_prev)
        if top is None:
            raise StructureError("kernel filtration inconsistency")
    vectors = [top]
    for _ in range(target_len - 1):
        vectors.append(field_mat_vec(a, vectors[-1]))
    vectors.reverse()
    chain = JordanChain(label, field, lam, vectors)
    if not verify_chain(mat, chain):
        raise StructureError("extracted chain failed verification")
    return chain


def _vector_outside_span(candidates: list[list], basis: list[list]):
    base_rank = field_rank(basis) if basis else 0
    for cand in candidates:
        if field_rank(basis + [cand]) > base_rank:
            return cand
    return None


def lift_chain(bundle, chain: JordanChain) -> tuple[JordanChain | None, int]:
    """Map a chain for K into one for B through X: pad each vector with
    zeros, multiply by X, and drop any leading zero images.

    Returns (lifted chain or None, number of dropped leading vectors).  A
    fully zero lift is only possible at lambda = 1, or -1 for bipartite
    graphs, and yields (None, k).
    """
    g = bundle.graph
    field = chain.field
    zero = field.zero()
    pad = [zero] * (2 * g.m - 2 * g.n)
    images = []
    for vec in chain.vectors:
        images.append(field_mat_vec_int(bundle.X, list(vec) + pad, field))
    start = 0
    while start < len(images) and not any(images[start]):
        start += 1
    if start == len(images):
        return None, start
    lifted = JordanChain("B", field, chain.eigenvalue, images[start:])
    if not verify_chain(bundle.B, lifted):
        raise StructureError("lifted chain failed verification on B")
    return lifted, start


def field_mat_vec_int(mat: Matrix, vec, field: NumberField):
    """mat (integer) times vec (field elements)."""
    zero = field.zero()
    out = []
    for row in mat:
        s = zero
        for x, y in zip(row, vec):
            if x:
                s = s + (y if x == 1 else x * y)
        out.append(s)
    return out


# -- theorem-shaped checks ----------------------------------------------------

def compare_B_M(g: Graph) -> dict:
    """Jordan profiles of B and M side by side.

    With at least two independent cycles the profiles must agree; for a
    unicyclic graph they must differ exactly at x-1 (odd cycle) or at x-1
    and x+1 (even cycle).  Violations raise StructureError.
    """
    from .nbmatrices import build_B, build_M

    if not g.is_connected():
        raise DomainError("graph must be connected")
    if g.m < g.n:
        raise DomainError("comparison requires m >= n")
    rb = jordan_profile(build_B(g), "B")
    rm = jordan_profile(build_M(g), "M")
    mb, mm = rb.structure_map(), rm.structure_map()
    diffs = sorted(
        f for f in set(mb) | set(mm) if mb.get(f) != mm.get(f)
    )
    cycle_rank = g.m - g.n + 1
    if cycle_rank >= 2:
        if diffs:
            raise StructureError(
                f"profiles of B and M differ at {diffs} despite cycle rank "
                f"{cycle_rank}"
            )
    else:
        cyc = unique_cycle(g)
        odd = len(cyc) % 2 == 1
        expected = {(-1, 1)} if odd else {(-1, 1), (1, 1)}
        if set(diffs) != expected:
            raise StructureError(
                f"unicyclic profiles differ at {diffs}, expected {sorted(expected)}"
            )
    return {
        "B": rb,
        "M": rm,
        "equal": not diffs,
        "differing_factors": [intpoly.to_string(f) for f in diffs],
    }


def torres_multiplicities(g: Graph) -> bool:
    """Check the +-1 multiplicities of B for graphs with >= 2 cycles:
    at +1 algebraic = geometric = m-n+1; at -1 both equal m-n+1 when
    bipartite and m-n otherwise."""
    from .nbmatrices import build_B

    cycle_rank = g.m - g.n + 1
    if cycle_rank < 2:
        raise DomainError("requires at least two independent cycles")
    b = build_B(g)
    cp = exactmat.charpoly(b)
    bip = bipartition(g) is not None
    expectations = {1: g.m - g.n + 1, -1: g.m - g.n + (1 if bip else 0)}
    dim = len(b)
    for root, want in expectations.items():
        alg = 0
        rest = cp
        lin = (-root, 1)
        while True:
            dm = intpoly.divmod_exact(rest, lin)
            if dm is None or not intpoly.is_zero(dm[1]):
                break
            rest = dm[0]
            alg += 1
        shifted = [row[:] for row in b]
        for i in range(dim):
            shifted[i][i] -= root
        geom = dim - exactmat.rank(shifted)
        if alg != want or geom != want:
            return False
    return True


def unicyclic_gen_vectors(g: Graph, sign: int) -> tuple[list, list]:
    """The explicit eigenvector v and generalized eigenvector u of K for a
    unicyclic graph at lambda = sign, built from distances to the cycle.

    sign=+1 works for every unicyclic graph; sign=-1 needs an even cycle.
    The postcondition (K - sign I) u = v is verified exactly.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    cyc = unique_cycle(g)
    n = g.n
    dist = distances_to_set(g, cyc)
    if sign == 1:
        v = [1] * n + [-1] * n
        u = [-dist[i] for i in range(n)] + [1 + dist[i] for i in range(n)]
    else:
        if len(cyc) % 2 == 1:
            raise DomainError("lambda = -1 requires an even cycle")
        parts = bipartition(g)
        if parts is None:
            raise StructureError("even-cycle unicyclic graph must be bipartite")
        sigma = [0] * n
        for i in parts[0]:
            sigma[i] = 1
        for i in parts[1]:
            sigma[i] = -1
        v = [sigma[i] for i in range(n)] + [sigma[i] for i in range(n)]
        u = [sigma[i] * (dist[i] - 1) for i in range(n)] + [
            sigma[i] * dist[i] for i in range(n)
        ]
    from .nbmatrices import build_K

    k = build_K(g)
    lhs = exactmat.mat_vec(k, u)
    if [lhs[i] - sign * u[i] for i in range(2 * n)] != v:
        raise StructureError("(K - sign I) u != v for the constructed vectors")
    return v, u


def twin_poly(d: int, adjacent: bool) -> Poly:
    """Minimal polynomial of the twin eigenvalue for common degree d:
    x^2 + (d-1) for non-adjacent twins, x^2 + x + (d-1) for adjacent."""
    return (d - 1, 1, 1) if adjacent else (d - 1, 0, 1)


def twin_eigen(g: Graph, x: int, y: int):
    """Eigenpair of K supported on a twin pair (0-based x, y).

    The vector has v_x = 1, v_y = -1, v_{n+x} = -1/lam, v_{n+y} = 1/lam and
    zeros elsewhere; lam satisfies lam^2 = 1-d (non-adjacent twins) or
    lam^2 + lam + (d-1) = 0 (adjacent twins).  Verified via K v = lam v.
    """
    adjacent = g.has_edge(x, y)
    expected = (g.masks[x] ^ g.masks[y]) == ((1 << x) | (1 << y)) if adjacent \
        else g.masks[x] == g.masks[y]
    if not expected or x == y:
        raise DomainError(f"vertices {x + 1} and {y + 1} are not twins")
    d = g.degrees[x]
    if d < 2:
        raise DomainError("twin eigenvector requires common degree >= 2")
    field = NumberField(twin_poly(d, adjacent))
    lam = field.generator()
    inv = lam.inverse()
    n = g.n
    v = [field.zero()] * (2 * n)
    v[x] = field.one()
    v[y] = -field.one()
    v[n + x] = -inv
    v[n + y] = inv
    from .nbmatrices import build_K

    k = build_K(g)
    if field_mat_vec_int(k, v, field) != [lam * c for c in v]:
        raise StructureError("twin eigenvector failed K v = lam v")
    return lam, v


def twin_chain_constraints(g: Graph, x: int, y: int, chain: JordanChain) -> bool:
    """Check the twin equalities on a chain of K of length >= 2: at the twin
    eigenvalue the eigenvector satisfies v_x = v_y; at any other nonzero
    eigenvalue the generalized eigenvector satisfies u_x = u_y.

    Both roots of the twin quadratic share the constraint (conjugation is a
    field automorphism), so only the minimal polynomial is compared.
    """
    if chain.length < 2:
        raise DomainError("chain of length >= 2 required")
    if not chain.eigenvalue:
        raise DomainError("lambda != 0 required")
    adjacent = g.has_edge(x, y)
    d = g.degrees[x]
    tp = twin_poly(d, adjacent)
    v, u = chain.vectors[0], chain.vectors[1]
    if chain.field.modulus == tp:
        return v[x] == v[y]
    return u[x] == u[y]
