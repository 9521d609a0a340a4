"""Dense exact linear algebra over Z and Q.

Matrices are lists of row lists.  Integer matrices take fraction-free paths
(Bareiss); rational entries are cleared to integers first, which preserves
rank and kernels.  Characteristic polynomials are computed exactly either by
evaluation/interpolation with Bareiss determinants (small dimensions) or by
Hessenberg reduction modulo independent 60-bit primes with CRT under a
rigorous coefficient bound (large dimensions).  The two paths cross-check
each other in the test suite.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, gcd

from . import intpoly
from .intpoly import Poly

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def copy(m) -> Matrix:
    return [row[:] for row in m]


def transpose(m) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def _clear_denominators(m) -> Matrix:
    """Scale each row by the LCM of its denominators (rank/kernel safe)."""
    out = []
    for row in m:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                d = x.denominator
                lcm = lcm // gcd(lcm, d) * d
        out.append([int(x * lcm) for x in row])
    return out


def _is_integer_matrix(m) -> bool:
    return all(isinstance(x, int) for row in m for x in row)


def bareiss_echelon(m: Matrix) -> tuple[Matrix, list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon rows, pivot column list).  Entries stay integral
    throughout; every entry of an intermediate row is a minor of the input.
    """
    a = copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        ar = a[r]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            for j in range(c, cols):
                ai[j] = (piv * ai[j] - f * ar[j]) // prev
        piv_cols.append(c)
        prev = piv
        r += 1
    return a, piv_cols


def rank(m) -> int:
    """Exact rank over Q."""
    if not m or not m[0]:
        return 0
    if not _is_integer_matrix(m):
        m = _clear_denominators(m)
    _, piv = bareiss_echelon(m)
    return len(piv)


def det_bareiss(m: Matrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = copy(m)
    prev = 1
    sign = 1
    for c in range(n - 1):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        ac = a[c]
        for i in range(c + 1, n):
            ai = a[i]
            f = ai[c]
            for j in range(c, n):
                ai[j] = (piv * ai[j] - f * ac[j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def kernel_basis(m) -> list[list[int]]:
    """Basis of the right null space over Q.

    Each basis vector is scaled to integer entries with content 1 and a
    positive first nonzero entry; vectors are ordered by their free column.
    """
    if not m or not m[0]:
        return []
    if not _is_integer_matrix(m):
        m = _clear_denominators(m)
    ech, piv_cols = bareiss_echelon(m)
    cols = len(m[0])
    piv_set = set(piv_cols)
    basis = []
    for f in (c for c in range(cols) if c not in piv_set):
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for r in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[r]
            if pc > f:
                continue
            row = ech[r]
            s = Fraction(row[f])
            for c2 in piv_cols[r + 1:]:
                if vec[c2]:
                    s += row[c2] * vec[c2]
            if s:
                vec[pc] = -s / row[pc]
        basis.append(_normalize_vector(vec))
    return basis


def _normalize_vector(vec) -> list[int]:
    lcm = 1
    for x in vec:
        d = x.denominator if isinstance(x, Fraction) else 1
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(x * lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    first = next((x for x in ints if x), 0)
    if first < 0:
        ints = [-x for x in ints]
    return ints


def solve_linear(m, b):
    """One particular rational solution of m x = b, or None if inconsistent."""
    rows = len(m)
    if rows != len(b):
        raise ValueError("dimension mismatch between matrix and rhs")
    if rows == 0:
        return []
    cols = len(m[0])
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    if not _is_integer_matrix(aug):
        aug = _clear_denominators(aug)
    ech, piv_cols = bareiss_echelon(aug)
    if piv_cols and piv_cols[-1] == cols:
        return None
    sol = [Fraction(0)] * cols
    for r in range(len(piv_cols) - 1, -1, -1):
        pc = piv_cols[r]
        row = ech[r]
        s = Fraction(row[cols])
        for c2 in piv_cols[r + 1:]:
            s -= row[c2] * sol[c2]
        sol[pc] = s / row[pc]
    return sol


def eval_poly_at_matrix(p: Poly, m: Matrix) -> Matrix:
    """Horner evaluation p(m) for a square matrix, exact."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    acc = zeros(n, n)
    for c in reversed(p if p else (0,)):
        acc = mat_mul(acc, m)
        for i in range(n):
            acc[i][i] += c
    return acc


# -- characteristic polynomial -------------------------------------------

_CHARPOLY_MODULAR_CUTOFF = 24


def charpoly(m: Matrix) -> Poly:
    """Monic characteristic polynomial det(xI - m) of an integer matrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return intpoly.ONE
    if n <= _CHARPOLY_MODULAR_CUTOFF:
        return charpoly_interpolation(m)
    return charpoly_modular(m)


def charpoly_interpolation(m: Matrix) -> Poly:
    """det(xI - m) by Bareiss evaluation at x = 0..n and exact interpolation."""
    n = len(m)
    xs = list(range(n + 1))
    ys = []
    for k in xs:
        a = [[(k if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]
        ys.append(det_bareiss(a))
    p = _interpolate_integer(xs, ys)
    if intpoly.leading(p) != 1 or intpoly.degree(p) != n:
        raise ArithmeticError("characteristic polynomial interpolation failed")
    return p


def _interpolate_integer(xs, ys) -> Poly:
    """Newton divided differences; asserts integer coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * n
    acc = [Fraction(1)]
    for i in range(n):
        for k, c in enumerate(acc):
            out[k] += coef[i] * c
        if i < n - 1:
            acc = [Fraction(0)] + acc
            for k in range(len(acc) - 1):
                acc[k] -= xs[i] * acc[k + 1]
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("interpolation produced non-integer coefficients")
    return intpoly.poly(int(c) for c in out)


def charpoly_mod(m: Matrix, p: int) -> list[int]:
    """Characteristic polynomial coefficients mod p (ascending, length n+1)
    via Hessenberg reduction and the Hessenberg determinant recurrence."""
    n = len(m)
    h = [[x % p for x in row] for row in m]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[k + 1], h[piv] = h[piv], h[k + 1]
            for row in h:
                row[k + 1], row[piv] = row[piv], row[k + 1]
        inv = pow(h[k + 1][k], p - 2, p)
        hk = h[k + 1]
        for i in range(k + 2, n):
            f = h[i][k] * inv % p
            if f:
                hi = h[i]
                for j in range(k, n):
                    hi[j] = (hi[j] - f * hk[j]) % p
                for row in h:
                    row[k + 1] = (row[k + 1] + f * row[i]) % p
    polys: list[list[int]] = [[1]]
    for i in range(1, n + 1):
        prev = polys[i - 1]
        d = h[i - 1][i - 1]
        cur = [0] + prev
        for j, c in enumerate(prev):
            cur[j] = (cur[j] - d * c) % p
        w = 1
        for k in range(1, i):
            w = w * h[i - k][i - k - 1] % p
            if w == 0:
                break
            f = h[i - 1 - k][i - 1] * w % p
            if f:
                lower = polys[i - 1 - k]
                for j, c in enumerate(lower):
                    cur[j] = (cur[j] - f * c) % p
        polys.append(cur)
    return polys[n]


def charpoly_modular(m: Matrix) -> Poly:
    """Exact charpoly via CRT over enough 60-bit primes.

    |c_k| <= C(n,k) * s^k with s = max row 1-norm is a rigorous bound
    (elementary symmetric functions of eigenvalues, each |lambda| <= s).
    """
    n = len(m)
    s = max((sum(abs(x) for x in row) for row in m), default=1) or 1
    bound = max(comb(n, k) * s**k for k in range(n + 1))
    primes = []
    acc = 1
    for p in prime_pool(64):
        primes.append(p)
        acc *= p
        if acc > 2 * bound:
            break
    if acc <= 2 * bound:
        raise ArithmeticError("prime pool exhausted for charpoly bound")
    residues = [charpoly_mod(m, p) for p in primes]
    coeffs = [
        _crt_signed([r[k] for r in residues], primes, acc) for k in range(n + 1)
    ]
    out = intpoly.poly(coeffs)
    if intpoly.leading(out) != 1 or intpoly.degree(out) != n:
        raise ArithmeticError("modular characteristic polynomial failed")
    return out


def _crt_signed(residues: list[int], primes: list[int], modulus: int) -> int:
    x = 0
    for r, p in zip(residues, primes):
        q = modulus // p
        x += r * q * pow(q % p, p - 2, p)
    x %= modulus
    if x > modulus // 2:
        x -= modulus
    return x


# -- modular rank fast path ------------------------------------------------

def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3e24 with these witnesses
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_POOL: list[int] = []


def prime_pool(count: int = 32) -> list[int]:
    """Deterministic pool of 60-bit primes for the modular fast paths."""
    global _PRIME_POOL
    if len(_PRIME_POOL) < count:
        pool = []
        n = (1 << 60) + 1
        while len(pool) < count:
            if _is_probable_prime(n):
                pool.append(n)
            n += 2
        _PRIME_POOL = pool
    return _PRIME_POOL[:count]


def rank_mod(m: Matrix, p: int) -> int:
    """Rank of an integer matrix modulo p (never exceeds the Q-rank)."""
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        ar = a[r]
        for i in range(r + 1, rows):
            f = a[i][c] * inv % p
            if f:
                ai = a[i]
                for j in range(c, cols):
                    ai[j] = (ai[j] - f * ar[j]) % p
        r += 1
    return r


def rank_modular_consensus(m: Matrix, rng: random.Random | None = None) -> int:
    """Rank by agreement of three 60-bit primes, falling back to a certified
    Bareiss elimination when they disagree."""
    pool = prime_pool(32)
    primes = pool[:3] if rng is None else rng.sample(pool, 3)
    ranks = {rank_mod(m, p) for p in primes}
    if len(ranks) == 1:
        return ranks.pop()
    return rank(m)
