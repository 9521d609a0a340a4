"""Univariate polynomials with arbitrary-precision integer coefficients.

Polynomials are plain tuples of ints, lowest degree first, with a nonzero
leading coefficient; the zero polynomial is the empty tuple ().  All
arithmetic is exact.  Squarefree decomposition (Yun) and a bounded factor
refinement (rational roots plus quadratic divisors) are provided; full
irreducible factorization is out of scope.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def poly(coeffs) -> Poly:
    """Normalize a coefficient iterable (ascending) into a Poly."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Poly) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def leading(p: Poly) -> int:
    return p[-1] if p else 0


def constant(p: Poly) -> int:
    return p[0] if p else 0


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly(
        (p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)
    )


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def scale(p: Poly, c: int) -> Poly:
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def pow_(p: Poly, e: int) -> Poly:
    if e < 0:
        raise ValueError("negative polynomial power")
    out = ONE
    base = p
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def shift(p: Poly, k: int) -> Poly:
    """Multiply by x^k."""
    if not p:
        return ZERO
    return (0,) * k + p


def eval_at(p: Poly, x: int):
    """Horner evaluation; works for int and Fraction arguments."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return poly(i * p[i] for i in range(1, len(p)))


def divmod_exact(p: Poly, q: Poly) -> tuple[Poly, Poly] | None:
    """Divide in Q[x], returning (quotient, remainder) only when both have
    integer coefficients; None otherwise."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(rem) >= len(q):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(q):
            break
        f = rem[-1] / lead
        k = len(rem) - len(q)
        quo[k] = f
        for i, c in enumerate(q):
            rem[k + i] -= f * c
        rem.pop()
    if any(f.denominator != 1 for f in quo) or any(f.denominator != 1 for f in rem):
        return None
    return poly(int(f) for f in quo), poly(int(f) for f in rem)


def divides(q: Poly, p: Poly) -> bool:
    dm = divmod_exact(p, q)
    return dm is not None and is_zero(dm[1])


def div_exact(p: Poly, q: Poly) -> Poly:
    """Exact division p / q; raises if q does not divide p over Z."""
    dm = divmod_exact(p, q)
    if dm is None or not is_zero(dm[1]):
        raise ArithmeticError(f"{q} does not divide {p} exactly")
    return dm[0]


def content(p: Poly) -> int:
    """GCD of coefficients, carrying the sign of the leading coefficient."""
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    if g and leading(p) < 0:
        g = -g
    return g


def primitive(p: Poly) -> Poly:
    """Primitive part: content removed, leading coefficient positive."""
    if not p:
        return ZERO
    c = content(p)
    return tuple(a // c for a in p)


def pseudo_rem(p: Poly, q: Poly) -> Poly:
    """Pseudo-remainder of p by q (premultiplied so division stays in Z[x])."""
    d = len(p) - len(q)
    if d < 0:
        return p
    lq = q[-1]
    rem = list(scale(p, lq ** (d + 1)))
    while len(rem) >= len(q):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(q):
            break
        f, r = divmod(rem[-1], lq)
        if r:
            raise ArithmeticError("pseudo remainder lost exactness")
        k = len(rem) - len(q)
        for i, c in enumerate(q):
            rem[k + i] -= f * c
        rem.pop()
    return poly(rem)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive GCD in Z[x] (primitive PRS), positive leading coefficient."""
    a, b = primitive(p), primitive(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive(pseudo_rem(a, b))
        a, b = b, r
    return a


def squarefree_decomposition(p: Poly) -> tuple[int, list[tuple[Poly, int]]]:
    """Yun decomposition p = c * prod q_i^i with q_i squarefree, primitive,
    pairwise coprime, positive leading coefficients.

    Returns (c, [(q_i, i), ...]) with constant factors dropped from the list.
    """
    if not p:
        raise DomainPolyError("squarefree decomposition of the zero polynomial")
    c = content(p)
    b = primitive(p)
    if degree(b) == 0:
        return c, []
    db = derivative(b)
    a = poly_gcd(b, db)
    out: list[tuple[Poly, int]] = []
    w = div_exact(b, a)
    y = div_exact(db, a)
    z = sub(y, derivative(w))
    i = 1
    while degree(w) > 0:
        g = poly_gcd(w, z) if z else w
        if degree(g) > 0:
            out.append((g, i))
            w = div_exact(w, g)
        y2 = div_exact(z, g) if z else ZERO
        z = sub(y2, derivative(w))
        i += 1
    return c, out


class DomainPolyError(ValueError):
    pass


def cauchy_root_bound(p: Poly) -> Fraction:
    """1 + max |a_i / a_lead| bounds the absolute value of every root."""
    lead = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return 1 + Fraction(m, lead)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of p (without multiplicity), via the rational
    root theorem."""
    if not p:
        raise DomainPolyError("zero polynomial")
    q = list(p)
    roots: list[Fraction] = []
    zeros = 0
    while q and q[0] == 0:
        q.pop(0)
        zeros += 1
    if zeros:
        roots.append(Fraction(0))
    if len(q) <= 1:
        return roots
    pp = poly(q)
    for num in _divisors(pp[0] if pp[0] else 1):
        for den in _divisors(pp[-1]):
            for s in (1, -1):
                cand = Fraction(s * num, den)
                if cand not in roots and eval_at(pp, cand) == 0:
                    roots.append(cand)
    roots.sort()
    return roots


def refine_factor(q: Poly) -> tuple[list[Poly], bool]:
    """Split a squarefree primitive q into irreducible factors of degree <= 2.

    Extracts rational roots first, then quadratic divisors a*x^2+b*x+c by
    bounded coefficient search with exact trial division (a | leading
    coefficient, c | constant coefficient, |b| <= 2*a*(1 + Cauchy bound)).
    Returns (factors, fully_refined); when the leftover has degree >= 3 it is
    appended unsplit and the flag is False.  Factors are sorted by
    (degree, coefficients).
    """
    rest = primitive(q)
    factors: list[Poly] = []
    for r in rational_roots(rest):
        lin = poly((-r.numerator, r.denominator))
        while divides(lin, rest) and degree(rest) >= 1:
            factors.append(lin)
            rest = div_exact(rest, lin)
    # q squarefree: each root once; the loop above still guards degree.
    changed = True
    while changed and degree(rest) >= 4:
        changed = False
        bound = cauchy_root_bound(rest)
        bmax_base = 2 * (1 + bound)
        for a in _divisors(rest[-1]):
            bmax = int(a * bmax_base) + 1
            for c_abs in _divisors(rest[0]):
                for c in (c_abs, -c_abs):
                    for b in range(-bmax, bmax + 1):
                        cand = poly((c, b, a))
                        if degree(cand) == 2 and divides(cand, rest):
                            factors.append(primitive(cand))
                            rest = div_exact(rest, cand)
                            changed = True
                            break
                    if changed:
                        break
                if changed:
                    break
            if changed:
                break
    refined = True
    if degree(rest) >= 1:
        if degree(rest) <= 2:
            factors.append(rest)
        else:
            factors.append(rest)
            refined = False
    factors.sort(key=lambda f: (degree(f), f))
    return factors, refined


def to_string(p: Poly, var: str = "x") -> str:
    """Human-readable form like "x^2+x+2"; ascending input, descending print."""
    if not p:
        return "0"
    parts: list[str] = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            term = str(mag)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            term = xpow if mag == 1 else f"{mag}{xpow}"
        parts.append(sign + term)
    return "".join(parts)


def from_roots(roots) -> Poly:
    """Monic polynomial with the given integer roots."""
    out = ONE
    for r in roots:
        out = mul(out, (-r, 1))
    return out
