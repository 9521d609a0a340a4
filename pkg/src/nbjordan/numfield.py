"""Arithmetic in Q[x]/(f) for a monic integer polynomial f.

Elements are rational-coefficient residues of degree < deg f.  The modulus
must be irreducible for the quotient to be a field; this is certified here
for degrees 1 and 2 (rational-root / discriminant test) and is the caller's
responsibility beyond that.  Division by a non-invertible element raises,
which doubles as a runtime irreducibility check.

Linear algebra over a field (kernel, solve, rank, RREF) is provided
generically; it works for NumberFieldElement and plain Fraction entries
alike.
"""

from __future__ import annotations

from fractions import Fraction

from . import intpoly
from .errors import DomainError
from .intpoly import Poly


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n**0.5)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r * r == n


class NumberField:
    """Q[x]/(f) for a monic integer polynomial f of degree >= 1."""

    def __init__(self, modulus: Poly):
        modulus = intpoly.poly(modulus)
        d = intpoly.degree(modulus)
        if d < 1:
            raise DomainError("modulus must have degree >= 1")
        if intpoly.leading(modulus) != 1:
            raise DomainError("modulus must be monic")
        if d == 1:
            pass
        elif d == 2:
            c, b, _ = modulus
            if _is_perfect_square(b * b - 4 * c):
                raise DomainError(f"{intpoly.to_string(modulus)} is reducible over Q")
        elif intpoly.rational_roots(modulus):
            raise DomainError("modulus has a rational root")
        self.modulus = modulus
        self.degree = d

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("NumberField", self.modulus))

    def __repr__(self):
        return f"NumberField({intpoly.to_string(self.modulus)})"

    def element(self, coeffs) -> "NumberFieldElement":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            cs = self._reduce(cs)
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NumberFieldElement(self, tuple(cs))

    def zero(self) -> "NumberFieldElement":
        return self.element([])

    def one(self) -> "NumberFieldElement":
        return self.element([1])

    def generator(self) -> "NumberFieldElement":
        """The residue class of x (a root of the modulus)."""
        if self.degree == 1:
            return self.element([-self.modulus[0]])
        return self.element([0, 1])

    def from_rational(self, q) -> "NumberFieldElement":
        return self.element([Fraction(q)])

    def _reduce(self, cs: list[Fraction]) -> list[Fraction]:
        f = self.modulus
        d = self.degree
        cs = cs[:]
        for i in range(len(cs) - 1, d - 1, -1):
            top = cs[i]
            if top:
                for j in range(d):
                    cs[i - d + j] -= top * f[j]
            cs.pop()
        return cs

    def conjugate(self, a: "NumberFieldElement") -> "NumberFieldElement":
        """For degree 2: the nontrivial automorphism alpha -> -b - alpha
        (alpha a root of x^2 + b x + c)."""
        if self.degree != 2:
            raise DomainError("conjugation implemented for quadratic fields only")
        _, b, _ = self.modulus
        c0, c1 = a.coeffs
        return self.element([c0 - b * c1, -c1])


class NumberFieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise DomainError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        return o is not None and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        out = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return self.field.element(out)

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [Fraction(1)]
        while True:
            q, r = _qpoly_divmod(r0, r1)
            if not r:
                break
            s = _qpoly_sub(s0, _qpoly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        if len(r1) != 1:
            raise DomainError(
                "element is not invertible: modulus "
                f"{intpoly.to_string(self.field.modulus)} is not irreducible"
            )
        lead = r1[0]
        return self.field.element([c / lead for c in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"NF[{intpoly.to_string(self.field.modulus)}]({self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}*{var}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] -= f * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]
    while out and out[-1] == 0:
        out.pop()
    return out


# -- generic field linear algebra ------------------------------------------
# Entries may be NumberFieldElement or Fraction; `zero` must compare equal
# to absent values via falsiness.

def field_rref(m: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field; returns (rref, pivot columns)."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    piv_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        inv_piv = a[r][c]
        a[r] = [x / inv_piv for x in a[r]]
        ar = a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        piv_cols.append(c)
        r += 1
    return a, piv_cols


def field_rank(m: list[list]) -> int:
    if not m or not m[0]:
        return 0
    _, piv = field_rref(m)
    return len(piv)


def field_kernel(m: list[list], zero, one) -> list[list]:
    """Right null space basis over a field (free-column convention)."""
    if not m or not m[0]:
        return []
    rref, piv_cols = field_rref(m)
    cols = len(m[0])
    piv_set = set(piv_cols)
    basis = []
    for f in (c for c in range(cols) if c not in piv_set):
        vec = [zero] * cols
        vec[f] = one
        for r, pc in enumerate(piv_cols):
            if pc < f and rref[r][f]:
                vec[pc] = -rref[r][f]
        basis.append(vec)
    return basis


def field_solve(m: list[list], b: list, zero):
    """Particular solution of m x = b over a field, or None."""
    rows = len(m)
    if rows == 0:
        return []
    cols = len(m[0])
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    rref, piv_cols = field_rref(aug)
    if piv_cols and piv_cols[-1] == cols:
        return None
    sol = [zero] * cols
    for r, pc in enumerate(piv_cols):
        sol[pc] = rref[r][cols]
    return sol


def field_mat_vec(m: list[list], v: list) -> list:
    return [sum((x * y for x, y in zip(row, v)), start=row[0] * 0) for row in m]


def field_mat_mul(a: list[list], b: list[list]) -> list[list]:
    bt = list(zip(*b))
    z = a[0][0] * 0
    return [
        [sum((x * y for x, y in zip(row, col)), start=z) for col in bt] for row in a
    ]
