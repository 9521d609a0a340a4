from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbjordan import intpoly
from nbjordan.intpoly import (
    ONE,
    cauchy_root_bound,
    degree,
    derivative,
    div_exact,
    divides,
    divmod_exact,
    eval_at,
    from_roots,
    mul,
    poly,
    poly_gcd,
    pow_,
    primitive,
    rational_roots,
    refine_factor,
    squarefree_decomposition,
    to_string,
)

small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(poly)
nonzero_polys = small_polys.filter(lambda p: p != ())


def test_poly_normalization():
    assert poly([1, 2, 0, 0]) == (1, 2)
    assert poly([0, 0]) == ()
    assert degree(()) == -1
    assert degree((5,)) == 0


def test_mul_and_eval():
    p = mul((1, 1), (-1, 1))  # (x+1)(x-1)
    assert p == (-1, 0, 1)
    assert eval_at(p, 3) == 8
    assert eval_at(p, Fraction(1, 2)) == Fraction(-3, 4)


def test_divmod_exact():
    p = mul((-1, 1), (2, 0, 1))
    q, r = divmod_exact(p, (-1, 1))
    assert q == (2, 0, 1) and r == ()
    assert divmod_exact((1, 1), (2,)) is None  # (x+1)/2 not integral
    assert divides((-1, 1), p)
    assert not divides((1, 1), (-1, 1))


def test_gcd_basic():
    a = mul((-1, 1), (1, 1))
    b = mul((-1, 1), (3, 1))
    assert poly_gcd(a, b) == (-1, 1)
    assert poly_gcd(a, ()) == primitive(a)
    # content is stripped
    assert poly_gcd((4, 8), (6,)) == (1,)


def test_squarefree_examples():
    # (x-1)^2 (x^2+x+1)^2 -> [((x-1)(x^2+x+1), 2)]
    p = mul(pow_((-1, 1), 2), pow_((1, 1, 1), 2))
    c, sf = squarefree_decomposition(p)
    assert c == 1
    assert sf == [(mul((-1, 1), (1, 1, 1)), 2)]
    assert squarefree_decomposition((2, 0, 1))[1] == [((2, 0, 1), 1)]
    assert squarefree_decomposition((0, 0, 0, 1))[1] == [((0, 1), 3)]


def test_squarefree_zero_rejected():
    with pytest.raises(ValueError):
        squarefree_decomposition(())


@settings(max_examples=150, deadline=None)
@given(nonzero_polys, st.integers(1, 3), nonzero_polys, st.integers(1, 2))
def test_squarefree_reconstructs(q1, e1, q2, e2):
    p = mul(pow_(q1, e1), pow_(q2, e2))
    c, sf = squarefree_decomposition(p)
    rebuilt = (c,)
    for q, e in sf:
        rebuilt = mul(rebuilt, pow_(q, e))
    assert rebuilt == p
    for q, e in sf:
        assert poly_gcd(q, derivative(q)) == ONE  # squarefree
    for i in range(len(sf)):
        for j in range(i + 1, len(sf)):
            assert poly_gcd(sf[i][0], sf[j][0]) == ONE  # pairwise coprime


def test_rational_roots():
    p = mul(mul((-1, 2), (3, 1)), (1, 0, 1))  # (2x-1)(x+3)(x^2+1)
    assert rational_roots(p) == [Fraction(-3), Fraction(1, 2)]
    assert rational_roots((0, 1)) == [Fraction(0)]


def test_refine_factor_examples():
    fs, ok = refine_factor(mul((-1, 1), (1, 1, 1)))
    assert ok and fs == [(-1, 1), (1, 1, 1)]
    fs, ok = refine_factor((2, 1, 1))
    assert ok and fs == [(2, 1, 1)]  # discriminant -7, irreducible
    fs, ok = refine_factor(mul((2, 1), (2, 0, 1)))
    assert ok and fs == [(2, 1), (2, 0, 1)]


def test_refine_factor_multiplies_back():
    q = mul(mul((2, 0, 1), (3, 0, 1)), (-1, 1))
    fs, ok = refine_factor(q)
    assert ok
    prod = ONE
    for f in fs:
        prod = mul(prod, f)
    assert prod == q


def test_refine_factor_unrefined_flag():
    # x^4+x+1 is irreducible over Q (no rational root, no quadratic divisor)
    fs, ok = refine_factor((1, 1, 0, 0, 1))
    assert not ok
    assert fs == [(1, 1, 0, 0, 1)]


def test_to_string():
    assert to_string((2, 1, 1)) == "x^2+x+2"
    assert to_string((-1, 1)) == "x-1"
    assert to_string((0, -2, 0, 3)) == "3x^3-2x"
    assert to_string(()) == "0"


def test_cauchy_bound_dominates_roots():
    p = from_roots([3, -5, 2])
    assert cauchy_root_bound(p) > 5


def test_div_exact_error():
    with pytest.raises(ArithmeticError):
        div_exact((1, 1), (2, 1))
