import random
from fractions import Fraction

import pytest

from nbjordan.errors import DomainError
from nbjordan.numfield import (
    NumberField,
    field_kernel,
    field_mat_mul,
    field_rank,
    field_solve,
)


def test_construction_guards():
    with pytest.raises(DomainError):
        NumberField((1,))  # constant
    with pytest.raises(DomainError):
        NumberField((2, 2))  # not monic
    with pytest.raises(DomainError):
        NumberField((-1, 0, 1))  # x^2-1 reducible
    with pytest.raises(DomainError):
        NumberField((0, 0, 0, 1))  # x^3 has rational root 0
    NumberField((2, 0, 1))
    NumberField((-2, 0, 0, 1))  # x^3 - 2 passes the rational-root screen


def test_generator_is_root():
    for modulus in ((2, 0, 1), (3, 0, 1), (2, 1, 1), (-5, 1)):
        field = NumberField(modulus)
        a = field.generator()
        acc = field.zero()
        power = field.one()
        for c in modulus:
            acc = acc + power * c
            power = power * a
        assert not acc


def test_inverse_example():
    field = NumberField((2, 0, 1))  # alpha^2 = -2
    a = field.generator()
    assert 1 / a == -a / 2
    assert a * a == -2
    assert (a + 1) * (a + 1).inverse() == field.one()


def test_field_axioms_randomized():
    rng = random.Random(31)
    for modulus in ((2, 0, 1), (3, 0, 1), (2, 1, 1)):
        field = NumberField(modulus)

        def rand_elt():
            return field.element(
                [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2)]
            )

        for _ in range(60):
            a, b = rand_elt(), rand_elt()
            if not a:
                continue
            assert (a * b) / a == b
            assert a * (b + 1) == a * b + a


def test_noninvertible_detects_reducible_modulus():
    # x^4 + 3x^2 + 2 = (x^2+1)(x^2+2) has no rational root, so construction
    # passes; inverting alpha^2+1 must then fail.
    field = NumberField((2, 0, 3, 0, 1))
    a = field.generator()
    with pytest.raises(DomainError):
        (a * a + 1).inverse()


def test_conjugate_automorphism():
    field = NumberField((2, 1, 1))
    a = field.generator()
    c = field.conjugate(a)
    assert a + c == -1  # sum of roots
    assert a * c == 2  # product of roots
    x = 3 * a + Fraction(1, 2)
    y = field.conjugate(x)
    assert field.conjugate(y) == x


def test_rational_detection():
    field = NumberField((-7, 1))
    lam = field.generator()
    assert lam.is_rational() and lam.as_rational() == 7
    q = NumberField((2, 0, 1)).generator()
    assert not q.is_rational()
    with pytest.raises(DomainError):
        q.as_rational()


def test_field_rref_solve_kernel():
    field = NumberField((2, 0, 1))
    a = field.generator()
    one, zero = field.one(), field.zero()
    m = [[one, a], [a, -2 * one]]  # second row = a * first row
    assert field_rank(m) == 1
    ker = field_kernel(m, zero, one)
    assert len(ker) == 1
    v = ker[0]
    assert all(x * v[0] + y * v[1] == zero for x, y in m)
    sol = field_solve(m, [a, -2 * one], zero)
    assert sol is not None
    assert [m[0][0] * sol[0] + m[0][1] * sol[1]] == [a]
    assert field_solve([[zero, zero]], [one], zero) is None


def test_field_mat_mul():
    field = NumberField((2, 0, 1))
    a = field.generator()
    one = field.one()
    m = [[a, one], [one, a]]
    sq = field_mat_mul(m, m)
    assert sq[0][0] == a * a + 1
    assert sq[0][1] == 2 * a
