"""Exact field arithmetic: rationals, cyclotomic extensions, prime fields."""

import random
from fractions import Fraction

import pytest

from hopfrb.scalars import (FieldCtx, MixedContextError, Scalar, cyclotomic_polynomial,
                            is_primitive_root, multiplicative_order, parse_field,
                            parse_scalar, scalar_from_json, zeta_power)


def test_rational_ops():
    ctx = FieldCtx.rationals()
    a = ctx.from_fraction(Fraction(2, 3))
    b = ctx.from_int(5)
    assert str(a + b) == "17/3"
    assert str(a * b) == "10/3"
    assert str(a - b) == "-13/3"
    assert str(a / b) == "2/15"
    assert (a ** 0) == ctx.one
    assert str(a ** -2) == "9/4"
    assert (b - b).is_zero
    assert a.inverse() * a == ctx.one


def test_cyclotomic_polynomials():
    # oracle values straight from the product formula
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_degree_one_cyclotomic_contexts():
    # Q(zeta_2) has a one-dimensional power basis; zeta must come out as -1
    ctx = FieldCtx.cyclotomic(2)
    assert ctx.zeta == ctx.from_int(-1)
    assert ctx.root_of_unity(2) == ctx.from_int(-1)
    assert FieldCtx.cyclotomic(1).zeta == FieldCtx.cyclotomic(1).one


def test_cyclotomic_arithmetic():
    ctx = FieldCtx.cyclotomic(5)
    z = ctx.zeta
    # z^5 = 1 and 1 + z + z^2 + z^3 + z^4 = 0
    assert z ** 5 == ctx.one
    total = ctx.zero
    for k in range(5):
        total = total + z ** k
    assert total.is_zero
    # inverse through the extended gcd agrees with the power formula
    assert (z ** 2).inverse() == z ** 3
    x = ctx.one + z
    assert x * x.inverse() == ctx.one


def test_cyclotomic_degree_and_reduction():
    ctx = FieldCtx.cyclotomic(8)
    z = ctx.zeta
    assert z ** 4 == -ctx.one
    assert (z ** 2) * (z ** 2) == -ctx.one
    # phi(8) = 4, so z^4 reduces to a lower-degree representative
    assert len(z.val) == 4


def test_prime_field():
    ctx = FieldCtx.prime(7)
    a = ctx.from_int(3)
    assert a + ctx.from_int(5) == ctx.one
    assert a.inverse() == ctx.from_int(5)
    assert a ** 6 == ctx.one
    assert (a ** -1) == ctx.from_int(5)
    with pytest.raises(ZeroDivisionError):
        ctx.zero.inverse()


def test_prime_field_rejects_composites_and_bounds():
    with pytest.raises(ValueError):
        FieldCtx.prime(6)
    with pytest.raises(ValueError):
        FieldCtx.prime(101)
    with pytest.raises(ValueError):
        FieldCtx.cyclotomic(65)


def test_mixed_context_rejected():
    q = FieldCtx.rationals()
    f7 = FieldCtx.prime(7)
    with pytest.raises(MixedContextError):
        q.one + f7.one
    with pytest.raises(MixedContextError):
        _ = q.one == f7.one


def test_fraction_into_prime_field():
    ctx = FieldCtx.prime(5)
    x = ctx.from_fraction(Fraction(1, 2))
    assert x == ctx.from_int(3)
    with pytest.raises(ZeroDivisionError):
        ctx.from_fraction(Fraction(1, 5))


def test_parse_field_names_round_trip():
    for name in ("Q", "Q(z3)", "Q(z8)", "F7", "F97"):
        ctx = parse_field(name)
        assert ctx.name() == name
        assert parse_field(ctx.name()) == ctx
    with pytest.raises(ValueError):
        parse_field("R")
    with pytest.raises(ValueError):
        parse_field("F4")


def test_parse_scalar_round_trip():
    random.seed(20240811)
    ctx = FieldCtx.cyclotomic(6)
    for _ in range(25):
        coeffs = [Fraction(random.randint(-9, 9), random.randint(1, 9)) for _ in range(2)]
        x = ctx.from_fraction(coeffs[0]) + ctx.from_fraction(coeffs[1]) * ctx.zeta
        assert parse_scalar(str(x), ctx) == x
        assert scalar_from_json(x.to_json(), ctx) == x
    q = FieldCtx.rationals()
    assert parse_scalar("-3/4", q) == q.from_fraction(Fraction(-3, 4))
    assert parse_scalar("7", q) == q.from_int(7)


def test_root_of_unity_and_order():
    ctx = FieldCtx.cyclotomic(12)
    for n in (1, 2, 3, 4, 6, 12):
        z = ctx.root_of_unity(n)
        assert multiplicative_order(z, 24) == n
        assert is_primitive_root(z, n)
    with pytest.raises(ValueError):
        ctx.root_of_unity(5)
    # prime field: F7 has elements of order 6 but none of order 4
    f7 = FieldCtx.prime(7)
    z3 = f7.root_of_unity(3)
    assert multiplicative_order(z3, 7) == 3
    with pytest.raises(ValueError):
        f7.root_of_unity(4)


def test_zeta_power_helper():
    ctx = FieldCtx.cyclotomic(6)
    assert zeta_power(ctx, 6, 3) == -ctx.one
    assert zeta_power(ctx, 3, 1) == ctx.zeta ** 2


def test_scalar_strings_are_exact():
    ctx = FieldCtx.cyclotomic(4)
    x = ctx.from_fraction(Fraction(1, 3)) + ctx.zeta * ctx.from_int(2)
    s = str(x)
    assert "." not in s
    assert parse_scalar(s, ctx) == x
