import math
from fractions import Fraction
from itertools import product

import pytest

from hopfpath import (
    binom_vanishes, cyclotomic_context, cyclotomic_polynomial, gauss_binom,
    gauss_binom_row, order, parse_scalar, q_factorial, q_int, root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_context_degree_is_totient():
    for n, phi in [(1, 1), (2, 1), (3, 2), (8, 4), (9, 6), (12, 4), (15, 8)]:
        assert cyclotomic_context(n).degree == phi


def _pool(ctx):
    z = ctx.zeta()
    half = ctx.from_rational(Fraction(1, 2))
    return [ctx.one(), -ctx.one(), ctx.from_rational(3), half, z, z * z,
            z + ctx.one(), z - half]


@pytest.mark.parametrize("conductor", [1, 2, 4, 5, 12])
def test_field_axioms(conductor):
    ctx = cyclotomic_context(conductor)
    pool = _pool(ctx)
    for a, b, c in product(pool, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
    for a in pool:
        if not a.is_zero():
            assert a * a.inverse() == ctx.one()
            assert a / a == ctx.one()


def test_rational_embedding_is_ring_hom():
    ctx = cyclotomic_context(8)
    for x, y in product([0, 1, -2, Fraction(3, 4)], repeat=2):
        assert ctx.from_rational(x) + ctx.from_rational(y) \
            == ctx.from_rational(Fraction(x) + Fraction(y))
        assert ctx.from_rational(x) * ctx.from_rational(y) \
            == ctx.from_rational(Fraction(x) * Fraction(y))


def test_root_of_unity_examples():
    ctx4 = cyclotomic_context(4)
    assert root_of_unity(ctx4, 1) == ctx4.one()
    assert root_of_unity(ctx4, 2) == -ctx4.one()
    # minimal-polynomial identity for a primitive cube root
    q = root_of_unity(cyclotomic_context(12), 3)
    assert (q * q + q + 1).is_zero()
    assert q ** 3 == 1 and q != 1


def test_root_of_unity_primitive():
    ctx = cyclotomic_context(12)
    for m in (1, 2, 3, 4, 6, 12):
        q = root_of_unity(ctx, m)
        assert q ** m == ctx.one()
        for t in range(1, m):
            assert q ** t != ctx.one()


def test_root_of_unity_errors():
    ctx = cyclotomic_context(4)
    with pytest.raises(ValueError, match="not representable"):
        root_of_unity(ctx, 3)


def test_order_examples():
    ctx = cyclotomic_context(6)
    assert order(ctx.one()) == 1
    assert order(-ctx.one()) == 2
    assert order(ctx.from_rational(2)) is None
    assert order(root_of_unity(ctx, 3)) == 3
    # -zeta_3 has order 6 inside Q(zeta_3)
    ctx3 = cyclotomic_context(3)
    assert order(-root_of_unity(ctx3, 3)) == 6
    with pytest.raises(ValueError, match="order of zero"):
        order(ctx.zero())


def test_q_int_examples():
    ctx = cyclotomic_context(12)
    one = ctx.one()
    assert q_int(3, one) == 3
    assert q_int(2, -one).is_zero()
    assert q_int(0, one).is_zero()
    w = root_of_unity(ctx, 3)
    assert q_int(3, w).is_zero()


def test_q_factorial_examples():
    ctx = cyclotomic_context(12)
    w = root_of_unity(ctx, 3)
    assert q_factorial(0, w) == 1
    assert q_factorial(3, w).is_zero()
    assert q_factorial(2, -ctx.one()).is_zero()
    assert q_factorial(4, ctx.one()) == 24


def test_gauss_binom_examples():
    ctx = cyclotomic_context(4)
    i = root_of_unity(ctx, 4)
    assert gauss_binom(2, 1, -ctx.one()).is_zero()
    assert gauss_binom(7, 0, i) == 1
    # generic expansion 1 + q + 2q^2 + q^3 + q^4 evaluated at q = i
    expected = 1 + i + 2 * i ** 2 + i ** 3 + i ** 4
    assert gauss_binom(4, 2, i) == expected
    assert expected.is_zero()
    with pytest.raises(ValueError):
        gauss_binom(3, 5, i)


def test_gauss_binom_agrees_with_factorial_quotient():
    # independent route: the factorial quotient, wherever it is defined
    ctx = cyclotomic_context(12)
    for m in (1, 2, 3, 4, 6, 12):
        q = root_of_unity(ctx, m)
        for n in range(9):
            for k in range(n + 1):
                den = q_factorial(k, q) * q_factorial(n - k, q)
                if den.is_zero():
                    continue
                assert gauss_binom(n, k, q) == q_factorial(n, q) / den


def test_gauss_binom_symmetry_and_factorial_identity():
    ctx = cyclotomic_context(12)
    for m in (2, 3, 4):
        q = root_of_unity(ctx, m)
        for n in range(10):
            row = gauss_binom_row(n, q)
            for k in range(n + 1):
                assert row[k] == row[n - k]
                assert row[k] * q_factorial(k, q) * q_factorial(n - k, q) \
                    == q_factorial(n, q)


def test_binom_vanishes_examples():
    assert binom_vanishes(1, 1, 2) is True
    assert binom_vanishes(1, 1, 3) is False
    for d in (2, 3, 7):
        assert binom_vanishes(d, 0, d) is False
    with pytest.raises(ValueError, match="nontrivial root"):
        binom_vanishes(1, 1, 1)


@pytest.mark.parametrize("d", range(2, 7))
def test_vanishing_criterion_matches_pascal(d):
    # exhaustive comparison of the Pascal route against the integer-part
    # criterion (the full range runs in the acceptance suite)
    ctx = cyclotomic_context(d)
    q = root_of_unity(ctx, d)
    for n in range(2 * d + 3):
        row = gauss_binom_row(n, q)
        for k in range(n + 1):
            assert row[k].is_zero() == binom_vanishes(k, n - k, d)


def test_scalar_pow_negative():
    ctx = cyclotomic_context(8)
    z = ctx.zeta()
    assert z ** -1 == z ** 7
    assert (z + 1) ** -2 * (z + 1) ** 2 == ctx.one()


def test_render_parse_round_trip():
    ctx = cyclotomic_context(12)
    z = ctx.zeta()
    samples = [
        ctx.zero(), ctx.one(), -ctx.one(), ctx.from_rational(Fraction(1, 2)),
        z, -z, 3 * z ** 2 - 1, z ** 3 - Fraction(5, 7) * z + 2,
    ]
    for x in samples:
        assert parse_scalar(ctx, str(x)) == x
    assert str(ctx.from_rational(Fraction(1, 2)) + 3 * z ** 2) \
        == "1/2 + 3*z^2"


def test_parse_scalar_rejects_garbage():
    ctx = cyclotomic_context(4)
    for bad in ("", "x + 1", "1//2", "z^"):
        with pytest.raises(ValueError):
            parse_scalar(ctx, bad)


def test_order_search_covers_lcm_two_n():
    # all roots of unity in Q(zeta_N) have order dividing lcm(2, N)
    for conductor in (3, 4, 5, 6):
        ctx = cyclotomic_context(conductor)
        target = math.lcm(2, conductor)
        z = -ctx.zeta()
        t = order(z)
        assert t is not None and target % t == 0


def test_scalars_compare_within_conductor():
    a = cyclotomic_context(4).zeta()
    b = cyclotomic_context(8).zeta() ** 2
    # structurally different conductors never compare equal, and mixing
    # them in arithmetic is an error
    assert a != b
    with pytest.raises(ValueError, match="different cyclotomic"):
        a + b


def test_scalar_division_by_zero():
    ctx = cyclotomic_context(4)
    with pytest.raises(ZeroDivisionError):
        ctx.one() / ctx.zero()
