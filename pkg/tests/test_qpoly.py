from math import comb

import pytest

from weylfusion.qpoly import QPoly, ZERO_DEGREE, q_integer, qbinom


def test_canonical_form(poly):
    assert poly(1, 0, 0).coeffs == (1,)
    assert poly(0, 0).is_zero()
    assert QPoly.zero().degree == ZERO_DEGREE


def test_arithmetic(poly):
    one_plus_t = poly(1, 1)
    assert one_plus_t * one_plus_t == poly(1, 2, 1)
    assert 3 - one_plus_t == poly(2, -1)
    assert one_plus_t + 1 == poly(2, 1)
    assert 2 * one_plus_t == poly(2, 2)
    assert not (3 - one_plus_t).is_nonnegative()


def test_monomial_and_shift(poly):
    assert QPoly.monomial(2, 3) == poly(0, 0, 3)
    assert poly(1, 1).shift(2) == poly(0, 0, 1, 1)
    with pytest.raises(ValueError):
        QPoly.monomial(-1)


def test_str(poly):
    assert str(poly(1, 2, 0, 1)) == "1 + 2t + t^3"
    assert str(QPoly.zero()) == "0"


def test_q_integer(poly):
    assert q_integer(3) == poly(1, 1, 1)
    assert q_integer(0).is_zero()


def test_qbinom_values(poly):
    assert qbinom(4, 2) == poly(1, 1, 2, 1, 1)
    assert qbinom(5, 0) == QPoly.one()
    assert qbinom(0, 0) == QPoly.one()


@pytest.mark.parametrize("n, k", [(3, 5), (2, -1), (-1, 0)])
def test_qbinom_out_of_range_is_zero(n, k):
    assert qbinom(n, k).is_zero()


def test_qbinom_specializes_to_binomial():
    from math import comb
    for n in range(8):
        for k in range(n + 1):
            assert qbinom(n, k).eval_at_one() == comb(n, k)


def test_qbinom_symmetric():
    for n in range(7):
        for k in range(n + 1):
            assert qbinom(n, k) == qbinom(n, n - k)
            coeffs = qbinom(n, k).coeffs
            assert coeffs == tuple(reversed(coeffs))


def test_pascal_identities_exhaustive():
    for n in range(2, 13):
        for k in range(1, n):
            assert qbinom(n, k) == qbinom(n - 1, k - 1) + qbinom(n - 1, k).shift(k)
            assert qbinom(n, k) == qbinom(n - 1, k - 1).shift(n - k) + qbinom(n - 1, k)


def test_qbinom_symmetry_and_value_at_one():
    for n in range(13):
        for k in range(n + 1):
            assert qbinom(n, k) == qbinom(n, n - k)
            assert qbinom(n, k).eval_at_one() == comb(n, k)
