import random

import pytest
from fractions import Fraction
from gmpy2 import mpq

from oracles import bernoulli_oracle, fraction_cauchy_product
from logpow.series import (
    TruncSeries,
    bernoulli,
    coeff_valuation,
    int_pow,
    log_series,
    mul,
    reciprocal,
    scale_variable,
)


def test_log_series_coefficients():
    assert log_series(2).to_strings() == ["1", "-1/2", "1/3"]
    f = log_series(9)
    assert f[0] == 1
    assert f[9] == mpq(-1, 10)
    assert f.order == 9


def test_mul_examples():
    l2 = log_series(2)
    assert (l2 * l2).to_strings() == ["1", "-1", "11/12"]
    one = TruncSeries.one(2)
    assert l2 * one == l2
    l5 = log_series(5)
    assert l5 * l5.reciprocal() == TruncSeries.one(5)


def test_mul_order_mismatch():
    with pytest.raises(ValueError):
        mul(log_series(2), log_series(3))


def test_mul_matches_fraction_convolution():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(0, 12)
        f = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n + 1)]
        g = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n + 1)]
        expected = fraction_cauchy_product(f, g)
        got = TruncSeries(f) * TruncSeries(g)
        assert list(got.coeffs) == expected


def test_reciprocal_examples():
    assert reciprocal(log_series(3)).to_strings() == ["1", "1/2", "-1/12", "1/24"]
    one = TruncSeries.one(4)
    assert reciprocal(one) == one
    f = log_series(10)
    assert reciprocal(reciprocal(f)) == f


def test_reciprocal_requires_unit():
    with pytest.raises(ValueError):
        TruncSeries([0, 1, 2]).reciprocal()


def test_int_pow_examples():
    l = log_series(2)
    assert int_pow(l, 0) == TruncSeries.one(2)
    assert int_pow(l, 9)[2] == 12
    l6 = log_series(6)
    assert int_pow(l6, -3) * int_pow(l6, 3) == TruncSeries.one(6)


def test_int_pow_group_law():
    rng = random.Random(11)
    f = log_series(8)
    for _ in range(12):
        a = rng.randint(-6, 6)
        b = rng.randint(-6, 6)
        assert int_pow(f, a + b) == int_pow(f, a) * int_pow(f, b)


def test_int_pow_negative_needs_unit():
    with pytest.raises(ValueError):
        int_pow(TruncSeries([0, 1]), -1)


def test_mul_commutative_associative():
    rng = random.Random(3)
    for _ in range(8):
        coeffs = lambda: [mpq(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(7)]
        f, g, h = TruncSeries(coeffs()), TruncSeries(coeffs()), TruncSeries(coeffs())
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)


def test_scale_variable_examples():
    r = reciprocal(log_series(2))
    assert scale_variable(r, 1) == r
    assert scale_variable(r, 2).to_strings() == ["1", "1", "-1/3"]
    one = TruncSeries.one(5)
    assert scale_variable(one, mpq(7, 3)) == one


def test_scale_variable_is_ring_morphism():
    rng = random.Random(5)
    lam = mpq(-3, 2)
    for _ in range(8):
        coeffs = lambda: [mpq(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(6)]
        f, g = TruncSeries(coeffs()), TruncSeries(coeffs())
        assert scale_variable(f * g, lam) == scale_variable(f, lam) * scale_variable(g, lam)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == mpq(-1, 2)
    assert bernoulli(2) == mpq(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == mpq(-691, 2730)


def test_bernoulli_against_akiyama_tanigawa():
    for n in range(31):
        assert bernoulli(n) == bernoulli_oracle(n)


def test_bernoulli_odd_vanishing():
    for n in range(3, 50, 2):
        assert bernoulli(n) == 0


def test_coeff_valuation_examples():
    assert coeff_valuation(9, 2, 3) == 1
    assert coeff_valuation(9, 18, 3) == -9
    assert coeff_valuation(1, 1, 2) == -1
    assert coeff_valuation(0, 0, 5) == 0
    with pytest.raises(ValueError):
        coeff_valuation(0, 3, 5)


def test_series_serialization():
    f = log_series(2)
    assert f.to_json() == '["1", "-1/2", "1/3"]'
    assert TruncSeries(f.to_strings()) == f


def test_coefficient_indexing():
    f = log_series(3)
    with pytest.raises(IndexError):
        f[4]
    with pytest.raises(IndexError):
        f[-1]


def test_constructor_rejects_floats():
    with pytest.raises(ValueError):
        TruncSeries([1, 0.5])
