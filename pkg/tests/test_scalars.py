import random
from fractions import Fraction
from math import factorial

import pytest

from poisson_forge.scalars import (
    GaussRational, HSeries, ValuationError, gauss, series, series_exp, hexp,
)


def rand_gauss(rng):
    return GaussRational(
        Fraction(rng.randint(-6, 6), rng.randint(1, 5)),
        Fraction(rng.randint(-6, 6), rng.randint(1, 5)),
    )


def rand_series(rng, order=6):
    return HSeries([rand_gauss(rng) for _ in range(rng.randint(0, order))], order)


def test_gauss_parse_roundtrip():
    for text in ["3", "-5/7", "1/2+3/4*i", "-i", "i", "2/3*i", "0", "1-2*i"]:
        g = GaussRational.parse(text)
        assert GaussRational.parse(str(g)) == g


def test_gauss_field_axioms():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = rand_gauss(rng), rand_gauss(rng), rand_gauss(rng)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if b:
            assert (a / b) * b == a
        assert a.conjugate().conjugate() == a
        assert a.norm_sq() >= 0


def test_gauss_i_squares_to_minus_one():
    i = GaussRational(0, 1)
    assert i * i == GaussRational(-1)


def test_hseries_ring_axioms():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c = rand_series(rng), rand_series(rng), rand_series(rng)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_hseries_truncation_compatible_with_product():
    # (s*t) mod hbar^M == (s mod hbar^M)*(t mod hbar^M) for all M <= N
    rng = random.Random(13)
    for _ in range(50):
        s, t = rand_series(rng), rand_series(rng)
        for m in range(1, 7):
            assert (s * t).truncate(m) == s.truncate(m) * t.truncate(m)


def test_hseries_unit_inverse():
    rng = random.Random(17)
    for _ in range(50):
        s = rand_series(rng)
        if not s.is_unit():
            with pytest.raises(ValueError):
                s.inverse()
        else:
            assert s * s.inverse() == 1


def test_exp_zero_is_one():
    assert series_exp(HSeries.zero()) == 1


def test_exp_quarter_hbar_against_factorials():
    # independent oracle: coefficient of hbar^k in exp(hbar/4) is (1/4)^k / k!
    s = HSeries.hbar() * Fraction(1, 4)
    e = series_exp(s)
    for k in range(6):
        assert e.coeff(k) == gauss(Fraction(1, 4 ** k) * Fraction(1, factorial(k)))


def test_exp_group_law():
    h = HSeries.hbar()
    assert series_exp(h) * series_exp(-h) == 1
    rng = random.Random(19)
    for _ in range(20):
        s = rand_series(rng).shift(1).truncate(6)
        t = rand_series(rng).shift(1).truncate(6)
        assert series_exp(s + t) == series_exp(s) * series_exp(t)


def test_divide_by_hbar_shifts():
    h = HSeries.hbar()
    s = h * h * 3
    q = s.divide_by_hbar()
    assert q == h * 3
    assert q.order == 5  # precision loss is tracked


def test_divide_by_hbar_valuation_violation():
    with pytest.raises(ValuationError):
        HSeries.one().divide_by_hbar()


def test_q_number_limit():
    # (q^{2H}-q^{-2H})/(q-q^{-1}) at H-degree 1: expand both scalar series
    # mod hbar^4 and divide after the valuation shift.  The H-coefficient is
    # (e^{h/2}-e^{-h/2})/(e^{h/4}-e^{-h/4}), whose constant term is 2.
    num = hexp(Fraction(1, 2), 4) - hexp(Fraction(-1, 2), 4)
    den = hexp(Fraction(1, 4), 4) - hexp(Fraction(-1, 4), 4)
    ratio = num.divide_by_hbar() * den.divide_by_hbar().inverse()
    assert ratio.coeff(0) == gauss(2)
    # same mechanics with the q^{H} normalization: constant term 1
    num2 = hexp(Fraction(1, 4), 4) - hexp(Fraction(-1, 4), 4)
    assert (num2.divide_by_hbar() * den.divide_by_hbar().inverse()).coeff(0) == gauss(1)


def test_equality_respects_minimum_order():
    a = HSeries([1, 0, 0, 5], order=6)
    b = HSeries([1], order=3)
    assert a == b            # agree on the shared window hbar^0..hbar^2
    c = HSeries([1, 2], order=3)
    assert a != c


def test_serialize():
    s = HSeries([1, Fraction(1, 2), GaussRational(0, 1)], order=4)
    assert s.serialize() == ["1", "1/2", "1*i", "0"]
