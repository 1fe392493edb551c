from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from pertinency.coeff import QQ, CyclotomicField
from pertinency.series import (
    PadeError,
    PadeUnstable,
    RationalFunction,
    TruncatedSeries,
    gk_growth_estimate,
    leading_term_at_infinity,
    pade_reconstruct,
    pole_order_at_one,
    poly_divmod,
    poly_gcd,
    poly_mul,
)


def test_poly_helpers():
    a = poly_mul([1, 1], [-1, 1])  # t^2 - 1
    assert a == [-1, 0, 1]
    q, r = poly_divmod(a, [-1, 1])
    assert q == [1, 1] and not r
    assert poly_gcd([-1, 0, 1], [1, 2, 1]) == [1, 1]


def test_rational_function_normalisation():
    f = RationalFunction([1, 1], [1, 0, -1])  # (1+t)/(1-t^2) = 1/(1-t)
    assert f.num == [1] and f.den == [1, -1]
    assert str(f) == "1/(1 - t)"


def test_expand():
    f = RationalFunction([1], [1, -2, 1])
    assert list(f.expand(5)) == [1, 2, 3, 4, 5, 6]


def test_pade_recovers_known_functions():
    f = RationalFunction([1], [1, -2, 1])
    assert pade_reconstruct(f.expand(12), 4, 4) == f
    g = RationalFunction([1, 0, 1], [1, 0, 0, -1])
    assert pade_reconstruct(g.expand(14), 4, 4) == g


def test_pade_needs_enough_terms():
    with pytest.raises(ValueError):
        pade_reconstruct(TruncatedSeries([1] * 6), 2, 2)


def test_pade_unstable_when_degrees_too_small():
    # 1/(1-t)^5 is not within 1/1 degrees
    s = RationalFunction([1], [1, -5, 10, -10, 5, -1]).expand(10)
    with pytest.raises(PadeError):
        pade_reconstruct(s, 1, 1)
    assert issubclass(PadeUnstable, PadeError)


def test_pole_order_and_infinity():
    f = RationalFunction([1], [1, -2, 1])
    assert pole_order_at_one(f) == 2
    assert leading_term_at_infinity(f) == (-2, 1)
    g = RationalFunction([1], [1, 0, 1])
    assert pole_order_at_one(g) == 0
    with pytest.raises(ValueError):
        leading_term_at_infinity(RationalFunction([], [1]))


def test_over_cyclotomic_field():
    F = CyclotomicField(3)
    w = F.gen()
    f = RationalFunction([F.one], [F.one, -w], F)  # 1/(1 - w t)
    assert pade_reconstruct(f.expand(9), 2, 2) == f
    assert pole_order_at_one(f) == 0


def test_growth_estimates():
    assert str(gk_growth_estimate([3, 9, 13, 11, 4, 0, 0], 4)) == "certified_zero at degree 5"
    assert str(gk_growth_estimate([1] * 10, 4)) == "polynomial(1)"
    assert str(gk_growth_estimate(list(range(1, 12)), 4)) == "polynomial(2)"
    assert gk_growth_estimate([1, 2, 4, 8, 16, 32], 4).kind == "inconclusive"
    with pytest.raises(ValueError):
        gk_growth_estimate([1, 2], 4)


def test_growth_estimate_quadratic():
    h = [d * d + 1 for d in range(12)]
    est = gk_growth_estimate(h, 4)
    assert est.kind == "polynomial" and est.m == 3


coef = st.integers(min_value=-4, max_value=4)


@settings(max_examples=60, deadline=None)
@given(num=st.lists(coef, min_size=1, max_size=3), tail=st.lists(coef, min_size=0, max_size=3))
def test_pade_round_trip(num, tail):
    f = RationalFunction(num, [1] + tail)
    assume(not f.is_zero())
    assert pade_reconstruct(f.expand(16), 4, 4) == f


@settings(max_examples=60, deadline=None)
@given(num=st.lists(coef, min_size=1, max_size=3), tail=st.lists(coef, min_size=0, max_size=3),
       k=st.integers(0, 3))
def test_pole_order_counts_factors(num, tail, k):
    base = RationalFunction(num, [1] + tail)
    assume(sum(base.num) != 0)  # numerator regular and nonzero at t = 1
    den = base.den
    for _ in range(k):
        den = poly_mul(den, [1, -1])
    f = RationalFunction(base.num, den)
    assert pole_order_at_one(f) == pole_order_at_one(base) + k


def test_truncated_series_arithmetic():
    s = TruncatedSeries([1, 2, 3])
    t = TruncatedSeries([Fraction(1, 2), 0])
    assert list(s + t) == [Fraction(3, 2), 2]
    assert list(s.scale(2)) == [2, 4, 6]
    assert s.truncation == 2 and s.field == QQ
