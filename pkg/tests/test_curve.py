import math

import pytest
from hypothesis import given, strategies as st

from accrualmtm import DomainError, ZeroCurve

rates = st.floats(min_value=-0.05, max_value=0.20)


def test_zero_rate_at_pillar():
    assert ZeroCurve.from_pillars([(1, 0.02)]).zero_rate(1) == 0.02


def test_zero_rate_linear_between_pillars():
    assert ZeroCurve.from_pillars([(1, 0.02), (3, 0.04)]).zero_rate(2) == pytest.approx(0.03, abs=1e-15)


def test_zero_rate_flat_beyond_ends():
    c = ZeroCurve.from_pillars([(1, 0.02), (3, 0.04)])
    assert c.zero_rate(0) == 0.02
    assert c.zero_rate(9) == 0.04
    assert ZeroCurve.from_pillars([(1, 0.02)]).zero_rate(9) == 0.02


def test_overnight_discount_factor():
    c = ZeroCurve.from_pillars([(1, 0.02)])
    assert c.discount_factor(0, 1) == pytest.approx(0.999944448, abs=5e-10)


def test_nine_day_discount_factor():
    # 1 / (1 + 0.07 * 9/360), evaluated by hand
    assert ZeroCurve.flat(0.07).discount_factor(0, 9) == pytest.approx(0.9982530571, abs=1e-10)


def test_discount_factor_same_day_is_one():
    c = ZeroCurve.from_pillars([(1, 0.02), (30, 0.05)])
    assert c.discount_factor(0, 0) == 1.0
    assert c.discount_factor(7, 7) == 1.0


def test_tom_next_curve_reproduces_quoted_factors(tn_curve):
    assert tn_curve.discount_factor(0, 1) == pytest.approx(0.999944448, abs=5e-10)
    assert tn_curve.discount_factor(1, 2) == pytest.approx(0.999916674, abs=5e-10)
    assert tn_curve.discount_factor(0, 2) == pytest.approx(0.999861126, abs=5e-10)


def test_implied_forward_from_quoted_factors(tn_curve):
    assert tn_curve.implied_forward_rate(1, 2) == pytest.approx(0.03, abs=1e-12)


def test_implied_forward_zero_when_factors_equal():
    # zero rates chosen so that DF(0,1) == DF(0,2): 1 + z1/360 == 1 + 2*z2/360
    c = ZeroCurve.from_pillars([(1, 0.0), (2, 0.0)])
    assert c.implied_forward_rate(1, 2) == 0.0


def test_flat_curve_forward_close_to_rate():
    z = 0.04
    c = ZeroCurve.flat(z)
    f = c.implied_forward_rate(10, 11)
    # brute force from the definition: (1 + z*11/360) / (1 + z*10/360) - 1, annualised
    brute = ((1 + z * 11 / 360) / (1 + z * 10 / 360) - 1) * 360
    assert f == pytest.approx(brute, rel=1e-12)
    assert f == pytest.approx(z, abs=z * z * 11 / 360 * 2)


@pytest.mark.parametrize(
    "call",
    [
        lambda c: c.discount_factor(5, 4),
        lambda c: c.discount_factor(-1, 4),
        lambda c: c.implied_forward_rate(4, 4),
        lambda c: ZeroCurve.flat(-400.0).discount_factor(0, 1),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call(ZeroCurve.flat(0.01))


@pytest.mark.parametrize(
    "days,rates",
    [((), ()), ((1, 1), (0.01, 0.02)), ((2, 1), (0.01, 0.02)), ((1,), (math.nan,)), ((1,), ())],
)
def test_invalid_curves(days, rates):
    with pytest.raises(ValueError):
        ZeroCurve(0, days, rates)


curves = st.lists(
    st.tuples(st.integers(min_value=1, max_value=720), rates), min_size=1, max_size=6
).map(lambda ps: ZeroCurve.from_pillars(sorted(dict(ps).items())))


@given(curves, st.lists(st.integers(min_value=0, max_value=720), min_size=3, max_size=3))
def test_multiplicative_composition(curve, pts):
    a, b, c = sorted(pts)
    lhs = curve.discount_factor(a, c)
    rhs = curve.discount_factor(a, b) * curve.discount_factor(b, c)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@given(curves, st.integers(min_value=0, max_value=700), st.integers(min_value=1, max_value=360))
def test_forward_round_trip(curve, t1, n):
    t2 = t1 + n
    f = curve.implied_forward_rate(t1, t2)
    ratio = curve.discount_factor(0, t1) / curve.discount_factor(0, t2)
    assert 1 + f * n / 360 == pytest.approx(ratio, rel=1e-12)


@given(
    st.lists(st.tuples(st.integers(min_value=1, max_value=60), st.floats(0.0, 0.2)), min_size=1, max_size=6),
)
def test_discount_non_increasing_across_pillars(periods):
    pillars, day = [], 0
    for n, f in periods:
        day += n
        pillars.append((day, f))
    curve = ZeroCurve.from_forwards(pillars)
    dfs = [curve.discount_factor(0, d) for d in (0, *curve.days)]
    assert all(b <= a * (1 + 1e-15) for a, b in zip(dfs, dfs[1:]))


def test_linear_zero_interpolation_can_dip_between_pillars():
    # Forwards between pillars are 12.5% and 0%, yet interpolating the zero
    # rate linearly implies a negative forward inside the second period.
    curve = ZeroCurve.from_forwards([(1, 0.125), (3, 0.0)])
    assert curve.discount_factor(0, 3) > curve.discount_factor(0, 2)


def test_non_negative_zero_rates_do_not_imply_monotone_discounting():
    # A steeply falling zero curve implies a negative forward, so non-negative
    # zero rates alone do not make discount factors monotone.
    curve = ZeroCurve.from_pillars([(1, 0.125), (2, 0.0)])
    assert curve.implied_forward_rate(1, 2) < 0
    assert curve.discount_factor(0, 2) > curve.discount_factor(0, 1)


@given(rates, rates, st.integers(min_value=1, max_value=30))
def test_from_forwards_chains_simple_periods(f1, f2, n):
    c = ZeroCurve.from_forwards([(n, f1), (2 * n, f2)])
    assert c.implied_forward_rate(0, n) == pytest.approx(f1, abs=1e-12)
    assert c.implied_forward_rate(n, 2 * n) == pytest.approx(f2, abs=1e-11)


def test_rolled_keeps_rates_by_tenor():
    c = ZeroCurve.from_pillars([(5, 0.01), (10, 0.02)], anchor=0).rolled(3)
    assert c.anchor == 3 and c.days == (8, 13)
    assert c.discount_factor(3, 13) == ZeroCurve.from_pillars([(5, 0.01), (10, 0.02)]).discount_factor(0, 10)


def test_shifted_is_parallel():
    c = ZeroCurve.from_pillars([(5, 0.01), (10, 0.02)]).shifted(0.001)
    assert c.rates == pytest.approx((0.011, 0.021))


def test_rate_between_reanchors():
    c = ZeroCurve.flat(0.07)
    assert c.rate_between(0, 9) == 0.07
    assert c.rate_between(3, 9) == pytest.approx(c.implied_forward_rate(3, 9))
