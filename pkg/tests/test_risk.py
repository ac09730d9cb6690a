import numpy as np
import pytest
from hypothesis import given, strategies as st

from accrualmtm import (
    CallAccount,
    FixedDeposit,
    ForwardRateAgreement,
    PhaseError,
    ZeroCurve,
    analytic_rho,
    analytic_theta,
    fd_rho,
    fd_theta,
    risk_report,
)
from accrualmtm.instrument import FloatingDeposit, Schedule

rates = st.floats(min_value=-0.05, max_value=0.20)
non_negative = st.floats(min_value=0.0, max_value=0.20)


def test_theta_components(ten_day_deposit, flat7):
    theta, acc, mtm = analytic_theta(ten_day_deposit, flat7.rolled(1), 1)
    assert theta == pytest.approx(194.44, abs=0.005)
    assert acc == pytest.approx(138.89, abs=0.005)
    assert mtm == pytest.approx(55.56, abs=0.005)
    assert acc + mtm == theta


def test_theta_needs_started_deposit(flat7):
    with pytest.raises(PhaseError):
        analytic_theta(FixedDeposit.between(1.0, 0.05, 3, 10), flat7, 0)
    with pytest.raises(PhaseError):
        analytic_theta(ForwardRateAgreement.between(1.0, 0.05, 3, 10), flat7, 0)


def test_rho_nine_days_left(ten_day_deposit):
    rho = analytic_rho(ten_day_deposit, 1)
    assert rho == pytest.approx(-25_000.0, rel=1e-12)
    report = risk_report(ten_day_deposit, ZeroCurve.flat(0.07, anchor=1), 1)
    assert report.rho_bp == pytest.approx(-2.5, rel=1e-12)
    assert report.duration_days == 9


def test_rho_vanishes_at_expiry(ten_day_deposit):
    assert analytic_rho(ten_day_deposit, 10) == 0.0
    assert analytic_rho(ten_day_deposit, 11) == 0.0


def test_call_account_has_no_rho():
    acct = CallAccount(1e6, 0.05, start=0)
    assert analytic_rho(acct, 5) == 0.0
    assert fd_rho(acct, ZeroCurve.flat(0.05, anchor=5), 5) == 0.0
    theta, acc, mtm = analytic_theta(acct, ZeroCurve.flat(0.07, anchor=5), 5)
    assert mtm == 0.0 and theta == acc


def test_fd_theta_ten_day_example(ten_day_deposit, flat7):
    assert fd_theta(ten_day_deposit, flat7.rolled(1), 1) == pytest.approx(194.44, abs=0.5)


def test_fd_theta_par_carry():
    n, r, tenor = 1e6, 0.05, 30
    trade = FixedDeposit.between(n, r, 0, tenor)
    for t in range(tenor - 1):
        got = fd_theta(trade, ZeroCurve.flat(r, anchor=t), t)
        assert abs(got - n * r / 360) <= n * (2 * r) ** 2 * (tenor / 360) * 2 / 360


def test_fd_theta_no_rates():
    trade = FixedDeposit.between(1e6, 0.0, 0, 10)
    assert fd_theta(trade, ZeroCurve.flat(0.0), 3) == 0.0


def test_fd_theta_refuses_phase_change(ten_day_deposit, flat7):
    with pytest.raises(PhaseError):
        fd_theta(ten_day_deposit, flat7.rolled(9), 9)


def test_fd_rho_ten_day_example(ten_day_deposit, flat7):
    assert fd_rho(ten_day_deposit, flat7.rolled(1), 1) == pytest.approx(-25_000.0, rel=0.01)


def test_fd_rho_matured(ten_day_deposit, flat7):
    assert fd_rho(ten_day_deposit, flat7.rolled(12), 12) == 0.0


def test_fd_rho_fra_forward():
    fra = ForwardRateAgreement.between(1e6, 0.05, 30, 120)
    curve = ZeroCurve.from_pillars([(30, 0.03), (120, 0.035)])
    got = fd_rho(fra, curve, 0)
    assert analytic_rho(fra, 0) == -1e6 * 0.25
    assert got == pytest.approx(-1e6 * 0.25, rel=0.05)


def test_fd_rho_forward_deposit_matches_period_duration():
    trade = FixedDeposit.between(1e6, 0.04, 30, 120)
    curve = ZeroCurve.flat(0.03)
    assert fd_rho(trade, curve, 0) == pytest.approx(analytic_rho(trade, 0), rel=0.05)


def test_unfixed_same_curve_float_has_no_rate_risk():
    trade = FloatingDeposit(1e6, 0.001, Schedule(30, 60))
    assert analytic_rho(trade, 0) == 0.0
    assert abs(fd_rho(trade, ZeroCurve.flat(0.03), 0)) < 1e6 * 0.001 * (60 / 360) ** 2


def test_fd_rho_needs_positive_bump(ten_day_deposit, flat7):
    with pytest.raises(ValueError):
        fd_rho(ten_day_deposit, flat7, 1, bump=0.0)


def _instance(n, r, z, tenor, t):
    return FixedDeposit.between(n, r, 0, tenor), ZeroCurve.flat(z, anchor=t)


@given(st.floats(1.0, 1e9), rates, non_negative, st.integers(2, 360), st.data())
def test_fd_theta_envelope(n, r, z, tenor, data):
    t = data.draw(st.integers(0, tenor - 2))
    trade, curve = _instance(n, r, z, tenor, t)
    gap = abs(fd_theta(trade, curve, t) - n * z / 360)
    assert gap <= n * (abs(r) + abs(z)) ** 2 * (tenor / 360) * 2 / 360 + 4 * np.spacing(n)


@given(st.floats(1.0, 1e9), rates, non_negative, st.integers(1, 360), st.data())
def test_fd_rho_envelope(n, r, z, tenor, data):
    t = data.draw(st.integers(0, tenor - 1))
    trade, curve = _instance(n, r, z, tenor, t)
    tau, d0 = (tenor - t) / 360, tenor / 360
    rel = abs(fd_rho(trade, curve, t) - analytic_rho(trade, t)) / (n * tau)
    assert rel <= 2 * (abs(z) * tau + abs(r) * d0) + 1e-6


def test_envelopes_exceeded_for_deeply_negative_rates():
    # Second-order terms grow like 1/(1+z*dt)^2: with z near -5% over a year
    # and r near 0 they outrun both first-order envelopes by a few percent.
    n, r, z, tenor, t = 1.0, 0.0, -0.05, 360, 0
    trade, curve = _instance(n, r, z, tenor, t)
    rel = abs(fd_rho(trade, curve, t) - analytic_rho(trade, t)) / (n * 1.0)
    assert rel > 2 * abs(z) * 1.0 + 1e-6
    gap = abs(fd_theta(trade, curve, t) - n * z / 360)
    assert gap > n * z**2 * 1.0 * 2 / 360


@given(st.floats(1.0, 1e9), rates, rates, st.integers(1, 360), st.data())
def test_rho_sign(n, r, z, tenor, data):
    t = data.draw(st.integers(0, tenor - 1))
    trade, curve = _instance(n, r, z, tenor, t)
    assert analytic_rho(trade, t) < 0
    assert fd_rho(trade, curve, t) < 0
