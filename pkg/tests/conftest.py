import numpy as np
import pytest

from accrualmtm import FixedDeposit, ZeroCurve


def r_listing(notional=1_000_000, rate=0.05, market=0.07, n_days=10):
    """Line-for-line numpy port of the 10-day accrual/MtM listing.

    Kept deliberately naive and independent of the package: it is the oracle
    the simulation is checked against.
    """
    days = np.arange(1, n_days + 1)
    days_remaining = np.arange(n_days - 1, -1, -1)
    accrual_fractions = days / 360
    fractions_remaining = days_remaining / 360
    disc_fact = 1 / (1 + market * days_remaining / 360)
    accrued = notional * rate * accrual_fractions
    pv = notional * (1 + rate * n_days / 360) * disc_fact
    mtm_adj = notional * (rate - market) * fractions_remaining
    pv_taylor = notional + accrued + mtm_adj
    unexplained = pv - pv_taylor
    return np.column_stack([days, pv, accrued, mtm_adj, pv_taylor, unexplained])


@pytest.fixture
def ten_day_deposit():
    return FixedDeposit.between(1_000_000, 0.05, 0, 10)


@pytest.fixture
def flat7():
    return ZeroCurve.flat(0.07, anchor=0)


@pytest.fixture
def tn_deposit():
    return FixedDeposit.between(1_000_000, 0.05, 1, 2)


@pytest.fixture
def tn_curve():
    # overnight 2%, then tom-next 3%
    return ZeroCurve.from_forwards([(1, 0.02), (2, 0.03)], anchor=0)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    results = item.config._acceptance
    label = marker.args[0]
    # several tests may share a criterion; any failure fails it
    if (report.when == "call" or report.failed) and results.get(label) != "failed":
        results[label] = report.outcome


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_acceptance", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(results, key=lambda s: int(s.split()[0][2:])):
        verdict = "PASS" if results[label] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")
