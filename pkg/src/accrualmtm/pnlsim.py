"""Day-by-day valuation, PNL attribution and the cash / NPV / deferral ledger.

Simulation conventions:

* one row per calendar day; the row for the maturity day shows the position
  just before the redemption settles (the redemption is the whole PV there,
  so the first-order split is exact), and the value moves to cash afterwards;
* ``cash`` is the cumulative cash position, so ``pv_dcf + cash`` is the
  trade's total value and ``daily_pnl`` is its day-over-day change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .curve import ZeroCurve
from .errors import DomainError
from .instrument import (
    CallAccount,
    FixedDeposit,
    FloatingDeposit,
    ForwardRateAgreement,
    PayAt,
    Phase,
    Trade,
    trade_phase,
)
from .risk import analytic_rho, theta_split
from .timecore import Day, yf
from .valuation import breakdown, fra_settlement, taylor_breakdown


@dataclass(frozen=True)
class SimRow:
    day: int
    phase: Phase
    pv_dcf: float
    notional_leg: float
    accrued: float
    mtm_adj: float
    pv_taylor: float
    unexplained: float
    cash: float
    deferral: float
    market_rate: float
    rho: float
    theta_accrual: float
    theta_mtm: float
    daily_pnl: float

    @property
    def theta(self) -> float:
        return self.theta_accrual + self.theta_mtm

    @property
    def total_value(self) -> float:
        return self.pv_dcf + self.cash


@dataclass(frozen=True)
class AttributionRow:
    day: int
    daily_pnl: float
    theta_accrual: float
    theta_mtm: float
    rho_effect: float
    residual: float
    phase_change: bool


@dataclass(frozen=True)
class LedgerRow:
    day: int
    cash_position: float
    coupon_received: float
    deferral: float
    security_pv: float
    npv: float
    income: float


def _curves_by_day(
    curves: Union[ZeroCurve, Sequence[ZeroCurve]], days: list[int]
) -> list[ZeroCurve]:
    if isinstance(curves, ZeroCurve):
        # constant market: same rates by tenor, re-anchored every day
        return [curves.rolled(d - curves.anchor) for d in days]
    curves = list(curves)
    if len(curves) != len(days):
        raise ValueError(f"need one curve per day: {len(curves)} curves for {len(days)} days")
    return curves


def _deposit(trade: Trade) -> Optional[FixedDeposit]:
    if isinstance(trade, FixedDeposit):
        return trade
    if isinstance(trade, FloatingDeposit) and trade.fixing is not None:
        return trade.as_fixed()
    return None


def _fra_fixing(trade: ForwardRateAgreement, days: list[int], curves: list[ZeroCurve]) -> float:
    # the curve in force on the start day, else the latest one that still sees the start
    s = trade.schedule
    usable = [(d, c) for d, c in zip(days, curves) if c.anchor <= s.start]
    if not usable:
        raise ValueError("cannot infer the FRA fixing from the horizon; pass fra_fixing")
    on_or_before = [c for d, c in usable if d <= s.start]
    curve = (on_or_before or [c for _, c in usable])[-1]
    return curve.implied_forward_rate(s.start, s.end)


def deferral(trade: Trade, t: Day) -> float:
    """Offset to an up-front coupon so income is recognised linearly.

    Non-zero only for pay-at-start trades inside their period: minus the
    interest for the days still to run.
    """
    if isinstance(trade, CallAccount) or trade.schedule.pay_at is not PayAt.START:
        return 0.0
    if trade_phase(trade, t) is not Phase.CASH:
        return 0.0
    return -trade.notional * trade.rate * yf(t, trade.schedule.end)


def simulate(
    trade: Trade,
    curves: Union[ZeroCurve, Sequence[ZeroCurve]],
    days: Iterable[int],
    forecast: Optional[ZeroCurve] = None,
    fra_fixing: Optional[float] = None,
) -> list[SimRow]:
    """Value ``trade`` on each day of ``days``.

    ``curves`` is either one curve per day or a single curve held constant
    (rolled forward so each day sees the same rates by tenor).
    """
    days = [int(d) for d in days]
    if not days:
        raise ValueError("empty simulation horizon")
    by_day = _curves_by_day(curves, days)
    deposit = _deposit(trade)
    settlement = 0.0
    if isinstance(trade, ForwardRateAgreement):
        fixing = fra_fixing if fra_fixing is not None else _fra_fixing(trade, days, by_day)
        settlement = fra_settlement(trade, fixing)

    rows: list[SimRow] = []
    prev_value = math.nan
    for d, curve in zip(days, by_day):
        phase = trade_phase(trade, d)
        theta_acc = theta_mtm = 0.0
        fc = None if forecast is None else forecast.rolled(d - forecast.anchor)
        if deposit is not None and deposit.schedule.start <= d <= deposit.schedule.end:
            bd = taylor_breakdown(deposit, curve, d)
            _, theta_acc, theta_mtm = theta_split(deposit.notional, deposit.rate, bd.market_rate)
        else:
            if isinstance(trade, FloatingDeposit) and phase is Phase.CASH:
                raise DomainError("started floating deposit needs a fixing to be simulated")
            bd = breakdown(trade, curve, d, fc)
            if isinstance(trade, CallAccount) and phase is Phase.CASH:
                _, theta_acc, theta_mtm = theta_split(trade.notional, trade.rate, trade.rate)

        cash = _cash_position(trade, d, settlement)
        value = bd.pv_dcf + cash
        rows.append(
            SimRow(
                day=d,
                phase=phase,
                pv_dcf=bd.pv_dcf,
                notional_leg=bd.notional_leg,
                accrued=bd.accrued,
                mtm_adj=bd.mtm_adjustment,
                pv_taylor=bd.pv_taylor,
                unexplained=bd.unexplained,
                cash=cash,
                deferral=deferral(trade, d),
                market_rate=bd.market_rate,
                rho=analytic_rho(trade, d),
                theta_accrual=theta_acc,
                theta_mtm=theta_mtm,
                daily_pnl=value - prev_value,
            )
        )
        prev_value = value
    return rows


def _cash_position(trade: Trade, d: Day, fra_cash: float) -> float:
    if isinstance(trade, CallAccount):
        return -trade.notional if d >= trade.start else 0.0
    s = trade.schedule
    if isinstance(trade, ForwardRateAgreement):
        return fra_cash if d >= s.start else 0.0
    cash = -trade.notional if d >= s.start else 0.0
    if d > s.end:
        cash += _deposit(trade).redemption
    return cash


def attribute(rows: Sequence[SimRow]) -> list[AttributionRow]:
    """Explain each day's PNL by theta (accrual + MtM) and rho.

    Sensitivities are taken from the previous row; whatever they miss is
    reported as ``residual``.
    """
    if len(rows) < 2:
        raise ValueError("attribution needs at least two rows")
    out = []
    for prev, row in zip(rows, rows[1:]):
        gap = row.day - prev.day
        acc = prev.theta_accrual * gap
        mtm = prev.theta_mtm * gap
        rho_effect = prev.rho * (row.market_rate - prev.market_rate)
        out.append(
            AttributionRow(
                day=row.day,
                daily_pnl=row.daily_pnl,
                theta_accrual=acc,
                theta_mtm=mtm,
                rho_effect=rho_effect,
                residual=row.daily_pnl - acc - mtm - rho_effect,
                phase_change=row.phase is not prev.phase,
            )
        )
    return out


def ledger_profile(trade: Trade, days: Iterable[int]) -> list[LedgerRow]:
    """Accrual-basis cash, security value, NPV and income for each day.

    Pay-at-end deposits lend the notional at the start and receive it with
    interest at the end. Pay-at-start trades (FRA, fixed-leg view) receive
    the period's interest up front and carry a deferral against it.
    """
    rows = []
    for d in days:
        d = int(d)
        if isinstance(trade, CallAccount):
            opened = d >= trade.start
            cash = -trade.notional if opened else 0.0
            security = trade.notional + trade.notional * trade.rate * yf(trade.start, d) if opened else 0.0
            coupon = dfr = 0.0
        elif isinstance(trade, ForwardRateAgreement):
            started = d >= trade.schedule.start
            coupon = trade.coupon if started else 0.0
            cash, security, dfr = coupon, 0.0, deferral(trade, d)
        else:
            fixed = _deposit(trade)
            if fixed is None:
                raise DomainError("ledger needs a fixed-rate trade")
            s = fixed.schedule
            phase = trade_phase(fixed, d)
            matured = phase is Phase.MATURED
            cash = (-fixed.notional if d >= s.start else 0.0) + (fixed.redemption if matured else 0.0)
            coupon = fixed.coupon if matured else 0.0
            security = (
                fixed.notional + fixed.notional * fixed.rate * yf(s.start, d)
                if phase is Phase.CASH
                else 0.0
            )
            dfr = 0.0
        npv = cash + security
        income = npv + dfr if isinstance(trade, ForwardRateAgreement) else npv
        rows.append(LedgerRow(d, cash, coupon, dfr, security, npv, income))
    return rows

