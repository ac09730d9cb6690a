"""Theta and rho from the first-order PV split, with finite-difference oracles.

Theta is per calendar day. Rho is per 1.0 of rate (divide by 10,000 for a
basis point) under a parallel shift of the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curve import ZeroCurve
from .errors import PhaseError
from .instrument import (
    CallAccount,
    FloatingDeposit,
    ForwardRateAgreement,
    Phase,
    Trade,
    trade_phase,
    trade_rate,
)
from .timecore import Day, yf
from .valuation import present_value

BP = 1e-4


@dataclass(frozen=True)
class RiskReport:
    theta: float
    theta_accrual: float
    theta_mtm: float
    rho: float
    duration_days: int

    @property
    def rho_bp(self) -> float:
        return self.rho * BP


def theta_split(notional: float, rate: float, market_rate: float) -> tuple[float, float, float]:
    """(theta, accrual part, MtM part); the parts sum to theta bit-exactly."""
    accrual = notional * rate / 360.0
    mtm = notional * (market_rate - rate) / 360.0
    return accrual + mtm, accrual, mtm


def analytic_theta(trade: Trade, curve: ZeroCurve, t: Day) -> tuple[float, float, float]:
    if isinstance(trade, CallAccount):
        if t < trade.start:
            raise PhaseError(f"call account not open at day {t}")
        return theta_split(trade.notional, trade.rate, trade.rate)
    if isinstance(trade, ForwardRateAgreement) or trade_phase(trade, t) is not Phase.CASH:
        raise PhaseError(
            f"analytic theta needs a started deposit; {type(trade).__name__} is "
            f"{trade_phase(trade, t).value} at day {t}"
        )
    z = curve.rate_between(t, trade.schedule.end)
    return theta_split(trade.notional, trade_rate(trade), z)


def analytic_rho(trade: Trade, t: Day) -> float:
    """First-order PV change per unit parallel rate move.

    A started deposit carries the remaining time to maturity. Before the
    start, the principal legs offset and only the accrual period counts; an
    unfixed float-vs-same-curve trade carries none.
    """
    if isinstance(trade, CallAccount):
        return 0.0
    phase = trade_phase(trade, t)
    s = trade.schedule
    if phase is Phase.MATURED:
        return 0.0
    if isinstance(trade, ForwardRateAgreement):
        return -trade.notional * s.accrual_fraction if phase is Phase.FORWARD else 0.0
    if isinstance(trade, FloatingDeposit) and trade.fixing is None:
        return 0.0
    if phase is Phase.FORWARD:
        return -trade.notional * s.accrual_fraction
    return -trade.notional * yf(t, s.end)


def duration_days(trade: Trade, t: Day) -> int:
    if isinstance(trade, CallAccount) or trade_phase(trade, t) is Phase.MATURED:
        return 0
    return trade.schedule.end - max(t, trade.schedule.start)


def risk_report(trade: Trade, curve: ZeroCurve, t: Day) -> RiskReport:
    theta, acc, mtm = analytic_theta(trade, curve, t)
    return RiskReport(theta, acc, mtm, analytic_rho(trade, t), duration_days(trade, t))


def fd_theta(
    trade: Trade,
    curve: ZeroCurve,
    t: Day,
    forecast: Optional[ZeroCurve] = None,
) -> float:
    """One-day PV change with the curve rolled forward unchanged in tenor."""
    p0, p1 = trade_phase(trade, t), trade_phase(trade, t + 1)
    if p0 is not Phase.CASH or p1 is not Phase.CASH:
        raise PhaseError(f"phase changes inside [{t}, {t + 1}] ({p0.value} -> {p1.value})")
    rolled_fc = None if forecast is None else forecast.rolled(1)
    return present_value(trade, curve.rolled(1), t + 1, rolled_fc) - present_value(
        trade, curve, t, forecast
    )


def fd_rho(
    trade: Trade,
    curve: ZeroCurve,
    t: Day,
    bump: float = 1e-6,
    forecast: Optional[ZeroCurve] = None,
) -> float:
    """Central difference of the exact PV under a parallel shift of every curve."""
    if not bump > 0:
        raise ValueError("rate bump must be positive")
    up_fc = None if forecast is None else forecast.shifted(bump)
    dn_fc = None if forecast is None else forecast.shifted(-bump)
    up = present_value(trade, curve.shifted(bump), t, up_fc)
    dn = present_value(trade, curve.shifted(-bump), t, dn_fc)
    return (up - dn) / (2.0 * bump)
