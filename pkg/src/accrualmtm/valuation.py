"""Present-value kernels for single-period trades.

Every kernel values at day ``t`` against a curve anchored at or before ``t``.
Forward trades are priced by discounted cash flows or, equivalently, by the
spread of the trade rate over the implied forward. Started ("cash") trades
are additionally split into notional, accrued interest and a mark-to-market
adjustment whose sum is the first-order approximation of the exact PV.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curve import ZeroCurve
from .errors import DomainError, PhaseError
from .instrument import (
    CallAccount,
    FixedDeposit,
    FloatingDeposit,
    ForwardRateAgreement,
    Phase,
    Trade,
    trade_phase,
)
from .timecore import Day, yf


@dataclass(frozen=True)
class PvBreakdown:
    notional_leg: float
    accrued: float
    mtm_adjustment: float
    pv_taylor: float
    pv_dcf: float
    unexplained: float
    market_rate: float = 0.0

    @classmethod
    def build(
        cls,
        notional_leg: float,
        accrued: float,
        mtm_adjustment: float,
        pv_dcf: float,
        market_rate: float = 0.0,
    ) -> PvBreakdown:
        pv_taylor = notional_leg + accrued + mtm_adjustment
        return cls(
            notional_leg,
            accrued,
            mtm_adjustment,
            pv_taylor,
            pv_dcf,
            pv_dcf - pv_taylor,
            market_rate,
        )

    @classmethod
    def zero(cls) -> PvBreakdown:
        return cls.build(0.0, 0.0, 0.0, 0.0)


def _at(curve: ZeroCurve, t: Optional[Day]) -> Day:
    t = curve.anchor if t is None else t
    if t < curve.anchor:
        raise DomainError(f"valuation day {t} precedes curve anchor {curve.anchor}")
    return t


def _require(trade: Trade, t: Day, *phases: Phase) -> Phase:
    phase = trade_phase(trade, t)
    if phase not in phases:
        allowed = "/".join(p.value for p in phases)
        raise PhaseError(
            f"{type(trade).__name__} is in {phase.value} phase at day {t}; "
            f"operation requires {allowed}"
        )
    return phase


def _fixed(trade: Trade) -> FixedDeposit:
    if isinstance(trade, FixedDeposit):
        return trade
    if isinstance(trade, FloatingDeposit):
        return trade.as_fixed()
    raise DomainError(f"{type(trade).__name__} is not a deposit")


def accrual_pv(trade: Trade, t: Day) -> float:
    """Accrual-basis value: notional plus linearly accrued interest.

    Zero before the period starts and from maturity on. An FRA exchanges no
    principal, so only its accrued interest is reported.
    """
    if isinstance(trade, CallAccount):
        return call_account_pv(trade, t) if t >= trade.start else 0.0
    if trade_phase(trade, t) is not Phase.CASH:
        return 0.0
    start = trade.schedule.start
    if isinstance(trade, ForwardRateAgreement):
        return trade.notional * trade.rate * yf(start, t)
    deposit = _fixed(trade)
    return deposit.notional + deposit.notional * deposit.rate * yf(start, t)


def dcf_pv_forward(trade: Trade, curve: ZeroCurve, t: Optional[Day] = None) -> float:
    """Lend the notional at the start, receive it with interest at the end."""
    t = _at(curve, t)
    _require(trade, t, Phase.FORWARD)
    deposit = _fixed(trade)
    s = deposit.schedule
    df_start = curve.discount_factor(t, s.start)
    df_end = curve.discount_factor(t, s.end)
    return -deposit.notional * df_start + deposit.redemption * df_end


def spread_pv(trade: Trade, curve: ZeroCurve, t: Optional[Day] = None) -> float:
    """Forward value as (trade rate - implied forward) over the period, discounted."""
    t = _at(curve, t)
    _require(trade, t, Phase.FORWARD)
    deposit = _fixed(trade)
    s = deposit.schedule
    fwd = curve.implied_forward_rate(s.start, s.end)
    return (
        deposit.notional
        * (deposit.rate - fwd)
        * s.accrual_fraction
        * curve.discount_factor(t, s.end)
    )


def spread_pv_taylor(trade: Trade, curve: ZeroCurve, t: Optional[Day] = None) -> float:
    """The undiscounted spread value; first-order equal to :func:`spread_pv`."""
    t = _at(curve, t)
    _require(trade, t, Phase.FORWARD)
    deposit = _fixed(trade)
    s = deposit.schedule
    fwd = curve.implied_forward_rate(s.start, s.end)
    return deposit.notional * (deposit.rate - fwd) * s.accrual_fraction


def _pv_to_maturity(deposit: FixedDeposit, curve: ZeroCurve, t: Day) -> float:
    # Valid on start <= t <= end; at t == end this is the redemption amount itself.
    return deposit.redemption * curve.discount_factor(t, deposit.schedule.end)


def dcf_pv_cash(trade: Trade, curve: ZeroCurve, t: Optional[Day] = None) -> float:
    """Discounted redemption of a started deposit; 0 once it has matured."""
    t = _at(curve, t)
    phase = _require(trade, t, Phase.CASH, Phase.MATURED)
    if phase is Phase.MATURED:
        return 0.0
    return _pv_to_maturity(_fixed(trade), curve, t)


def taylor_breakdown(trade: Trade, curve: ZeroCurve, t: Optional[Day] = None) -> PvBreakdown:
    """Split a started deposit's PV into notional, accrued and MtM adjustment.

    Accepted on ``start <= t <= end``. On the maturity day itself the
    breakdown describes the position just before the redemption settles,
    which makes the first-order split exact (the MtM term has no time left).
    """
    t = _at(curve, t)
    deposit = _fixed(trade)
    s = deposit.schedule
    if not s.start <= t <= s.end:
        raise PhaseError(
            f"taylor breakdown needs start <= t <= end, got t={t} for period [{s.start}, {s.end}]"
        )
    n, r = deposit.notional, deposit.rate
    z = curve.rate_between(t, s.end)
    return PvBreakdown.build(
        notional_leg=n,
        accrued=n * r * yf(s.start, t),
        mtm_adjustment=n * (r - z) * yf(t, s.end),
        pv_dcf=_pv_to_maturity(deposit, curve, t),
        market_rate=z,
    )


def forward_breakdown(trade: Trade, curve: ZeroCurve, t: Optional[Day] = None) -> PvBreakdown:
    """Forward-phase deposit: no notional or accrual yet, all value is MtM."""
    t = _at(curve, t)
    deposit = _fixed(trade)
    s = deposit.schedule
    return PvBreakdown.build(
        0.0,
        0.0,
        spread_pv_taylor(deposit, curve, t),
        dcf_pv_forward(deposit, curve, t),
        market_rate=curve.implied_forward_rate(s.start, s.end),
    )


def floating_pv_forward(
    trade: FloatingDeposit,
    forecast: ZeroCurve,
    discount: Optional[ZeroCurve] = None,
    t: Optional[Day] = None,
) -> float:
    """Forward floating deposit with separate forecast and discount curves.

    With one curve for both the floating forward and the discount forward
    cancel and only the spread is worth anything. A fixed trade values as a
    fixed deposit at ``fixing + spread``.
    """
    discount = forecast if discount is None else discount
    t = _at(discount, t)
    _require(trade, t, Phase.FORWARD)
    if trade.fixing is not None:
        return spread_pv(trade.as_fixed(), discount, t)
    s = trade.schedule
    return (
        trade.notional
        * _floating_margin(trade, forecast, discount)
        * s.accrual_fraction
        * discount.discount_factor(t, s.end)
    )


def floating_pv_forward_taylor(
    trade: FloatingDeposit,
    forecast: ZeroCurve,
    discount: Optional[ZeroCurve] = None,
    t: Optional[Day] = None,
) -> float:
    discount = forecast if discount is None else discount
    t = _at(discount, t)
    _require(trade, t, Phase.FORWARD)
    if trade.fixing is not None:
        return spread_pv_taylor(trade.as_fixed(), discount, t)
    return trade.notional * _floating_margin(trade, forecast, discount) * trade.schedule.accrual_fraction


def _floating_margin(trade: FloatingDeposit, forecast: ZeroCurve, discount: ZeroCurve) -> float:
    s = trade.schedule
    f12 = forecast.implied_forward_rate(s.start, s.end)
    z12 = discount.implied_forward_rate(s.start, s.end)
    # (f - z) first, so that identical curves cancel bit-exactly
    return (f12 - z12) + trade.spread


def fra_settlement(trade: ForwardRateAgreement, fixing: float) -> float:
    """Amount paid at the period start once the floating rate fixes."""
    dt = trade.schedule.accrual_fraction
    return trade.notional * (trade.rate - fixing) * dt / (1.0 + fixing * dt)


def fra_pv(trade: ForwardRateAgreement, curve: ZeroCurve, t: Optional[Day] = None) -> float:
    t = _at(curve, t)
    _require(trade, t, Phase.FORWARD)
    s = trade.schedule
    f12 = curve.implied_forward_rate(s.start, s.end)
    return fra_settlement(trade, f12) * curve.discount_factor(t, s.start)


def fra_pv_taylor(trade: ForwardRateAgreement, curve: ZeroCurve, t: Optional[Day] = None) -> float:
    t = _at(curve, t)
    _require(trade, t, Phase.FORWARD)
    s = trade.schedule
    f12 = curve.implied_forward_rate(s.start, s.end)
    return trade.notional * (trade.rate - f12) * s.accrual_fraction


def call_account_pv(trade: CallAccount, t: Day) -> float:
    """Withdrawable on demand, so valued on accrual with no MtM adjustment."""
    if t < trade.start:
        raise DomainError(f"call account valued at day {t} before it opens at {trade.start}")
    return trade.notional + trade.notional * trade.rate * yf(trade.start, t)


def breakdown(
    trade: Trade,
    curve: ZeroCurve,
    t: Optional[Day] = None,
    forecast: Optional[ZeroCurve] = None,
) -> PvBreakdown:
    """Uniform breakdown for any trade at ``t``; matured trades report zeros."""
    t = _at(curve, t)
    phase = trade_phase(trade, t)
    if isinstance(trade, CallAccount):
        if phase is Phase.FORWARD:
            return PvBreakdown.zero()
        accrued = trade.notional * trade.rate * yf(trade.start, t)
        return PvBreakdown.build(trade.notional, accrued, 0.0, call_account_pv(trade, t))
    if phase is Phase.MATURED:
        return PvBreakdown.zero()
    if isinstance(trade, ForwardRateAgreement):
        if phase is Phase.CASH:
            return PvBreakdown.zero()
        s = trade.schedule
        return PvBreakdown.build(
            0.0,
            0.0,
            fra_pv_taylor(trade, curve, t),
            fra_pv(trade, curve, t),
            market_rate=curve.implied_forward_rate(s.start, s.end),
        )
    if isinstance(trade, FloatingDeposit) and trade.fixing is None:
        if phase is Phase.CASH:
            raise DomainError("started floating deposit needs a fixing to be valued")
        fc = curve if forecast is None else forecast
        return PvBreakdown.build(
            0.0,
            0.0,
            floating_pv_forward_taylor(trade, fc, curve, t),
            floating_pv_forward(trade, fc, curve, t),
        )
    if phase is Phase.FORWARD:
        return forward_breakdown(trade, curve, t)
    return taylor_breakdown(trade, curve, t)


def present_value(
    trade: Trade,
    curve: ZeroCurve,
    t: Optional[Day] = None,
    forecast: Optional[ZeroCurve] = None,
) -> float:
    """Exact (DCF) value of any supported trade at ``t``."""
    return breakdown(trade, curve, t, forecast).pv_dcf
