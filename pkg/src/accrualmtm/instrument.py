"""Single-period trade definitions.

Amounts are lender-positive: a positive notional means we lend it at the
start and receive it back with interest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .errors import DomainError
from .timecore import Day, yf


class PayAt(Enum):
    END = "end"
    START = "start"


class Phase(Enum):
    FORWARD = "forward"
    CASH = "cash"
    MATURED = "matured"


@dataclass(frozen=True)
class Schedule:
    start: Day
    end: Day
    pay_at: PayAt = PayAt.END

    def __post_init__(self):
        if not self.start < self.end:
            raise ValueError(
                f"schedule invariant violated: start_day < end_day required "
                f"(got start_day={self.start}, end_day={self.end})"
            )

    @property
    def accrual_fraction(self) -> float:
        return yf(self.start, self.end)


def _check_amounts(notional: float, rate: float, rate_name: str) -> None:
    if notional == 0 or not math.isfinite(notional):
        raise ValueError("notional must be finite and non-zero")
    if not math.isfinite(rate):
        raise ValueError(f"{rate_name} must be finite")


@dataclass(frozen=True)
class FixedDeposit:
    notional: float
    rate: float
    schedule: Schedule

    def __post_init__(self):
        _check_amounts(self.notional, self.rate, "rate")
        if self.schedule.pay_at is not PayAt.END:
            raise ValueError("a deposit pays interest at the end of the period")

    @classmethod
    def between(cls, notional: float, rate: float, start: Day, end: Day) -> FixedDeposit:
        return cls(notional, rate, Schedule(start, end))

    @property
    def coupon(self) -> float:
        return self.notional * self.rate * self.schedule.accrual_fraction

    @property
    def redemption(self) -> float:
        return self.notional + self.coupon


@dataclass(frozen=True)
class FloatingDeposit:
    """Deposit paying a floating rate plus a fixed spread.

    ``fixing`` is the floating rate once it is known; the trade then values
    like a fixed deposit at ``fixing + spread``.
    """

    notional: float
    spread: float
    schedule: Schedule
    fixing: Optional[float] = None

    def __post_init__(self):
        _check_amounts(self.notional, self.spread, "spread")
        if self.schedule.pay_at is not PayAt.END:
            raise ValueError("a deposit pays interest at the end of the period")
        if self.fixing is not None and not math.isfinite(self.fixing):
            raise ValueError("fixing must be finite")

    def with_fixing(self, rate: float) -> FloatingDeposit:
        if self.fixing is not None:
            raise ValueError("floating rate already fixed")
        return FloatingDeposit(self.notional, self.spread, self.schedule, float(rate))

    def as_fixed(self) -> FixedDeposit:
        if self.fixing is None:
            raise DomainError("floating deposit has no fixing yet")
        return FixedDeposit(self.notional, self.fixing + self.spread, self.schedule)


@dataclass(frozen=True)
class ForwardRateAgreement:
    """FRA receiving the contract rate; settles discounted at the period start."""

    notional: float
    rate: float
    schedule: Schedule

    def __post_init__(self):
        _check_amounts(self.notional, self.rate, "contract rate")
        if self.schedule.pay_at is not PayAt.START:
            raise ValueError("an FRA settles at the start of its period")

    @classmethod
    def between(cls, notional: float, rate: float, start: Day, end: Day) -> ForwardRateAgreement:
        return cls(notional, rate, Schedule(start, end, PayAt.START))

    @property
    def coupon(self) -> float:
        return self.notional * self.rate * self.schedule.accrual_fraction


@dataclass(frozen=True)
class CallAccount:
    """Open-ended deposit withdrawable any day; carries no duration."""

    notional: float
    rate: float
    start: Day

    def __post_init__(self):
        _check_amounts(self.notional, self.rate, "rate")


Trade = Union[FixedDeposit, FloatingDeposit, ForwardRateAgreement, CallAccount]


def trade_phase(trade: Trade, t: Day) -> Phase:
    if isinstance(trade, CallAccount):
        return Phase.FORWARD if t < trade.start else Phase.CASH
    if t < trade.schedule.start:
        return Phase.FORWARD
    if t < trade.schedule.end:
        return Phase.CASH
    return Phase.MATURED


def trade_rate(trade: Trade) -> float:
    """All-in fixed rate of a trade; floating deposits need a fixing."""
    if isinstance(trade, FloatingDeposit):
        return trade.as_fixed().rate
    return trade.rate
