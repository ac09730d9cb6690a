"""Integer-day time model and ACT/360 year fractions.

Time points are plain ``int`` day offsets from an arbitrary epoch (day 0 is
the booking date unless stated otherwise). There are no calendars and no
business-day rolls.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

Day = int


class DayCount(Enum):
    ACT_360 = 360


@dataclass(frozen=True, slots=True)
class YearFraction:
    """A day span measured in years.

    Spans are kept as whole days so that sums of fractions stay exact;
    ``value`` is the float used in pricing formulas.
    """

    days: int
    convention: DayCount = DayCount.ACT_360

    @property
    def value(self) -> float:
        return self.days / self.convention.value

    def __float__(self) -> float:
        return self.value

    def __add__(self, other: YearFraction) -> YearFraction:
        if not isinstance(other, YearFraction):
            return NotImplemented
        if other.convention is not self.convention:
            raise ValueError("cannot add year fractions with different day counts")
        return YearFraction(self.days + other.days, self.convention)

    def __neg__(self) -> YearFraction:
        return YearFraction(-self.days, self.convention)


def year_fraction(
    start: Day, end: Day, convention: DayCount = DayCount.ACT_360
) -> YearFraction:
    """Year fraction from ``start`` to ``end``; negative when ``end < start``."""
    return YearFraction(int(end) - int(start), convention)


def yf(start: Day, end: Day) -> float:
    """Float ACT/360 year fraction, the form used inside pricing kernels."""
    return (int(end) - int(start)) / DayCount.ACT_360.value
