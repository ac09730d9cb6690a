"""Simple-interest zero curves.

Discount factors use ``1 / (1 + z * dt)`` with ACT/360 fractions, never
exponential compounding. Pillars are keyed by absolute day; rates are linearly
interpolated between pillars and held flat beyond the ends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError
from .timecore import Day, yf


@dataclass(frozen=True)
class ZeroCurve:
    anchor: Day
    days: tuple[int, ...]
    rates: tuple[float, ...]

    def __post_init__(self):
        if len(self.days) == 0:
            raise ValueError("zero curve needs at least one pillar")
        if len(self.days) != len(self.rates):
            raise ValueError("pillar days and rates differ in length")
        if any(b <= a for a, b in zip(self.days, self.days[1:])):
            raise ValueError("pillar days must be strictly increasing")
        if not all(math.isfinite(r) for r in self.rates):
            raise ValueError("pillar rates must be finite")

    @classmethod
    def from_pillars(cls, pillars: Iterable[tuple[int, float]], anchor: Day = 0) -> ZeroCurve:
        pairs = [(int(d), float(r)) for d, r in pillars]
        return cls(anchor, tuple(d for d, _ in pairs), tuple(r for _, r in pairs))

    @classmethod
    def flat(cls, rate: float, anchor: Day = 0) -> ZeroCurve:
        return cls(anchor, (anchor,), (float(rate),))

    @classmethod
    def from_forwards(cls, forwards: Iterable[tuple[int, float]], anchor: Day = 0) -> ZeroCurve:
        """Chain simple forward rates quoted over consecutive periods.

        Each ``(day, f)`` is the forward from the previous pillar (or the anchor)
        to ``day``. ``[(1, 0.02), (2, 0.03)]`` is an overnight at 2% followed by
        a tom-next at 3%.
        """
        days, rates = [], []
        prev, growth = anchor, 1.0
        for d, f in forwards:
            d = int(d)
            if d <= prev:
                raise ValueError("forward periods must be consecutive and increasing")
            growth *= 1.0 + float(f) * yf(prev, d)
            days.append(d)
            rates.append((growth - 1.0) / yf(anchor, d))
            prev = d
        return cls(anchor, tuple(days), tuple(rates))

    def zero_rate(self, to: Day) -> float:
        return float(np.interp(to, self.days, self.rates))

    def _df_from_anchor(self, to: Day) -> float:
        if to == self.anchor:
            return 1.0
        growth = 1.0 + self.zero_rate(to) * yf(self.anchor, to)
        if growth <= 0.0:
            raise DomainError(f"1 + z*dt = {growth:g} <= 0 at day {to}")
        return 1.0 / growth

    def discount_factor(self, start: Day, end: Day) -> float:
        """Discount factor from ``end`` back to ``start``.

        For ``start`` after the anchor this is ``DF(a, end) / DF(a, start)``.
        """
        if start > end:
            raise DomainError(f"discount factor needs start <= end, got {start} > {end}")
        if start < self.anchor:
            raise DomainError(f"start day {start} precedes curve anchor {self.anchor}")
        if start == end:
            return 1.0
        if start == self.anchor:
            return self._df_from_anchor(end)
        return self._df_from_anchor(end) / self._df_from_anchor(start)

    def implied_forward_rate(self, t1: Day, t2: Day) -> float:
        """Simple rate f with ``1 + f * dt12 = DF(a, t1) / DF(a, t2)``."""
        if t1 >= t2:
            raise DomainError(f"forward period needs t1 < t2, got {t1} >= {t2}")
        if t1 < self.anchor:
            raise DomainError(f"forward start {t1} precedes curve anchor {self.anchor}")
        ratio = self._df_from_anchor(t1) / self._df_from_anchor(t2)
        return (ratio - 1.0) / yf(t1, t2)

    def rate_between(self, start: Day, end: Day) -> float:
        """Market rate from ``start`` to ``end`` as seen by a curve re-anchored at ``start``."""
        if start == self.anchor:
            return self.zero_rate(end)
        if start == end:
            return self.zero_rate(end)
        return self.implied_forward_rate(start, end)

    def shifted(self, bump: float) -> ZeroCurve:
        """Parallel shift of every pillar rate."""
        return ZeroCurve(self.anchor, self.days, tuple(r + bump for r in self.rates))

    def rolled(self, days: int) -> ZeroCurve:
        """Move anchor and pillars forward together; rates by tenor are unchanged."""
        return ZeroCurve(self.anchor + days, tuple(d + days for d in self.days), self.rates)
