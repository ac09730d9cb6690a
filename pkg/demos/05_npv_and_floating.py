# NPV of a plain deposit, and floating trades on one curve or two.

from accrualmtm import FixedDeposit, FloatingDeposit, Schedule, ZeroCurve, ledger_profile
from accrualmtm import floating_pv_forward

# NPV = cash + accrual value: zero before the start, rising linearly, then flat
# once the coupon is in cash. No jump on the payment day.
deposit = FixedDeposit.between(1_000_000, 0.05, start=10, end=100)
print(" day        cash    security       npv")
for row in ledger_profile(deposit, [5, 10, 55, 99, 100, 120]):
    print(f"{row.day:4d} {row.cash_position:11.2f} {row.security_pv:11.2f} {row.npv:9.2f}")

# Forecasting and discounting on the same curve: the floating rate and the
# discount rate cancel and only the spread is worth anything.
libor = ZeroCurve.from_pillars([(30, 0.031), (120, 0.034)])
plain = FloatingDeposit(1_000_000, 0.0, Schedule(30, 120))
with_spread = FloatingDeposit(1_000_000, 0.001, Schedule(30, 120))
print("\nsame curve, no spread   ", floating_pv_forward(plain, libor))
print("same curve, 10bp spread ", round(floating_pv_forward(with_spread, libor), 2))

# Discounting on a lower curve leaves the forecast/discount basis in the value.
ois = libor.shifted(-0.002)
print("forecast vs discount    ", round(floating_pv_forward(plain, libor, ois), 2))
