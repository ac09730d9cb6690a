# Pricing a tom-next deposit three ways.
#
# We lend 1m tomorrow for one night at 5%. The market gives 2% overnight and
# 3% tom-next. A trader quotes the value off the rate spread alone; the full
# discounted cash flow and the discounted spread agree exactly.

from accrualmtm import FixedDeposit, ZeroCurve, dcf_pv_forward, spread_pv, spread_pv_taylor

trade = FixedDeposit.between(1_000_000, 0.05, start=1, end=2)
curve = ZeroCurve.from_forwards([(1, 0.02), (2, 0.03)], anchor=0)

print("DF(0,1)          ", round(curve.discount_factor(0, 1), 9))
print("DF(1,2)          ", round(curve.discount_factor(1, 2), 9))
print("DF(0,2)          ", round(curve.discount_factor(0, 2), 9))
print("implied TN rate  ", curve.implied_forward_rate(1, 2))

# (r - f) * dt, no discounting: quick and close
print("spread, undiscounted  ", round(spread_pv_taylor(trade, curve), 4))
# -N DF(0,1) + N (1 + r dt) DF(0,2)
print("discounted cash flows ", round(dcf_pv_forward(trade, curve), 4))
# (r - f) * dt * DF(0,2): identical to the line above
print("spread, discounted    ", round(spread_pv(trade, curve), 4))

# A trade struck at the forward is worth nothing.
par = FixedDeposit.between(1_000_000, curve.implied_forward_rate(1, 2), 1, 2)
print("at-market forward     ", dcf_pv_forward(par, curve))
