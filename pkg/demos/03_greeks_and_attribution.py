# Theta, rho, and explaining daily PNL.
#
# With the market unchanged, all PNL is time decay: about N z / 360 a day.
# That theta splits into what the trade rate earns (accrual) and the
# difference to the market rate (MtM). A rate move is picked up by rho,
# which is minus the remaining time to maturity.

from accrualmtm import FixedDeposit, ZeroCurve, attribute, fd_rho, fd_theta, risk_report, simulate

trade = FixedDeposit.between(1_000_000, 0.05, start=0, end=10)
curve = ZeroCurve.flat(0.07, anchor=1)

report = risk_report(trade, curve, 1)
print(f"theta {report.theta:8.2f} = accrual {report.theta_accrual:.2f} + mtm {report.theta_mtm:.2f}")
print(f"rho   {report.rho:8.0f} per unit rate, {report.rho_bp:.2f} per bp, {report.duration_days} days left")
print(f"finite differences: theta {fd_theta(trade, curve, 1):.2f}, rho {fd_rho(trade, curve, 1):.0f}")

print("\nconstant 7% market")
rows = simulate(trade, ZeroCurve.flat(0.07), range(0, 11))
for a in attribute(rows):
    print(f"day {a.day:2d}  pnl {a.daily_pnl:7.2f}  theta {a.theta_accrual:6.2f} + {a.theta_mtm:5.2f}"
          f"  rho {a.rho_effect:5.2f}  residual {a.residual:5.2f}")

print("\nmarket rises 1bp a day")
curves = [ZeroCurve.flat(0.07 + 0.0001 * d, anchor=d) for d in range(0, 11)]
rows = simulate(trade, curves, range(0, 11))
for a in attribute(rows):
    print(f"day {a.day:2d}  pnl {a.daily_pnl:7.2f}  theta {a.theta_accrual + a.theta_mtm:6.2f}"
          f"  rho {a.rho_effect:5.2f}  residual {a.residual:5.2f}")
