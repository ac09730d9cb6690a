# FRAs: valued on MtM alone while forward, then settled up front.
#
# A 3x6 FRA receiving 5% pays at the start of its period. Before then its
# value is the discounted rate spread. Once it pays, the interest received
# up front is deferred so income still builds up linearly over the period.

from accrualmtm import ForwardRateAgreement, ZeroCurve, fra_pv, fra_pv_taylor, ledger_profile

fra = ForwardRateAgreement.between(1_000_000, 0.05, start=90, end=180)
curve = ZeroCurve.flat(0.03)

print(f"implied 3x6 forward  {curve.implied_forward_rate(90, 180):.5f}")
print(f"exact PV             {fra_pv(fra, curve):.2f}")
print(f"(r - f) * dt         {fra_pv_taylor(fra, curve):.2f}")

print("\n day    cash   deferral    income")
for row in ledger_profile(fra, [0, 89, 90, 120, 135, 150, 179, 180, 200]):
    print(f"{row.day:4d} {row.cash_position:8.2f} {row.deferral:10.2f} {row.income:9.2f}")
