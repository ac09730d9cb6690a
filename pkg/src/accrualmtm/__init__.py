"""Accrual vs mark-to-market valuation and PNL attribution for single-period rate trades."""

from .curve import ZeroCurve
from .errors import DomainError, PhaseError
from .instrument import (
    CallAccount,
    FixedDeposit,
    FloatingDeposit,
    ForwardRateAgreement,
    PayAt,
    Phase,
    Schedule,
    trade_phase,
)
from .pnlsim import attribute, deferral, ledger_profile, simulate
from .risk import RiskReport, analytic_rho, analytic_theta, fd_rho, fd_theta, risk_report
from .timecore import DayCount, YearFraction, year_fraction
from .valuation import (
    PvBreakdown,
    accrual_pv,
    breakdown,
    call_account_pv,
    dcf_pv_cash,
    dcf_pv_forward,
    floating_pv_forward,
    fra_pv,
    fra_pv_taylor,
    present_value,
    spread_pv,
    spread_pv_taylor,
    taylor_breakdown,
)

__version__ = "0.1.0"
