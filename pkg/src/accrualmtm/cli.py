"""Command-line front end.

    accrualmtm price|simulate|greeks --config RUN.ini [--out csv|table] [--full-precision]

Exit codes: 0 success, 1 malformed config or arguments, 2 a pricing
precondition failed (wrong phase, bad discount factor, ...).
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import math
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Optional, Sequence

from .curve import ZeroCurve
from .errors import DomainError
from .instrument import (
    CallAccount,
    FixedDeposit,
    FloatingDeposit,
    ForwardRateAgreement,
    Phase,
    Schedule,
    Trade,
    trade_phase,
)
from .pnlsim import simulate
from .risk import BP, analytic_rho, analytic_theta, duration_days, fd_rho, fd_theta
from .valuation import breakdown, floating_pv_forward, spread_pv, spread_pv_taylor

SIM_COLUMNS = ("days", "PV", "accrued", "mtmAdj", "PV_Taylor", "unexplained")

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN = 0, 1, 2


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    trade: Trade
    curve: ZeroCurve
    forecast: Optional[ZeroCurve]
    valuation_day: int
    sim_from: Optional[int]
    sim_to: Optional[int]
    out: str = "table"
    precision: int = 2


def _parse_pillars(text: str) -> list[tuple[int, float]]:
    pillars = []
    for line in text.replace(";", "\n").splitlines():
        line = line.strip()
        if not line:
            continue
        day, _, rate = line.partition(",")
        if not rate:
            raise ConfigError(f"pillar {line!r} is not a day,rate record")
        pillars.append((int(day), float(rate)))
    if not pillars:
        raise ConfigError("curve has no pillars")
    return pillars


def _parse_curve(sec: configparser.SectionProxy) -> ZeroCurve:
    anchor = sec.getint("anchor_day", 0)
    pillars = _parse_pillars(sec.get("pillars", ""))
    quote = sec.get("quote", "zero").strip().lower()
    if quote == "zero":
        return ZeroCurve.from_pillars(pillars, anchor)
    if quote == "forward":
        return ZeroCurve.from_forwards(pillars, anchor)
    raise ConfigError(f"unknown curve quote {quote!r} (expected zero or forward)")


def _parse_trade(sec: configparser.SectionProxy) -> Trade:
    kind = sec.get("kind", "").strip().lower()
    notional = sec.getfloat("notional")
    if notional is None:
        raise ConfigError("[trade] needs notional")
    start = sec.getint("start_day")
    if start is None:
        raise ConfigError("[trade] needs start_day")
    if kind == "call":
        return CallAccount(notional, sec.getfloat("rate"), start)
    end = sec.getint("end_day")
    if end is None:
        raise ConfigError("[trade] needs end_day")
    if kind == "fixed":
        return FixedDeposit.between(notional, sec.getfloat("rate"), start, end)
    if kind == "fra":
        return ForwardRateAgreement.between(notional, sec.getfloat("rate"), start, end)
    if kind == "floating":
        fixing = sec.getfloat("fixing")
        return FloatingDeposit(notional, sec.getfloat("spread", 0.0), Schedule(start, end), fixing)
    raise ConfigError(f"unknown trade kind {kind!r} (expected fixed, floating, fra or call)")


def load_config(path: str) -> RunConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    with open(path) as fh:
        parser.read_file(fh)
    for section in ("trade", "curve"):
        if not parser.has_section(section):
            raise ConfigError(f"missing [{section}] section")
    try:
        trade = _parse_trade(parser["trade"])
    except TypeError:
        raise ConfigError("[trade] is missing a rate or spread") from None
    curve = _parse_curve(parser["curve"])
    forecast = _parse_curve(parser["forecast_curve"]) if parser.has_section("forecast_curve") else None
    day = curve.anchor
    if parser.has_section("valuation"):
        day = parser["valuation"].getint("day", curve.anchor)
    sim_from = sim_to = None
    if parser.has_section("simulation"):
        sim_from = parser["simulation"].getint("from_day")
        sim_to = parser["simulation"].getint("to_day")
        if sim_from is None or sim_to is None:
            raise ConfigError("[simulation] needs from_day and to_day")
        if sim_from > sim_to:
            raise ConfigError(f"[simulation] from_day {sim_from} > to_day {sim_to}")
    out, precision = "table", 2
    if parser.has_section("output"):
        out = parser["output"].get("format", "table").strip().lower()
        precision = parser["output"].getint("precision", 2)
    if out not in ("table", "csv"):
        raise ConfigError(f"unknown output format {out!r}")
    if precision < 0:
        raise ConfigError("precision must be >= 0")
    return RunConfig(trade, curve, forecast, day, sim_from, sim_to, out, precision)


def format_number(x: float, precision: int = 2, full: bool = False) -> str:
    """Half-even rounding at ``precision`` places; ``full`` gives round-trip repr."""
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if full:
        return repr(float(x))
    q = Decimal(repr(float(x))).quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    return str(q)


def _emit(rows: list[list], header: Sequence[str], out: str) -> str:
    if out == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    cells = [list(header)] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for r in cells:
        first = r[0].ljust(widths[0])
        rest = [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join([first] + rest).rstrip())
    return "\n".join(lines) + "\n"


def _curve_at(curve: Optional[ZeroCurve], day: int) -> Optional[ZeroCurve]:
    if curve is None:
        return None
    return curve.rolled(day - curve.anchor)


def price_report(cfg: RunConfig) -> list[tuple[str, object]]:
    t = cfg.valuation_day
    curve = _curve_at(cfg.curve, t)
    forecast = _curve_at(cfg.forecast, t)
    phase = trade_phase(cfg.trade, t)
    bd = breakdown(cfg.trade, curve, t, forecast)
    report: list[tuple[str, object]] = [
        ("valuation_day", t),
        ("phase", phase.value),
        ("notional_leg", bd.notional_leg),
        ("accrued", bd.accrued),
        ("mtm_adjustment", bd.mtm_adjustment),
        ("pv_taylor", bd.pv_taylor),
        ("pv_dcf", bd.pv_dcf),
        ("unexplained", bd.unexplained),
    ]
    trade = cfg.trade
    if phase is Phase.FORWARD and isinstance(trade, FixedDeposit):
        report += [
            ("dcf_pv", bd.pv_dcf),
            ("spread_pv", spread_pv(trade, curve, t)),
            ("spread_pv_taylor", spread_pv_taylor(trade, curve, t)),
        ]
    elif phase is Phase.FORWARD and isinstance(trade, FloatingDeposit):
        report.append(("floating_pv", floating_pv_forward(trade, forecast or curve, curve, t)))
    return report


def greeks_report(cfg: RunConfig) -> list[tuple[str, object]]:
    t = cfg.valuation_day
    curve = _curve_at(cfg.curve, t)
    forecast = _curve_at(cfg.forecast, t)
    trade = cfg.trade
    nan = math.nan
    try:
        theta, theta_acc, theta_mtm = analytic_theta(trade, curve, t)
    except DomainError:
        theta = theta_acc = theta_mtm = nan
    try:
        fdt = fd_theta(trade, curve, t, forecast)
    except DomainError:
        fdt = nan
    rho = analytic_rho(trade, t)
    fdr = fd_rho(trade, curve, t, forecast=forecast)
    return [
        ("valuation_day", t),
        ("phase", trade_phase(trade, t).value),
        ("theta", theta),
        ("theta_accrual", theta_acc),
        ("theta_mtm", theta_mtm),
        ("rho", rho),
        ("rho_bp", rho * BP),
        ("duration_days", duration_days(trade, t)),
        ("fd_theta", fdt),
        ("fd_rho", fdr),
        ("theta_gap", fdt - theta),
        ("rho_gap", fdr - rho),
    ]


def simulation_table(cfg: RunConfig) -> tuple[list[str], list[list[float]]]:
    if cfg.sim_from is None:
        raise ConfigError("simulate needs a [simulation] section")
    days = range(cfg.sim_from, cfg.sim_to + 1)
    rows = simulate(cfg.trade, cfg.curve, days, forecast=cfg.forecast)
    header = list(SIM_COLUMNS)
    with_deferral = isinstance(cfg.trade, ForwardRateAgreement)
    if with_deferral:
        header.append("deferral")
    table = []
    for r in rows:
        line = [r.day, r.pv_dcf, r.accrued, r.mtm_adj, r.pv_taylor, r.unexplained]
        if with_deferral:
            line.append(r.deferral)
        table.append(line)
    return header, table


def _kv_output(report, cfg: RunConfig, full: bool) -> str:
    rows = [[k, v if isinstance(v, str) else format_number(v, cfg.precision, full)] for k, v in report]
    return _emit(rows, ["field", "value"], cfg.out)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="accrualmtm", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=("price", "simulate", "greeks"))
    parser.add_argument("--config", required=True, help="run configuration (INI)")
    parser.add_argument("--out", choices=("csv", "table"), help="override [output] format")
    parser.add_argument(
        "--full-precision",
        action="store_true",
        help="print shortest round-trip floats instead of rounding",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        cfg = load_config(args.config)
    except (ConfigError, configparser.Error, OSError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.out:
        cfg = RunConfig(**{**cfg.__dict__, "out": args.out})
    full = args.full_precision
    try:
        if args.command == "price":
            text = _kv_output(price_report(cfg), cfg, full)
        elif args.command == "greeks":
            text = _kv_output(greeks_report(cfg), cfg, full)
        else:
            header, table = simulation_table(cfg)
            rows = [[format_number(v, cfg.precision, full) for v in r] for r in table]
            text = _emit(rows, header, cfg.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(text)
    return EXIT_OK
