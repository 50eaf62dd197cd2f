"""Closed-form lognormal oracle with time-averaged coefficients."""

from __future__ import annotations

import math

from scipy.stats import norm

from ..coefficients import MarketCoefficients, averaged_coefficients
from ..errors import DomainError

OPTION_KINDS = ("call", "put")


def bs_price(s0: float, strike: float, maturity: float, r_bar: float, sigma_bar: float, kind: str = "call") -> float:
    """European call or put value under a lognormal terminal law.

    For deterministic r(t), sigma(t) the limiting Ito price is lognormal, so passing
    r_bar = (1/T)∫r and sigma_bar² = (1/T)∫sigma² gives the exact limit price.
    """
    if kind not in OPTION_KINDS:
        raise DomainError(f"Option kind must be one of {OPTION_KINDS}, got '{kind}'")
    if not s0 > 0:
        raise DomainError(f"S0 must be > 0, got {s0}")
    if not maturity > 0:
        raise DomainError(f"Maturity must be > 0, got {maturity}")
    if not sigma_bar > 0:
        raise DomainError(f"sigma_bar must be > 0, got {sigma_bar}")
    if strike < 0:
        raise DomainError(f"Strike must be >= 0, got {strike}")

    if strike == 0:
        return s0 if kind == "call" else 0.0

    discount = math.exp(-r_bar * maturity)
    vol = sigma_bar * math.sqrt(maturity)
    d1 = (math.log(s0 / strike) + (r_bar + 0.5 * sigma_bar * sigma_bar) * maturity) / vol
    d2 = d1 - vol
    if kind == "call":
        return float(s0 * norm.cdf(d1) - strike * discount * norm.cdf(d2))
    return float(strike * discount * norm.cdf(-d2) - s0 * norm.cdf(-d1))


def bs_price_for_market(mc: MarketCoefficients, s0: float, strike: float, maturity: float, kind: str = "call") -> float:
    """bs_price with r_bar, sigma_bar integrated exactly from the market curves."""
    r_bar, sigma_bar = averaged_coefficients(mc, maturity)
    return bs_price(s0, strike, maturity, r_bar, sigma_bar, kind)
