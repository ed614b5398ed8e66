"""Conversions between the rate constant lambda and the annual growth rate r."""

import math
from typing import Optional

from exceptions import ArgumentError, DomainError
from schemas import RateConstant, rates_agree


def lambda_from_rate(r: float) -> float:
    """lambda = ln(1 + r), defined for r > -1."""
    if not math.isfinite(r):
        raise DomainError(f"growth rate must be finite, got {r}")
    if r <= -1.0:
        raise DomainError(f"growth rate must be > -1, got {r}")
    return math.log1p(r)


def rate_from_lambda(lam: float) -> float:
    """r = exp(lambda) - 1."""
    if not math.isfinite(lam):
        raise DomainError(f"rate constant must be finite, got {lam}")
    return math.expm1(lam)


def rate_constant(lam: Optional[float] = None, rate: Optional[float] = None) -> RateConstant:
    """Build a RateConstant from whichever side is known."""
    if lam is None and rate is None:
        raise ArgumentError("either lambda or rate is required")
    if lam is None:
        lam = lambda_from_rate(rate)
    if rate is None:
        rate = rate_from_lambda(lam)
    if not rates_agree(lam, rate):
        raise DomainError(f"rate {rate} is inconsistent with lambda {lam}")
    return RateConstant(lambda_=lam, rate=rate)
