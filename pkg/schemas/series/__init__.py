"""Series schemas."""

from .annual_series import AnnualSeries, SeriesUnit
from .ie_series import IESeries
from .phase import ALTERNATE_PHASES, CANONICAL_PHASES, Phase
from .rate_constant import RateConstant, rates_agree

__all__ = [
    "AnnualSeries",
    "SeriesUnit",
    "IESeries",
    "Phase",
    "CANONICAL_PHASES",
    "ALTERNATE_PHASES",
    "RateConstant",
    "rates_agree",
]
