"""Information-entropy transform and rate-constant mathematics."""

from .rates import lambda_from_rate, rate_constant, rate_from_lambda
from .series import make_ie_series, make_series
from .transform import (
    cumulate_growth,
    growth_rate_series,
    ie_transform,
    rebase,
    scale_series,
)

__all__ = [
    "cumulate_growth",
    "growth_rate_series",
    "ie_transform",
    "lambda_from_rate",
    "make_ie_series",
    "make_series",
    "rate_constant",
    "rate_from_lambda",
    "rebase",
    "scale_series",
]
