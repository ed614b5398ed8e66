"""Chained investment -> productivity -> GDP predictor."""

from .composition import build_chain, compose, predict_ie_gdppc
from .prediction import accuracy_score, chain_for_year, predict_gdp, predict_observed

__all__ = [
    "accuracy_score",
    "build_chain",
    "chain_for_year",
    "compose",
    "predict_gdp",
    "predict_ie_gdppc",
    "predict_observed",
]
