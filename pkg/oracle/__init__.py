"""Synthetic data generators and independent reference implementations for tests."""

from .generators import gen_chained_economy, gen_exponential
from .ols_reference import ols_reference
from .writer import CONFIG_FILENAME, write_dataset

__all__ = [
    "CONFIG_FILENAME",
    "gen_chained_economy",
    "gen_exponential",
    "ols_reference",
    "write_dataset",
]
