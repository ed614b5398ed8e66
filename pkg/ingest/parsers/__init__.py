"""Source file parsers."""

from .generic import parse_generic_year_value
from .oecd import parse_oecd_long, resolve_column
from .ons import parse_ons_timeseries

__all__ = ["parse_generic_year_value", "parse_oecd_long", "parse_ons_timeseries", "resolve_column"]
