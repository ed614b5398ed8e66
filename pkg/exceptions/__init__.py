"""Exceptions package."""

from .analysis_exception import AnalysisException, with_context
from .argument_error import ArgumentError
from .configuration_error import ConfigurationError
from .domain_error import DomainError
from .duplicate_year import DuplicateYear
from .empty_series import EmptySeries
from .fit_error import FitError
from .gap_error import GapError
from .parse_error import ParseError
from .schema_error import SchemaError
from .usage_error import UsageError

__all__ = [
    "AnalysisException",
    "with_context",
    "ArgumentError",
    "ConfigurationError",
    "DomainError",
    "DuplicateYear",
    "EmptySeries",
    "FitError",
    "GapError",
    "ParseError",
    "SchemaError",
    "UsageError",
]
