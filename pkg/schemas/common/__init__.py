"""Common schemas."""

from .error_response import ErrorResponse
from .year_range import YearRange

__all__ = ["ErrorResponse", "YearRange"]
