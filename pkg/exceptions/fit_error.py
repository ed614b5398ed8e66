"""Fit error exception."""

from .analysis_exception import AnalysisException
from .exit_codes import FIT_ERROR


class FitError(AnalysisException):
    """Exception for a regression that cannot be computed (exit 3)."""

    def __init__(self, message: str = "Insufficient data for a line fit"):
        super().__init__(message, FIT_ERROR)
