"""Argument error exception."""

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class ArgumentError(AnalysisException):
    """Exception for an argument inconsistent with the data, e.g. an absent base year (exit 2)."""

    def __init__(self, message: str = "Invalid argument"):
        super().__init__(message, DATA_ERROR)
