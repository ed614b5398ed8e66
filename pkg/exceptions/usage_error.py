"""Usage error exception."""

from .analysis_exception import AnalysisException
from .exit_codes import USAGE_ERROR


class UsageError(AnalysisException):
    """Exception for invalid command-line usage (exit 1)."""

    def __init__(self, message: str = "Invalid usage"):
        super().__init__(message, USAGE_ERROR)
