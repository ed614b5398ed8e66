"""Empty series exception."""

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class EmptySeries(AnalysisException):
    """Exception for a source that yields no annual observations (exit 2)."""

    def __init__(self, message: str = "No annual observations found"):
        super().__init__(message, DATA_ERROR)
