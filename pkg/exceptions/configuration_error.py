"""Configuration error exception."""

from typing import Optional

from .analysis_exception import AnalysisException
from .exit_codes import USAGE_ERROR


class ConfigurationError(AnalysisException):
    """Exception for an invalid analysis config or a missing series role (exit 1)."""

    def __init__(self, message: str = "Invalid configuration", role: Optional[str] = None):
        self.role = role
        context = {"role": role} if role else None
        super().__init__(message, USAGE_ERROR, context)
