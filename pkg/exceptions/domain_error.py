"""Domain error exception."""

from typing import Optional

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class DomainError(AnalysisException):
    """Exception for a value outside the mathematical domain of an operation (exit 2)."""

    def __init__(
        self,
        message: str = "Value outside the domain of the operation",
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        context = {}
        if line is not None:
            context["line"] = line
        if column is not None:
            context["column"] = column
        super().__init__(message, DATA_ERROR, context)
