"""Parse error exception."""

from typing import Optional

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class ParseError(AnalysisException):
    """Exception for a malformed field in a source file (exit 2)."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        context = {}
        if line is not None:
            context["line"] = line
        if column is not None:
            context["column"] = column
        super().__init__(message, DATA_ERROR, context)
