"""Duplicate year exception."""

from typing import Optional

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class DuplicateYear(AnalysisException):
    """Exception for a year (or country/year pair) seen twice (exit 2)."""

    def __init__(self, year: int, line: Optional[int] = None, country: Optional[str] = None):
        self.year = year
        self.line = line
        key = f"{country}, {year}" if country else str(year)
        context = {"year": year}
        if line is not None:
            context["line"] = line
        super().__init__(f"Duplicate year {key}", DATA_ERROR, context)
