"""Gap error exception."""

from typing import List, Optional

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class GapError(AnalysisException):
    """Exception for missing years inside a required range (exit 2)."""

    def __init__(self, years: List[int], role: Optional[str] = None):
        self.years = sorted(years)
        self.role = role
        listed = ", ".join(str(year) for year in self.years)
        prefix = f"{role}, " if role else ""
        context = {"years": self.years}
        if role:
            context["role"] = role
        super().__init__(f"Missing years: {prefix}{listed}", DATA_ERROR, context)
