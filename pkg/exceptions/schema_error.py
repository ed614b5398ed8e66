"""Schema error exception."""

from typing import List

from .analysis_exception import AnalysisException
from .exit_codes import DATA_ERROR


class SchemaError(AnalysisException):
    """Exception for a tabular source missing required columns (exit 2)."""

    def __init__(self, missing: List[str]):
        self.missing = missing
        super().__init__(
            f"Missing required column(s): {', '.join(missing)}",
            DATA_ERROR,
            {"missing": missing},
        )
