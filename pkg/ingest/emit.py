"""Writers for the generic CSV format."""

import io

import pandas as pd

from schemas import AnnualSeries


def emit_generic_year_value(series: AnnualSeries, value_header: str = "value") -> str:
    """year,value CSV with a header row; floats keep full round-trip precision."""
    frame = pd.DataFrame({"year": series.years, value_header: series.values})
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()
