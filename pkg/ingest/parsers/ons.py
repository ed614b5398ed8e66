"""ONS time-series CSV export: metadata rows, then annual, quarterly and monthly rows."""

import re
from typing import Dict

from exceptions import DuplicateYear, EmptySeries
from ie_core import make_series
from schemas import AnnualSeries, SeriesUnit

from ..reader import Source, parse_observation, read_frame, read_text

ANNUAL_PERIOD = re.compile(r"[0-9]{4}")
METADATA_KEYS = {"Title": "title", "CDID": "cdid", "Source dataset ID": "dataset", "Unit": "unit"}


def parse_ons_timeseries(
    text: Source,
    name: str = "series",
    unit: SeriesUnit = SeriesUnit.INDEX,
) -> AnnualSeries:
    """Keep only rows keyed by a bare 4-digit year; blank values are unpublished and skipped."""
    frame = read_frame(read_text(text))
    metadata: Dict[str, str] = {}
    observations: Dict[int, float] = {}
    for index, row in frame.iterrows():
        line = int(index) + 1
        period = row.iloc[0]
        value_field = row.iloc[1] if len(row) > 1 else ""
        if period in METADATA_KEYS and value_field:
            metadata[METADATA_KEYS[period]] = value_field
            continue
        if not ANNUAL_PERIOD.fullmatch(period) or value_field == "":
            continue
        year = int(period)
        value = parse_observation(value_field, unit, line, 2)
        if year in observations:
            raise DuplicateYear(year, line=line)
        observations[year] = value

    if not observations:
        raise EmptySeries(f"{name}: no annual rows in ONS export")
    return make_series(name, unit, observations, metadata)
