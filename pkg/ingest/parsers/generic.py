"""Generic "year,value" CSV."""

from typing import Dict

from exceptions import DuplicateYear, EmptySeries, ParseError
from ie_core import make_series
from schemas import AnnualSeries, SeriesUnit

from ..reader import (
    Source,
    is_blank,
    looks_numeric,
    parse_observation,
    parse_year,
    read_frame,
    read_text,
)


def parse_generic_year_value(
    text: Source,
    name: str = "series",
    unit: SeriesUnit = SeriesUnit.INDEX,
) -> AnnualSeries:
    """Rows of year,value with an optional header, detected by a non-numeric first field."""
    frame = read_frame(read_text(text))
    if frame.shape[1] < 2:
        raise ParseError("expected two fields per row: year,value", line=1, column=2)

    observations: Dict[int, float] = {}
    header_seen = False
    for index, row in frame.iterrows():
        line = int(index) + 1
        if is_blank(row):
            continue
        year_field, value_field = row.iloc[0], row.iloc[1]
        if not observations and not header_seen and not looks_numeric(year_field):
            header_seen = True
            continue
        year = parse_year(year_field, line, 1)
        if value_field == "":
            raise ParseError("missing value", line=line, column=2)
        value = parse_observation(value_field, unit, line, 2)
        if year in observations:
            raise DuplicateYear(year, line=line)
        observations[year] = value

    if not observations:
        raise EmptySeries(f"{name}: no year,value rows")
    return make_series(name, unit, observations)
