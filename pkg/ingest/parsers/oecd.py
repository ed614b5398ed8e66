"""OECD long-format CSV: one row per (country, year) observation."""

from typing import Dict, List, Mapping, Optional, Sequence

import pandas as pd

from exceptions import DuplicateYear, EmptySeries, SchemaError
from ie_core import make_series
from schemas import AnnualSeries, SeriesUnit

from ..reader import Source, parse_observation, parse_year, read_frame, read_text

# Candidates in preference order; the SDMX names come from the newer OECD Data Explorer
LOCATION_COLUMNS = ("LOCATION", "COUNTRY", "REF_AREA")
TIME_COLUMNS = ("TIME", "YEAR", "TIME_PERIOD")
VALUE_COLUMNS = ("VALUE", "OBS_VALUE")


def resolve_column(columns: Sequence[str], candidates: Sequence[str]) -> Optional[str]:
    """Exact match first, then case-insensitive, walking candidates in order."""
    for candidate in candidates:
        if candidate in columns:
            return candidate
        for column in columns:
            if column.lower() == candidate.lower():
                return column
    return None


def _resolve_all(frame: pd.DataFrame, filters: Mapping[str, str]) -> Dict[str, str]:
    columns: List[str] = list(frame.columns)
    resolved: Dict[str, str] = {}
    missing: List[str] = []
    wanted = {
        "location": LOCATION_COLUMNS,
        "time": TIME_COLUMNS,
        "value": VALUE_COLUMNS,
        **{f"filter:{key}": (key,) for key in filters},
    }
    for role, candidates in wanted.items():
        column = resolve_column(columns, candidates)
        if column is None:
            missing.append("/".join(candidates))
        else:
            resolved[role] = column
    if missing:
        raise SchemaError(missing)
    return resolved


def parse_oecd_long(
    text: Source,
    country_filter: str,
    name: str = "series",
    unit: SeriesUnit = SeriesUnit.INDEX,
    filters: Optional[Mapping[str, str]] = None,
) -> AnnualSeries:
    """Rows whose location equals country_filter (and every extra filter), as year -> value."""
    filters = dict(filters or {})
    frame = read_frame(read_text(text), header=True)
    columns = _resolve_all(frame, filters)
    time_position = list(frame.columns).index(columns["time"]) + 1
    value_position = list(frame.columns).index(columns["value"]) + 1

    observations: Dict[int, float] = {}
    for index, row in frame.iterrows():
        line = int(index) + 2
        if row[columns["location"]] != country_filter:
            continue
        if any(row[columns[f"filter:{key}"]] != wanted for key, wanted in filters.items()):
            continue
        year = parse_year(row[columns["time"]], line, time_position)
        value_field = row[columns["value"]]
        if value_field == "":
            continue
        value = parse_observation(value_field, unit, line, value_position)
        if year in observations:
            raise DuplicateYear(year, line=line, country=country_filter)
        observations[year] = value

    if not observations:
        raise EmptySeries(f"{name}: no rows for country {country_filter}")
    return make_series(name, unit, observations, {"country": country_filter})
