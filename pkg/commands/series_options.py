"""Options shared by the single-file commands."""

from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

import click

from exceptions import UsageError
from ie_core import cumulate_growth
from ingest import parse_source
from schemas import AnnualSeries, SeriesFormat, SeriesUnit


def series_options(command: Callable) -> Callable:
    """--format, --unit, --country and --filter for reading one source file."""
    options = [
        click.option(
            "--format",
            "fmt",
            type=click.Choice([fmt.value for fmt in SeriesFormat]),
            default=SeriesFormat.GENERIC_YEAR_VALUE.value,
            show_default=True,
            help="Source file layout.",
        ),
        click.option(
            "--unit",
            type=click.Choice([unit.value for unit in SeriesUnit]),
            default=SeriesUnit.INDEX.value,
            show_default=True,
            help="Unit of the values; percent-change series are cumulated first.",
        ),
        click.option("--country", default=None, help="Location code for oecd_long files."),
        click.option(
            "--filter",
            "filters",
            multiple=True,
            metavar="COLUMN=VALUE",
            help="Extra column filter for oecd_long files; repeatable.",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def parse_filters(filters: Tuple[str, ...]) -> Dict[str, str]:
    parsed: Dict[str, str] = {}
    for item in filters:
        column, sep, value = item.partition("=")
        if not sep or not column.strip():
            raise UsageError(f"--filter expects COLUMN=VALUE, got {item!r}")
        parsed[column.strip()] = value.strip()
    return parsed


def read_series(
    path: Path,
    fmt: str,
    unit: str,
    country: Optional[str],
    filters: Tuple[str, ...],
    base_year: Optional[int] = None,
) -> AnnualSeries:
    """Parse one file; percent-change input comes back as an index series."""
    series = parse_source(
        Path(path).read_bytes(),
        SeriesFormat(fmt),
        Path(path).stem,
        SeriesUnit(unit),
        country=country,
        filters=parse_filters(filters),
    )
    if series.unit is SeriesUnit.PERCENT_CHANGE:
        return cumulate_growth(series, base_year if base_year is not None else series.years[0] - 1)
    return series
