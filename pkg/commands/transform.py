"""transform: IE transform of one series, written to stdout as CSV."""

from pathlib import Path
from typing import Optional

import click
import pandas as pd

from config.settings import settings
from ie_core import ie_transform

from .series_options import read_series, series_options


@click.command("transform")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--base-year", type=int, default=None, help="Year mapped to IE 0; default is the first year.")
@series_options
def transform(
    file: Path,
    base_year: Optional[int],
    fmt: str,
    unit: str,
    country: Optional[str],
    filters: tuple,
) -> None:
    """Print year,ie for FILE."""
    series = read_series(file, fmt, unit, country, filters, base_year)
    base = base_year if base_year is not None else series.years[0]
    ie = ie_transform(series, base)
    frame = pd.DataFrame({"year": ie.years, "ie": ie.values})
    digits = settings.report_significant_digits
    click.echo(frame.to_csv(index=False, float_format=f"%.{digits}g", lineterminator="\n"), nl=False)
