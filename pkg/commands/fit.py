"""fit: growth fit of one series over a window."""

from pathlib import Path
from typing import Optional

import click
import yaml

from config.settings import settings
from ie_core import ie_transform
from regress import fit_growth
from reporting import ReportRenderer
from schemas import Phase

from .series_options import read_series, series_options


@click.command("fit")
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--from", "start", type=int, default=None, help="First year of the window.")
@click.option("--to", "end", type=int, default=None, help="Last year of the window.")
@click.option("--base-year", type=int, default=None, help="IE origin; default is the first year.")
@series_options
def fit(
    file: Path,
    start: Optional[int],
    end: Optional[int],
    base_year: Optional[int],
    fmt: str,
    unit: str,
    country: Optional[str],
    filters: tuple,
) -> None:
    """Print lambda, annual rate and R^2 of FILE over the window."""
    series = read_series(file, fmt, unit, country, filters, base_year)
    years = series.years
    window = Phase(
        label="window",
        start_year=years[0] if start is None else start,
        end_year=years[-1] if end is None else end,
    )
    ie = ie_transform(series, years[0] if base_year is None else base_year)
    growth = fit_growth(ie, window)
    renderer = ReportRenderer(settings.report_significant_digits)
    document = {"series": series.name, **renderer.growth(growth)}
    click.echo(yaml.safe_dump(document, sort_keys=False), nl=False)
