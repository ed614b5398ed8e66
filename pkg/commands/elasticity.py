"""elasticity: slope of one IE series against another over a window."""

from pathlib import Path
from typing import Optional

import click
import yaml

from config.settings import settings
from ie_core import ie_transform
from regress import fit_elasticity
from reporting import ReportRenderer
from schemas import Phase

from .series_options import read_series, series_options


@click.command("elasticity")
@click.argument("file_y", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("file_x", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--from", "start", type=int, default=None, help="First year of the window.")
@click.option("--to", "end", type=int, default=None, help="Last year of the window.")
@click.option("--base-year", type=int, default=None, help="IE origin; default is the first shared year.")
@click.option("--through-origin", is_flag=True, help="Fit without an intercept.")
@series_options
def elasticity(
    file_y: Path,
    file_x: Path,
    start: Optional[int],
    end: Optional[int],
    base_year: Optional[int],
    through_origin: bool,
    fmt: str,
    unit: str,
    country: Optional[str],
    filters: tuple,
) -> None:
    """Regress IE of FILE_Y on IE of FILE_X."""
    response = read_series(file_y, fmt, unit, country, filters, base_year)
    predictor = read_series(file_x, fmt, unit, country, filters, base_year)
    shared = [year for year in response.years if year in predictor]
    base = base_year if base_year is not None else (shared[0] if shared else response.years[0])
    window = Phase(
        label="window",
        start_year=(shared[0] if shared else base) if start is None else start,
        end_year=(shared[-1] if shared else base) if end is None else end,
    )
    result = fit_elasticity(
        ie_transform(response, base),
        ie_transform(predictor, base),
        window,
        through_origin=through_origin,
    )
    renderer = ReportRenderer(settings.report_significant_digits)
    click.echo(yaml.safe_dump(renderer.elasticity(result), sort_keys=False), nl=False)
