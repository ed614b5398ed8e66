"""Normalization and information-entropy transform of annual series."""

from typing import List

import numpy as np

from exceptions import ArgumentError, DomainError, GapError
from schemas import AnnualSeries, IESeries, SeriesUnit

from .series import make_ie_series, make_series


def _missing_years(years: List[int]) -> List[int]:
    if not years:
        return []
    present = set(years)
    return [year for year in range(years[0], years[-1] + 1) if year not in present]


def _require_level(series: AnnualSeries, operation: str) -> None:
    if not series.unit.is_level:
        raise ArgumentError(f"{operation} needs a level series, {series.name} is {series.unit.value}")


def _require_base(series: AnnualSeries, base_year: int) -> float:
    if base_year not in series:
        raise ArgumentError(f"base year {base_year} not in {series.name}")
    base_value = series.value(base_year)
    if not base_value > 0:
        raise DomainError(f"{series.name}: base value must be > 0, got {base_value}")
    return base_value


def cumulate_growth(series: AnnualSeries, base_year: int) -> AnnualSeries:
    """Compound a percent-change series into an index equal to 1.0 at base_year.

    The change recorded for year y takes the index from y-1 to y, so the result
    always spans first_year-1 to last_year and base_year may be any of those.
    """
    if series.unit is not SeriesUnit.PERCENT_CHANGE:
        raise ArgumentError(f"{series.name} is not a percent-change series")
    years = series.years
    if not years:
        raise ArgumentError(f"{series.name} has no observations")
    if not years[0] - 1 <= base_year <= years[-1]:
        raise ArgumentError(
            f"base year {base_year} is not in or adjacent to {series.name} ({years[0]}-{years[-1]})"
        )
    missing = _missing_years(years)
    if missing:
        raise GapError(missing)
    pct = series.values
    if np.any(pct <= -100.0):
        raise DomainError(f"{series.name}: percent change must be > -100")

    span = [years[0] - 1, *years]
    levels = np.concatenate(([1.0], np.cumprod(1.0 + pct / 100.0)))
    index = dict(zip(span, (levels / levels[base_year - span[0]]).tolist()))
    index[base_year] = 1.0
    return make_series(series.name, SeriesUnit.INDEX, index, series.metadata)


def growth_rate_series(series: AnnualSeries) -> AnnualSeries:
    """Year-on-year percent change of a level series (first year dropped)."""
    _require_level(series, "growth_rate_series")
    missing = _missing_years(series.years)
    if missing:
        raise GapError(missing)
    values = series.values
    changes = 100.0 * (values[1:] / values[:-1] - 1.0)
    return make_series(
        series.name, SeriesUnit.PERCENT_CHANGE, dict(zip(series.years[1:], changes.tolist()))
    )


def ie_transform(series: AnnualSeries, base_year: int) -> IESeries:
    """point(y) = ln(value(y) / value(base_year)), exactly 0 at base_year."""
    _require_level(series, "ie_transform")
    base_value = _require_base(series, base_year)
    values = series.values
    if np.any(values <= 0):
        raise DomainError(f"{series.name}: IE transform needs positive values")
    points = dict(zip(series.years, np.log(values / base_value).tolist()))
    points[base_year] = 0.0
    return make_ie_series(series.name, base_year, points)


def rebase(series: AnnualSeries, base_year: int) -> AnnualSeries:
    """Divide every value by the base-year value; the result is an index."""
    _require_level(series, "rebase")
    base_value = _require_base(series, base_year)
    rebased = dict(zip(series.years, (series.values / base_value).tolist()))
    rebased[base_year] = 1.0
    return make_series(series.name, SeriesUnit.INDEX, rebased, series.metadata)


def scale_series(series: AnnualSeries, factor: float) -> AnnualSeries:
    """Multiply every value by a positive factor, e.g. thousands to persons."""
    if not factor > 0:
        raise DomainError(f"scale factor must be > 0, got {factor}")
    if factor == 1.0:
        return series
    scaled = dict(zip(series.years, (series.values * factor).tolist()))
    return make_series(series.name, series.unit, scaled, series.metadata)
