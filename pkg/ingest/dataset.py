"""Dataset assembly: parse each source, normalize to index form, validate coverage."""

from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set

from config.structlog_config import get_logger
from exceptions import ConfigurationError, GapError, with_context
from ie_core import cumulate_growth, rebase, scale_series
from schemas import (
    AnalysisKind,
    AnnualSeries,
    Dataset,
    SeriesFormat,
    SeriesRole,
    SeriesSpec,
    SeriesUnit,
    YearRange,
)

from .parsers import parse_generic_year_value, parse_oecd_long, parse_ons_timeseries
from .reader import Source

logger = get_logger("ingest")

ELASTICITY_ROLES = (
    SeriesRole.GDP_PER_CAPITA,
    SeriesRole.PRODUCTIVITY,
    SeriesRole.WAGES,
    SeriesRole.INVESTMENT,
)

REQUIRED_ROLES: Dict[AnalysisKind, Sequence[SeriesRole]] = {
    AnalysisKind.GROWTH: (),
    AnalysisKind.ELASTICITY: ELASTICITY_ROLES,
    AnalysisKind.CHAIN: tuple(SeriesRole),
}


def required_roles(analyses: Iterable[AnalysisKind]) -> List[SeriesRole]:
    needed: Set[SeriesRole] = set()
    for analysis in analyses:
        needed.update(REQUIRED_ROLES[analysis])
    return [role for role in SeriesRole if role in needed]


def parse_source(
    text: Source,
    fmt: SeriesFormat,
    name: str,
    unit: SeriesUnit,
    country: Optional[str] = None,
    filters: Optional[Dict[str, str]] = None,
) -> AnnualSeries:
    """Dispatch to the parser for the source format."""
    if fmt is SeriesFormat.ONS_TIMESERIES:
        return parse_ons_timeseries(text, name=name, unit=unit)
    if fmt is SeriesFormat.OECD_LONG:
        if not country:
            raise ConfigurationError(f"{name}: oecd_long sources need a country")
        return parse_oecd_long(text, country, name=name, unit=unit, filters=filters)
    return parse_generic_year_value(text, name=name, unit=unit)


def parse_series(spec: SeriesSpec, text: Source) -> AnnualSeries:
    return parse_source(
        text, spec.format, spec.role.value, spec.unit, country=spec.country, filters=spec.filters
    )


def load_series(spec: SeriesSpec) -> AnnualSeries:
    path = Path(spec.path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise ConfigurationError(f"cannot read {path}: {exc.strerror}", role=spec.role.value) from exc
    return parse_series(spec, data)


def _required_years(unit: SeriesUnit, analysis_range: YearRange, base_year: int) -> List[int]:
    years = analysis_range.years()
    if unit is SeriesUnit.PERCENT_CHANGE and base_year == analysis_range.start:
        # the base year's own change only matters for years before it
        years.remove(base_year)
    return years


def normalize_series(
    series: AnnualSeries,
    spec: SeriesSpec,
    analysis_range: YearRange,
    base_year: int,
) -> AnnualSeries:
    """Index form over exactly the analysis range, equal to 1.0 at the base year."""
    base_year = spec.base_year if spec.base_year is not None else base_year
    required = _required_years(series.unit, analysis_range, base_year)
    missing = [year for year in required if year not in series]
    if missing:
        raise GapError(missing, role=spec.role.value)

    window = series.restrict(analysis_range.start, analysis_range.end)
    if window.unit is SeriesUnit.PERCENT_CHANGE:
        return cumulate_growth(window, base_year).restrict(analysis_range.start, analysis_range.end)
    return rebase(scale_series(window, spec.scale), base_year)


def assemble_dataset(
    specs: Sequence[SeriesSpec],
    analysis_range: YearRange,
    required: Iterable[SeriesRole] = (),
    base_year: Optional[int] = None,
) -> Dataset:
    """Parse, normalize and validate every spec into a Dataset."""
    base_year = analysis_range.start if base_year is None else base_year
    by_role: Dict[SeriesRole, SeriesSpec] = {}
    for spec in specs:
        if spec.role in by_role:
            raise ConfigurationError(f"role {spec.role.value} configured twice", role=spec.role.value)
        by_role[spec.role] = spec

    absent = [role.value for role in required if role not in by_role]
    if absent:
        raise ConfigurationError(
            f"missing series for role(s): {', '.join(absent)}", role=absent[0]
        )

    series: Dict[SeriesRole, AnnualSeries] = {}
    for role in SeriesRole:
        spec = by_role.get(role)
        if spec is None:
            continue
        with with_context(stage="ingest", role=role.value, source=Path(spec.path).name):
            raw = load_series(spec)
            series[role] = normalize_series(raw, spec, analysis_range, base_year)
        logger.info(
            "Series loaded",
            role=role.value,
            format=spec.format.value,
            unit=spec.unit.value,
            observations=len(raw),
        )

    return Dataset(
        series=series,
        coverage=analysis_range,
        base_year=base_year,
        specs=[by_role[role] for role in series],
    )
