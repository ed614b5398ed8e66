"""Construction of series models with errors mapped to the exception hierarchy."""

from typing import Dict, Mapping, Optional

from pydantic import ValidationError

from exceptions import DomainError
from schemas import AnnualSeries, IESeries, SeriesUnit


def _first_message(exc: ValidationError) -> str:
    errors = exc.errors()
    return errors[0]["msg"] if errors else str(exc)


def make_series(
    name: str,
    unit: SeriesUnit,
    observations: Mapping[int, float],
    metadata: Optional[Dict[str, str]] = None,
) -> AnnualSeries:
    """AnnualSeries with observations sorted by year."""
    ordered = {int(year): float(observations[year]) for year in sorted(observations)}
    try:
        return AnnualSeries(name=name, unit=unit, observations=ordered, metadata=metadata or {})
    except ValidationError as exc:
        raise DomainError(f"{name}: {_first_message(exc)}") from exc


def make_ie_series(
    name: str, base_year: int, points: Mapping[int, float], anchored: bool = True
) -> IESeries:
    ordered = {int(year): float(points[year]) for year in sorted(points)}
    try:
        return IESeries(name=name, base_year=base_year, points=ordered, anchored=anchored)
    except ValidationError as exc:
        raise DomainError(f"{name}: {_first_message(exc)}") from exc
