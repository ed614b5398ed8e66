"""Growth and elasticity fits over phase windows."""

from typing import Dict, Iterable, List

from exceptions import FitError, with_context
from ie_core import rate_constant
from schemas import ElasticityFit, GrowthFit, IESeries, Phase

from .ols import MIN_FIT_POINTS, fit_line


def phase_years(ie: IESeries, phase: Phase) -> List[int]:
    return [year for year in ie.years if phase.contains(year)]


def fit_growth(ie: IESeries, phase: Phase) -> GrowthFit:
    """Slope of the IE series against years since its base year, inside the phase."""
    years = phase_years(ie, phase)
    if len(years) < MIN_FIT_POINTS:
        raise FitError(
            f"{ie.name}: phase {phase} holds {len(years)} year(s), need {MIN_FIT_POINTS}"
        )
    points = [(year - ie.base_year, ie.point(year)) for year in years]
    line = fit_line(points, phase=phase)
    rate = rate_constant(lam=line.slope)
    return GrowthFit(
        base=line,
        lambda_=rate.lambda_,
        annual_rate=rate.rate,
        series_name=ie.name,
    )


def fit_phases(ie: IESeries, phases: Iterable[Phase]) -> Dict[str, GrowthFit]:
    """One growth fit per phase, keyed by label; errors name the failing phase."""
    fits: Dict[str, GrowthFit] = {}
    for phase in phases:
        with with_context(phase=phase.label):
            fits[phase.label] = fit_growth(ie, phase)
    return fits


def common_phase_years(phase: Phase, *series: IESeries) -> List[int]:
    """Years inside the phase present in every series (pairwise-complete)."""
    shared = set(series[0].years)
    for other in series[1:]:
        shared &= set(other.years)
    return sorted(year for year in shared if phase.contains(year))


def fit_elasticity(
    response: IESeries,
    predictor: IESeries,
    phase: Phase,
    through_origin: bool = False,
) -> ElasticityFit:
    """OLS of response IE on predictor IE over their common years in the phase."""
    years = common_phase_years(phase, response, predictor)
    if len(years) < MIN_FIT_POINTS:
        raise FitError(
            f"{response.name} vs {predictor.name}: {len(years)} common year(s) in {phase}, "
            f"need {MIN_FIT_POINTS}"
        )
    points = [(predictor.point(year), response.point(year)) for year in years]
    try:
        line = fit_line(points, through_origin=through_origin, phase=phase)
    except FitError as exc:
        raise FitError(f"{response.name} vs {predictor.name} in {phase}: {exc.message}") from exc
    return ElasticityFit(base=line, response_name=response.name, predictor_name=predictor.name)
