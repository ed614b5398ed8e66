"""Total GDP prediction and the predictive-accuracy score."""

import math
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from config.structlog_config import get_logger
from exceptions import DomainError, FitError, GapError
from ie_core import make_ie_series, make_series
from regress import MIN_FIT_POINTS, fit_xy
from schemas import AnnualSeries, ElasticityChain, IESeries, Phase, PredictionResult, SeriesUnit

from .composition import compose

logger = get_logger("chain")


def predict_gdp(
    pred_ie_gdppc: IESeries,
    population: AnnualSeries,
    gdp_base_value: float,
    base_year: int,
    unit: SeriesUnit = SeriesUnit.INDEX,
) -> AnnualSeries:
    """GDP(y) = gdp_base_value * exp(pred(y)) * population(y) / population(base_year)."""
    if not (math.isfinite(gdp_base_value) and gdp_base_value > 0):
        raise DomainError(f"base-year GDP must be > 0, got {gdp_base_value}")
    needed = sorted(set(pred_ie_gdppc.years) | {base_year})
    missing = [year for year in needed if year not in population]
    if missing:
        raise GapError(missing, role="population")

    years = pred_ie_gdppc.years
    pop_ratio = np.array([population.value(year) for year in years]) / population.value(base_year)
    gdp = gdp_base_value * np.exp(pred_ie_gdppc.values) * pop_ratio
    return make_series("gdp_predicted", unit, dict(zip(years, gdp.tolist())))


def _fold(slope: float) -> float:
    return 1.0 / slope if slope >= 1.0 else slope


def accuracy_score(
    observed: AnnualSeries,
    predicted: AnnualSeries,
    phases: Sequence[Phase],
) -> PredictionResult:
    """Zero-intercept slope of observed on predicted over the phase years, folded to <= 1."""
    years = [
        year
        for year in observed.years
        if year in predicted and any(phase.contains(year) for phase in phases)
    ]
    if len(years) < MIN_FIT_POINTS:
        raise FitError(
            f"accuracy needs {MIN_FIT_POINTS} common years inside the evaluated phases, "
            f"got {len(years)}"
        )
    obs = [observed.value(year) for year in years]
    pred = [predicted.value(year) for year in years]
    comparison = fit_xy(pred, obs, through_origin=True).slope
    reverse = fit_xy(obs, pred, through_origin=True).slope
    if comparison <= 0:
        raise FitError(f"observed vs predicted slope is not positive: {comparison}")
    in_phase = {year: any(phase.contains(year) for phase in phases) for year in predicted.years}
    return PredictionResult(
        predicted_gdp=predicted,
        observed_gdp=observed,
        evaluation_years=years,
        accuracy=_fold(comparison),
        comparison_slope=comparison,
        reverse_slope=reverse,
        in_phase=in_phase,
    )


def chain_for_year(chains: Sequence[ElasticityChain], year: int) -> ElasticityChain:
    """Chain whose phase holds the year; else the nearest earlier one; else the nearest later."""
    for chain in chains:
        if chain.phase.contains(year):
            return chain
    earlier = [chain for chain in chains if chain.phase.end_year < year]
    if earlier:
        return max(earlier, key=lambda chain: chain.phase.end_year)
    return min(chains, key=lambda chain: chain.phase.start_year)


def predict_observed(
    chains: Sequence[ElasticityChain],
    ie_investment: IESeries,
    population: AnnualSeries,
    observed_gdp: AnnualSeries,
    base_year: int,
    years: Optional[Iterable[int]] = None,
) -> PredictionResult:
    """Predict GDP for every investment year with the per-phase chains and score it.

    Years outside every chain phase are predicted but excluded from the score.
    """
    if not chains:
        raise FitError("at least one fitted chain is required")
    wanted: List[int] = ie_investment.years if years is None else sorted(years)
    missing = [year for year in wanted if year not in ie_investment]
    if missing:
        raise GapError(missing, role="investment")
    points: Dict[int, float] = {
        year: compose(chain_for_year(chains, year), ie_investment.point(year)) for year in wanted
    }
    pred_ie = make_ie_series("gdp_per_capita_predicted", base_year, points, anchored=False)
    if base_year not in observed_gdp:
        raise GapError([base_year], role="gdp")
    predicted = predict_gdp(
        pred_ie, population, observed_gdp.value(base_year), base_year, unit=observed_gdp.unit
    )
    result = accuracy_score(observed_gdp, predicted, [chain.phase for chain in chains])
    logger.info(
        "Prediction scored",
        accuracy=result.accuracy,
        comparison_slope=result.comparison_slope,
        evaluated=len(result.evaluation_years),
        out_of_phase=len(result.out_of_phase_years),
    )
    return result
