"""Seeded synthetic series and economies.

Generator contract: numpy.random.default_rng(seed) (PCG64). gen_exponential
draws one normal vector of n_years; gen_chained_economy draws three, in the
order investment, wages, cpi, whatever noise_sd is.
"""

from typing import Dict, Tuple

import numpy as np

from ie_core import make_series, rebase
from schemas import (
    AnnualSeries,
    Dataset,
    SeriesRole,
    SeriesUnit,
    SyntheticSpec,
    YearRange,
)

# Base-year levels of the generated economy
INVESTMENT_BASE = 200_000.0
PRODUCTIVITY_BASE = 100.0
GDP_PER_CAPITA_BASE = 25_000.0
WAGES_BASE = 40_000.0
CPI_BASE = 100.0
POPULATION_BASE = 60_000_000.0


def _years(base_year: int, n_years: int) -> np.ndarray:
    return np.arange(base_year, base_year + n_years)


def _level(name: str, unit: SeriesUnit, years: np.ndarray, values: np.ndarray) -> AnnualSeries:
    return make_series(name, unit, dict(zip(years.tolist(), values.tolist())))


def gen_exponential(spec: SyntheticSpec) -> AnnualSeries:
    """value(y) = exp(lambda * (y - base_year)) * exp(eps_y), eps_y ~ N(0, noise_sd^2)."""
    rng = np.random.default_rng(spec.seed)
    years = _years(spec.base_year, spec.n_years)
    t = years - spec.base_year
    noise = rng.normal(0.0, spec.noise_sd, spec.n_years)
    return _level(spec.name, SeriesUnit.INDEX, years, np.exp(spec.lambda_ * t + noise))


def gen_chained_economy(
    betas: Tuple[float, float],
    lambda_inv: float,
    population_rate: float,
    n_years: int = 20,
    seed: int = 0,
    noise_sd: float = 0.0,
    base_year: int = 2000,
    wage_elasticity: float = 1.0,
    cpi_lambda: float = 0.0,
) -> Dataset:
    """Economy whose IE relationships are exactly linear, with all seven roles.

    investment IE = lambda_inv * t (+ noise); productivity IE = b1 * investment IE;
    GDP per capita IE = b2 * productivity IE; GDP = GDP per capita * population.
    """
    b1, b2 = betas
    rng = np.random.default_rng(seed)
    years = _years(base_year, n_years)
    t = (years - base_year).astype(float)
    investment_noise = rng.normal(0.0, noise_sd, n_years)
    wages_noise = rng.normal(0.0, noise_sd, n_years)
    cpi_noise = rng.normal(0.0, noise_sd, n_years)

    ie_investment = lambda_inv * t + investment_noise
    ie_productivity = b1 * ie_investment
    ie_gdppc = b2 * ie_productivity
    gdppc = GDP_PER_CAPITA_BASE * np.exp(ie_gdppc)
    population = POPULATION_BASE * (1.0 + population_rate) ** t

    levels: Dict[SeriesRole, Tuple[SeriesUnit, np.ndarray]] = {
        SeriesRole.GDP: (SeriesUnit.CURRENCY_LEVEL, gdppc * population),
        SeriesRole.CPI: (SeriesUnit.INDEX, CPI_BASE * np.exp(cpi_lambda * t + cpi_noise)),
        SeriesRole.GDP_PER_CAPITA: (SeriesUnit.CURRENCY_LEVEL, gdppc),
        SeriesRole.PRODUCTIVITY: (SeriesUnit.INDEX, PRODUCTIVITY_BASE * np.exp(ie_productivity)),
        SeriesRole.WAGES: (
            SeriesUnit.CURRENCY_LEVEL,
            WAGES_BASE * np.exp(wage_elasticity * ie_productivity + wages_noise),
        ),
        SeriesRole.INVESTMENT: (SeriesUnit.CURRENCY_LEVEL, INVESTMENT_BASE * np.exp(ie_investment)),
        SeriesRole.POPULATION: (SeriesUnit.POPULATION_COUNT, population),
    }
    series = {
        role: rebase(_level(role.value, unit, years, values), base_year)
        for role, (unit, values) in levels.items()
    }
    return Dataset(
        series=series,
        coverage=YearRange(start=int(years[0]), end=int(years[-1])),
        base_year=base_year,
    )
