"""Investment -> productivity -> GDP per capita composition on the log scale."""

from typing import Iterable, Optional

from exceptions import FitError, GapError
from ie_core import make_ie_series
from regress import MIN_FIT_POINTS, common_phase_years, fit_elasticity
from schemas import ElasticityChain, IESeries, Phase


def build_chain(
    ie_investment: IESeries,
    ie_productivity: IESeries,
    ie_gdppc: IESeries,
    phase: Phase,
) -> ElasticityChain:
    """Fit both links of the chain over the same phase."""
    shared = common_phase_years(phase, ie_investment, ie_productivity, ie_gdppc)
    if len(shared) < MIN_FIT_POINTS:
        raise FitError(
            f"chain needs {MIN_FIT_POINTS} years shared by all three series in {phase}, "
            f"got {len(shared)}"
        )
    return ElasticityChain(
        phase=phase,
        inv_to_prod=fit_elasticity(ie_productivity, ie_investment, phase),
        prod_to_gdppc=fit_elasticity(ie_gdppc, ie_productivity, phase),
    )


def compose(chain: ElasticityChain, ie_investment_value: float) -> float:
    """a2 + b2 * (a1 + b1 * x); both intercepts are kept."""
    productivity = chain.inv_to_prod.base.predict(ie_investment_value)
    return chain.prod_to_gdppc.base.predict(productivity)


def predict_ie_gdppc(
    chain: ElasticityChain,
    ie_investment: IESeries,
    years: Optional[Iterable[int]] = None,
) -> IESeries:
    """Predicted IE GDP per capita on the investment years (or the requested subset)."""
    wanted = ie_investment.years if years is None else sorted(years)
    missing = [year for year in wanted if year not in ie_investment]
    if missing:
        raise GapError(missing, role="investment")
    points = {year: compose(chain, ie_investment.point(year)) for year in wanted}
    return make_ie_series(
        f"{ie_investment.name}_predicted_gdp_per_capita",
        ie_investment.base_year,
        points,
        anchored=False,
    )
