"""Elasticity pairs reported for every evaluated phase."""

from typing import Dict, Tuple

from schemas import SeriesRole

# pair name -> (response role, predictor role)
ELASTICITY_PAIRS: Dict[str, Tuple[SeriesRole, SeriesRole]] = {
    "gdp_per_capita_vs_productivity": (SeriesRole.GDP_PER_CAPITA, SeriesRole.PRODUCTIVITY),
    "wages_vs_productivity": (SeriesRole.WAGES, SeriesRole.PRODUCTIVITY),
    "productivity_vs_investment": (SeriesRole.PRODUCTIVITY, SeriesRole.INVESTMENT),
}

# pair name -> stem of its per-phase scatter files
PAIR_FIGURES: Dict[str, str] = {
    "gdp_per_capita_vs_productivity": "fig05",
    "wages_vs_productivity": "fig07",
    "productivity_vs_investment": "fig09",
}
