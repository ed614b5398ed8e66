"""Least-squares fits producing rate constants and elasticities."""

from .fits import common_phase_years, fit_elasticity, fit_growth, fit_phases, phase_years
from .ols import MIN_FIT_POINTS, fit_line, fit_xy

__all__ = [
    "MIN_FIT_POINTS",
    "common_phase_years",
    "fit_elasticity",
    "fit_growth",
    "fit_line",
    "fit_phases",
    "fit_xy",
    "phase_years",
]
