"""Regression result schemas."""

from .elasticity_fit import ElasticityFit
from .growth_fit import GrowthFit
from .linear_fit import LinearFit

__all__ = ["LinearFit", "GrowthFit", "ElasticityFit"]
