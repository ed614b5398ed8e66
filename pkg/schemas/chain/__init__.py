"""Chained predictor schemas."""

from .elasticity_chain import ElasticityChain
from .prediction_result import PredictionResult

__all__ = ["ElasticityChain", "PredictionResult"]
